//! The polar solutions `psi_{2n+1}`, `psi_{-1}` and the depth-3
//! polynomial families `xi`, `sigma^c`, `luma` with the discrepancy
//! moulds `D_{a,b}`.
//!
//! The `psi` moulds are built in `x`-coordinates (with `x_0 = 0`) and
//! compared after [`Mould::sharp`]; everything else is in `u`-coordinates.

use crate::algebra::{int, rat, LinearForm, Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::flexion::ari;
use crate::mould::Mould;
use crate::special::{bernoulli, binomial, s_prime, sa, Singulator};

/// Truncation depth of the polynomial families: they are defined modulo
/// components of depth 4 and above.
pub const COMPARISON_DEPTH: usize = 3;

fn x(i: usize) -> LinearForm {
    if i == 0 {
        LinearForm::zero()
    } else {
        LinearForm::var(i)
    }
}

/// The linear factors of `x_{A,B} = prod_{a in A, b in B} (x_a - x_b)`.
pub fn x_ab_factors(a: &[usize], b: &[usize]) -> Vec<LinearForm> {
    a.iter()
        .flat_map(|&i| b.iter().map(move |&j| x(i).sub(&x(j))))
        .collect()
}

/// `x_{A,B}` as a rational function; `1` when either set is empty.
pub fn x_ab(a: &[usize], b: &[usize]) -> RationalFunction {
    x_ab_factors(a, b)
        .iter()
        .fold(RationalFunction::one(), |acc, l| acc.mul_linear(l))
}

/// The index set `{from, ..., end - 1}`.
fn upto(from: usize, end: usize) -> Vec<usize> {
    (from..end).collect()
}

/// `l^{2n} / (x_{A1,B1} x_{A2,B2})`.
fn psi_term(l: &LinearForm, n: usize, den: [(&[usize], &[usize]); 2]) -> RationalFunction {
    let factors = den
        .iter()
        .flat_map(|(a, b)| x_ab_factors(a, b))
        .map(|f| (f, 1));
    RationalFunction::new(l.to_polynomial().pow(2 * n as u32), factors)
}

fn psi_odd_impl(n: usize, d: usize, flip: bool) -> RationalFunction {
    let mut plus = RationalFunction::zero();
    for i in 1..=d {
        let first = psi_term(&x(i).sub(&x(i - 1)), n, [(&upto(0, i - 1), &[i - 1]), (&upto(i + 1, d + 1), &[i])]);
        let mut second = psi_term(&x(d), n, [(&upto(1, i), &[0]), (&upto(i, d), &[d])]);
        if flip && i == 1 {
            second = second.neg();
        }
        plus = plus.add(&first).add(&second);
    }
    let mut minus = RationalFunction::zero();
    for i in 1..d {
        let mut tail = upto(i + 1, d);
        tail.push(0);
        let third = psi_term(&x(1).sub(&x(d)), n, [(&upto(2, i + 1), &[1]), (&tail, &[d])]);
        let mut head = vec![d];
        head.extend(1..i);
        let fourth = psi_term(&x(d - 1), n, [(&head, &[0]), (&upto(i, d - 1), &[d - 1])]);
        minus = minus.add(&third).add(&fourth);
    }
    plus.sub(&minus).scale(&rat(1, 2))
}

/// `psi_{2n+1}^{(d)}(x_1, ..., x_d)`:
///
/// ```text
///  1/2 sum_{i=1}^{d}   [ (x_i - x_{i-1})^{2n} / (x_{{0..i-2},{i-1}} x_{{i+1..d},{i}})
///                      + x_d^{2n} / (x_{{1..i-1},{0}} x_{{i..d-1},{d}}) ]
/// -1/2 sum_{i=1}^{d-1} [ (x_1 - x_d)^{2n} / (x_{{2..i},{1}} x_{{i+1..d-1,0},{d}})
///                      + x_{d-1}^{2n} / (x_{{d,1..i-1},{0}} x_{{i..d-2},{d-1}}) ]
/// ```
pub fn psi_odd(n: usize, d: usize) -> RationalFunction {
    psi_odd_impl(n, d, false)
}

/// `psi_{2n+1}^{(d)}` with the sign of the `i = 1` term `x_d^{2n} / x_{{1..d-1},{d}}`
/// flipped. A negative control for the verifiers.
pub fn psi_odd_mutated(n: usize, d: usize) -> RationalFunction {
    psi_odd_impl(n, d, true)
}

/// The mould `(psi_{2n+1}^{(d)})_{d <= depth}` in `x`-coordinates.
pub fn psi_odd_mould(n: usize, depth: usize) -> Mould {
    Mould::from_fn(depth, |d| if d == 0 { RationalFunction::zero() } else { psi_odd(n, d) })
}

pub fn psi_odd_mutated_mould(n: usize, depth: usize) -> Mould {
    Mould::from_fn(depth, |d| if d == 0 { RationalFunction::zero() } else { psi_odd_mutated(n, d) })
}

/// A vine `g_{n_1} ... g_{n_h}`: bunches of grapes grafted in sequence, the
/// stalk of each bunch sitting on the highest grape so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vine {
    bunches: Vec<usize>,
}

impl Vine {
    pub fn new(bunches: Vec<usize>) -> Self {
        assert!(bunches.iter().all(|&n| n >= 1), "a bunch has at least one grape");
        Vine { bunches }
    }

    /// All vines with `d` grapes, one per composition of `d`.
    pub fn all(d: usize) -> Vec<Vine> {
        if d == 0 {
            return vec![];
        }
        (0u64..1 << (d - 1))
            .map(|mask| {
                let mut bunches = vec![];
                let mut len = 1;
                for k in 0..d - 1 {
                    if mask >> k & 1 == 1 {
                        bunches.push(len);
                        len = 1;
                    } else {
                        len += 1;
                    }
                }
                bunches.push(len);
                Vine::new(bunches)
            })
            .collect()
    }

    pub fn height(&self) -> usize {
        self.bunches.len()
    }

    pub fn grapes(&self) -> usize {
        self.bunches.iter().sum()
    }

    /// Edges `(i, j)` with `i < j`, root labelled 0.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = vec![];
        let mut top = 0;
        for &n in &self.bunches {
            let stalk = top;
            for g in 1..=n {
                edges.push((stalk, stalk + g));
            }
            top = stalk + n;
        }
        edges
    }

    /// `x_v = prod_{(i,j) in E(v)} (x_j - x_i)`.
    pub fn x_v_factors(&self) -> Vec<LinearForm> {
        self.edges().into_iter().map(|(i, j)| x(j).sub(&x(i))).collect()
    }
}

/// `psi_{-1}^{(d)} = sum_{v in V_d} (-1)^{h(v)+1}/h(v) * 1/(x_v x_d)`.
pub fn psi_minus1(d: usize) -> RationalFunction {
    Vine::all(d).iter().fold(RationalFunction::zero(), |acc, v| {
        let h = v.height() as i64;
        let sign = if h % 2 == 1 { 1 } else { -1 };
        let factors = v.x_v_factors().into_iter().chain([x(d)]).map(|l| (l, 1));
        acc.add(&RationalFunction::new(Polynomial::one(), factors).scale(&rat(sign, h)))
    })
}

/// Cut points `0 = i_0 < i_1 < ... < i_h = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VinePartition {
    cuts: Vec<usize>,
}

impl VinePartition {
    pub fn new(cuts: Vec<usize>) -> Option<Self> {
        let ok = cuts.len() >= 2 && cuts[0] == 0 && cuts.windows(2).all(|w| w[0] < w[1]);
        ok.then_some(VinePartition { cuts })
    }

    /// All partitions of `{1..d}` of height `h`.
    pub fn of_height(d: usize, h: usize) -> Vec<VinePartition> {
        fn go(from: usize, d: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<VinePartition>) {
            if left == 1 {
                cur.push(d);
                out.push(VinePartition { cuts: cur.clone() });
                cur.pop();
                return;
            }
            for c in from..d {
                cur.push(c);
                go(c + 1, d, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = vec![];
        if h >= 1 && h <= d {
            go(1, d, h, &mut vec![0], &mut out);
        }
        out
    }

    pub fn height(&self) -> usize {
        self.cuts.len() - 1
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }
}

/// `psi_{-1}^{(d)}` through the cut-point form
/// `(1/x_d) sum_h (-1)^{h+1}/h sum_{0=i_0<..<i_h=d} prod_s 1/((x_{i_s+1}-x_{i_s})...(x_{i_{s+1}}-x_{i_s}))`.
pub fn psi_minus1_by_partitions(d: usize) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for h in 1..=d {
        let coef = rat(if h % 2 == 1 { 1 } else { -1 }, h as i64);
        for p in VinePartition::of_height(d, h) {
            let mut factors = vec![(x(d), 1)];
            for w in p.cuts().windows(2) {
                for j in w[0] + 1..=w[1] {
                    factors.push((x(j).sub(&x(w[0])), 1));
                }
            }
            acc = acc.add(&RationalFunction::new(Polynomial::one(), factors).scale(&coef));
        }
    }
    acc
}

pub fn psi_minus1_mould(depth: usize) -> Mould {
    Mould::from_fn(depth, |d| if d == 0 { RationalFunction::zero() } else { psi_minus1(d) })
}

/// `xi'(S) = S + ari(S, s') + 1/2 ari(ari(S, s'), s')` at depth 3.
pub fn xi_prime(s: &Mould) -> Result<Mould> {
    if let Some(m) = (2..=s.depth()).find(|&m| !s.component(m).is_zero()) {
        return Err(Error::UnsupportedInput(format!(
            "xi' takes a depth-1 mould, found a depth-{} component",
            m
        )));
    }
    let s = s.with_depth(COMPARISON_DEPTH);
    let sp = s_prime(COMPARISON_DEPTH);
    let once = ari(&s, &sp)?;
    let twice = ari(&once, &sp)?;
    Ok(s.add(&once).add(&twice.scale(&rat(1, 2))))
}

/// `xi_{2n+1} = xi'(sa_{2n+1})`.
pub fn xi(n: usize) -> Result<Mould> {
    xi_prime(&sa(2 * n as i64 + 1, COMPARISON_DEPTH))
}

/// `B_{2a} B_{2b} / B_{2n} * C(2n, 2a)`.
pub fn bernoulli_weight(a: usize, b: usize) -> Rational {
    let n = a + b;
    bernoulli(2 * a) * bernoulli(2 * b) / bernoulli(2 * n) * Rational::from_integer(binomial(2 * n, 2 * a))
}

/// The pairs `(a, b)` with `a + b = n` and `a, b >= 1`.
pub fn splittings(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).map(move |a| (a, n - a))
}

/// `ari(sa_{2a+1}, ari(sa_{2b+1}, sa_{-1}))` at depth 3.
pub fn nested_ari(a: usize, b: usize) -> Result<Mould> {
    let d = COMPARISON_DEPTH;
    let inner = ari(&sa(2 * b as i64 + 1, d), &sa(-1, d))?;
    ari(&sa(2 * a as i64 + 1, d), &inner)
}

fn sigma_c_signed(n: usize, sign: i64) -> Result<Mould> {
    let mut acc = xi(n)?;
    for (a, b) in splittings(n) {
        let c = bernoulli_weight(a, b) / int(24 * b as i64) * int(sign);
        acc = acc.add(&nested_ari(a, b)?.scale(&c));
    }
    Ok(acc)
}

/// The canonical normalization modulo depth 4:
/// `xi_{2n+1} + sum_{a+b=n} 1/(24b) B_{2a}B_{2b}/B_{2n} C(2n,2a) ari(sa_{2a+1}, ari(sa_{2b+1}, sa_{-1}))`.
pub fn sigma_c(n: usize) -> Result<Mould> {
    sigma_c_signed(n, 1)
}

/// `sigma^c` with the sign of the Bernoulli-weighted coefficient flipped.
/// A negative control for [`crate::verify::comparison_with`].
pub fn sigma_c_mutated(n: usize) -> Result<Mould> {
    sigma_c_signed(n, -1)
}

fn sa_odd(k: usize) -> Mould {
    sa(k as i64, COMPARISON_DEPTH)
}

/// `luma_{2n+1}` modulo depth 4:
/// `slang_1(sa_{2n+1}) - 1/12 sum_{a+b=n} B_{2a}B_{2b}/B_{2n} C(2n,2a) ari(slang_1(sa_{2a+1}), slang_2(sa_{2b}))`.
pub fn luma_with(sg: &Singulator, n: usize) -> Result<Mould> {
    let mut acc = sg.slang(1, &sa_odd(2 * n + 1))?;
    for (a, b) in splittings(n) {
        let term = ari(&sg.slang(1, &sa_odd(2 * a + 1))?, &sg.slang(2, &sa_odd(2 * b))?)?;
        acc = acc.sub(&term.scale(&(bernoulli_weight(a, b) * rat(1, 12))));
    }
    Ok(acc)
}

pub fn luma(n: usize) -> Result<Mould> {
    luma_with(&Singulator::new(COMPARISON_DEPTH)?, n)
}

/// `D_{a,b} = ari(sa_{2a+1}, ari(sa_{2b+1}, sa_{-1})) + 2b ari(slang_1(sa_{2a+1}), slang_2(sa_{2b}))`.
pub fn d_ab_with(sg: &Singulator, a: usize, b: usize) -> Result<Mould> {
    let second = ari(&sg.slang(1, &sa_odd(2 * a + 1))?, &sg.slang(2, &sa_odd(2 * b))?)?;
    Ok(nested_ari(a, b)?.add(&second.scale(&int(2 * b as i64))))
}

pub fn d_ab(a: usize, b: usize) -> Result<Mould> {
    d_ab_with(&Singulator::new(COMPARISON_DEPTH)?, a, b)
}

/// `sum_{a+b=n} B_{2a}B_{2b} / (24 b B_{2n}) C(2n,2a) D_{a,b}`.
pub fn d_sum_with(sg: &Singulator, n: usize) -> Result<Mould> {
    let mut acc = Mould::zero(COMPARISON_DEPTH);
    for (a, b) in splittings(n) {
        let c = bernoulli_weight(a, b) / int(24 * b as i64);
        acc = acc.add(&d_ab_with(sg, a, b)?.scale(&c));
    }
    Ok(acc)
}
