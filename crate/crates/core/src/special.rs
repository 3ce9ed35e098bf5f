//! Named moulds (`sa_s`, `paj`, `mupaj`, `dupal`, `pal`, `s'`) and the
//! singulator operators `sang` and `slang_r`.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{int, rat, LinearForm, Polynomial, Rational, RationalFunction};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::flexion::Adari;
use crate::mould::{shifted, Mould};
use crate::word::Word;

static BERNOULLI: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// Bernoulli number `B_m` with the convention `x/(e^x - 1)`, so `B_1 = -1/2`.
pub fn bernoulli(m: usize) -> Rational {
    let cache = BERNOULLI.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut table = cache.lock().unwrap();
    while table.len() <= m {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0
        let n = table.len();
        let mut acc = Rational::zero();
        let mut binom = BigInt::one();
        for (k, b) in table.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * b;
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        table.push(-acc / int(n as i64 + 1));
    }
    table[m].clone()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn inv_linear(l: &LinearForm) -> RationalFunction {
    RationalFunction::inverse_linear(l).expect("nonzero linear form")
}

/// `sa_s`: supported in depth 1 with component `u^{s-1}`.
pub fn sa(s: i64, depth: usize) -> Mould {
    let e = s - 1;
    let comp = if e >= 0 {
        RationalFunction::from_polynomial(Polynomial::var(1).pow(e as u32))
    } else {
        RationalFunction::new(Polynomial::one(), [(LinearForm::var(1), (-e) as u32)])
    };
    Mould::from_fn(depth, |m| if m == 1 { comp.clone() } else { RationalFunction::zero() })
}

/// `paj^m = 1 / (x_1 (x_1 + x_2) ... (x_1 + ... + x_m))`.
pub fn paj(depth: usize) -> Mould {
    Mould::from_fn(depth, |m| {
        let factors = (1..=m).map(|i| (LinearForm::sum_range(1, i), 1));
        RationalFunction::new(Polynomial::one(), factors)
    })
}

/// `mupaj^m = (-1)^m / (x_m (x_m + x_{m-1}) ... (x_m + ... + x_1))`,
/// the `x`-inverse of `paj`.
pub fn mupaj(depth: usize) -> Mould {
    Mould::from_fn(depth, |m| {
        let factors = (1..=m).map(|i| (LinearForm::sum_range(m + 1 - i, m), 1));
        let f = RationalFunction::new(Polynomial::one(), factors);
        if m % 2 == 1 {
            f.neg()
        } else {
            f
        }
    })
}

/// `dupal^m = B_m/m! * 1/(x_1...x_m) * sum_k (-1)^k C(m-1, k) x_{k+1}`.
pub fn dupal(depth: usize) -> Mould {
    Mould::from_fn(depth, |m| {
        if m == 0 {
            return RationalFunction::zero();
        }
        let coef = bernoulli(m) / Rational::from_integer(factorial(m));
        if coef.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(
            dupal_numerator(m).scale(&coef),
            (1..=m).map(|i| (LinearForm::var(i), 1)),
        )
    })
}

/// The alternal polynomial `sum_{k=0}^{m-1} (-1)^k C(m-1, k) x_{k+1}`.
pub fn dupal_numerator(m: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for k in 0..m {
        let c = Rational::from_integer(binomial(m - 1, k));
        let c = if k % 2 == 1 { -c } else { c };
        p = p.add(&Polynomial::var(k + 1).scale(&c));
    }
    p
}

/// `pal`, the solution of `dur . pal = pal x dupal` with `pal^0 = 1`.
///
/// The depth-`m` right-hand side only involves `pal` below depth `m`
/// because `dupal^0 = 0`.
pub fn pal(depth: usize) -> Result<Mould> {
    let du = dupal(depth);
    let mut p: Mould = Mould::unit(depth);
    for m in 1..=depth {
        let rhs = p.mu_component(&du, m);
        let mut single = Mould::zero(m);
        single.set_component(m, rhs);
        let solved = single.dur_unscale()?;
        p.set_component(m, solved.component(m).clone());
    }
    Ok(p)
}

/// The mould `s'` (depths 1 and 2), stored in `u`-coordinates:
/// `s'(u_1) = 1/(2u_1)` and `s'(u_1, u_2)` obtained from
/// `(1/12)(1/(x_1 x_2) + 1/(x_2 (x_1 - x_2)))` at `x_1 = u_1, x_2 = u_1 + u_2`.
pub fn s_prime(depth: usize) -> Mould {
    let one = inv_linear(&LinearForm::var(1)).scale(&rat(1, 2));
    let x12 = inv_linear(&LinearForm::var(1)).mul(&inv_linear(&LinearForm::var(2)));
    let x2d = inv_linear(&LinearForm::var(2)).mul(&inv_linear(&LinearForm::from_coeffs(vec![1, -1])));
    let two_x = x12.add(&x2d).scale(&rat(1, 12));
    let two_u = two_x
        .substitute(&[LinearForm::var(1), LinearForm::sum_range(1, 2)])
        .expect("x_2 - x_1 = u_2 is nonzero");
    Mould::from_fn(depth, |m| match m {
        1 => one.clone(),
        2 => two_u.clone(),
        _ => RationalFunction::zero(),
    })
}

/// The singulator `sang` and its length projections `slang_r` at a fixed
/// depth, with `paj`, `pal` and their inverses computed once.
pub struct Singulator<C = RationalFunction> {
    depth: usize,
    paj: Mould<C>,
    paj_inv: Mould<C>,
    adari_paj: Adari<C>,
    adari_pal: Adari<C>,
}

impl<C: Coefficient> Singulator<C> {
    pub fn new(depth: usize) -> Result<Self> {
        let p: Mould<C> = paj(depth).lift();
        let paj_inv = p.mu_inverse()?;
        let adari_paj = Adari::new(&p)?;
        let adari_pal = Adari::new(&pal(depth)?.lift())?;
        Ok(Singulator {
            depth,
            paj: p,
            paj_inv,
            adari_paj,
            adari_pal,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `sang(M) = 1/2 (id + neg . adari(paj)) (paj^{x-1} x M x paj)`.
    pub fn sang(&self, m: &Mould<C>) -> Result<Mould<C>> {
        m.require_constant_zero("sang")?;
        let m = m.with_depth(self.depth);
        let x = self.paj_inv.mu(&m).mu(&self.paj);
        let twisted = self.adari_paj.apply(&x)?.neg()?;
        Ok(x.add(&twisted).scale(&rat(1, 2)))
    }

    /// `slang_r(A) = adari(pal) . leng_r . adari(pal)^{-1} . sang(A)`.
    pub fn slang(&self, r: usize, a: &Mould<C>) -> Result<Mould<C>> {
        let pulled = self.adari_pal.inverse().apply(&self.sang(a)?)?;
        self.adari_pal.apply(&pulled.leng(r))
    }

    /// `slang_1(A), ..., slang_depth(A)` sharing one `sang` evaluation.
    pub fn slang_all(&self, a: &Mould<C>) -> Result<Vec<Mould<C>>> {
        let pulled = self.adari_pal.inverse().apply(&self.sang(a)?)?;
        (1..=self.depth)
            .map(|r| self.adari_pal.apply(&pulled.leng(r)))
            .collect()
    }
}

/// `sang(M)` at the depth of `M`.
pub fn sang<C: Coefficient>(m: &Mould<C>) -> Result<Mould<C>> {
    Singulator::new(m.depth())?.sang(m)
}

/// `slang_r(A)` at the depth of `A`.
pub fn slang<C: Coefficient>(r: usize, a: &Mould<C>) -> Result<Mould<C>> {
    if r == 0 {
        return Err(Error::UnsupportedInput("slang_r needs r >= 1".into()));
    }
    Singulator::new(a.depth())?.slang(r, a)
}

/// The expanded four-sum form of `sang` for moulds supported in depth 1:
///
/// ```text
/// 2 sang(S)(u_1..u_d) = sum_{i=1}^{d}   mupaj(u_1..u_{i-1}) S(u_i) paj(u_{i+1}..u_d)
///                     + sum_{i=1}^{d}   paj(u_1..u_{i-1}) S(-|u|) mupaj(u_{i+1}..u_d)
///                     - sum_{i=1}^{d-1} paj(u_1..u_{i-1}) S(-(u_1+..+u_{d-1})) mupaj(u_{i+1}..u_{d-1}) / |u|
///                     + sum_{i=2}^{d}   paj(u_2..u_{i-1}) S(-(u_2+..+u_d)) mupaj(u_{i+1}..u_d) / |u|
/// ```
pub fn sang_expanded<C: Coefficient>(s: &Mould<C>) -> Result<Mould<C>> {
    let depth = s.depth();
    if let Some(m) = (2..=depth).find(|&m| !s.component(m).is_zero()) {
        return Err(Error::UnsupportedInput(format!(
            "expanded singulator takes a depth-1 mould, found a depth-{} component",
            m
        )));
    }
    s.require_constant_zero("sang_expanded")?;
    let pj: Mould<C> = paj(depth).lift();
    let mp: Mould<C> = mupaj(depth).lift();
    let s1 = s.component(1);
    // value of a depth-one mould at a single letter
    let at = |l: LinearForm| s1.substitute(&[l]);
    // paj or mupaj on the consecutive variables x_from..x_to
    let block = |m: &Mould<C>, from: usize, to: usize| -> C {
        if from > to {
            return C::one();
        }
        shifted(m.component(to + 1 - from), from - 1, to + 1 - from)
    };
    Mould::try_from_fn(depth, |d| {
        if d == 0 {
            return Ok(C::zero());
        }
        let total = RationalFunction::inverse_linear(&LinearForm::sum_range(1, d))?;
        let mut acc = C::zero();
        for i in 1..=d {
            let t = block(&mp, 1, i - 1)
                .mul(&at(LinearForm::var(i))?)
                .mul(&block(&pj, i + 1, d));
            acc = acc.add(&t);
        }
        let all = at(LinearForm::sum_range(1, d).neg())?;
        for i in 1..=d {
            acc = acc.add(&block(&pj, 1, i - 1).mul(&all).mul(&block(&mp, i + 1, d)));
        }
        if d >= 2 {
            let head = at(LinearForm::sum_range(1, d - 1).neg())?;
            for i in 1..d {
                let t = block(&pj, 1, i - 1)
                    .mul(&head)
                    .mul(&block(&mp, i + 1, d - 1))
                    .mul_ratfunc(&total);
                acc = acc.sub(&t);
            }
            let tail = at(LinearForm::sum_range(2, d).neg())?;
            for i in 2..=d {
                let t = block(&pj, 2, i - 1)
                    .mul(&tail)
                    .mul(&block(&mp, i + 1, d))
                    .mul_ratfunc(&total);
                acc = acc.add(&t);
            }
        }
        Ok(acc.scale(&rat(1, 2)))
    })
}

/// Convenience: the word `(x_1, ..., x_m)` evaluation of a named mould.
pub fn value_at(m: &Mould, depth: usize) -> Result<RationalFunction> {
    m.evaluate(&Word::variables(depth))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(c: &[i64]) -> RationalFunction {
        inv_linear(&LinearForm::from_coeffs(c.to_vec()))
    }

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn sa_components() {
        assert_eq!(sa(3, 3).component(1), &RationalFunction::from_polynomial(x(1).pow(2)));
        assert_eq!(sa(-1, 3).component(1), &inv(&[1]).mul(&inv(&[1])));
        assert!(sa(3, 3).component(2).is_zero());
        assert!(sa(3, 3).component(0).is_zero());
    }

    #[test]
    fn paj_and_mupaj() {
        let p = paj(5);
        assert_eq!(p.component(2), &inv(&[1]).mul(&inv(&[1, 1])));
        assert_eq!(mupaj(5).component(1), &inv(&[1]).neg());
        assert_eq!(p.mu(&mupaj(5)), Mould::unit(5));
        assert_eq!(p.mu_inverse().unwrap(), mupaj(5));
    }

    #[test]
    fn dupal_values() {
        let d = dupal(5);
        assert_eq!(d.component(1), &RationalFunction::constant(rat(-1, 2)));
        let two = RationalFunction::new(x(1).sub(&x(2)).scale(&rat(1, 12)), [(LinearForm::var(1), 1), (LinearForm::var(2), 1)]);
        assert_eq!(d.component(2), &two);
        assert!(d.component(3).is_zero());
        assert!(d.component(5).is_zero());
        let num = x(1).sub(&x(2).scale(&int(3))).add(&x(3).scale(&int(3))).sub(&x(4));
        let four = RationalFunction::new(num.scale(&rat(-1, 720)), (1..=4).map(|i| (LinearForm::var(i), 1)));
        assert_eq!(d.component(4), &four);
    }

    #[test]
    fn pal_values() {
        let p = pal(3).unwrap();
        assert_eq!(p.component(1), &inv(&[1]).scale(&rat(-1, 2)));
        let two = RationalFunction::new(
            x(1).add(&x(2).scale(&int(2))).scale(&rat(1, 12)),
            [(LinearForm::var(1), 1), (LinearForm::var(2), 1), (LinearForm::from_coeffs(vec![1, 1]), 1)],
        );
        assert_eq!(p.component(2), &two);
        let three = inv(&[1]).mul(&inv(&[0, 0, 1])).mul(&inv(&[1, 1])).scale(&rat(-1, 24));
        assert_eq!(p.component(3), &three);
    }

    #[test]
    fn s_prime_in_u_coordinates() {
        let s = s_prime(3);
        assert_eq!(s.component(1), &inv(&[1]).scale(&rat(1, 2)));
        let expected = inv(&[1])
            .mul(&inv(&[1, 1]))
            .sub(&inv(&[0, 1]).mul(&inv(&[1, 1])))
            .scale(&rat(1, 12));
        assert_eq!(s.component(2), &expected);
        assert!(s.component(3).is_zero());
    }

    #[test]
    fn sang_of_even_depth_one() {
        let sg: Singulator = Singulator::new(2).unwrap();
        let out = sg.sang(&sa(3, 2)).unwrap();
        assert_eq!(out.component(1), sa(3, 2).component(1));
    }

    #[test]
    fn expanded_sang_depth_one() {
        let e = sang_expanded(&sa(4, 3)).unwrap();
        // odd S: (S(x) + S(-x))/2 = 0
        assert!(e.component(1).is_zero());
        let e = sang_expanded(&sa(3, 3)).unwrap();
        assert_eq!(e.component(1), sa(3, 3).component(1));
        assert!(sang_expanded(&paj(3).sub(&Mould::unit(3))).is_err());
    }
}
