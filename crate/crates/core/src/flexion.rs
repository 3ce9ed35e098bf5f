//! The flexion-based operators on moulds: the pre-Lie action `arit`, the
//! products `preari` and `ari`, the group law `gari` with its action
//! `garit`, and the maps `expari`, `logari`, `invgari`, `adari` that tie
//! the Lie algebra ARI to the group GARI.
//!
//! Every operator works component by component on a truncated mould and is
//! generic over the [`Coefficient`] type.

use crate::algebra::{int, Rational};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::mould::{shifted, Memo, Mould};
use crate::word::{flexion_down, flexion_up, Word};

/// `arit(N)(M)`, truncated to the smaller depth. Components of depth 0
/// and 1 vanish; for `m >= 2`
///
/// ```text
/// sum_{x = a b c, b,c != 0} M(a ⌈c) N(b)  -  sum_{x = a b c, a,b != 0} M(a⌉ c) N(b)
/// ```
///
/// where `⌈c` carries the sum of `b` on its first letter and `a⌉` on its
/// last letter.
pub fn arit<C: Coefficient>(n: &Mould<C>, m: &Mould<C>) -> Result<Mould<C>> {
    let depth = n.depth().min(m.depth());
    let mm = Memo::new(m);
    let nm = Memo::new(n);
    Mould::try_from_fn(depth, |k| arit_component(&nm, &mm, k))
}

fn arit_component<C: Coefficient>(n: &Memo<C>, m: &Memo<C>, len: usize) -> Result<C> {
    if len < 2 {
        return Ok(C::zero());
    }
    let x = Word::variables(len);
    let mut acc = C::zero();
    for i in 0..len {
        for j in (i + 1)..=len {
            let alpha = x.slice(0, i);
            let beta = x.slice(i, j);
            let gamma = x.slice(j, len);
            let nb = n.get(&beta)?;
            if nb.is_zero() {
                continue;
            }
            if !gamma.is_empty() {
                let arg = alpha.concat(&flexion_up(&beta, &gamma));
                acc = acc.add(&m.get(&arg)?.mul(&nb));
            }
            if !alpha.is_empty() {
                let arg = flexion_down(&alpha, &beta).concat(&gamma);
                acc = acc.sub(&m.get(&arg)?.mul(&nb));
            }
        }
    }
    Ok(acc)
}

/// `preari(M, N) = arit(N)(M) + M x N`.
pub fn preari<C: Coefficient>(m: &Mould<C>, n: &Mould<C>) -> Result<Mould<C>> {
    Ok(arit(n, m)?.add(&m.mu(n)))
}

/// Iterated pre-Lie power: `1`, `A`, `preari(preari_{n-1}(A), A)`.
pub fn preari_n<C: Coefficient>(n: usize, a: &Mould<C>) -> Result<Mould<C>> {
    match n {
        0 => Ok(Mould::unit(a.depth())),
        _ => {
            let mut p = a.clone();
            for _ in 1..n {
                p = preari(&p, a)?;
            }
            Ok(p)
        }
    }
}

/// The Lie bracket `ari(M, N) = preari(M, N) - preari(N, M)`.
pub fn ari<C: Coefficient>(m: &Mould<C>, n: &Mould<C>) -> Result<Mould<C>> {
    Ok(preari(m, n)?.sub(&preari(n, m)?))
}

/// `garit(T)(S)`: depth-0 component 1 and, for `m >= 1`, the sum over
/// factorizations `x = a_1 b_1 c_1 ... a_s b_s c_s` with every `b_i`
/// nonempty and every junction `c_i a_{i+1}` nonempty of
///
/// ```text
/// S(a_1⌉b_1⌈c_1 ... a_s⌉b_s⌈c_s) T(a_1)...T(a_s) T^{x-1}(c_1)...T^{x-1}(c_s)
/// ```
pub fn garit<C: Coefficient>(t: &Mould<C>, s: &Mould<C>) -> Result<Mould<C>> {
    let depth = t.depth().min(s.depth());
    let t = t.with_depth(depth);
    let t_inv = t.mu_inverse()?;
    let (sm, tm, tim) = (Memo::new(s), Memo::new(&t), Memo::new(&t_inv));
    Mould::try_from_fn(depth, |m| {
        if m == 0 {
            Ok(C::one())
        } else {
            garit_component(&sm, &tm, &tim, m)
        }
    })
}

struct GaritCtx<'a, 'b, C> {
    s: &'b Memo<'a, C>,
    t: &'b Memo<'a, C>,
    t_inv: &'b Memo<'a, C>,
    x: Word,
}

fn garit_component<C: Coefficient>(
    s: &Memo<C>,
    t: &Memo<C>,
    t_inv: &Memo<C>,
    len: usize,
) -> Result<C> {
    let ctx = GaritCtx {
        s,
        t,
        t_inv,
        x: Word::variables(len),
    };
    let mut acc = C::zero();
    garit_blocks(&ctx, 0, true, Word::empty(), C::one(), &mut acc)?;
    Ok(acc)
}

/// Enumerate the blocks `a b c` starting at `pos`; `junction_done` records
/// whether the previous `c` was nonempty (or there is no previous block).
fn garit_blocks<C: Coefficient>(
    ctx: &GaritCtx<C>,
    pos: usize,
    junction_done: bool,
    arg: Word,
    weight: C,
    acc: &mut C,
) -> Result<()> {
    let len = ctx.x.len();
    let first = pos == 0;
    for a_end in pos..len {
        if !first && !junction_done && a_end == pos {
            continue;
        }
        let a = ctx.x.slice(pos, a_end);
        let ta = ctx.t.get(&a)?;
        if ta.is_zero() {
            continue;
        }
        for b_end in (a_end + 1)..=len {
            let b = ctx.x.slice(a_end, b_end);
            for c_end in b_end..=len {
                let c = ctx.x.slice(b_end, c_end);
                let tc = ctx.t_inv.get(&c)?;
                if tc.is_zero() {
                    continue;
                }
                let block = flexion_up(&a, &flexion_down(&b, &c));
                let arg = arg.concat(&block);
                let w = weight.mul(&ta).mul(&tc);
                if c_end == len {
                    let sv = ctx.s.get(&arg)?;
                    if !sv.is_zero() {
                        *acc = acc.add(&sv.mul(&w));
                    }
                } else {
                    garit_blocks(ctx, c_end, c_end > b_end, arg, w, acc)?;
                }
            }
        }
    }
    Ok(())
}

/// The group law `gari(S, T) = garit(T)(S) x T`.
pub fn gari<C: Coefficient>(s: &Mould<C>, t: &Mould<C>) -> Result<Mould<C>> {
    Ok(garit(t, s)?.mu(t))
}

/// `expari(A) = sum_n preari_n(A) / n!`; the sum is finite at each depth
/// because `preari_n(A)` vanishes below depth `n`.
pub fn expari<C: Coefficient>(a: &Mould<C>) -> Result<Mould<C>> {
    a.require_constant_zero("expari")?;
    let depth = a.depth();
    let mut acc = Mould::unit(depth);
    let mut power = a.clone();
    let mut fact = Rational::from_integer(1.into());
    for n in 1..=depth {
        if n > 1 {
            power = preari(&power, a)?;
            fact *= int(n as i64);
        }
        acc = acc.add(&power.scale(&fact.recip()));
    }
    Ok(acc)
}

/// Inverse of [`expari`], solved depth by depth: the depth-`m` component
/// of `expari(X)` is `X^m` plus terms in lower components of `X`.
pub fn logari<C: Coefficient>(s: &Mould<C>) -> Result<Mould<C>> {
    s.require_constant_one().map_err(|found| Error::NotDefined {
        op: "logari",
        found,
        expected: "1",
    })?;
    let depth = s.depth();
    let mut x = Mould::zero(depth);
    for m in 1..=depth {
        let lower = expari(&x.with_depth(m))?;
        let value = s.component(m).sub(lower.component(m));
        x.set_component(m, value);
    }
    Ok(x)
}

/// Inverse of `S` for `gari`, solved depth by depth.
pub fn invgari<C: Coefficient>(s: &Mould<C>) -> Result<Mould<C>> {
    s.require_constant_one().map_err(Error::NotInvertible)?;
    let depth = s.depth();
    let sm = Memo::new(s);
    let mut t: Mould<C> = Mould::unit(depth);
    // garit(T)(S) components; the depth-k one only involves T below depth k
    let mut g: Vec<C> = vec![C::one()];
    for m in 1..=depth {
        let t_inv = t.mu_inverse()?;
        let (tm, tim) = (Memo::new(&t), Memo::new(&t_inv));
        g.push(garit_component(&sm, &tm, &tim, m)?);
        let mut rest = g[m].clone();
        for (k, gk) in g.iter().enumerate().take(m).skip(1) {
            let tk = t.component(m - k);
            if gk.is_zero() || tk.is_zero() {
                continue;
            }
            rest = rest.add(&gk.mul(&shifted(tk, k, m - k)));
        }
        t.set_component(m, rest.neg());
    }
    Ok(t)
}

/// `adari(S)(A) = logari(gari(gari(S, expari(A)), invgari(S)))`.
///
/// Computed through the equivalent first-order form
/// `garit(S^{-1})(preari(S, A)) x S^{-1}`; see [`adari_by_definition`].
pub fn adari<C: Coefficient>(s: &Mould<C>, a: &Mould<C>) -> Result<Mould<C>> {
    Adari::new(s)?.apply(a)
}

/// `adari` evaluated literally as `logari(gari(gari(S, expari(A)), invgari(S)))`.
pub fn adari_by_definition<C: Coefficient>(s: &Mould<C>, a: &Mould<C>) -> Result<Mould<C>> {
    let depth = s.depth().min(a.depth());
    let s = s.with_depth(depth);
    let a = a.with_depth(depth);
    let conj = gari(&gari(&s, &expari(&a)?)?, &invgari(&s)?)?;
    logari(&conj)
}

/// `adari(S)` as a reusable linear map with `invgari(S)` computed once.
///
/// Conjugation by `S` is a group automorphism, so `adari(S)` is its
/// differential at the unit. Since `gari(S, 1 + eA) = S + e preari(S, A)`
/// to first order and `gari(., S^{-1})` is affine in its first argument,
/// `adari(S)(A) = garit(S^{-1})(preari(S, A)) x S^{-1}`.
pub struct Adari<C> {
    s: Mould<C>,
    s_inv: Mould<C>,
    s_inv_mu_inv: Mould<C>,
}

impl<C: Coefficient> Adari<C> {
    pub fn new(s: &Mould<C>) -> Result<Self> {
        let s_inv = invgari(s)?;
        Ok(Adari {
            s: s.clone(),
            s_inv_mu_inv: s_inv.mu_inverse()?,
            s_inv,
        })
    }

    /// The conjugation by the inverse group element.
    pub fn inverse(&self) -> Adari<C> {
        Adari {
            s_inv_mu_inv: self.s.mu_inverse().expect("constant term is 1"),
            s: self.s_inv.clone(),
            s_inv: self.s.clone(),
        }
    }

    pub fn apply(&self, a: &Mould<C>) -> Result<Mould<C>> {
        a.require_constant_zero("adari")?;
        let depth = self.s.depth().min(a.depth());
        let s = self.s.with_depth(depth);
        let t = self.s_inv.with_depth(depth);
        let t_inv = self.s_inv_mu_inv.with_depth(depth);
        let y = preari(&s, &a.with_depth(depth))?;
        let (ym, tm, tim) = (Memo::new(&y), Memo::new(&t), Memo::new(&t_inv));
        let lin = Mould::try_from_fn(depth, |m| {
            if m == 0 {
                Ok(C::zero())
            } else {
                garit_component(&ym, &tm, &tim, m)
            }
        })?;
        Ok(lin.mu(&t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LinearForm, RationalFunction};

    type M = Mould<RationalFunction>;

    fn depth1(depth: usize, f: RationalFunction) -> M {
        Mould::from_fn(depth, |m| if m == 1 { f.clone() } else { RationalFunction::zero() })
    }

    fn x(i: usize) -> RationalFunction {
        RationalFunction::var(i)
    }

    #[test]
    fn arit_depth_two_on_depth_one_moulds() {
        // M^1(u) = u^2, N^1(u) = u: M^1(x1+x2){x1 - x2}
        let m = depth1(3, x(1).mul(&x(1)));
        let n = depth1(3, x(1));
        let r = arit(&n, &m).unwrap();
        let s = RationalFunction::linear(&LinearForm::sum_range(1, 2));
        assert_eq!(r.component(2), &s.mul(&s).mul(&x(1).sub(&x(2))));
        assert!(r.component(1).is_zero());
        assert!(arit(&Mould::zero(3), &m).unwrap().is_zero());
    }

    #[test]
    fn garit_by_unit_is_identity() {
        let s = Mould::from_fn(3, |m| if m == 0 { RationalFunction::one() } else { x(1).add(&RationalFunction::integer(m as i64)) });
        assert_eq!(garit(&Mould::unit(3), &s).unwrap(), s);
        assert_eq!(gari(&s, &Mould::unit(3)).unwrap(), s);
    }

    #[test]
    fn invgari_is_two_sided() {
        let s = Mould::from_fn(3, |m| match m {
            0 => RationalFunction::one(),
            1 => x(1),
            2 => x(1).mul(&x(2)),
            _ => x(3).sub(&x(1)),
        });
        let inv = invgari(&s).unwrap();
        assert_eq!(inv.component(1), &x(1).neg());
        assert_eq!(gari(&s, &inv).unwrap(), Mould::unit(3));
        assert_eq!(gari(&inv, &s).unwrap(), Mould::unit(3));
    }

    #[test]
    fn expari_and_logari() {
        let a = Mould::from_fn(3, |m| match m {
            0 => RationalFunction::zero(),
            1 => x(1).mul(&x(1)),
            2 => x(2),
            _ => x(1).add(&x(3)),
        });
        assert_eq!(expari(&M::zero(3)).unwrap(), Mould::unit(3));
        let e = expari(&a).unwrap();
        assert_eq!(e.component(1), a.component(1));
        assert_eq!(logari(&e).unwrap(), a);
        assert!(expari(&M::unit(2)).is_err());
        assert!(logari(&M::zero(2)).is_err());
    }

    #[test]
    fn preari_powers() {
        let a = depth1(3, x(1));
        assert_eq!(preari_n(0, &a).unwrap(), Mould::unit(3));
        assert_eq!(preari_n(1, &a).unwrap(), a);
        assert!(preari_n(3, &a).unwrap().component(2).is_zero());
        assert!(preari(&a, &M::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn adari_matches_definition() {
        let s = Mould::from_fn(3, |m| match m {
            0 => RationalFunction::one(),
            1 => x(1).mul(&x(1)),
            2 => x(1).sub(&x(2)),
            _ => x(2),
        });
        let a = Mould::from_fn(3, |m| match m {
            0 => RationalFunction::zero(),
            1 => x(1),
            2 => x(1).mul(&x(2)),
            _ => RationalFunction::integer(3),
        });
        let fast = adari(&s, &a).unwrap();
        assert_eq!(fast, adari_by_definition(&s, &a).unwrap());
        let back = Adari::new(&s).unwrap().inverse().apply(&fast).unwrap();
        assert_eq!(back, a);
    }
}
