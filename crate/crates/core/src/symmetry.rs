//! Dimoulds, the tensor embedding, the shuffle map `Sh`, and decision
//! procedures for alternality and symmetrality at a truncation depth.

use std::collections::BTreeMap;

use crate::algebra::{LinearForm, RationalFunction};
use crate::coeff::Coefficient;
use crate::error::Result;
use crate::mould::{shifted, Mould};
use crate::word::{shuffle, Word};

/// A bi-indexed mould `(M^{r,s})_{r+s <= depth}`; the component `(r, s)`
/// lives in the `r + s` variables `x_1..x_r ; x_{r+1}..x_{r+s}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dimould<C = RationalFunction> {
    depth: usize,
    components: BTreeMap<(usize, usize), C>,
}

impl<C: Coefficient> Dimould<C> {
    pub fn from_fn(depth: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut components = BTreeMap::new();
        for n in 0..=depth {
            for r in 0..=n {
                components.insert((r, n - r), f(r, n - r));
            }
        }
        Dimould { depth, components }
    }

    pub fn try_from_fn(depth: usize, mut f: impl FnMut(usize, usize) -> Result<C>) -> Result<Self> {
        let mut components = BTreeMap::new();
        for n in 0..=depth {
            for r in 0..=n {
                components.insert((r, n - r), f(r, n - r)?);
            }
        }
        Ok(Dimould { depth, components })
    }

    pub fn zero(depth: usize) -> Self {
        Self::from_fn(depth, |_, _| C::zero())
    }

    pub fn unit(depth: usize) -> Self {
        Self::from_fn(depth, |r, s| if r + s == 0 { C::one() } else { C::zero() })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Panics if `r + s` exceeds the depth.
    pub fn component(&self, r: usize, s: usize) -> &C {
        &self.components[&(r, s)]
    }

    pub fn components(&self) -> impl Iterator<Item = ((usize, usize), &C)> {
        self.components.iter().map(|(k, v)| (*k, v))
    }

    pub fn add(&self, other: &Self) -> Self {
        let depth = self.depth.min(other.depth);
        Self::from_fn(depth, |r, s| self.component(r, s).add(other.component(r, s)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let depth = self.depth.min(other.depth);
        Self::from_fn(depth, |r, s| self.component(r, s).sub(other.component(r, s)))
    }

    /// The dimould product
    ///
    /// ```text
    /// (A x B)^{r,s} = sum_{i<=r, j<=s} A^{i,j}(x_1..x_i; x_{r+1}..x_{r+j})
    ///                                  B^{r-i,s-j}(x_{i+1}..x_r; x_{r+j+1}..x_{r+s})
    /// ```
    pub fn mu(&self, other: &Self) -> Result<Self> {
        let depth = self.depth.min(other.depth);
        Self::try_from_fn(depth, |r, s| {
            let mut acc = C::zero();
            for i in 0..=r {
                for j in 0..=s {
                    let a = self.component(i, j);
                    let b = other.component(r - i, s - j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let a_forms: Vec<_> = (1..=i).chain(r + 1..=r + j).map(LinearForm::var).collect();
                    let b_forms: Vec<_> = (i + 1..=r).chain(r + j + 1..=r + s).map(LinearForm::var).collect();
                    acc = acc.add(&a.substitute(&a_forms)?.mul(&b.substitute(&b_forms)?));
                }
            }
            Ok(acc)
        })
    }

    /// Pointwise scaling by `dur`: the `(r, s)` component is multiplied by
    /// `x_1 + ... + x_{r+s}`.
    pub fn dur_scale(&self) -> Self {
        Self::from_fn(self.depth, |r, s| {
            self.component(r, s)
                .mul_ratfunc(&RationalFunction::linear(&LinearForm::sum_range(1, r + s)))
        })
    }
}

/// `(M (x) N)^{r,s} = M^r(x_1..x_r) N^s(x_{r+1}..x_{r+s})`.
pub fn tensor<C: Coefficient>(m: &Mould<C>, n: &Mould<C>) -> Dimould<C> {
    let depth = m.depth().min(n.depth());
    Dimould::from_fn(depth, |r, s| m.component(r).mul(&shifted(n.component(s), r, s)))
}

/// `Sh(M)^{r,s} = M^{r+s}((x_1..x_r) sh (x_{r+1}..x_{r+s}))`.
pub fn sh_map<C: Coefficient>(m: &Mould<C>) -> Result<Dimould<C>> {
    Dimould::try_from_fn(m.depth(), |r, s| shuffle_value(m, r, s))
}

/// `M^{p+q}((x_1..x_p) sh (x_{p+1}..x_{p+q}))`.
pub fn shuffle_value<C: Coefficient>(m: &Mould<C>, p: usize, q: usize) -> Result<C> {
    let left = Word::range(1, p);
    let right = Word::range(p + 1, p + q);
    let mut acc = C::zero();
    for (w, c) in shuffle(&left, &right).terms() {
        acc = acc.add(&m.evaluate(w)?.scale(c));
    }
    Ok(acc)
}

/// The first shuffle relation that fails, with its residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<C = RationalFunction> {
    pub p: usize,
    pub q: usize,
    pub residual: C,
}

fn first_failure<C: Coefficient>(
    m: &Mould<C>,
    residual: impl Fn(usize, usize, C) -> C,
) -> Result<Option<Witness<C>>> {
    for n in 2..=m.depth() {
        for p in 1..n {
            let q = n - p;
            let r = residual(p, q, shuffle_value(m, p, q)?);
            if !r.is_zero() {
                return Ok(Some(Witness { p, q, residual: r }));
            }
        }
    }
    Ok(None)
}

/// Checks `M^{p+q}(x_1..x_p sh x_{p+1}..x_{p+q}) = 0` for `p, q >= 1`,
/// `p + q <= depth`. Returns the first failing `(p, q)`.
pub fn alternality_witness<C: Coefficient>(m: &Mould<C>) -> Result<Option<Witness<C>>> {
    first_failure(m, |_, _, v| v)
}

pub fn is_alternal<C: Coefficient>(m: &Mould<C>) -> Result<bool> {
    Ok(alternality_witness(m)?.is_none())
}

/// Checks the shuffle sums factor as `M^p(x_1..x_p) M^q(x_{p+1}..x_{p+q})`.
pub fn symmetrality_witness<C: Coefficient>(m: &Mould<C>) -> Result<Option<Witness<C>>> {
    first_failure(m, |p, q, v| {
        v.sub(&m.component(p).mul(&shifted(m.component(q), p, q)))
    })
}

pub fn is_symmetral<C: Coefficient>(m: &Mould<C>) -> Result<bool> {
    Ok(symmetrality_witness(m)?.is_none())
}

/// Alternality as `Sh(M) = M (x) 1 + 1 (x) M` with `M^0 = 0`.
pub fn is_alternal_by_sh<C: Coefficient>(m: &Mould<C>) -> Result<bool> {
    let one = Mould::unit(m.depth());
    Ok(m.component(0).is_zero() && sh_map(m)? == tensor(m, &one).add(&tensor(&one, m)))
}

/// Symmetrality as `Sh(M) = M (x) M` with `M^0 = 1`.
pub fn is_symmetral_by_sh<C: Coefficient>(m: &Mould<C>) -> Result<bool> {
    Ok(m.component(0) == &C::one() && sh_map(m)? == tensor(m, m))
}

/// Whether `A^m(x_1..x_m) = A^{m-1}(x_1..x_{m-1}) - A^{m-1}(x_2..x_m)` for
/// `2 <= m <= depth`. Moulds satisfying it (with `A^0 = 0`) are alternal.
pub fn satisfies_alternal_recursion<C: Coefficient>(a: &Mould<C>) -> Result<bool> {
    if !a.component(0).is_zero() {
        return Ok(false);
    }
    for m in 2..=a.depth() {
        let head = a.evaluate(&Word::range(1, m - 1))?;
        let tail = a.evaluate(&Word::range(2, m))?;
        if a.component(m) != &head.sub(&tail) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Consistency oracle: if `A` satisfies the alternal recursion, the shuffle
/// test must accept it. Returns whether the recursion held.
pub fn inductive_alternality_oracle<C: Coefficient>(a: &Mould<C>) -> Result<bool> {
    let holds = satisfies_alternal_recursion(a)?;
    if holds {
        assert!(
            is_alternal(a)?,
            "recursion holds but a shuffle relation fails"
        );
    }
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::special::{dupal, dupal_numerator, pal};

    type M = Mould<RationalFunction>;

    fn x(i: usize) -> RationalFunction {
        RationalFunction::var(i)
    }

    #[test]
    fn witness_for_non_alternal() {
        let m: M = Mould::from_fn(2, |k| if k == 2 { x(1) } else { RationalFunction::zero() });
        let w = alternality_witness(&m).unwrap().unwrap();
        assert_eq!((w.p, w.q), (1, 1));
        assert_eq!(w.residual, x(1).add(&x(2)));
        assert!(!is_alternal_by_sh(&m).unwrap());
    }

    #[test]
    fn named_moulds() {
        assert!(is_alternal(&dupal(5)).unwrap());
        assert!(is_alternal_by_sh(&dupal(4)).unwrap());
        let p = pal(4).unwrap();
        assert!(is_symmetral(&p).unwrap());
        assert!(is_symmetral_by_sh(&p).unwrap());
        assert!(is_symmetral(&M::unit(4)).unwrap());
    }

    #[test]
    fn dupal_numerator_recursion() {
        let a: M = Mould::from_fn(6, |m| {
            if m == 0 {
                RationalFunction::zero()
            } else {
                RationalFunction::from_polynomial(dupal_numerator(m))
            }
        });
        assert!(inductive_alternality_oracle(&a).unwrap());
        let shifted: M = Mould::from_fn(4, |m| a.component(m).add(&RationalFunction::integer(m as i64)));
        assert!(!inductive_alternality_oracle(&shifted).unwrap());
    }

    #[test]
    fn dimould_product_small() {
        let a: Dimould = Dimould::from_fn(2, |r, s| RationalFunction::integer((r + 2 * s + 1) as i64));
        let b: Dimould = Dimould::from_fn(2, |r, s| {
            RationalFunction::from_polynomial(Polynomial::var(1).pow((r + s) as u32))
        });
        let p = a.mu(&b).unwrap();
        // (A x B)^{1,0} = A^{0,0} B^{1,0} + A^{1,0} B^{0,0}
        assert_eq!(p.component(1, 0), &x(1).add(&RationalFunction::integer(2)));
        assert_eq!(Dimould::unit(2).mu(&b).unwrap(), b);
        assert_eq!(a.mu(&Dimould::unit(2)).unwrap(), a);
    }

    #[test]
    fn sh_map_small() {
        let m: M = Mould::from_fn(3, |k| match k {
            2 => x(1).mul(&x(1)),
            _ => x(1),
        });
        let sh = sh_map(&m).unwrap();
        assert_eq!(sh.component(1, 1), &x(1).mul(&x(1)).add(&x(2).mul(&x(2))));
        assert_eq!(sh.component(2, 0), m.component(2));
    }
}
