//! Moulds truncated at a finite depth and the elementary mould algebra.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{format_rational, int, rat, LinearForm, Rational, RationalFunction};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::word::Word;

/// Default truncation depth.
pub const DEFAULT_DEPTH: usize = 4;

/// A mould `(M^m(x_1, ..., x_m))_{0 <= m <= depth}`.
///
/// The depth-`m` component is a function of the slot variables
/// `x_1, ..., x_m`; component 0 is a constant.
#[derive(Clone, PartialEq, Debug)]
pub struct Mould<C = RationalFunction> {
    components: Vec<C>,
}

impl<C: Coefficient> Mould<C> {
    pub fn zero(depth: usize) -> Self {
        Mould {
            components: vec![C::zero(); depth + 1],
        }
    }

    /// The unit `1_M`: 1 in depth 0, 0 elsewhere.
    pub fn unit(depth: usize) -> Self {
        let mut m = Mould::zero(depth);
        m.components[0] = C::one();
        m
    }

    /// Components indexed by depth; the vector must be nonempty.
    pub fn from_components(components: Vec<C>) -> Self {
        assert!(!components.is_empty(), "a mould has at least a depth-0 component");
        Mould { components }
    }

    pub fn from_fn<F: FnMut(usize) -> C>(depth: usize, f: F) -> Self {
        Mould {
            components: (0..=depth).map(f).collect(),
        }
    }

    pub fn try_from_fn<F: FnMut(usize) -> Result<C>>(depth: usize, f: F) -> Result<Self> {
        Ok(Mould {
            components: (0..=depth).map(f).collect::<Result<_>>()?,
        })
    }

    pub fn depth(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, m: usize) -> &C {
        &self.components[m]
    }

    pub fn components(&self) -> &[C] {
        &self.components
    }

    pub fn set_component(&mut self, m: usize, value: C) {
        self.components[m] = value;
    }

    /// Truncate or zero-extend to the given depth.
    pub fn with_depth(&self, depth: usize) -> Self {
        Mould::from_fn(depth, |m| self.components.get(m).cloned().unwrap_or_else(C::zero))
    }

    /// The depth-0 value, if it is a rational constant.
    pub fn constant_term(&self) -> Option<Rational> {
        self.components[0].as_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(C::is_zero)
    }

    /// Evaluate at a word: substitute its letters into the slots of the
    /// component of matching length.
    pub fn evaluate(&self, w: &Word) -> Result<C> {
        let m = w.len();
        if m > self.depth() {
            return Err(Error::DepthExceeded {
                length: m,
                depth: self.depth(),
            });
        }
        if m == 0 {
            return Ok(self.components[0].clone());
        }
        self.components[m].substitute(w.letters())
    }

    pub fn map<F: FnMut(usize, &C) -> C>(&self, mut f: F) -> Self {
        Mould {
            components: self.components.iter().enumerate().map(|(m, c)| f(m, c)).collect(),
        }
    }

    pub fn try_map<F: FnMut(usize, &C) -> Result<C>>(&self, mut f: F) -> Result<Self> {
        Ok(Mould {
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(m, c)| f(m, c))
                .collect::<Result<_>>()?,
        })
    }

    fn zip<F: FnMut(&C, &C) -> C>(&self, other: &Self, mut f: F) -> Self {
        let depth = self.depth().min(other.depth());
        Mould::from_fn(depth, |m| f(&self.components[m], &other.components[m]))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, C::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, C::sub)
    }

    /// Additive inverse (not to be confused with [`Mould::neg`]).
    pub fn minus(&self) -> Self {
        self.map(|_, c| c.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map(|_, c| c.scale(k))
    }

    /// The product `(M x N)^m = sum_k M^k(x_1..x_k) N^{m-k}(x_{k+1}..x_m)`,
    /// truncated to the smaller depth.
    pub fn mu(&self, other: &Self) -> Self {
        let depth = self.depth().min(other.depth());
        Mould::from_fn(depth, |m| self.mu_component(other, m))
    }

    /// Depth-`m` component of `self x other`.
    pub fn mu_component(&self, other: &Self, m: usize) -> C {
        let mut acc = C::zero();
        for k in 0..=m {
            let left = &self.components[k];
            let right = &other.components[m - k];
            if left.is_zero() || right.is_zero() {
                continue;
            }
            let right = shifted(right, k, m - k);
            acc = acc.add(&left.mul(&right));
        }
        acc
    }

    /// The commutator `lu(M, N) = M x N - N x M`.
    pub fn lu(&self, other: &Self) -> Self {
        self.mu(other).sub(&other.mu(self))
    }

    /// Inverse for `x`; requires a depth-0 component equal to 1.
    pub fn mu_inverse(&self) -> Result<Self> {
        self.require_constant_one().map_err(Error::NotInvertible)?;
        let depth = self.depth();
        let mut inv: Mould<C> = Mould::unit(depth);
        for m in 1..=depth {
            let mut acc = C::zero();
            for k in 1..=m {
                let left = &self.components[k];
                let right = &inv.components[m - k];
                if left.is_zero() || right.is_zero() {
                    continue;
                }
                acc = acc.add(&left.mul(&shifted(right, k, m - k)));
            }
            inv.components[m] = acc.neg();
        }
        Ok(inv)
    }

    /// `log(S) = sum_{h>=1} (-1)^{h+1}/h (S - 1)^{xh}`, finite at each depth.
    pub fn mu_log(&self) -> Result<Self> {
        self.require_constant_one().map_err(|found| Error::NotDefined {
            op: "mu_log",
            found,
            expected: "1",
        })?;
        let depth = self.depth();
        let nilpotent = self.sub(&Mould::unit(depth));
        let mut power = nilpotent.clone();
        let mut acc = Mould::zero(depth);
        for h in 1..=depth {
            let sign = if h % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(&rat(sign, h as i64)));
            power = power.mu(&nilpotent);
        }
        Ok(acc)
    }

    /// `exp(A) = sum_h A^{xh}/h!` for `A` with zero depth-0 component.
    pub fn mu_exp(&self) -> Result<Self> {
        self.require_constant_zero("mu_exp")?;
        let depth = self.depth();
        let mut acc = Mould::unit(depth);
        let mut power = Mould::unit(depth);
        let mut fact = Rational::one();
        for h in 1..=depth {
            power = power.mu(self);
            fact *= int(h as i64);
            acc = acc.add(&power.scale(&fact.recip()));
        }
        Ok(acc)
    }

    /// Variable negation: `neg(M)^m(x) = M^m(-x_1, ..., -x_m)`.
    pub fn neg(&self) -> Result<Self> {
        self.try_map(|m, c| {
            if m == 0 {
                return Ok(c.clone());
            }
            let forms: Vec<_> = (1..=m).map(|i| LinearForm::var(i).neg()).collect();
            c.substitute(&forms)
        })
    }

    /// `dur . M`: multiply the depth-`m` component by `x_1 + ... + x_m`.
    pub fn dur_scale(&self) -> Self {
        self.map(|m, c| {
            if m == 0 {
                C::zero()
            } else {
                c.mul_ratfunc(&RationalFunction::linear(&LinearForm::sum_range(1, m)))
            }
        })
    }

    /// Inverse of [`dur_scale`](Mould::dur_scale) on moulds with zero
    /// depth-0 component.
    pub fn dur_unscale(&self) -> Result<Self> {
        if !self.components[0].is_zero() {
            return Err(Error::NotDivisible(
                "depth-0 component must vanish to divide by dur".into(),
            ));
        }
        self.try_map(|m, c| {
            if m == 0 {
                return Ok(C::zero());
            }
            let inv = RationalFunction::inverse_linear(&LinearForm::sum_range(1, m))?;
            Ok(c.mul_ratfunc(&inv))
        })
    }

    /// The coordinate change `f(x_1, ..., x_m) -> f(x_1, x_1 + x_2, ..., x_1 + ... + x_m)`.
    pub fn sharp(&self) -> Result<Self> {
        self.try_map(|m, c| {
            if m == 0 {
                return Ok(c.clone());
            }
            c.substitute(&partial_sums(m))
        })
    }

    /// Keep only the depth-`r` component.
    pub fn leng(&self, r: usize) -> Self {
        self.map(|m, c| if m == r { c.clone() } else { C::zero() })
    }

    /// True iff the components of depth `< k` agree.
    pub fn equal_mod_depth(&self, other: &Self, k: usize) -> bool {
        (0..k).all(|m| {
            match (self.components.get(m), other.components.get(m)) {
                (Some(a), Some(b)) => a == b,
                (Some(a), None) | (None, Some(a)) => a.is_zero(),
                (None, None) => true,
            }
        })
    }

    pub(crate) fn require_constant_one(&self) -> std::result::Result<(), String> {
        match self.constant_term() {
            Some(c) if c.is_one() => Ok(()),
            Some(c) => Err(format_rational(&c)),
            None => Err(format!("{:?}", self.components[0])),
        }
    }

    pub(crate) fn require_constant_zero(&self, op: &'static str) -> Result<()> {
        if self.components[0].is_zero() {
            Ok(())
        } else {
            Err(Error::NotDefined {
                op,
                found: format!("{:?}", self.components[0]),
                expected: "0",
            })
        }
    }
}

impl Mould<RationalFunction> {
    /// Lift a rational-function mould to another coefficient type.
    pub fn lift<D: Coefficient>(&self) -> Mould<D> {
        Mould {
            components: self.components.iter().cloned().map(D::from_ratfunc).collect(),
        }
    }
}

/// `(x_1, x_1 + x_2, ..., x_1 + ... + x_m)`.
pub fn partial_sums(m: usize) -> Vec<LinearForm> {
    (1..=m).map(|i| LinearForm::sum_range(1, i)).collect()
}

/// Rename slots `y_1..y_len` to `x_{offset+1}..x_{offset+len}`.
pub(crate) fn shifted<C: Coefficient>(c: &C, offset: usize, len: usize) -> C {
    if offset == 0 || len == 0 {
        return c.clone();
    }
    let forms: Vec<_> = (1..=len).map(|i| LinearForm::var(offset + i)).collect();
    c.substitute(&forms)
        .expect("renaming variables cannot create a zero denominator")
}

/// Memoized evaluation of a mould on words.
pub(crate) struct Memo<'a, C> {
    mould: &'a Mould<C>,
    cache: RefCell<HashMap<Word, C>>,
}

impl<'a, C: Coefficient> Memo<'a, C> {
    pub(crate) fn new(mould: &'a Mould<C>) -> Self {
        Memo {
            mould,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub(crate) fn get(&self, w: &Word) -> Result<C> {
        if w.is_empty() {
            return Ok(self.mould.components[0].clone());
        }
        if self.mould.components.get(w.len()).is_some_and(C::is_zero) {
            return Ok(C::zero());
        }
        if let Some(v) = self.cache.borrow().get(w) {
            return Ok(v.clone());
        }
        let v = self.mould.evaluate(w)?;
        self.cache.borrow_mut().insert(w.clone(), v.clone());
        Ok(v)
    }
}

/// Helper for tests and constructors: the constant `q` as a coefficient.
pub fn constant<C: Coefficient>(q: Rational) -> C {
    if q.is_zero() {
        C::zero()
    } else {
        C::from_ratfunc(RationalFunction::constant(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    fn lf(c: &[i64]) -> LinearForm {
        LinearForm::from_coeffs(c.to_vec())
    }

    fn inv(c: &[i64]) -> RationalFunction {
        RationalFunction::inverse_linear(&lf(c)).unwrap()
    }

    fn paj(depth: usize) -> Mould {
        Mould::from_fn(depth, |m| {
            (1..=m).fold(RationalFunction::one(), |acc, i| {
                acc.mul(&RationalFunction::inverse_linear(&LinearForm::sum_range(1, i)).unwrap())
            })
        })
    }

    #[test]
    fn evaluate_paj() {
        let p = paj(3);
        let w = Word::new(vec![lf(&[1, 1]), lf(&[0, 0, 1])]);
        assert_eq!(p.evaluate(&w).unwrap(), inv(&[1, 1]).mul(&inv(&[1, 1, 1])));
        assert_eq!(p.evaluate(&Word::empty()).unwrap(), RationalFunction::one());
        assert!(matches!(
            p.evaluate(&Word::variables(4)),
            Err(Error::DepthExceeded { length: 4, depth: 3 })
        ));
    }

    #[test]
    fn unit_law_and_square() {
        let p = paj(4);
        assert_eq!(Mould::unit(4).mu(&p), p);
        assert_eq!(p.mu(&Mould::unit(4)), p);
        let sq = p.mu(&p);
        assert_eq!(sq.component(1), &inv(&[1]).scale(&int(2)));
    }

    #[test]
    fn paj_inverse_and_log() {
        let p = paj(4);
        let q = p.mu_inverse().unwrap();
        assert_eq!(q.component(1), &inv(&[1]).neg());
        let prod = p.mu(&q);
        assert_eq!(prod, Mould::unit(4));
        let log = p.mu_log().unwrap();
        assert_eq!(log.component(1), &inv(&[1]));
        let expected2 = p
            .component(2)
            .sub(&inv(&[1]).mul(&inv(&[0, 1])).scale(&rat(1, 2)));
        assert_eq!(log.component(2), &expected2);
        assert_eq!(log.mu_exp().unwrap(), p);
        assert!(Mould::<RationalFunction>::unit(3).mu_log().unwrap().is_zero());
        assert!(matches!(Mould::<RationalFunction>::zero(2).mu_inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn neg_and_sharp() {
        let p = paj(3);
        assert_eq!(p.neg().unwrap().neg().unwrap(), p);
        // paj^2(-x1, -x2) = 1/(x1 (x1 + x2))
        assert_eq!(p.neg().unwrap().component(2), p.component(2));
        let f: Mould = Mould::from_fn(3, |m| if m == 3 { inv(&[0, 0, 1]) } else { RationalFunction::zero() });
        assert_eq!(f.sharp().unwrap().component(3), &inv(&[1, 1, 1]));
        assert_eq!(p.sharp().unwrap().component(1), p.component(1));
    }

    #[test]
    fn dur_pair() {
        let m: Mould = Mould::from_fn(3, |k| {
            if k == 0 {
                RationalFunction::zero()
            } else {
                RationalFunction::from_polynomial(Polynomial::var(1).pow(2))
            }
        });
        let s = m.dur_scale();
        assert_eq!(s.component(1), &RationalFunction::var(1).pow(3));
        assert_eq!(s.dur_unscale().unwrap(), m);
        assert!(Mould::<RationalFunction>::unit(2).dur_unscale().is_err());
    }

    #[test]
    fn leng_partitions_components() {
        let p = paj(4);
        let sum = (0..=4).fold(Mould::zero(4), |acc, r| acc.add(&p.leng(r)));
        assert_eq!(sum, p);
        assert_eq!(p.leng(0), Mould::unit(4));
        assert!(p.leng(1).component(2).is_zero());
    }

    #[test]
    fn lu_on_depth_one_moulds() {
        let a: Mould = Mould::from_fn(3, |m| if m == 1 { inv(&[1]) } else { RationalFunction::zero() });
        let b: Mould = Mould::from_fn(3, |m| if m == 1 { RationalFunction::var(1) } else { RationalFunction::zero() });
        let l = a.lu(&b);
        assert!(l.component(1).is_zero());
        assert_eq!(l, b.lu(&a).minus());
        assert!(a.lu(&a).is_zero());
    }

    #[test]
    fn equality_below_depth() {
        let p = paj(4);
        let mut q = p.clone();
        q.set_component(4, RationalFunction::zero());
        assert!(p.equal_mod_depth(&q, 4));
        assert!(!p.equal_mod_depth(&q, 5));
        assert!(p.equal_mod_depth(&p, 5));
    }
}
