//! Polynomials in opaque mould symbols with rational-function coefficients.
//!
//! An atom `M^m(l_1, ..., l_m)` stands for the unknown depth-`m` component
//! of a mould `M` evaluated at linear forms. A mould whose components are
//! the bare atoms `M^m(x_1, ..., x_m)` is fully generic: any identity that
//! holds for it holds for every mould, so comparing an operator's output
//! with a closed-form display becomes polynomial identity testing in the
//! atoms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{LinearForm, Rational, RationalFunction};
use crate::coeff::Coefficient;
use crate::error::Result;
use crate::mould::Mould;
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub label: char,
    pub args: Vec<LinearForm>,
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}(", self.label, self.args.len())?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, ")")
    }
}

/// Product of atoms with multiplicities, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AtomMonomial(Vec<(Atom, u32)>);

impl AtomMonomial {
    fn from_atoms(mut atoms: Vec<(Atom, u32)>) -> Self {
        atoms.sort();
        let mut out: Vec<(Atom, u32)> = Vec::with_capacity(atoms.len());
        for (a, e) in atoms {
            match out.last_mut() {
                Some((b, f)) if *b == a => *f += e,
                _ => out.push((a, e)),
            }
        }
        AtomMonomial(out)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        AtomMonomial::from_atoms(v)
    }

    pub fn atoms(&self) -> &[(Atom, u32)] {
        &self.0
    }
}

impl fmt::Debug for AtomMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{:?}", a)?;
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// A polynomial in [`Atom`]s whose coefficients are rational functions.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymbolicValue {
    terms: BTreeMap<AtomMonomial, RationalFunction>,
}

impl SymbolicValue {
    pub fn atom(label: char, args: Vec<LinearForm>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(
            AtomMonomial(vec![(Atom { label, args }, 1)]),
            RationalFunction::one(),
        );
        SymbolicValue { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AtomMonomial, &RationalFunction)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: AtomMonomial, c: RationalFunction) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }
}

impl fmt::Debug for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.0.is_empty() {
                write!(f, "[{}]", c)?;
            } else {
                write!(f, "[{}]*{:?}", c, m)?;
            }
        }
        Ok(())
    }
}

impl Coefficient for SymbolicValue {
    fn zero() -> Self {
        SymbolicValue::default()
    }

    fn one() -> Self {
        SymbolicValue::from_ratfunc(RationalFunction::one())
    }

    fn from_ratfunc(f: RationalFunction) -> Self {
        let mut out = SymbolicValue::default();
        out.add_term(AtomMonomial::default(), f);
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    fn neg(&self) -> Self {
        SymbolicValue {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = SymbolicValue::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return SymbolicValue::default();
        }
        SymbolicValue {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.scale(k))).collect(),
        }
    }

    fn mul_ratfunc(&self, f: &RationalFunction) -> Self {
        let mut out = SymbolicValue::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(f));
        }
        out
    }

    fn substitute(&self, forms: &[LinearForm]) -> Result<Self> {
        let mut out = SymbolicValue::default();
        for (m, c) in &self.terms {
            let atoms = m
                .0
                .iter()
                .map(|(a, e)| {
                    let args = a.args.iter().map(|l| l.substitute(forms)).collect();
                    (Atom { label: a.label, args }, *e)
                })
                .collect();
            out.add_term(AtomMonomial::from_atoms(atoms), c.substitute(forms)?);
        }
        Ok(out)
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.0.is_empty() {
                    c.as_constant()
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

/// A generic mould whose depth-`m` component is the atom
/// `label^m(x_1, ..., x_m)` for `1 <= m <= depth`.
///
/// With `group = false` the depth-0 component is 0 (an element of ARI),
/// otherwise 1 (an element of GARI).
pub fn opaque_mould(label: char, depth: usize, group: bool) -> Mould<SymbolicValue> {
    Mould::from_fn(depth, |m| match m {
        0 if group => SymbolicValue::one(),
        0 => SymbolicValue::zero(),
        _ => SymbolicValue::atom(label, Word::variables(m).letters().to_vec()),
    })
}

/// Like [`opaque_mould`] but supported in depths `1..=support` only.
pub fn opaque_mould_truncated(label: char, depth: usize, support: usize) -> Mould<SymbolicValue> {
    Mould::from_fn(depth, |m| {
        if m == 0 || m > support {
            SymbolicValue::zero()
        } else {
            SymbolicValue::atom(label, Word::variables(m).letters().to_vec())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn lf(c: &[i64]) -> LinearForm {
        LinearForm::from_coeffs(c.to_vec())
    }

    #[test]
    fn substitution_merges_atoms() {
        // M(y1) * M(y2) at y1 = y2 = x1 becomes M(x1)^2
        let a = SymbolicValue::atom('M', vec![lf(&[1])]);
        let b = SymbolicValue::atom('M', vec![lf(&[0, 1])]);
        let p = a.mul(&b);
        let s = p.substitute(&[lf(&[1]), lf(&[1])]).unwrap();
        assert_eq!(s, a.mul(&a));
        assert_ne!(a, SymbolicValue::atom('M', vec![lf(&[-1])]));
    }

    #[test]
    fn ring_identities() {
        let a = SymbolicValue::atom('A', vec![lf(&[1])]);
        let c = SymbolicValue::from_ratfunc(RationalFunction::var(1));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a), a.scale(&int(2)));
        assert_eq!(a.mul(&c), a.mul_ratfunc(&RationalFunction::var(1)));
        assert_eq!(SymbolicValue::one().as_constant(), Some(int(1)));
        assert_eq!(a.as_constant(), None);
    }

    #[test]
    fn opaque_mould_evaluates_to_atoms() {
        let m = opaque_mould('M', 3, false);
        let w = Word::new(vec![lf(&[1, 1]), lf(&[0, 0, 1])]);
        assert_eq!(
            m.evaluate(&w).unwrap(),
            SymbolicValue::atom('M', vec![lf(&[1, 1]), lf(&[0, 0, 1])])
        );
        assert!(m.component(0).is_zero());
        assert_eq!(opaque_mould('S', 2, true).constant_term(), Some(int(1)));
    }
}
