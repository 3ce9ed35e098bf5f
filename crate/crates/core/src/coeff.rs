use std::fmt;

use crate::algebra::{LinearForm, Rational, RationalFunction};
use crate::error::Result;

/// Values a mould component can take.
///
/// Besides plain [`RationalFunction`]s, moulds are also built over
/// [`SymbolicValue`](crate::symbolic::SymbolicValue), whose elements are
/// polynomials in opaque mould symbols; the operators only need ring
/// arithmetic and substitution of linear forms into the slots.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratfunc(f: RationalFunction) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, k: &Rational) -> Self;
    fn mul_ratfunc(&self, f: &RationalFunction) -> Self;
    /// Substitute `y_i -> forms[i-1]` in the slot variables.
    fn substitute(&self, forms: &[LinearForm]) -> Result<Self>;
    /// The value as a rational constant, if it is one.
    fn as_constant(&self) -> Option<Rational>;
}

impl Coefficient for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_ratfunc(f: RationalFunction) -> Self {
        f
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn scale(&self, k: &Rational) -> Self {
        RationalFunction::scale(self, k)
    }
    fn mul_ratfunc(&self, f: &RationalFunction) -> Self {
        RationalFunction::mul(self, f)
    }
    fn substitute(&self, forms: &[LinearForm]) -> Result<Self> {
        RationalFunction::substitute(self, forms)
    }
    fn as_constant(&self) -> Option<Rational> {
        RationalFunction::as_constant(self)
    }
}
