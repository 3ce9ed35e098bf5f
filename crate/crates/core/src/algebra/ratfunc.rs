use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::linear::LinearForm;
use super::polynomial::{render_rational, Polynomial};
use super::Rational;
use crate::error::{Error, Result};

/// A rational function `scalar * numerator / prod(l_i^{k_i})` whose
/// denominator is a product of linear forms.
///
/// Canonical form, maintained by every constructor and operation:
/// the numerator is primitive with integer coefficients and a positive
/// grlex-leading coefficient; every denominator factor is a primitive
/// linear form with positive first coefficient; no denominator factor
/// divides the numerator. Zero is `0 * 1 / 1`. Structural equality is
/// therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    scalar: Rational,
    numerator: Polynomial,
    denominator: BTreeMap<LinearForm, u32>,
}

impl Default for RationalFunction {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            scalar: Rational::zero(),
            numerator: Polynomial::one(),
            denominator: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            scalar: c,
            numerator: Polynomial::one(),
            denominator: BTreeMap::new(),
        }
    }

    pub fn integer(n: i64) -> Self {
        RationalFunction::constant(Rational::from_integer(n.into()))
    }

    pub fn var(i: usize) -> Self {
        RationalFunction::from_polynomial(Polynomial::var(i))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction::new(p, std::iter::empty())
    }

    pub fn linear(l: &LinearForm) -> Self {
        RationalFunction::from_polynomial(l.to_polynomial())
    }

    /// `1 / l`. Fails on the zero form.
    pub fn inverse_linear(l: &LinearForm) -> Result<Self> {
        if l.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction::new(Polynomial::one(), [(l.clone(), 1)]))
    }

    /// Build `numerator / prod(l^k)` from arbitrary (nonzero) factors and
    /// bring it to canonical form. Panics if a factor is the zero form.
    pub fn new<I>(numerator: Polynomial, factors: I) -> Self
    where
        I: IntoIterator<Item = (LinearForm, u32)>,
    {
        let (content, numerator) = numerator.primitive_part();
        if content.is_zero() {
            return RationalFunction::zero();
        }
        let mut scalar = content;
        let mut denominator: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for (l, k) in factors {
            if k == 0 {
                continue;
            }
            let (c, prim) = l.canonical();
            let ck = num_traits::pow(Rational::from_integer(BigInt::from(c)), k as usize);
            scalar /= ck;
            *denominator.entry(prim).or_insert(0) += k;
        }
        let mut f = RationalFunction {
            scalar,
            numerator,
            denominator,
        };
        f.cancel();
        f
    }

    /// Divide out every denominator factor that divides the numerator.
    fn cancel(&mut self) {
        let mut remove = Vec::new();
        for (l, k) in self.denominator.iter_mut() {
            while *k > 0 {
                match self.numerator.div_linear(l) {
                    Some(q) => {
                        self.numerator = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
            if *k == 0 {
                remove.push(l.clone());
            }
        }
        for l in remove {
            self.denominator.remove(&l);
        }
        debug_assert!(self.numerator.leading().is_some_and(|(_, c)| c.is_positive()));
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<LinearForm, u32> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.numerator.is_one() && self.denominator.is_empty()
    }

    /// True when the denominator multiset is empty.
    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_empty()
    }

    /// The value when this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if !self.denominator.is_empty() {
            return None;
        }
        self.numerator.as_constant().map(|c| c * &self.scalar)
    }

    /// The full numerator `scalar * numerator` as a polynomial.
    pub fn scaled_numerator(&self) -> Polynomial {
        self.numerator.scale(&self.scalar)
    }

    /// The expanded denominator polynomial.
    pub fn denominator_polynomial(&self) -> Polynomial {
        self.denominator
            .iter()
            .fold(Polynomial::one(), |acc, (l, k)| acc.mul(&l.to_polynomial().pow(*k)))
    }

    pub fn to_polynomial(&self) -> Option<Polynomial> {
        self.is_polynomial().then(|| self.scaled_numerator())
    }

    pub fn max_var(&self) -> usize {
        self.denominator
            .keys()
            .map(LinearForm::max_var)
            .chain(std::iter::once(self.numerator.max_var()))
            .max()
            .unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.scalar = -out.scalar;
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() || self.is_zero() {
            return RationalFunction::zero();
        }
        let mut out = self.clone();
        out.scalar *= k;
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut lcm = self.denominator.clone();
        for (l, k) in &other.denominator {
            let e = lcm.entry(l.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
        let lift = |f: &RationalFunction| {
            let mut p = f.numerator.scale(&f.scalar);
            for (l, k) in &lcm {
                let have = f.denominator.get(l).copied().unwrap_or(0);
                for _ in have..*k {
                    p = p.mul_linear(l);
                }
            }
            p
        };
        let num = lift(self).add(&lift(other));
        let (content, numerator) = num.primitive_part();
        if content.is_zero() {
            return RationalFunction::zero();
        }
        let mut f = RationalFunction {
            scalar: content,
            numerator,
            denominator: lcm,
        };
        f.cancel();
        f
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalFunction::zero();
        }
        // each numerator is already coprime to its own denominator, so only
        // cross cancellations are possible
        let mut a = RationalFunction {
            scalar: Rational::one(),
            numerator: self.numerator.clone(),
            denominator: other.denominator.clone(),
        };
        a.cancel();
        let mut b = RationalFunction {
            scalar: Rational::one(),
            numerator: other.numerator.clone(),
            denominator: self.denominator.clone(),
        };
        b.cancel();
        let mut denominator = a.denominator;
        for (l, k) in b.denominator {
            *denominator.entry(l).or_insert(0) += k;
        }
        let (content, numerator) = a.numerator.mul(&b.numerator).primitive_part();
        RationalFunction {
            scalar: &self.scalar * &other.scalar * content,
            numerator,
            denominator,
        }
    }

    pub fn mul_linear(&self, l: &LinearForm) -> Self {
        self.mul(&RationalFunction::linear(l))
    }

    /// Multiply by `1 / l`.
    pub fn div_linear(&self, l: &LinearForm) -> Result<Self> {
        Ok(self.mul(&RationalFunction::inverse_linear(l)?))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RationalFunction::one(), |acc, _| acc.mul(self))
    }

    /// Substitute `y_i -> forms[i-1]`; fails with `ZeroDenominator` when a
    /// denominator factor becomes identically zero.
    pub fn substitute(&self, forms: &[LinearForm]) -> Result<Self> {
        if self.is_zero() {
            return Ok(RationalFunction::zero());
        }
        if self.max_var() > forms.len() {
            return Err(Error::SlotMismatch {
                needed: self.max_var(),
                given: forms.len(),
            });
        }
        let mut factors = Vec::with_capacity(self.denominator.len());
        for (l, k) in &self.denominator {
            let image = l.substitute(forms);
            if image.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            factors.push((image, *k));
        }
        let num = self.numerator.substitute(forms).scale(&self.scalar);
        Ok(RationalFunction::new(num, factors))
    }

    /// Evaluate at a rational point; `None` if a denominator vanishes there.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let mut den = Rational::one();
        for (l, k) in &self.denominator {
            let v = l.eval(point);
            if v.is_zero() {
                return None;
            }
            den *= num_traits::pow(v, *k as usize);
        }
        Some(&self.scalar * self.numerator.eval(point) / den)
    }

    /// Plain text: `scalar * (numerator) / (l1 * l2^2 ...)`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        let num_is_one = self.numerator.is_one();
        let neg = self.scalar.is_negative();
        let abs = self.scalar.abs();
        if neg {
            s.push('-');
        }
        if num_is_one {
            s.push_str(&render_rational(&abs, false));
        } else {
            if !abs.is_one() {
                s.push_str(&render_rational(&abs, false));
                s.push('*');
            }
            if self.numerator.len() > 1 {
                s.push_str(&format!("({})", self.numerator.render(var, false)));
            } else {
                s.push_str(&self.numerator.render(var, false));
            }
        }
        if !self.denominator.is_empty() {
            let parts: Vec<String> = self
                .denominator
                .iter()
                .map(|(l, k)| {
                    let base = if l.coeffs().iter().filter(|c| **c != 0).count() > 1 {
                        format!("({})", l.render(var))
                    } else {
                        l.render(var)
                    };
                    if *k > 1 {
                        format!("{}^{}", base, k)
                    } else {
                        base
                    }
                })
                .collect();
            s.push_str(" / ");
            if parts.len() > 1 {
                s.push_str(&format!("({})", parts.join("*")));
            } else {
                s.push_str(&parts[0]);
            }
        }
        s
    }

    /// LaTeX: `\frac{p \cdot num}{q \cdot factors}` with the sign pulled out.
    pub fn render_latex(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.scalar.is_negative();
        let abs = self.scalar.abs();
        let mut num = String::new();
        let p = abs.numer();
        let q = abs.denom();
        if self.numerator.is_one() {
            num.push_str(&p.to_string());
        } else {
            if !p.is_one() {
                num.push_str(&p.to_string());
            }
            if self.numerator.len() > 1 && !p.is_one() {
                num.push_str(&format!("({})", self.numerator.render(var, true)));
            } else {
                num.push_str(&self.numerator.render(var, true));
            }
        }
        let mut den = String::new();
        if !q.is_one() {
            den.push_str(&q.to_string());
        }
        for (l, k) in &self.denominator {
            let lf = latex_linear(l, var);
            let base = if l.coeffs().iter().filter(|c| **c != 0).count() > 1 {
                format!("({})", lf)
            } else {
                lf
            };
            if *k > 1 {
                den.push_str(&format!("{}^{{{}}}", base, k));
            } else {
                den.push_str(&base);
            }
        }
        let sign = if neg { "-" } else { "" };
        if den.is_empty() {
            format!("{}{}", sign, num)
        } else {
            format!("{}\\frac{{{}}}{{{}}}", sign, num, den)
        }
    }
}

fn latex_linear(l: &LinearForm, var: &str) -> String {
    let mut s = String::new();
    for (i, c) in l.coeffs().iter().enumerate() {
        if *c == 0 {
            continue;
        }
        if s.is_empty() {
            if *c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if *c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("{}_{{{}}}", var, i + 1));
    }
    s
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl From<Rational> for RationalFunction {
    fn from(q: Rational) -> Self {
        RationalFunction::constant(q)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_polynomial(p)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                RationalFunction::$m(self, rhs)
            }
        }
        impl std::ops::$tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                RationalFunction::$m(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(&self)
    }
}
