use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linear::LinearForm;
use super::monomial::Monomial;
use super::Rational;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map ordered by [`Monomial`]'s graded lexicographic
/// order; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::monomial(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Polynomial::monomial(Monomial::var(i, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The constant coefficient when the polynomial has degree 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Leading term under graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (mut out, rhs) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn mul_linear(&self, l: &LinearForm) -> Polynomial {
        let mut out = Polynomial::zero();
        for (i, a) in l.coeffs().iter().enumerate() {
            if *a == 0 {
                continue;
            }
            let a = Rational::from_integer(BigInt::from(*a));
            let x = Monomial::var(i + 1, 1);
            for (m, c) in &self.terms {
                out.add_term(m.mul(&x), c * &a);
            }
        }
        out
    }

    /// Exact quotient `self / l`, or `None` when `l` does not divide `self`.
    ///
    /// Uses synthetic division in the pivot variable of `l` (its highest
    /// variable), treating the remaining variables as coefficients.
    pub fn div_linear(&self, l: &LinearForm) -> Option<Polynomial> {
        let (v, c) = l.pivot().expect("division by the zero linear form");
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let c = Rational::from_integer(BigInt::from(c));
        let rest = l.sub(&LinearForm::var(v).scale(l.coeff(v)));
        // slices[k] = coefficient of x_v^k
        let top = self.terms.keys().map(|m| m.exponent(v)).max().unwrap() as usize;
        if top == 0 {
            return None;
        }
        let mut slices = vec![Polynomial::zero(); top + 1];
        for (m, coef) in &self.terms {
            let k = m.exponent(v) as usize;
            slices[k].add_term(m.with_exponent(v, 0), coef.clone());
        }
        let inv_c = c.recip();
        let mut quot = vec![Polynomial::zero(); top];
        quot[top - 1] = slices[top].scale(&inv_c);
        for k in (1..top).rev() {
            quot[k - 1] = slices[k].sub(&quot[k].mul_linear(&rest)).scale(&inv_c);
        }
        if !slices[0].sub(&quot[0].mul_linear(&rest)).is_zero() {
            return None;
        }
        let mut q = Polynomial::zero();
        for (k, qk) in quot.into_iter().enumerate() {
            for (m, coef) in qk.terms {
                q.add_term(m.with_exponent(v, k as u32), coef);
            }
        }
        Some(q)
    }

    /// Substitute `x_i -> forms[i-1]`.
    pub fn substitute(&self, forms: &[LinearForm]) -> Polynomial {
        let n = self.max_var();
        assert!(n <= forms.len(), "substitution needs a form for every variable");
        let polys: Vec<Polynomial> = forms[..n].iter().map(LinearForm::to_polynomial).collect();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one()]; n];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (var, e) in m.iter() {
                let cache = &mut powers[var - 1];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&polys[var - 1]);
                    cache.push(next);
                }
                term = term.mul(&cache[e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Split into `(content, primitive)` so that `self = content * primitive`,
    /// where `primitive` has coprime integer coefficients and a positive
    /// leading coefficient. The zero polynomial maps to `(0, 1)`.
    pub fn primitive_part(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), Polynomial::one());
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (var, e) in m.iter() {
                t *= num_traits::pow(point[var - 1].clone(), e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Render with descending grlex order, e.g. `x1^2 - 3x1x2 + 1/2`.
    pub fn render(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, var, latex);
            if mono.is_empty() {
                s.push_str(&render_rational(&abs, latex));
            } else {
                if !abs.is_one() {
                    s.push_str(&render_rational(&abs, latex));
                    if !latex {
                        s.push('*');
                    }
                }
                s.push_str(&mono);
            }
        }
        s
    }
}

pub(crate) fn render_rational(q: &Rational, latex: bool) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn render_monomial(m: &Monomial, var: &str, latex: bool) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.iter() {
        let base = if latex {
            format!("{}_{{{}}}", var, i)
        } else {
            format!("{}{}", var, i)
        };
        parts.push(match (e, latex) {
            (1, _) => base,
            (_, true) => format!("{}^{{{}}}", base, e),
            (_, false) => format!("{}^{}", base, e),
        });
    }
    if latex {
        parts.join(" ")
    } else {
        parts.join("*")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x", false))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x", false))
    }
}
