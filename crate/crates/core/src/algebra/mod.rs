//! Exact arithmetic kernel: rationals, sparse multivariate polynomials,
//! integer linear forms and rational functions whose denominators are
//! products of linear forms.

mod linear;
mod monomial;
mod polynomial;
mod ratfunc;

pub use linear::LinearForm;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use ratfunc::RationalFunction;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Arbitrary-precision exact rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = |m: &str| Error::Parse {
        location: format!("rational `{}`", s),
        message: m.to_string(),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
    if d == BigInt::from(0) {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
