use std::fmt;

use num_integer::Integer;

use super::polynomial::Polynomial;
use super::Rational;

/// An integer linear combination `a_1 x_1 + ... + a_k x_k` of the ambient
/// variables: a letter of the alphabet on which moulds are evaluated.
///
/// Letters are kept exactly as given (`-x_1` and `x_1` are different
/// letters). Denominator factors of a [`RationalFunction`] use the
/// [`canonical`](LinearForm::canonical) representative instead.
///
/// [`RationalFunction`]: super::RationalFunction
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearForm(Vec<i64>);

/// Orders by highest variable first, so `x1 < x2 < x1 + x2 < x3`.
impl Ord for LinearForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm(Vec::new())
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variable indices start at 1");
        let mut v = vec![0; i];
        v[i - 1] = 1;
        LinearForm(v)
    }

    /// Coefficient vector, `coeffs[i]` multiplying `x_{i+1}`.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        LinearForm(coeffs)
    }

    /// `x_from + x_{from+1} + ... + x_to` (empty sum is zero).
    pub fn sum_range(from: usize, to: usize) -> Self {
        let mut f = LinearForm::zero();
        for i in from..=to {
            f = f.add(&LinearForm::var(i));
        }
        f
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, var: usize) -> i64 {
        self.0.get(var - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_var(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        let n = self.0.len().max(other.0.len());
        let v = (0..n)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0))
            .collect();
        LinearForm::from_coeffs(v)
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: i64) -> LinearForm {
        LinearForm::from_coeffs(self.0.iter().map(|c| c * k).collect())
    }

    /// Compose with a substitution `x_i -> forms[i-1]`.
    pub fn substitute(&self, forms: &[LinearForm]) -> LinearForm {
        assert!(
            self.0.len() <= forms.len(),
            "substitution needs a form for every variable"
        );
        self.0
            .iter()
            .zip(forms)
            .filter(|(c, _)| **c != 0)
            .fold(LinearForm::zero(), |acc, (c, f)| acc.add(&f.scale(*c)))
    }

    /// Split into `(k, primitive)` with `self = k * primitive`, where the
    /// primitive form has coprime coefficients and a positive first
    /// nonzero coefficient. Panics on the zero form.
    pub fn canonical(&self) -> (i64, LinearForm) {
        assert!(!self.is_zero(), "zero linear form has no canonical form");
        let g = self.0.iter().fold(0i64, |g, c| g.gcd(c));
        let first = *self.0.iter().find(|c| **c != 0).unwrap();
        let k = if first < 0 { -g } else { g };
        (k, LinearForm(self.0.iter().map(|c| c / k).collect()))
    }

    pub fn is_canonical(&self) -> bool {
        !self.is_zero() && self.canonical().0 == 1
    }

    /// Position of the last nonzero coefficient (its variable index).
    pub fn pivot(&self) -> Option<(usize, i64)> {
        self.0.last().map(|c| (self.0.len(), *c))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for (i, c) in self.0.iter().enumerate() {
            if *c != 0 {
                p = p.add(&Polynomial::var(i + 1).scale(&Rational::from_integer((*c).into())));
            }
        }
        p
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.0
            .iter()
            .enumerate()
            .map(|(i, c)| Rational::from_integer((*c).into()) * &point[i])
            .fold(Rational::from_integer(0.into()), |a, b| a + b)
    }

    /// Render with the given variable prefix, e.g. `x_1 - 2x_3`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let abs = c.abs();
            if s.is_empty() {
                if *c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if *c < 0 { " - " } else { " + " });
            }
            if abs != 1 {
                s.push_str(&abs.to_string());
            }
            s.push_str(&format!("{}{}", var, i + 1));
        }
        s
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_primitive_and_positive() {
        let l = LinearForm::from_coeffs(vec![-2, 4, 0]);
        let (k, c) = l.canonical();
        assert_eq!(k, -2);
        assert_eq!(c, LinearForm::from_coeffs(vec![1, -2]));
        assert!(c.is_canonical());
        let l = LinearForm::from_coeffs(vec![0, -3]);
        assert_eq!(l.canonical(), (-3, LinearForm::var(2)));
    }

    #[test]
    fn substitution_composes() {
        // x1 - x2 under x1 -> y1 + y2, x2 -> y2 gives y1
        let l = LinearForm::from_coeffs(vec![1, -1]);
        let forms = [LinearForm::sum_range(1, 2), LinearForm::var(2)];
        assert_eq!(l.substitute(&forms), LinearForm::var(1));
    }

    #[test]
    fn render_plain() {
        let l = LinearForm::from_coeffs(vec![1, -3, 0, 2]);
        assert_eq!(l.render("x"), "x1 - 3x2 + 2x4");
        assert_eq!(LinearForm::var(1).neg().render("u"), "-u1");
    }
}
