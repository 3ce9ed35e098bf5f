use std::cmp::Ordering;
use std::fmt;

/// A monomial `x_1^{e_1} ... x_k^{e_k}` stored as a dense exponent vector.
///
/// Index `i` of the vector holds the exponent of variable `x_{i+1}`.
/// Trailing zero exponents are never stored, so the unit monomial is the
/// empty vector and equal monomials have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The monomial `x_var^exp` (variables are 1-based).
    pub fn var(var: usize, exp: u32) -> Self {
        assert!(var >= 1, "variable indices start at 1");
        let mut v = vec![0; var];
        v[var - 1] = exp;
        Monomial::from_exponents(v)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of the 1-based variable `var`.
    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Highest variable index with a nonzero exponent (0 for the unit).
    pub fn max_var(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o += s;
        }
        Monomial(out)
    }

    /// Replace the exponent of `var` with `exp`.
    pub fn with_exponent(&self, var: usize, exp: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() < var {
            v.resize(var, 0);
        }
        v[var - 1] = exp;
        Monomial::from_exponents(v)
    }

    /// Iterate `(variable, exponent)` over the nonzero exponents.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }
}

/// Graded lexicographic order: total degree first, then the exponent of
/// `x_1`, then `x_2`, and so on (a larger exponent is larger).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                match a.cmp(&b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
