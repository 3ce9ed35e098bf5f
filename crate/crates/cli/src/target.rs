use std::fmt;
use std::str::FromStr;

use mould::error::Error as CoreError;
use mould::solutions::{d_ab, luma, psi_minus1_mould, psi_odd_mould, sigma_c, xi, COMPARISON_DEPTH};
use mould::special::{dupal, mupaj, paj, pal, sa, Singulator};
use mould::Mould;

/// A named mould the CLI can compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Paj,
    Mupaj,
    Dupal,
    Pal,
    Sa(i64),
    Sang(i64),
    Slang(usize, i64),
    PsiOdd(usize),
    PsiMinus1,
    Xi(usize),
    SigmaC(usize),
    Luma(usize),
    D(usize, usize),
}

fn unknown(s: &str) -> CoreError {
    CoreError::UnknownTarget(s.to_string())
}

fn num<T: FromStr>(s: &str, whole: &str) -> Result<T, CoreError> {
    s.parse().map_err(|_| unknown(whole))
}

fn positive(s: &str, whole: &str) -> Result<usize, CoreError> {
    match num::<usize>(s, whole)? {
        0 => Err(unknown(whole)),
        k => Ok(k),
    }
}

impl FromStr for Target {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        let parts: Vec<&str> = s.split(':').collect();
        let t = match parts.as_slice() {
            ["paj"] => Target::Paj,
            ["mupaj"] => Target::Mupaj,
            ["dupal"] => Target::Dupal,
            ["pal"] => Target::Pal,
            ["sa", k] => Target::Sa(num(k, s)?),
            ["sang", "sa", k] => Target::Sang(num(k, s)?),
            ["slang", r, "sa", k] => Target::Slang(positive(r, s)?, num(k, s)?),
            ["psi", "-1"] => Target::PsiMinus1,
            ["psi", k] => {
                let k: usize = num(k, s)?;
                if k < 3 || k.is_multiple_of(2) {
                    return Err(unknown(s));
                }
                Target::PsiOdd((k - 1) / 2)
            }
            ["xi", n] => Target::Xi(positive(n, s)?),
            ["sigma_c", n] => Target::SigmaC(positive(n, s)?),
            ["luma", n] => Target::Luma(positive(n, s)?),
            ["D", a, b] => Target::D(positive(a, s)?, positive(b, s)?),
            _ => return Err(unknown(s)),
        };
        Ok(t)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Paj => write!(f, "paj"),
            Target::Mupaj => write!(f, "mupaj"),
            Target::Dupal => write!(f, "dupal"),
            Target::Pal => write!(f, "pal"),
            Target::Sa(k) => write!(f, "sa_{}", k),
            Target::Sang(k) => write!(f, "sang(sa_{})", k),
            Target::Slang(r, k) => write!(f, "slang_{}(sa_{})", r, k),
            Target::PsiOdd(n) => write!(f, "psi_{}", 2 * n + 1),
            Target::PsiMinus1 => write!(f, "psi_-1"),
            Target::Xi(n) => write!(f, "xi_{}", 2 * n + 1),
            Target::SigmaC(n) => write!(f, "sigma^c_{}", 2 * n + 1),
            Target::Luma(n) => write!(f, "luma_{}", 2 * n + 1),
            Target::D(a, b) => write!(f, "D_({},{})", a, b),
        }
    }
}

impl Target {
    /// The largest depth at which the target is defined, if bounded.
    pub fn max_depth(&self) -> Option<usize> {
        match self {
            Target::Xi(_) | Target::SigmaC(_) | Target::Luma(_) | Target::D(..) => Some(COMPARISON_DEPTH),
            _ => None,
        }
    }

    pub fn compute(&self, depth: usize) -> Result<Mould, CoreError> {
        let m = match self {
            Target::Paj => paj(depth),
            Target::Mupaj => mupaj(depth),
            Target::Dupal => dupal(depth),
            Target::Pal => pal(depth)?,
            Target::Sa(k) => sa(*k, depth),
            Target::Sang(k) => Singulator::new(depth)?.sang(&sa(*k, depth))?,
            Target::Slang(r, k) => Singulator::new(depth)?.slang(*r, &sa(*k, depth))?,
            // psi is given before the change of variables by sharp
            Target::PsiOdd(n) => psi_odd_mould(*n, depth),
            Target::PsiMinus1 => psi_minus1_mould(depth),
            Target::Xi(n) => xi(*n)?,
            Target::SigmaC(n) => sigma_c(*n)?,
            Target::Luma(n) => luma(*n)?,
            Target::D(a, b) => d_ab(*a, *b)?,
        };
        Ok(m.with_depth(depth))
    }
}
