//! Exact mould calculus at finite depth.
//!
//! Moulds are truncated sequences of rational functions `M^m(x_1..x_m)`
//! with linear-form denominators. On top of the mould algebra sit the
//! flexion operators (`arit`, `preari`, `ari`, `garit`, `gari`,
//! `expari`, `logari`, `adari`), the singulator `sang` with its
//! projections `slang_r`, the named moulds `paj`, `dupal`, `pal`, and
//! the polar and polynomial solutions `psi`, `xi`, `sigma_c`, `luma`
//! together with verifiers for the identities relating them.
//!
//! All arithmetic is exact; nothing is sampled numerically.

pub mod algebra;
pub mod coeff;
pub mod error;
pub mod mould;
pub mod word;
pub mod flexion;
pub mod symbolic;
pub mod special;
pub mod symmetry;
pub mod json;
pub mod solutions;
pub mod verify;
pub mod random;
pub mod displays;

pub use algebra::{LinearForm, Monomial, Polynomial, Rational, RationalFunction};
pub use coeff::Coefficient;
pub use error::{Error, Result};
pub use flexion::Adari;
pub use mould::Mould;
pub use special::Singulator;
pub use symbolic::SymbolicValue;
pub use symmetry::{Dimould, Witness};
pub use verify::{Check, Report, Status};
pub use word::Word;
