//! Exact Chow-ring arithmetic on projectivized split (or Chern-data) bundles
//! over a small fixed set of rational bases.
//!
//! Every [`ChowElement`] is kept in a unique normal form: base monomials are
//! reduced by the base relations and powers of the tautological class `z`
//! are reduced below the rank by the Grothendieck relation
//!
//! ```text
//! z^r = c1*z^(r-1) - c2*z^(r-2) + c3*z^(r-3) - ...
//! ```
//!
//! Coefficients are `i64`; any overflow is reported as [`ChowError::Overflow`].

mod ambient;
mod base;
mod element;
mod parse;

use thiserror::Error;

pub use ambient::Ambient;
pub use base::{BaseExponents, BaseKind};
pub use element::{ChowElement, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("classes live on different ambients ({left} vs {right})")]
    AmbientMismatch { left: String, right: String },
    #[error("mixed grades {0} and {1} in one class")]
    MixedGrade(u32, u32),
    #[error("integrand has grade {grade} but the top degree is {top}")]
    NotTopDegree { grade: u32, top: u32 },
    #[error("expected a divisor class (grade 1), got grade {0}")]
    NotADivisor(u32),
    #[error("a tower needs at least one twist")]
    EmptyTwists,
    #[error("twist {index} does not live on the plain {base} base")]
    TwistNotOnBase { index: usize, base: String },
    #[error("a tower must have rank at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("Chern class c{index} must have grade {index}, got {grade}")]
    ChernGrade { index: usize, grade: u32 },
    #[error("{name:?} is not a generator of {ambient}")]
    UnknownGenerator { name: String, ambient: String },
    #[error("cannot parse class {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T, E = ChowError> = std::result::Result<T, E>;

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(ChowError::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(ChowError::Overflow)
}
