//! Error type shared by parameter validation, classification and operator
//! construction.

use thiserror::Error;

/// Everything that can go wrong when handling algebra parameters,
/// representation labels, or truncated operator blocks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The deformation parameter must be positive and different from 1.
    #[error("deformation parameter q must satisfy q > 0 and q != 1, got {q}")]
    QOutOfRange { q: f64 },

    /// The reflection coupling must be a nonzero finite real.
    #[error("coupling alpha must be nonzero and finite, got {alpha}")]
    AlphaZero { alpha: f64 },

    /// A label needs finite entries and a nonnegative lambda_0.
    #[error("invalid representation label: {0}")]
    InvalidLabel(String),

    /// 2*alpha*gamma*exp(-i*pi*nu0) must come out real.
    #[error("reflection eigenvalue gives non-real B (imaginary part {im:e})")]
    NonRealB { im: f64 },

    /// No irreducible representation carries the requested label.
    #[error("no representation for this label: {diagnostic}")]
    NoRepresentation { diagnostic: String },

    /// Equivalence testing is defined only between doubly unbounded labels.
    #[error("label is not doubly unbounded: {0}")]
    NotUnbounded(String),

    /// The requested block size does not fit the family.
    #[error("{family} requires dimension {expected}, got {got}")]
    DimensionMismatch {
        family: &'static str,
        expected: usize,
        got: usize,
    },

    /// A ladder coefficient inside the construction window is negative
    /// beyond tolerance, so the label is inconsistent with the family.
    #[error("lambda at index {index} is {value:e}, negative beyond tolerance")]
    NegativeLambda { index: i64, value: f64 },

    /// A ladder coefficient left floating-point range inside the window.
    #[error("ladder coefficient overflowed at index {index}; shrink the window or keep q away from extreme values")]
    Overflow { index: i64 },

    /// A window was requested with its lower bound above its upper bound.
    #[error("window lower bound {lo} exceeds upper bound {hi}")]
    InvalidWindow { lo: i64, hi: i64 },
}
