//! Irreducible ladder representations of a deformed oscillator algebra
//! with a reflection generator.
//!
//! The algebra lives on four generators a, a⁺, N, K subject to
//!
//! ```text
//! a a⁺ − q a⁺ a = q^{−N} (1 + 2αK),
//! [N, a] = −a,        [N, a⁺] = a⁺,
//! {K, a} = {K, a⁺} = 0,   [N, K] = 0,
//! ```
//!
//! with real deformation q > 0, q ≠ 1 and reflection coupling α ≠ 0. An
//! irreducible representation is fixed by the label (ν₀, B, λ₀): the
//! fractional part ν₀ of the level operator spectrum, the real reflection
//! coupling B read off K on level 0, and the ladder coefficient λ₀ there.
//!
//! The crate answers four questions about such labels:
//!
//! * [`classify::enumerate_classes`] lists which families of irreducible
//!   representations exist at a given (q, ν₀, B), and
//!   [`classify::classify_label`] resolves a full label to its family.
//! * [`spectrum`] evaluates the ladder coefficients λ_n both through the
//!   defining recurrence and through its closed form.
//! * [`operators::OperatorQuad`] realises the generators as dense matrix
//!   blocks and measures how well every defining relation holds.
//! * [`params::casimir_values`] evaluates the central elements separating
//!   inequivalent representations, and [`classify::equivalent`] detects
//!   when two labels of the doubly infinite family are the same chain
//!   relabelled by an integer index shift.

pub mod classify;
pub mod error;
pub mod operators;
pub mod params;
pub mod spectrum;

/// Dense matrix type the operator blocks are built on, re-exported so
/// downstream crates can name it without depending on nalgebra directly.
pub use nalgebra::DMatrix;

pub use classify::{
    at_classification_boundary, b_star, classify_label, enumerate_classes, equivalent,
    thresholds, EquivalenceCheck, Family, Lambda0Min, RepClass, ThresholdSet,
};
pub use error::Error;
pub use operators::{positivity_scan, OperatorQuad, PositivityScan, ResidualReport};
pub use params::{
    b_from_gamma, casimir_values, AlgebraParams, CasimirValues, RepLabel, Tolerances,
};
pub use spectrum::{
    lambda_closed, lambda_recurrence, mu, scalar_relation_residual, Spectrum,
};

/// Convenience alias for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
