//! Validated algebra parameters, representation labels, comparison
//! tolerances and central (Casimir) eigenvalues.
//!
//! The algebra is generated by a, a⁺, N and a reflection operator K subject
//! to
//!
//! ```text
//! a a⁺ - q a⁺ a = q^{-N} (1 + 2 α K),   [N, a] = -a,   [N, a⁺] = a⁺,
//! {K, a} = {K, a⁺} = 0,                 [N, K] = 0,
//! ```
//!
//! with q > 0, q ≠ 1 and real α ≠ 0. On a basis that diagonalizes N and K
//! simultaneously,
//!
//! ```text
//! N ψ_n = (ν₀ + n) ψ_n,    K ψ_n = (-1)^n B / (2α) ψ_n,
//! ```
//!
//! so a candidate irreducible representation is labelled by the real triple
//! (ν₀, B, λ₀), where λ₀ is the a⁺a eigenvalue on ψ₀. The central elements
//! K², K e^{iπN} and e^{2iπN} take the scalar values exposed by
//! [`casimir_values`].

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Error;

/// Comparison tolerances threaded through classification and verification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for comparing two values.
    pub rel: f64,
    /// Absolute floor below which a difference counts as zero.
    pub abs: f64,
    /// Absolute half-width used to detect classification boundaries in B.
    pub boundary: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rel: 1e-9,
            abs: 1e-12,
            boundary: 1e-12,
        }
    }
}

impl Tolerances {
    /// True when `a` and `b` agree up to the relative tolerance, with the
    /// absolute floor taking over near zero.
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs.max(self.rel * a.abs().max(b.abs()))
    }

    /// True when `x` is nonnegative up to the spectral tolerance.
    pub fn nonneg(&self, x: f64) -> bool {
        x >= -self.abs.max(self.rel * x.abs())
    }

    /// True when `b` lies within the boundary half-width of `edge`.
    pub fn at_boundary(&self, b: f64, edge: f64) -> bool {
        (b - edge).abs() <= self.boundary
    }
}

/// Deformation parameter q and reflection coupling α, validated once at
/// construction so downstream code can assume q > 0, q ≠ 1, α ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraParams {
    q: f64,
    alpha: f64,
}

impl AlgebraParams {
    /// Validates q > 0, q ≠ 1 and α ≠ 0 (all finite). The undeformed point
    /// q = 1 is rejected; approach it through q → 1 probes instead.
    pub fn new(q: f64, alpha: f64) -> Result<Self, Error> {
        if !q.is_finite() || q <= 0.0 || q == 1.0 {
            return Err(Error::QOutOfRange { q });
        }
        if !alpha.is_finite() || alpha == 0.0 {
            return Err(Error::AlphaZero { alpha });
        }
        Ok(Self { q, alpha })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// q - 1/q, negative exactly when q < 1.
    pub fn q_minus_inv(&self) -> f64 {
        self.q - 1.0 / self.q
    }

    /// q + 1/q, always > 2 on the valid domain.
    pub fn q_plus_inv(&self) -> f64 {
        self.q + 1.0 / self.q
    }

    /// q raised to a real exponent.
    pub fn q_pow(&self, x: f64) -> f64 {
        self.q.powf(x)
    }

    /// q raised to an integer exponent.
    pub fn q_powi(&self, n: i64) -> f64 {
        self.q.powi(n as i32)
    }
}

/// Label (ν₀, B, λ₀) of a candidate irreducible representation: ν₀ is the
/// N eigenvalue on ψ₀, B the real reflection invariant, λ₀ ≥ 0 the a⁺a
/// eigenvalue on ψ₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepLabel {
    nu0: f64,
    b: f64,
    lambda0: f64,
}

impl RepLabel {
    /// Validates finiteness and λ₀ ≥ 0.
    pub fn new(nu0: f64, b: f64, lambda0: f64) -> Result<Self, Error> {
        if !nu0.is_finite() || !b.is_finite() {
            return Err(Error::InvalidLabel(format!(
                "nu0 and B must be finite, got nu0 = {nu0}, B = {b}"
            )));
        }
        if !lambda0.is_finite() || lambda0 < 0.0 {
            return Err(Error::InvalidLabel(format!(
                "lambda0 must be finite and nonnegative, got {lambda0}"
            )));
        }
        Ok(Self { nu0, b, lambda0 })
    }

    pub fn nu0(&self) -> f64 {
        self.nu0
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    /// Same (ν₀, B) with a different λ₀; λ₀ must still be ≥ 0.
    pub fn with_lambda0(&self, lambda0: f64) -> Result<Self, Error> {
        Self::new(self.nu0, self.b, lambda0)
    }
}

/// Recovers the real invariant B = 2 α γ e^{-iπν₀} from an eigenvalue γ of
/// the central element K e^{iπN}. Fails when the product keeps an imaginary
/// part beyond tolerance, which signals an inconsistent (γ, ν₀) pair.
pub fn b_from_gamma(
    gamma: Complex64,
    alpha: f64,
    nu0: f64,
    tol: &Tolerances,
) -> Result<f64, Error> {
    let z = 2.0 * alpha * gamma * Complex64::from_polar(1.0, -PI * nu0);
    if z.im.abs() > tol.abs.max(tol.rel * z.norm()) {
        return Err(Error::NonRealB { im: z.im });
    }
    Ok(z.re)
}

/// Scalar values of the central elements on an irreducible representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasimirValues {
    /// Eigenvalue of K².
    pub c1: Complex64,
    /// Eigenvalue of K e^{iπN}.
    pub c2: Complex64,
    /// Eigenvalue of e^{2iπN}.
    pub c3: Complex64,
}

/// Central eigenvalues on the representation labelled by (ν₀, B):
///
/// ```text
/// c1 = (B/2α)²,   c2 = (B/2α) e^{iπν₀},   c3 = e^{2iπν₀},
/// ```
///
/// which satisfy c1·c3 = c2². Note c1 is real: K alternates in sign from
/// level to level, so its square is level-independent.
pub fn casimir_values(params: &AlgebraParams, label: &RepLabel) -> CasimirValues {
    let r = label.b() / (2.0 * params.alpha());
    CasimirValues {
        c1: Complex64::new(r * r, 0.0),
        c2: r * Complex64::from_polar(1.0, PI * label.nu0()),
        c3: Complex64::from_polar(1.0, 2.0 * PI * label.nu0()),
    }
}
