//! Ladder coefficient sequences λ_n, the a⁺a eigenvalues along the basis.
//!
//! Sandwiching the defining relation between basis vectors forces the
//! two-term recurrence
//!
//! ```text
//! λ_{n+1} = q λ_n + q^{-ν₀-n} (1 + (-1)^n B),
//! ```
//!
//! whose closed form is
//!
//! ```text
//! λ_n = λ₀ q^n + q^{-ν₀} [ (q^n - q^{-n})/(q - q⁻¹)
//!                        + B (q^n - (-1)^n q^{-n})/(q + q⁻¹) ].
//! ```
//!
//! Both routes are implemented independently so they can be pinned against
//! each other; nothing here decides which windows are physical, that is the
//! classifier's job. The eigenvalue μ_n of a a⁺ on level n equals λ_{n+1},
//! and the sequence need not stay nonnegative for an arbitrary label.

use crate::error::Error;
use crate::params::{AlgebraParams, RepLabel, Tolerances};

/// (-1)^n for any integer n, negative included.
pub(crate) fn parity_sign(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Inhomogeneous term q^{-ν₀-n} (1 + (-1)^n B) driving the recurrence.
fn drive(params: &AlgebraParams, label: &RepLabel, n: i64) -> f64 {
    params.q_pow(-(label.nu0() + n as f64)) * (1.0 + parity_sign(n) * label.b())
}

/// λ_n by direct evaluation of the closed form. Valid for any integer n,
/// negative included; the result can be negative or non-finite for labels
/// or indices outside any representation.
pub fn lambda_closed(params: &AlgebraParams, label: &RepLabel, n: i64) -> f64 {
    let qn = params.q_powi(n);
    let qmn = params.q_powi(-n);
    let s = (qn - qmn) / params.q_minus_inv();
    let t = (qn - parity_sign(n) * qmn) / params.q_plus_inv();
    label.lambda0() * qn + params.q_pow(-label.nu0()) * (s + label.b() * t)
}

/// μ_n, the a a⁺ eigenvalue on level n; equal to λ_{n+1}.
pub fn mu(params: &AlgebraParams, label: &RepLabel, n: i64) -> f64 {
    lambda_closed(params, label, n + 1)
}

/// Residual of the scalar form of the defining relation,
/// μ_n - q λ_n - q^{-(ν₀+n)} (1 + (-1)^n B); identically zero up to
/// rounding for every label and index.
pub fn scalar_relation_residual(params: &AlgebraParams, label: &RepLabel, n: i64) -> f64 {
    mu(params, label, n) - params.q() * lambda_closed(params, label, n) - drive(params, label, n)
}

/// Contiguous window of ladder coefficients, indexed lo..=hi.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    lo: i64,
    values: Vec<f64>,
    all_nonnegative: bool,
}

impl Spectrum {
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    /// λ_n when n lies inside the window.
    pub fn value(&self, n: i64) -> Option<f64> {
        if n < self.lo || n > self.hi() {
            return None;
        }
        Some(self.values[(n - self.lo) as usize])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// True when every stored value is nonnegative up to the spectral
    /// tolerance the window was generated with.
    pub fn all_nonnegative(&self) -> bool {
        self.all_nonnegative
    }

    /// Pairs (n, λ_n) in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (self.lo + i as i64, v))
    }
}

/// Fills the window [lo, hi] by iterating the recurrence away from λ₀.
/// The window may sit anywhere relative to 0; iteration always seeds at
/// level 0 and walks outward, so no closed-form evaluation is involved.
/// Coefficients that leave floating-point range abort with an overflow
/// error rather than silently degrading.
pub fn lambda_recurrence(
    params: &AlgebraParams,
    label: &RepLabel,
    lo: i64,
    hi: i64,
    tol: &Tolerances,
) -> Result<Spectrum, Error> {
    if lo > hi {
        return Err(Error::InvalidWindow { lo, hi });
    }
    let len = (hi - lo + 1) as usize;
    let mut values = vec![0.0; len];
    let put = |vals: &mut Vec<f64>, n: i64, v: f64| {
        if n >= lo && n <= hi {
            vals[(n - lo) as usize] = v;
        }
    };

    let mut cur = label.lambda0();
    put(&mut values, 0, cur);
    for n in 0..hi {
        cur = params.q() * cur + drive(params, label, n);
        if !cur.is_finite() {
            return Err(Error::Overflow { index: n + 1 });
        }
        put(&mut values, n + 1, cur);
    }

    cur = label.lambda0();
    for n in (lo..0).rev() {
        cur = (cur - drive(params, label, n)) / params.q();
        if !cur.is_finite() {
            return Err(Error::Overflow { index: n });
        }
        put(&mut values, n, cur);
    }

    let all_nonnegative = values.iter().all(|&v| tol.nonneg(v));
    Ok(Spectrum {
        lo,
        values,
        all_nonnegative,
    })
}
