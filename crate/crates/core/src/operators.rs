//! Finite matrix blocks of the four generators a, a⁺, N, K cut from a
//! representation chain, plus defect reports for the defining relations.
//!
//! Basis row j of a block holds the chain level `index_offset + j`, so a
//! acts one step down the chain through its superdiagonal √λ entries and
//! a⁺ is its transpose. For chains infinite in either direction a finite
//! block cannot satisfy the quadratic relation on the rows where a
//! neighbouring level was cut away; [`OperatorQuad::verify`] therefore
//! measures that relation over interior rows only and reports the overall
//! entry scale so callers can normalise. The linear relations ([N, ·],
//! {K, ·}, [N, K] and the centrality of K²) hold on the full block up to
//! rounding.

use nalgebra::DMatrix;

use crate::classify::{Family, RepClass};
use crate::error::Error;
use crate::params::{AlgebraParams, RepLabel, Tolerances};
use crate::spectrum::{lambda_closed, parity_sign};

/// Matrix block of the four generators over a contiguous range of levels.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorQuad {
    params: AlgebraParams,
    label: RepLabel,
    class: RepClass,
    index_offset: i64,
    a: DMatrix<f64>,
    a_dag: DMatrix<f64>,
    n_op: DMatrix<f64>,
    k_op: DMatrix<f64>,
}

/// Largest absolute entry of the defect matrix for each defining relation.
///
/// `rel1` covers a a⁺ − q a⁺ a − q^{−N}(1 + 2αK) over the `interior_dim`
/// rows unaffected by truncation; the other residuals are measured on the
/// full block. `scale` is the largest entry magnitude among the products
/// entering the quadratic relation, floored at 1, and is the natural
/// normaliser for `rel1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub rel1: f64,
    pub comm_n_a: f64,
    pub comm_n_adag: f64,
    pub anti_k_a: f64,
    pub anti_k_adag: f64,
    pub comm_n_k: f64,
    pub casimir: f64,
    pub interior_dim: usize,
    pub scale: f64,
}

impl ResidualReport {
    /// Largest of the seven residuals.
    pub fn max_residual(&self) -> f64 {
        self.rel1
            .max(self.comm_n_a)
            .max(self.comm_n_adag)
            .max(self.anti_k_a)
            .max(self.anti_k_adag)
            .max(self.comm_n_k)
            .max(self.casimir)
    }
}

impl OperatorQuad {
    /// Cuts a dim-level block out of the chain described by `class`.
    ///
    /// Finite families demand their exact dimension; infinite chains may
    /// be truncated at any dim ≥ 1. The block is centred so that level 0
    /// is included: lowest-weight chains start at their bottom level,
    /// highest-weight chains end at their top level, and doubly infinite
    /// chains place level 0 in the middle. When the family forces λ₀, the
    /// forced value replaces the one stored in the label; every link is
    /// still validated, so a label inconsistent with `class` surfaces as
    /// a negative-coefficient error rather than a silently wrong block.
    pub fn build(
        params: &AlgebraParams,
        label: &RepLabel,
        class: &RepClass,
        dim: usize,
        tol: &Tolerances,
    ) -> Result<Self, Error> {
        if let Some(expected) = class.finite_dim() {
            if dim != expected {
                return Err(Error::DimensionMismatch {
                    family: class.family().name(),
                    expected,
                    got: dim,
                });
            }
        } else if dim == 0 {
            return Err(Error::DimensionMismatch {
                family: class.family().name(),
                expected: 1,
                got: dim,
            });
        }

        let effective = match class.forced_lambda0() {
            Some(forced) => label.with_lambda0(forced)?,
            None => *label,
        };
        let index_offset = match class.family() {
            Family::OneDimensional | Family::TwoDimensionalEven | Family::Fock => 0,
            Family::TwoDimensionalOdd => -1,
            Family::AntiFock => 1 - dim as i64,
            Family::Unbounded => -((dim / 2) as i64),
        };

        let mut a = DMatrix::<f64>::zeros(dim, dim);
        for j in 1..dim {
            let level = index_offset + j as i64;
            let lam = lambda_closed(params, &effective, level);
            if !lam.is_finite() {
                return Err(Error::Overflow { index: level });
            }
            if !tol.nonneg(lam) {
                return Err(Error::NegativeLambda {
                    index: level,
                    value: lam,
                });
            }
            a[(j - 1, j)] = lam.max(0.0).sqrt();
        }
        let a_dag = a.transpose();

        let mut n_op = DMatrix::<f64>::zeros(dim, dim);
        let mut k_op = DMatrix::<f64>::zeros(dim, dim);
        let reflection = label.b() / (2.0 * params.alpha());
        for j in 0..dim {
            let level = index_offset + j as i64;
            n_op[(j, j)] = label.nu0() + level as f64;
            k_op[(j, j)] = parity_sign(level) * reflection;
        }

        Ok(OperatorQuad {
            params: *params,
            label: *label,
            class: *class,
            index_offset,
            a,
            a_dag,
            n_op,
            k_op,
        })
    }

    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    /// Level held by basis row 0.
    pub fn index_offset(&self) -> i64 {
        self.index_offset
    }

    pub fn class(&self) -> &RepClass {
        &self.class
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    pub fn a(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn a_dag(&self) -> &DMatrix<f64> {
        &self.a_dag
    }

    pub fn n_op(&self) -> &DMatrix<f64> {
        &self.n_op
    }

    pub fn k_op(&self) -> &DMatrix<f64> {
        &self.k_op
    }

    /// Measures every defining relation on the block.
    pub fn verify(&self) -> ResidualReport {
        let dim = self.dim();
        let q = self.params.q();
        let alpha = self.params.alpha();

        let aad = &self.a * &self.a_dag;
        let ada = &self.a_dag * &self.a;
        let mut target = DMatrix::<f64>::zeros(dim, dim);
        for j in 0..dim {
            target[(j, j)] =
                self.params.q_pow(-self.n_op[(j, j)]) * (1.0 + 2.0 * alpha * self.k_op[(j, j)]);
        }
        let rel1_full = &aad - q * &ada - &target;

        let interior = if self.class.finite_dim().is_some() {
            0..dim
        } else if dim >= 3 {
            1..dim - 1
        } else {
            0..0
        };
        let mut rel1 = 0.0f64;
        for j in interior.clone() {
            for c in 0..dim {
                rel1 = rel1.max(rel1_full[(j, c)].abs());
            }
        }

        let comm_n_a = (&self.n_op * &self.a - &self.a * &self.n_op + &self.a).amax();
        let comm_n_adag =
            (&self.n_op * &self.a_dag - &self.a_dag * &self.n_op - &self.a_dag).amax();
        let anti_k_a = (&self.k_op * &self.a + &self.a * &self.k_op).amax();
        let anti_k_adag = (&self.k_op * &self.a_dag + &self.a_dag * &self.k_op).amax();
        let comm_n_k = (&self.n_op * &self.k_op - &self.k_op * &self.n_op).amax();

        let reflection = self.label.b() / (2.0 * alpha);
        let casimir =
            (&self.k_op * &self.k_op - DMatrix::<f64>::identity(dim, dim) * (reflection * reflection))
                .amax();

        let scale = 1.0f64
            .max(aad.amax())
            .max(q * ada.amax())
            .max(target.amax());

        ResidualReport {
            rel1,
            comm_n_a,
            comm_n_adag,
            anti_k_a,
            anti_k_adag,
            comm_n_k,
            casimir,
            interior_dim: interior.len(),
            scale,
        }
    }
}

/// Result of walking the ladder coefficients over a window of levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivityScan {
    pub all_nonnegative: bool,
    /// Level nearest to 0 carrying a genuinely negative coefficient.
    pub first_violation: Option<(i64, f64)>,
    pub levels_checked: usize,
}

/// Checks λ_n ≥ 0 on every chain level with |n| ≤ window, nearest levels
/// first, stopping at the first violation.
pub fn positivity_scan(
    params: &AlgebraParams,
    label: &RepLabel,
    class: &RepClass,
    window: i64,
    tol: &Tolerances,
) -> Result<PositivityScan, Error> {
    if window < 0 {
        return Err(Error::InvalidWindow {
            lo: -window,
            hi: window,
        });
    }
    let mut checked = 0usize;
    for k in 0..=window {
        let sides: &[i64] = if k == 0 { &[0] } else { &[k, -k] };
        for &n in sides {
            if !class.contains(n) {
                continue;
            }
            let lam = lambda_closed(params, label, n);
            if !lam.is_finite() {
                return Err(Error::Overflow { index: n });
            }
            checked += 1;
            if !tol.nonneg(lam) {
                return Ok(PositivityScan {
                    all_nonnegative: false,
                    first_violation: Some((n, lam)),
                    levels_checked: checked,
                });
            }
        }
    }
    Ok(PositivityScan {
        all_nonnegative: true,
        first_violation: None,
        levels_checked: checked,
    })
}
