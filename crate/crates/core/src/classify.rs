//! Splits the parameter space (q, ν₀, B, λ₀) into the families of
//! irreducible ladder representations and decides which family, if any, a
//! given label generates.
//!
//! Everything hinges on the ratio b* = (q + q⁻¹)/(q − q⁻¹) and the parity
//! offsets d± = 1/(q − q⁻¹) ± B/(q + q⁻¹). With e₀ = λ₀ q^{ν₀} + d₊ the
//! ladder coefficients satisfy q^{ν₀} λ_n = qⁿ e₀ − q^{−n} d±, the sign
//! picked by the parity of n, so chains terminate exactly where one of
//! these combinations vanishes:
//!
//! * q > 1: a one-dimensional representation at B = −1, a lowest-weight
//!   chain for every B > −1, nothing below.
//! * 0 < q < 1, where b* < −1: a highest-weight chain for B < b*, a
//!   two-level representation on levels {−1, 0} at B = b*, a
//!   one-dimensional representation at B = −1, a doubly infinite chain
//!   alone for b* < B < −1, lowest-weight plus doubly infinite chains for
//!   −1 < B < −b*, a two-level representation on levels {0, 1} alongside
//!   doubly infinite chains at B = −b*, and nothing beyond −b*.
//!
//! A doubly infinite chain exists for every λ₀ keeping e₀ ≥ 0 (strictly
//! positive on the B = −b* seam); all other families pin λ₀ to one forced
//! value. Doubly infinite chains on the B = b* and B = −1 seams are
//! equivalent, through a unit index shift, to chains at (ν₀ + 1, −B), so
//! the catalogue lists each of them once, at the shifted coupling.

use crate::error::Error;
use crate::params::{AlgebraParams, RepLabel, Tolerances};
use crate::spectrum::{lambda_closed, parity_sign};

/// The isomorphism classes of irreducible ladder representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Single level annihilated by both ladder operators.
    OneDimensional,
    /// Two levels {−1, 0}, present only at B = b*.
    TwoDimensionalOdd,
    /// Two levels {0, 1}, present only at B = −b*.
    TwoDimensionalEven,
    /// Lowest-weight chain on levels 0, 1, 2, ...
    Fock,
    /// Highest-weight chain on levels 0, −1, −2, ...
    AntiFock,
    /// Doubly infinite chain over all integer levels.
    Unbounded,
}

impl Family {
    /// Stable ASCII name used in reports and error messages.
    pub fn name(self) -> &'static str {
        match self {
            Family::OneDimensional => "OneDimensional",
            Family::TwoDimensionalOdd => "TwoDimensionalOdd",
            Family::TwoDimensionalEven => "TwoDimensionalEven",
            Family::Fock => "Fock",
            Family::AntiFock => "AntiFock",
            Family::Unbounded => "Unbounded",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Derived quantities steering the classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdSet {
    /// (q + q⁻¹)/(q − q⁻¹); below −1 for q < 1, above 1 for q > 1.
    pub b_star: f64,
    /// Even-parity offset 1/(q − q⁻¹) + B/(q + q⁻¹).
    pub d_plus: f64,
    /// Odd-parity offset 1/(q − q⁻¹) − B/(q + q⁻¹).
    pub d_minus: f64,
    /// λ₀ q^{ν₀} + d₊; its sign decides whether a doubly infinite chain
    /// stays nonnegative.
    pub e0: f64,
}

/// Coupling threshold (q + q⁻¹)/(q − q⁻¹) separating the families.
pub fn b_star(params: &AlgebraParams) -> f64 {
    params.q_plus_inv() / params.q_minus_inv()
}

/// Evaluates all classification thresholds for one label.
pub fn thresholds(params: &AlgebraParams, label: &RepLabel) -> ThresholdSet {
    let d_plus = 1.0 / params.q_minus_inv() + label.b() / params.q_plus_inv();
    let d_minus = 1.0 / params.q_minus_inv() - label.b() / params.q_plus_inv();
    ThresholdSet {
        b_star: b_star(params),
        d_plus,
        d_minus,
        e0: label.lambda0() * params.q_pow(label.nu0()) + d_plus,
    }
}

/// Lower bound on λ₀ for a family admitting a continuum of labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lambda0Min {
    pub min: f64,
    /// When set, λ₀ must exceed the bound strictly.
    pub strict: bool,
}

/// One admissible family at given (q, ν₀, B): the index range its chain
/// occupies and the constraint it puts on λ₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepClass {
    family: Family,
    index_lo: Option<i64>,
    index_hi: Option<i64>,
    forced_lambda0: Option<f64>,
    lambda0_min: Option<Lambda0Min>,
}

impl RepClass {
    pub fn family(&self) -> Family {
        self.family
    }

    /// Smallest occupied level; None when the chain continues to −∞.
    pub fn index_lo(&self) -> Option<i64> {
        self.index_lo
    }

    /// Largest occupied level; None when the chain continues to +∞.
    pub fn index_hi(&self) -> Option<i64> {
        self.index_hi
    }

    /// The unique λ₀ of the family; None when a continuum is admitted.
    pub fn forced_lambda0(&self) -> Option<f64> {
        self.forced_lambda0
    }

    /// Positivity bound on λ₀; None for families with a forced λ₀.
    pub fn lambda0_min(&self) -> Option<Lambda0Min> {
        self.lambda0_min
    }

    /// Whether level n belongs to the chain.
    pub fn contains(&self, n: i64) -> bool {
        self.index_lo.is_none_or(|lo| n >= lo) && self.index_hi.is_none_or(|hi| n <= hi)
    }

    /// Number of levels, for the families with finitely many.
    pub fn finite_dim(&self) -> Option<usize> {
        match (self.index_lo, self.index_hi) {
            (Some(lo), Some(hi)) => Some((hi - lo + 1) as usize),
            _ => None,
        }
    }
}

fn one_dimensional() -> RepClass {
    RepClass {
        family: Family::OneDimensional,
        index_lo: Some(0),
        index_hi: Some(0),
        forced_lambda0: Some(0.0),
        lambda0_min: None,
    }
}

fn two_dim_odd(params: &AlgebraParams, nu0: f64) -> RepClass {
    RepClass {
        family: Family::TwoDimensionalOdd,
        index_lo: Some(-1),
        index_hi: Some(0),
        // Both outer links vanish at B = b* exactly when λ₀ takes
        // 2 q^{−ν₀} / (q⁻¹ − q).
        forced_lambda0: Some(-2.0 * params.q_pow(-nu0) / params.q_minus_inv()),
        lambda0_min: None,
    }
}

fn two_dim_even() -> RepClass {
    RepClass {
        family: Family::TwoDimensionalEven,
        index_lo: Some(0),
        index_hi: Some(1),
        forced_lambda0: Some(0.0),
        lambda0_min: None,
    }
}

fn fock() -> RepClass {
    RepClass {
        family: Family::Fock,
        index_lo: Some(0),
        index_hi: None,
        forced_lambda0: Some(0.0),
        lambda0_min: None,
    }
}

fn anti_fock(params: &AlgebraParams, nu0: f64, b: f64) -> RepClass {
    RepClass {
        family: Family::AntiFock,
        index_lo: None,
        index_hi: Some(0),
        // λ₁ = q λ₀ + q^{−ν₀}(1 + B) must vanish for the chain to stop
        // above level 0.
        forced_lambda0: Some(-params.q_pow(-nu0 - 1.0) * (1.0 + b)),
        lambda0_min: None,
    }
}

fn unbounded(params: &AlgebraParams, nu0: f64, b: f64, strict: bool) -> RepClass {
    let d_plus = 1.0 / params.q_minus_inv() + b / params.q_plus_inv();
    RepClass {
        family: Family::Unbounded,
        index_lo: None,
        index_hi: None,
        forced_lambda0: None,
        lambda0_min: Some(Lambda0Min {
            min: -d_plus * params.q_pow(-nu0),
            strict,
        }),
    }
}

/// Lists every family admitted at (q, ν₀, B), seam checks first so that a
/// coupling within the boundary tolerance of b*, −1 or −b* is resolved to
/// the seam catalogue rather than to a neighbouring open region.
pub fn enumerate_classes(
    params: &AlgebraParams,
    nu0: f64,
    b: f64,
    tol: &Tolerances,
) -> Vec<RepClass> {
    if params.q() > 1.0 {
        return if tol.at_boundary(b, -1.0) {
            vec![one_dimensional()]
        } else if b > -1.0 {
            vec![fock()]
        } else {
            Vec::new()
        };
    }
    // 0 < q < 1, where b* < -1 < 0 < -b*.
    let bs = b_star(params);
    if tol.at_boundary(b, bs) {
        vec![two_dim_odd(params, nu0)]
    } else if tol.at_boundary(b, -1.0) {
        vec![one_dimensional()]
    } else if tol.at_boundary(b, -bs) {
        vec![two_dim_even(), unbounded(params, nu0, b, true)]
    } else if b < bs {
        vec![anti_fock(params, nu0, b)]
    } else if b > -bs {
        Vec::new()
    } else if b < -1.0 {
        vec![unbounded(params, nu0, b, false)]
    } else {
        vec![fock(), unbounded(params, nu0, b, false)]
    }
}

/// True when B sits within the boundary tolerance of a seam between
/// classification regions at this q.
pub fn at_classification_boundary(params: &AlgebraParams, b: f64, tol: &Tolerances) -> bool {
    if params.q() > 1.0 {
        tol.at_boundary(b, -1.0)
    } else {
        let bs = b_star(params);
        tol.at_boundary(b, bs) || tol.at_boundary(b, -1.0) || tol.at_boundary(b, -bs)
    }
}

/// Resolves a full label to the unique family it generates. Families with
/// a forced λ₀ are matched first; the doubly infinite family then accepts
/// any remaining label with e₀ ≥ 0 (strictly positive on the −b* seam).
pub fn classify_label(
    params: &AlgebraParams,
    label: &RepLabel,
    tol: &Tolerances,
) -> Result<RepClass, Error> {
    let classes = enumerate_classes(params, label.nu0(), label.b(), tol);
    for class in &classes {
        if let Some(forced) = class.forced_lambda0 {
            if tol.close(label.lambda0(), forced) {
                return Ok(*class);
            }
        }
    }
    for class in &classes {
        if let Some(bound) = class.lambda0_min {
            let e0 = thresholds(params, label).e0;
            let admitted = if bound.strict {
                e0 > 0.0 && !tol.close(e0, 0.0)
            } else {
                tol.nonneg(e0)
            };
            if admitted {
                return Ok(*class);
            }
        }
    }
    Err(Error::NoRepresentation {
        diagnostic: reject_diagnostic(params, label, &classes, tol),
    })
}

/// Nearest level, by |n|, whose ladder coefficient is genuinely negative.
fn first_negative(
    params: &AlgebraParams,
    label: &RepLabel,
    window: i64,
    tol: &Tolerances,
) -> Option<(i64, f64)> {
    for k in 0..=window {
        let sides: &[i64] = if k == 0 { &[0] } else { &[k, -k] };
        for &n in sides {
            let v = lambda_closed(params, label, n);
            if v.is_finite() && !tol.nonneg(v) {
                return Some((n, v));
            }
        }
    }
    None
}

fn reject_diagnostic(
    params: &AlgebraParams,
    label: &RepLabel,
    classes: &[RepClass],
    tol: &Tolerances,
) -> String {
    let th = thresholds(params, label);
    let mut parts = Vec::new();
    if classes.is_empty() {
        let region = if params.q() > 1.0 {
            "no family admits B < -1 when q > 1"
        } else {
            "no family admits B > -b* when q < 1"
        };
        parts.push(format!("{region} (B = {}, b* = {})", label.b(), th.b_star));
    }
    for class in classes {
        if let Some(forced) = class.forced_lambda0 {
            parts.push(format!(
                "{} requires lambda0 = {forced} (got {})",
                class.family.name(),
                label.lambda0()
            ));
        }
        if let Some(bound) = class.lambda0_min {
            let relation = if bound.strict { ">" } else { ">=" };
            parts.push(format!(
                "{} requires lambda0 {relation} {} (e0 = {})",
                class.family.name(),
                bound.min,
                th.e0
            ));
        }
    }
    if let Some((n, v)) = first_negative(params, label, 60, tol) {
        parts.push(format!("ladder coefficient turns negative at level {n} ({v})"));
    }
    parts.join("; ")
}

/// Outcome of an index-shift equivalence test between two labels of the
/// doubly infinite family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceCheck {
    pub equivalent: bool,
    /// Integer level shift relating the labels, when ν₀ values differ by
    /// an integer at all.
    pub shift: Option<i64>,
}

/// Tests whether two labels generate the same doubly infinite
/// representation up to relabelling levels by an integer shift n:
/// (ν₀, B, λ₀) and (ν₀ + n, (−1)ⁿ B, λ_n) are the same chain read from a
/// different origin. Labels of any other family are refused, since their
/// chains have a distinguished terminal level.
pub fn equivalent(
    params: &AlgebraParams,
    a: &RepLabel,
    b: &RepLabel,
    tol: &Tolerances,
) -> Result<EquivalenceCheck, Error> {
    for (label, which) in [(a, "first"), (b, "second")] {
        let class = classify_label(params, label, tol)?;
        if class.family() != Family::Unbounded {
            return Err(Error::NotUnbounded(format!(
                "{which} label generates the {} family; only doubly infinite chains \
                 are related by index shifts",
                class.family().name()
            )));
        }
    }
    let shift = b.nu0() - a.nu0();
    let rounded = shift.round();
    // Shifts beyond +/-512 would overflow q^n long before any valid label
    // could realise them; treat the labels as unrelated.
    if !tol.close(shift, rounded) || rounded.abs() > 512.0 {
        return Ok(EquivalenceCheck {
            equivalent: false,
            shift: None,
        });
    }
    let n = rounded as i64;
    let expected_b = parity_sign(n) * a.b();
    // Reconstructing a seed against the drift's growth loses digits to
    // cancellation once the drift dwarfs the seed term; exact partners
    // always agree in the contracting direction, so try both and accept
    // either.
    let seed_from_a = lambda_closed(params, a, n);
    let seed_from_b = lambda_closed(params, b, -n);
    let seeds_match = (seed_from_a.is_finite() && tol.close(b.lambda0(), seed_from_a))
        || (seed_from_b.is_finite() && tol.close(a.lambda0(), seed_from_b));
    let equivalent = tol.close(b.b(), expected_b) && seeds_match;
    Ok(EquivalenceCheck {
        equivalent,
        shift: Some(n),
    })
}
