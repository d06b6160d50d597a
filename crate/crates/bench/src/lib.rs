//! Shared fixtures for the criterion benches: labels resolved once so the
//! timed bodies measure only the operation under test.

use qosc_core::{classify_label, AlgebraParams, RepClass, RepLabel, Tolerances};

/// Doubly infinite label comfortably inside its admissible region, so both
/// spectral routes and the block builder run without rejection.
pub fn unbounded_fixture() -> (AlgebraParams, RepLabel, RepClass, Tolerances) {
    let params = AlgebraParams::new(0.5, 1.0).expect("valid params");
    let label = RepLabel::new(0.25, -1.3, 3.0).expect("valid label");
    let tol = Tolerances::default();
    let class = classify_label(&params, &label, &tol).expect("admitted label");
    (params, label, class, tol)
}

/// Half-infinite Fock label at strong deformation.
pub fn fock_fixture() -> (AlgebraParams, RepLabel, RepClass, Tolerances) {
    let params = AlgebraParams::new(0.5, 1.0).expect("valid params");
    let label = RepLabel::new(0.0, 0.25, 0.0).expect("valid label");
    let tol = Tolerances::default();
    let class = classify_label(&params, &label, &tol).expect("admitted label");
    (params, label, class, tol)
}
