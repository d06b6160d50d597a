//! Property-based checks of the structural invariants: agreement of the
//! two spectrum routes, the threshold identity behind the classification,
//! positivity of admitted labels, equivalence symmetry, and uniqueness of
//! the resolved family away from tolerance seams.

use proptest::prelude::*;

use qosc_core::{
    casimir_values, classify_label, enumerate_classes, equivalent, lambda_closed,
    lambda_recurrence, mu, positivity_scan, scalar_relation_residual, thresholds, AlgebraParams,
    Family, RepLabel, Tolerances,
};

fn arb_q() -> impl Strategy<Value = f64> {
    prop_oneof![0.05f64..0.95f64, 1.05f64..4.0f64]
}

fn arb_label() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (arb_q(), -2.0f64..2.0f64, -3.0f64..3.0f64, 0.0f64..5.0f64)
}

/// q, ν₀ and a coupling B inside one of the two open regions where the
/// doubly infinite family lives, with a λ₀ clearing its lower bound.
fn arb_unbounded_label() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (
        0.1f64..0.9f64,
        -2.0f64..2.0f64,
        0.0f64..1.0f64,
        any::<bool>(),
        0.1f64..5.0f64,
    )
        .prop_map(|(q, nu0, frac, upper_region, seed)| {
            let bs = (q + 1.0 / q) / (q - 1.0 / q);
            let (lo, hi) = if upper_region { (-1.0, -bs) } else { (bs, -1.0) };
            let margin = 0.1 * (hi - lo);
            let b = lo + margin + frac * (hi - lo - 2.0 * margin);
            let d_plus = 1.0 / (q - 1.0 / q) + b / (q + 1.0 / q);
            let lambda0 = (-d_plus * q.powf(-nu0)).max(0.0) + seed;
            (q, nu0, b, lambda0)
        })
}

fn setup(q: f64, nu0: f64, b: f64, lambda0: f64) -> (AlgebraParams, RepLabel) {
    (
        AlgebraParams::new(q, 1.0).unwrap(),
        RepLabel::new(nu0, b, lambda0).unwrap(),
    )
}

proptest! {
    #[test]
    fn closed_form_solves_the_recurrence((q, nu0, b, lambda0) in arb_label()) {
        let (params, label) = setup(q, nu0, b, lambda0);
        let tol = Tolerances::default();
        let spec = lambda_recurrence(&params, &label, -30, 30, &tol).unwrap();
        for (n, iterated) in spec.iter() {
            let direct = lambda_closed(&params, &label, n);
            prop_assert!(
                (direct - iterated).abs() <= 1e-9 * iterated.abs().max(1.0),
                "n = {n}: closed {direct} vs iterated {iterated}"
            );
        }
    }

    #[test]
    fn scalar_relation_residual_is_negligible((q, nu0, b, lambda0) in arb_label()) {
        let (params, label) = setup(q, nu0, b, lambda0);
        for n in -20..=20 {
            let scale = lambda_closed(&params, &label, n)
                .abs()
                .max(mu(&params, &label, n).abs())
                .max(1.0);
            let residual = scalar_relation_residual(&params, &label, n);
            prop_assert!(residual.abs() <= 1e-9 * scale, "n = {n}: residual {residual}");
        }
    }

    #[test]
    fn threshold_identity_reproduces_the_spectrum((q, nu0, b, lambda0) in arb_label()) {
        // q^{nu0} lambda_n = q^n e0 - q^{-n} d_parity is an independent
        // route to the coefficients, through the classification data.
        let (params, label) = setup(q, nu0, b, lambda0);
        let th = thresholds(&params, &label);
        for n in -20..=20 {
            let d = if n % 2 == 0 { th.d_plus } else { th.d_minus };
            let via_thresholds =
                (params.q_powi(n) * th.e0 - params.q_powi(-n) * d) * params.q_pow(-nu0);
            let direct = lambda_closed(&params, &label, n);
            prop_assert!(
                (via_thresholds - direct).abs() <= 1e-9 * direct.abs().max(1.0),
                "n = {n}: thresholds {via_thresholds} vs closed {direct}"
            );
        }
    }

    #[test]
    fn admitted_doubly_infinite_labels_stay_nonnegative(
        (q, nu0, b, lambda0) in arb_unbounded_label()
    ) {
        let (params, label) = setup(q, nu0, b, lambda0);
        let tol = Tolerances::default();
        let class = classify_label(&params, &label, &tol).unwrap();
        prop_assert_eq!(class.family(), Family::Unbounded);
        let scan = positivity_scan(&params, &label, &class, 40, &tol).unwrap();
        prop_assert!(scan.all_nonnegative, "violation {:?}", scan.first_violation);
    }

    #[test]
    fn shift_equivalence_is_symmetric(
        (q, nu0, b, lambda0) in arb_unbounded_label(),
        shift in -4i64..=4
    ) {
        let (params, label) = setup(q, nu0, b, lambda0);
        let tol = Tolerances::default();
        let flipped = if shift % 2 == 0 { b } else { -b };
        let shifted = RepLabel::new(
            nu0 + shift as f64,
            flipped,
            lambda_closed(&params, &label, shift),
        )
        .unwrap();
        let forward = equivalent(&params, &label, &shifted, &tol).unwrap();
        prop_assert!(forward.equivalent);
        prop_assert_eq!(forward.shift, Some(shift));
        let backward = equivalent(&params, &shifted, &label, &tol).unwrap();
        prop_assert!(backward.equivalent);
        prop_assert_eq!(backward.shift, Some(-shift));
    }

    #[test]
    fn central_values_satisfy_their_algebraic_identity(
        (q, nu0, b, lambda0) in arb_label(),
        alpha_mag in 0.25f64..2.0f64,
        alpha_neg in any::<bool>()
    ) {
        let alpha = if alpha_neg { -alpha_mag } else { alpha_mag };
        let params = AlgebraParams::new(q, alpha).unwrap();
        let label = RepLabel::new(nu0, b, lambda0).unwrap();
        let c = casimir_values(&params, &label);
        let defect = (c.c1 * c.c3 - c.c2 * c.c2).norm();
        prop_assert!(defect <= 1e-12 * (c.c2.norm() * c.c2.norm()).max(1.0));
    }

    #[test]
    fn canonical_labels_classify_into_their_family(
        q in arb_q(),
        nu0 in -2.0f64..2.0f64,
        b in -3.0f64..3.0f64
    ) {
        let params = AlgebraParams::new(q, 1.0).unwrap();
        let tol = Tolerances::default();
        for class in enumerate_classes(&params, nu0, b, &tol) {
            let lambda0 = match class.forced_lambda0() {
                Some(forced) => forced,
                None => class.lambda0_min().unwrap().min.max(0.0) + 1.0,
            };
            let label = RepLabel::new(nu0, b, lambda0).unwrap();
            let resolved = classify_label(&params, &label, &tol).unwrap();
            prop_assert_eq!(resolved.family(), class.family());
        }
    }

    #[test]
    fn away_from_seams_at_most_one_family_matches(
        (q, nu0, b, lambda0) in arb_label()
    ) {
        let params = AlgebraParams::new(q, 1.0).unwrap();
        let tol = Tolerances::default();

        // Stay clear of the coupling seams and of the lambda0 thresholds
        // so tolerance snapping cannot blur the count.
        let bs = (q + 1.0 / q) / (q - 1.0 / q);
        prop_assume!((b + 1.0).abs() > 1e-3);
        prop_assume!(q > 1.0 || (b - bs).abs() > 1e-3);
        prop_assume!(q > 1.0 || (b + bs).abs() > 1e-3);

        let label = RepLabel::new(nu0, b, lambda0).unwrap();
        let th = thresholds(&params, &label);
        let classes = enumerate_classes(&params, nu0, b, &tol);
        for class in &classes {
            if let Some(forced) = class.forced_lambda0() {
                prop_assume!((lambda0 - forced).abs() > 1e-3);
            }
        }
        prop_assume!(th.e0.abs() > 1e-3);

        let matches: Vec<Family> = classes
            .iter()
            .filter(|class| match class.forced_lambda0() {
                Some(forced) => tol.close(lambda0, forced),
                None => tol.nonneg(th.e0),
            })
            .map(|class| class.family())
            .collect();
        prop_assert!(matches.len() <= 1, "multiple families match: {matches:?}");

        match classify_label(&params, &label, &tol) {
            Ok(class) => prop_assert_eq!(vec![class.family()], matches),
            Err(_) => prop_assert!(matches.is_empty()),
        }
    }
}
