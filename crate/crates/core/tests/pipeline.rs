//! Full pipeline through the public API: field construction, class
//! partition, periods, and all three enumerator paths on small fields.

use cyclocode::closed_form::{cwe_closed_form, cwe_from_periods, periods_closed_form};
use cyclocode::codes::{
    brute_force_cwe, build_defining_set, code_summary, griesmer_check, trace_profile_tally,
};
use cyclocode::cyclotomy::{
    gaussian_periods_exact, normalize_subset, partition_classes, period_polynomial,
};
use cyclocode::FieldContext;

fn subsets(order: u64) -> Vec<Vec<u64>> {
    (1..1u64 << order)
        .map(|mask| (0..order).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

#[test]
fn all_paths_agree_on_small_fields() {
    for (p, m, order) in [(2, 6, 3), (3, 4, 4), (5, 2, 3), (7, 2, 4)] {
        let ctx = FieldContext::build(p, m).unwrap();
        let part = partition_classes(&ctx, order).unwrap();
        let periods = gaussian_periods_exact(&ctx, &part).unwrap();
        let tally = trace_profile_tally(&ctx, &part);
        for subset in subsets(order) {
            let subset = normalize_subset(order, &subset).unwrap();
            let ds = build_defining_set(&part, &subset).unwrap();
            let brute = brute_force_cwe(&ctx, &ds);
            let formula = cwe_from_periods(p, part.class_size, &periods.eta, &subset).unwrap();
            assert_eq!(brute, formula, "({p},{m}) N={order} classes {subset:?}");
            assert_eq!(tally.cwe(&subset).unwrap(), brute);
            if (subset.len() as u64) < order {
                let theorem = cwe_closed_form(p, m, order, &subset).unwrap();
                assert_eq!(theorem, brute, "({p},{m}) N={order} classes {subset:?}");
            }
        }
    }
}

#[test]
fn periods_match_closed_form_as_multisets() {
    for (p, m, order) in [(2, 6, 3), (2, 4, 3), (3, 4, 4), (5, 4, 4), (13, 3, 3)] {
        let ctx = FieldContext::build(p, m).unwrap();
        let part = partition_classes(&ctx, order).unwrap();
        let mut exact = gaussian_periods_exact(&ctx, &part).unwrap().eta;
        let mut closed = periods_closed_form(p, m, order).unwrap();
        exact.sort_unstable();
        closed.sort_unstable();
        assert_eq!(exact, closed, "({p},{m}) N={order}");
    }
}

#[test]
fn period_polynomial_is_monic_with_unit_trace() {
    let ctx = FieldContext::build(2, 6).unwrap();
    let part = partition_classes(&ctx, 3).unwrap();
    let periods = gaussian_periods_exact(&ctx, &part).unwrap();
    let poly = period_polynomial(&periods);
    assert_eq!(poly.len(), 4);
    assert_eq!(poly[3], 1);
    // Sum of roots is -1, so the subleading coefficient is 1.
    assert_eq!(poly[2], 1);
}

#[test]
fn summary_and_bound_compose() {
    let ctx = FieldContext::build(2, 6).unwrap();
    let part = partition_classes(&ctx, 3).unwrap();
    let ds = build_defining_set(&part, &[0, 1]).unwrap();
    let cwe = brute_force_cwe(&ctx, &ds);
    let summary = code_summary(6, &cwe).unwrap();
    assert_eq!(summary.length, 42);
    assert_eq!(summary.dimension, 6);
    assert_eq!(summary.minimum_distance, 20);
    let gries = griesmer_check(
        summary.length,
        summary.dimension,
        summary.minimum_distance,
        2,
    );
    assert_eq!(gries.bound, 41);
    assert!(gries.distance_optimal);
}
