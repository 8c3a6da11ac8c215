//! Batch cross-verification over all admissible parameters.
//!
//! A triple (p, m, N) is admissible when p is prime, m >= 2, r = p^m stays
//! under the requested bound, N divides (r-1)/(p-1) so the periods are
//! rational, and the classes have at least two elements. Each sweep walks
//! every admissible case, runs independent computation paths against each
//! other, and reports one [`Check`] per case. Nothing here trusts a shared
//! intermediate: enumeration tallies traces pair by pair, the period path
//! counts trace distributions, the closed forms are pure integer formulas,
//! and the character path sums complex roots of unity.

use crate::character::{CharacterSystem, GAUSS_TOLERANCE};
use crate::closed_form::{cwe_closed_form, cwe_from_periods, periods_closed_form};
use crate::codes::{
    brute_force_cwe, build_defining_set, code_summary, coset_representative_check,
    trace_profile_tally,
};
use crate::cwe::Cwe;
use crate::cyclotomy::{gaussian_periods_exact, partition_classes, period_polynomial};
use crate::error::Result;
use crate::field::{is_prime, FieldContext};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibleCase {
    pub p: u64,
    pub m: u32,
    pub order: u64,
}

/// All admissible (p, m, order) with p^m <= max_size, ordered by field size.
pub fn admissible_cases(max_size: u64, orders: &[u64]) -> Vec<AdmissibleCase> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= max_size {
        if is_prime(p) {
            let mut m = 2u32;
            let mut r = p * p;
            loop {
                for &order in orders {
                    let rational =
                        (r - 1).is_multiple_of(order) && ((r - 1) / (p - 1)).is_multiple_of(order);
                    if rational && (r - 1) / order > 1 {
                        out.push(AdmissibleCase { p, m, order });
                    }
                }
                match r.checked_mul(p) {
                    Some(next) if next <= max_size => {
                        r = next;
                        m += 1;
                    }
                    _ => break,
                }
            }
        }
        p += 1;
    }
    out.sort_by_key(|c| (c.p.pow(c.m), c.p, c.order));
    out
}

/// Result of one cross-check: a stable name, a verdict, and failure detail.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: String) -> Self {
        Check {
            name,
            passed: true,
            detail: String::new(),
        }
    }

    fn fail(name: String, detail: String) -> Self {
        Check {
            name,
            passed: false,
            detail,
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

/// For every admissible case: closed-form periods must match the exact
/// trace-counting periods as a multiset, both must sum to -1, and the
/// period polynomials expanded from each must be identical.
pub fn period_sweep(max_size: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for case in admissible_cases(max_size, &[3, 4]) {
        let AdmissibleCase { p, m, order } = case;
        let name = format!("periods p={p} m={m} N={order}");
        let ctx = FieldContext::build(p, m)?;
        let part = partition_classes(&ctx, order)?;
        let exact = gaussian_periods_exact(&ctx, &part)?;
        let closed = periods_closed_form(p, m, order)?;
        if exact.eta.iter().sum::<i64>() != -1 {
            checks.push(Check::fail(name, format!("exact sum {:?}", exact.eta)));
            continue;
        }
        if sorted(exact.eta.clone()) != sorted(closed.clone()) {
            checks.push(Check::fail(
                name,
                format!("multisets differ: exact {:?}, closed {closed:?}", exact.eta),
            ));
            continue;
        }
        let from_closed = crate::cyclotomy::GaussianPeriods { order, eta: closed };
        if period_polynomial(&exact) != period_polynomial(&from_closed) {
            checks.push(Check::fail(name, "period polynomials differ".into()));
            continue;
        }
        checks.push(Check::pass(name));
    }
    Ok(checks)
}

/// For every admissible case and every nonempty class subset: the
/// amortized exhaustive enumeration must equal the period formula exactly,
/// the closed-form enumerator must agree where it applies (fewer than N
/// classes), and for fields below `crosscheck_below` the amortized pass is
/// itself checked against the plain per-subset enumeration.
pub fn enumeration_sweep(max_size: u64, crosscheck_below: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for case in admissible_cases(max_size, &[3, 4]) {
        let AdmissibleCase { p, m, order } = case;
        let name = format!("enumeration p={p} m={m} N={order}");
        let ctx = FieldContext::build(p, m)?;
        let part = partition_classes(&ctx, order)?;
        let exact = gaussian_periods_exact(&ctx, &part)?;
        let tally = trace_profile_tally(&ctx, &part);
        let mut failure = None;
        for bits in 1..(1u64 << order) {
            let subset: Vec<u64> = (0..order).filter(|i| bits >> i & 1 == 1).collect();
            let enumerated = tally.cwe(&subset)?;
            let formula = cwe_from_periods(p, part.class_size, &exact.eta, &subset)?;
            if enumerated != formula {
                failure = Some(format!("subset {subset:?}: enumeration vs formula"));
                break;
            }
            if (subset.len() as u64) < order {
                let theorem = cwe_closed_form(p, m, order, &subset)?;
                if theorem != enumerated {
                    failure = Some(format!("subset {subset:?}: theorem vs enumeration"));
                    break;
                }
            }
            if ctx.size() <= crosscheck_below {
                let ds = build_defining_set(&part, &subset)?;
                if brute_force_cwe(&ctx, &ds) != enumerated {
                    failure = Some(format!("subset {subset:?}: plain vs amortized"));
                    break;
                }
            }
            code_summary(m, &enumerated)?;
        }
        checks.push(match failure {
            Some(detail) => Check::fail(name, detail),
            None => Check::pass(name),
        });
    }
    Ok(checks)
}

/// Character-sum checks per admissible field: the trivial Gauss sum is -1,
/// nontrivial ones have modulus sqrt(r), the Gauss-sum expansion reproduces
/// the exact periods index by index, coset sums are representative
/// independent, and the full Fourier inversion of psi is pointwise tight.
pub fn gauss_sweep(max_size: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let cases = admissible_cases(max_size, &[3, 4]);
    for (idx, &case) in cases.iter().enumerate() {
        let AdmissibleCase { p, m, order } = case;
        let name = format!("gauss p={p} m={m} N={order}");
        let ctx = FieldContext::build(p, m)?;
        let part = partition_classes(&ctx, order)?;
        let exact = gaussian_periods_exact(&ctx, &part)?;
        let sys = CharacterSystem::new(&ctx)?;
        let mut failure = None;

        let trivial = sys.gauss_sum(0);
        if (trivial - Complex64::new(-1.0, 0.0)).norm() >= GAUSS_TOLERANCE {
            failure = Some(format!("trivial Gauss sum {trivial}"));
        }
        let n = (ctx.size() - 1) / order;
        let sqrt_r = (ctx.size() as f64).sqrt();
        for t in [1, n] {
            let g = sys.gauss_sum(t);
            if failure.is_none() && (g.norm() - sqrt_r).abs() >= GAUSS_TOLERANCE {
                failure = Some(format!("|G(chi^{t})| = {}", g.norm()));
            }
        }
        if failure.is_none() {
            let via_sums = sys.periods_via_gauss_sums(order)?;
            for (k, (&e, g)) in exact.eta.iter().zip(&via_sums).enumerate() {
                if (g - Complex64::new(e as f64, 0.0)).norm() >= GAUSS_TOLERANCE {
                    failure = Some(format!("eta_{k}: {g} vs {e}"));
                    break;
                }
            }
        }
        if failure.is_none() {
            let dev = sys.period_shift_deviation(order)?;
            if dev >= GAUSS_TOLERANCE {
                failure = Some(format!("shift deviation {dev}"));
            }
        }
        // The Fourier inversion does not depend on the order, so run the
        // quadratic pass once per field.
        let first_for_field = idx == 0 || {
            let prev = cases[idx - 1];
            (prev.p, prev.m) != (p, m)
        };
        if failure.is_none() && first_for_field {
            let err = sys.fourier_reconstruction_error();
            if err >= GAUSS_TOLERANCE {
                failure = Some(format!("Fourier reconstruction error {err}"));
            }
        }
        checks.push(match failure {
            Some(detail) => Check::fail(name, detail),
            None => Check::pass(name),
        });
    }
    Ok(checks)
}

/// Coset-representative consistency for the cubic codes over GF(343) and
/// GF(2197), with one and with two classes in the defining set.
pub fn representative_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for p in [7u64, 13] {
        let ctx = FieldContext::build(p, 3)?;
        let part = partition_classes(&ctx, 3)?;
        for subset in [vec![0u64], vec![0, 1]] {
            let name = format!("representatives p={p} m=3 classes {subset:?}");
            let rc = coset_representative_check(&ctx, &part, &subset)?;
            checks.push(if rc.consistent {
                Check::pass(name)
            } else {
                Check::fail(
                    name,
                    format!("full {:?} vs reduced {:?}", rc.full, rc.reduced),
                )
            });
        }
    }
    Ok(checks)
}

/// A fully pinned reference code: parameters, complete weight enumerator,
/// and [n, k, d].
pub struct KnownAnswer {
    pub p: u64,
    pub m: u32,
    pub order: u64,
    pub subset: &'static [u64],
    pub terms: &'static [(&'static [u64], u64)],
    pub length: u64,
    pub dimension: u32,
    pub distance: u64,
}

/// Nine reference codes covering both orders, both semiprimitive branches,
/// and the quartic Diophantine case.
pub fn known_answer_cases() -> Vec<KnownAnswer> {
    vec![
        KnownAnswer {
            p: 2,
            m: 6,
            order: 3,
            subset: &[1],
            terms: &[(&[21, 0], 1), (&[13, 8], 21), (&[9, 12], 42)],
            length: 21,
            dimension: 6,
            distance: 8,
        },
        KnownAnswer {
            p: 2,
            m: 6,
            order: 3,
            subset: &[0, 1],
            terms: &[(&[42, 0], 1), (&[22, 20], 42), (&[18, 24], 21)],
            length: 42,
            dimension: 6,
            distance: 20,
        },
        KnownAnswer {
            p: 3,
            m: 4,
            order: 4,
            subset: &[1],
            terms: &[(&[20, 0, 0], 1), (&[8, 6, 6], 60), (&[2, 9, 9], 20)],
            length: 20,
            dimension: 4,
            distance: 12,
        },
        KnownAnswer {
            p: 3,
            m: 4,
            order: 4,
            subset: &[0, 1],
            terms: &[(&[40, 0, 0], 1), (&[16, 12, 12], 40), (&[10, 15, 15], 40)],
            length: 40,
            dimension: 4,
            distance: 24,
        },
        KnownAnswer {
            p: 3,
            m: 4,
            order: 4,
            subset: &[0, 1, 2],
            terms: &[(&[60, 0, 0], 1), (&[24, 18, 18], 20), (&[18, 21, 21], 60)],
            length: 60,
            dimension: 4,
            distance: 36,
        },
        KnownAnswer {
            p: 5,
            m: 4,
            order: 4,
            subset: &[1],
            terms: &[
                (&[156, 0, 0, 0, 0], 1),
                (&[44, 28, 28, 28, 28], 156),
                (&[32, 31, 31, 31, 31], 156),
                (&[28, 32, 32, 32, 32], 156),
                (&[20, 34, 34, 34, 34], 156),
            ],
            length: 156,
            dimension: 4,
            distance: 112,
        },
        KnownAnswer {
            p: 5,
            m: 4,
            order: 4,
            subset: &[1, 3],
            terms: &[
                (&[312, 0, 0, 0, 0], 1),
                (&[72, 60, 60, 60, 60], 312),
                (&[52, 65, 65, 65, 65], 312),
            ],
            length: 312,
            dimension: 4,
            distance: 240,
        },
        KnownAnswer {
            p: 5,
            m: 4,
            order: 4,
            subset: &[0, 3],
            terms: &[
                (&[312, 0, 0, 0, 0], 1),
                (&[76, 59, 59, 59, 59], 156),
                (&[64, 62, 62, 62, 62], 156),
                (&[60, 63, 63, 63, 63], 156),
                (&[48, 66, 66, 66, 66], 156),
            ],
            length: 312,
            dimension: 4,
            distance: 236,
        },
        KnownAnswer {
            p: 5,
            m: 4,
            order: 4,
            subset: &[0, 1, 2],
            terms: &[
                (&[468, 0, 0, 0, 0], 1),
                (&[104, 91, 91, 91, 91], 156),
                (&[96, 93, 93, 93, 93], 156),
                (&[92, 94, 94, 94, 94], 156),
                (&[80, 97, 97, 97, 97], 156),
            ],
            length: 468,
            dimension: 4,
            distance: 364,
        },
    ]
}

impl KnownAnswer {
    pub fn expected_cwe(&self) -> Cwe {
        let mut cwe = Cwe::new(self.length, self.p);
        for &(comp, mult) in self.terms {
            cwe.add_term(comp.to_vec(), mult);
        }
        cwe
    }
}

/// Every reference code recomputed along all applicable paths.
pub fn known_answer_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for ka in known_answer_cases() {
        let name = format!(
            "reference p={} m={} N={} classes {:?}",
            ka.p, ka.m, ka.order, ka.subset
        );
        let expected = ka.expected_cwe();
        let ctx = FieldContext::build(ka.p, ka.m)?;
        let part = partition_classes(&ctx, ka.order)?;
        let ds = build_defining_set(&part, ka.subset)?;
        let brute = brute_force_cwe(&ctx, &ds);
        let exact = gaussian_periods_exact(&ctx, &part)?;
        let formula = cwe_from_periods(ka.p, part.class_size, &exact.eta, ka.subset)?;
        let mut failure = None;
        if brute != expected {
            failure = Some("enumeration differs from reference".to_string());
        } else if formula != expected {
            failure = Some("period formula differs from reference".to_string());
        } else if (ka.subset.len() as u64) < ka.order {
            let theorem = cwe_closed_form(ka.p, ka.m, ka.order, ka.subset)?;
            if theorem != expected {
                failure = Some("closed form differs from reference".to_string());
            }
        }
        if failure.is_none() {
            let summary = code_summary(ka.m, &brute)?;
            if (summary.length, summary.dimension, summary.minimum_distance)
                != (ka.length, ka.dimension, ka.distance)
            {
                failure = Some(format!("summary {summary:?}"));
            }
        }
        checks.push(match failure {
            Some(detail) => Check::fail(name, detail),
            None => Check::pass(name),
        });
    }
    Ok(checks)
}
