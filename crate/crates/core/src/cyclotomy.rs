//! Cyclotomic classes of order N and exact Gaussian periods.
//!
//! For a generator alpha of GF(r)* and N | r - 1, the class C_k is the coset
//! alpha^k * <alpha^N>, so membership is just the discrete log modulo N.
//! The Gaussian period of a class is
//!
//! ```text
//! eta_k = sum over x in C_k of zeta_p^Tr(x),    zeta_p = e^(2*pi*i/p)
//! ```
//!
//! Whenever N divides (r-1)/(p-1) the prime subfield's nonzero elements all
//! land in C_0; the trace counts of each class are then uniform over nonzero
//! values and every eta_k collapses to an exact integer, computed here by
//! pure counting with no floating point involved.

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// The nonzero elements of a field split into N cosets of the subgroup of
/// N-th powers.
pub struct ClassPartition {
    /// Number of classes N.
    pub order: u64,
    /// Elements per class, n = (r-1)/N.
    pub class_size: u64,
    /// class_of[idx] = discrete log mod N; u32::MAX at index 0.
    class_of: Vec<u32>,
    /// Member element indices per class, ascending.
    members: Vec<Vec<u32>>,
}

impl ClassPartition {
    /// Class index of a nonzero element; None for zero.
    pub fn class_of(&self, x: FieldElement) -> Option<u64> {
        let c = self.class_of[x.index() as usize];
        (c != u32::MAX).then_some(u64::from(c))
    }

    /// Element indices of class k, ascending.
    pub fn members(&self, k: u64) -> &[u32] {
        &self.members[k as usize]
    }

    pub fn elements(&self, k: u64) -> impl Iterator<Item = FieldElement> + '_ {
        self.members[k as usize].iter().map(|&i| FieldElement(i))
    }
}

/// Split GF(r)* into cyclotomic classes of order N. Requires 2 <= N | r - 1;
/// singleton classes are allowed here (the period and code layers impose
/// their own stronger preconditions).
pub fn partition_classes(ctx: &FieldContext, order: u64) -> Result<ClassPartition> {
    let rm1 = ctx.size() - 1;
    if order < 2 || !rm1.is_multiple_of(order) {
        return Err(Error::BadOrder {
            order,
            size_minus_one: rm1,
        });
    }
    let class_size = rm1 / order;
    let mut class_of = vec![u32::MAX; ctx.size() as usize];
    let mut members = vec![Vec::with_capacity(class_size as usize); order as usize];
    let exp = ctx.exp_slice();
    for j in 0..rm1 {
        let k = (j % order) as usize;
        let idx = exp[j as usize];
        class_of[idx as usize] = k as u32;
        members[k].push(idx);
    }
    for list in &mut members {
        list.sort_unstable();
    }
    Ok(ClassPartition {
        order,
        class_size,
        class_of,
        members,
    })
}

/// Validate a set of class indices against an order N: nonempty, in range,
/// no duplicates. Returns the indices sorted ascending.
pub fn normalize_subset(order: u64, subset: &[u64]) -> Result<Vec<u64>> {
    if subset.is_empty() {
        return Err(Error::InvalidIndexSet(
            "class subset must be nonempty".into(),
        ));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidIndexSet(format!(
            "duplicate class index in {subset:?}"
        )));
    }
    if *sorted.last().unwrap() >= order {
        return Err(Error::InvalidIndexSet(format!(
            "class index {} out of range for order {order}",
            sorted.last().unwrap()
        )));
    }
    Ok(sorted)
}

/// counts[k][rho] = number of x in C_k with Tr(x) = rho.
pub struct TraceDistribution {
    pub counts: Vec<Vec<u64>>,
}

pub fn trace_distribution(ctx: &FieldContext, part: &ClassPartition) -> TraceDistribution {
    let p = ctx.characteristic() as usize;
    let mut counts = vec![vec![0u64; p]; part.order as usize];
    for k in 0..part.order {
        let row = &mut counts[k as usize];
        for x in part.elements(k) {
            row[ctx.trace(x) as usize] += 1;
        }
    }
    TraceDistribution { counts }
}

/// True when N divides (r-1)/(p-1), the rationality condition under which
/// the Gaussian periods are plain integers.
pub fn is_rational(ctx: &FieldContext, order: u64) -> bool {
    let quotient = (ctx.size() - 1) / (ctx.characteristic() - 1);
    quotient.is_multiple_of(order)
}

/// Exact integer Gaussian periods, one per class, faithful to this field's
/// class indexing.
pub struct GaussianPeriods {
    pub order: u64,
    pub eta: Vec<i64>,
}

/// Compute every eta_k by counting traces. Under the rationality condition
/// the nonzero-trace counts inside one class are all equal, so the root-of-
/// unity sum telescopes to counts[k][0] - counts[k][1]; that uniformity is
/// asserted rather than assumed.
pub fn gaussian_periods_exact(
    ctx: &FieldContext,
    part: &ClassPartition,
) -> Result<GaussianPeriods> {
    let p = ctx.characteristic();
    if !is_rational(ctx, part.order) {
        return Err(Error::NotRational {
            order: part.order,
            quotient: (ctx.size() - 1) / (p - 1),
        });
    }
    if part.class_size < 2 {
        return Err(Error::DegenerateClasses { order: part.order });
    }
    let dist = trace_distribution(ctx, part);
    let mut eta = Vec::with_capacity(part.order as usize);
    for (k, row) in dist.counts.iter().enumerate() {
        if row[1..].iter().any(|&c| c != row[1]) {
            return Err(Error::Inconsistency(format!(
                "nonzero trace counts of class {k} are not uniform: {row:?}"
            )));
        }
        eta.push(row[0] as i64 - row[1] as i64);
    }
    if eta.iter().sum::<i64>() != -1 {
        return Err(Error::Inconsistency(format!(
            "Gaussian periods sum to {} instead of -1",
            eta.iter().sum::<i64>()
        )));
    }
    Ok(GaussianPeriods {
        order: part.order,
        eta,
    })
}

/// Expand prod_k (X - eta_k) over the integers, coefficients constant-first.
pub fn period_polynomial(periods: &GaussianPeriods) -> Vec<i64> {
    let mut coeffs: Vec<i128> = vec![1];
    for &e in &periods.eta {
        let mut next = vec![0i128; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= i128::from(e) * c;
        }
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|c| i64::try_from(c).expect("period polynomial coefficient overflow"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;
    use std::sync::OnceLock;

    fn ctx(p: u64, m: u32) -> FieldContext {
        FieldContext::build(p, m).unwrap()
    }

    fn gf64() -> &'static FieldContext {
        static CTX: OnceLock<FieldContext> = OnceLock::new();
        CTX.get_or_init(|| ctx(2, 6))
    }

    #[test]
    fn gf4_order_3_gives_singletons() {
        let f = ctx(2, 2);
        let part = partition_classes(&f, 3).unwrap();
        assert_eq!(part.class_size, 1);
        let all: BTreeSet<u32> = (0..3).flat_map(|k| part.members(k).to_vec()).collect();
        assert_eq!(all, BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn classes_partition_the_nonzero_elements() {
        for (p, m, order) in [(2u64, 6u32, 3u64), (3, 4, 4), (7, 3, 3)] {
            let f = ctx(p, m);
            let part = partition_classes(&f, order).unwrap();
            assert_eq!(part.class_size, (f.size() - 1) / order);
            let mut seen = BTreeSet::new();
            for k in 0..order {
                assert_eq!(part.members(k).len() as u64, part.class_size);
                for x in part.elements(k) {
                    assert_eq!(part.class_of(x), Some(k));
                    assert!(seen.insert(x.index()));
                }
            }
            assert_eq!(seen.len() as u64, f.size() - 1);
            assert_eq!(part.class_of(FieldElement::ZERO), None);
        }
    }

    #[test]
    fn class_of_is_log_mod_order() {
        let f = gf64();
        let part = partition_classes(f, 3).unwrap();
        for j in 0..f.size() - 1 {
            let x = f.power_of_alpha(j);
            assert_eq!(part.class_of(x), Some(j % 3));
        }
    }

    #[test]
    fn prime_subfield_lands_in_class_zero_when_rational() {
        let f = ctx(5, 4);
        let part = partition_classes(&f, 4).unwrap();
        assert!(is_rational(&f, 4));
        // Nonzero scalars 1..p sit in C_0, so scaling by them fixes classes.
        for s in 1..5u64 {
            assert_eq!(part.class_of(f.element(s)), Some(0), "scalar {s}");
        }
    }

    #[test]
    fn scaling_by_prime_subfield_permutes_within_class() {
        let f = ctx(3, 4);
        let part = partition_classes(&f, 4).unwrap();
        let two = f.element(2);
        for k in 0..4 {
            let orig: BTreeSet<u64> = part.elements(k).map(|x| x.index()).collect();
            let scaled: BTreeSet<u64> = part.elements(k).map(|x| f.mul(x, two).index()).collect();
            assert_eq!(orig, scaled);
        }
    }

    #[test]
    fn distribution_rows_sum_to_class_size() {
        let f = gf64();
        let part = partition_classes(f, 3).unwrap();
        let dist = trace_distribution(f, &part);
        for row in &dist.counts {
            assert_eq!(row.iter().sum::<u64>(), part.class_size);
        }
        // Zero traces across all classes account for the trace-zero
        // hyperplane minus the zero element.
        let zeros: u64 = dist.counts.iter().map(|row| row[0]).sum();
        assert_eq!(zeros, f.size() / f.characteristic() - 1);
    }

    #[test]
    fn distribution_gf64_order_3() {
        let f = gf64();
        let part = partition_classes(f, 3).unwrap();
        let dist = trace_distribution(f, &part);
        let rows: BTreeSet<(u64, u64)> = dist.counts.iter().map(|row| (row[0], row[1])).collect();
        assert_eq!(rows, BTreeSet::from([(13, 8), (9, 12)]));
    }

    #[test]
    fn distribution_gf81_order_4() {
        let f = ctx(3, 4);
        let part = partition_classes(&f, 4).unwrap();
        let dist = trace_distribution(&f, &part);
        let rows: BTreeSet<Vec<u64>> = dist.counts.iter().cloned().collect();
        assert_eq!(rows, BTreeSet::from([vec![2, 9, 9], vec![8, 6, 6]]));
    }

    #[test]
    fn periods_gf64_order_3() {
        let f = gf64();
        let part = partition_classes(f, 3).unwrap();
        let periods = gaussian_periods_exact(f, &part).unwrap();
        assert_eq!(periods.eta, vec![5, -3, -3]);
    }

    #[test]
    fn periods_gf81_order_4() {
        let f = ctx(3, 4);
        let part = partition_classes(&f, 4).unwrap();
        let periods = gaussian_periods_exact(&f, &part).unwrap();
        assert_eq!(periods.eta, vec![-7, 2, 2, 2]);
    }

    #[test]
    fn periods_gf343_order_3() {
        let f = ctx(7, 3);
        let part = partition_classes(&f, 3).unwrap();
        let periods = gaussian_periods_exact(&f, &part).unwrap();
        let multiset: BTreeSet<i64> = periods.eta.iter().copied().collect();
        assert_eq!(multiset, BTreeSet::from([2, -12, 9]));
        assert_eq!(periods.eta.iter().sum::<i64>(), -1);
    }

    #[test]
    fn period_polynomial_expands_over_integers() {
        let periods = GaussianPeriods {
            order: 3,
            eta: vec![5, -3, -3],
        };
        // (X - 5)(X + 3)^2 = X^3 + X^2 - 21X - 45
        assert_eq!(period_polynomial(&periods), vec![-45, -21, 1, 1]);

        let periods = GaussianPeriods {
            order: 4,
            eta: vec![-7, 2, 2, 2],
        };
        // (X + 7)(X - 2)^3 = X^4 + X^3 - 30X^2 + 76X - 56
        assert_eq!(period_polynomial(&periods), vec![-56, 76, -30, 1, 1]);
    }

    #[test]
    fn rejects_order_not_dividing() {
        let f = gf64();
        assert!(matches!(
            partition_classes(f, 5),
            Err(Error::BadOrder { .. })
        ));
        assert!(matches!(
            partition_classes(f, 1),
            Err(Error::BadOrder { .. })
        ));
    }

    #[test]
    fn rejects_irrational_periods() {
        // GF(49): 6 | 48 so the partition exists, but 6 does not divide
        // (r-1)/(p-1) = 8.
        let f = ctx(7, 2);
        let part = partition_classes(&f, 6).unwrap();
        assert!(!is_rational(&f, 6));
        assert!(matches!(
            gaussian_periods_exact(&f, &part),
            Err(Error::NotRational { .. })
        ));
    }

    #[test]
    fn rejects_singleton_classes() {
        let f = ctx(2, 2);
        let part = partition_classes(&f, 3).unwrap();
        assert!(matches!(
            gaussian_periods_exact(&f, &part),
            Err(Error::DegenerateClasses { .. })
        ));
    }
}
