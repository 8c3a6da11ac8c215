//! Code construction and exhaustive enumeration.
//!
//! The code attached to a defining set D = {d_1, ..., d_l} over GF(r) is
//!
//! ```text
//! C_D = { (Tr(x d_1), ..., Tr(x d_l)) : x in GF(r) }
//! ```
//!
//! a linear code of length |D| over GF(p). Here D is a union of cyclotomic
//! classes. `brute_force_cwe` walks every x and tallies symbol compositions
//! directly; it is the ground truth the formula paths are compared against.
//! `TraceProfileTally` is the same enumeration amortized over all class
//! subsets at once, one pass per field, for large sweeps.
//!
//! Multiplicities are tallied over all r values of x, so when the trace
//! pairing is degenerate on D the zero composition absorbs a kernel of size
//! p^e and the reported dimension drops to m - e.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cwe::Cwe;
use crate::cyclotomy::{normalize_subset, ClassPartition};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// A union of cyclotomic classes, flattened class-major with ascending
/// element indices inside each class.
pub struct DefiningSet {
    pub order: u64,
    pub class_size: u64,
    pub subset: Vec<u64>,
    pub elements: Vec<FieldElement>,
}

pub fn build_defining_set(part: &ClassPartition, subset: &[u64]) -> Result<DefiningSet> {
    let subset = normalize_subset(part.order, subset)?;
    let mut elements = Vec::with_capacity((part.class_size as usize) * subset.len());
    for &i in &subset {
        elements.extend(part.elements(i));
    }
    Ok(DefiningSet {
        order: part.order,
        class_size: part.class_size,
        subset,
        elements,
    })
}

/// Traces of alpha^j for j in [0, r-1), the shared inner table of every
/// enumeration below.
fn trace_of_power_table(ctx: &FieldContext) -> Vec<u32> {
    let exp = ctx.exp_slice();
    let tr = ctx.trace_slice();
    exp.iter().map(|&idx| tr[idx as usize]).collect()
}

/// CWE of the code defined by an arbitrary sequence of nonzero elements,
/// by enumerating all r codewords.
pub fn cwe_by_enumeration(ctx: &FieldContext, elements: &[FieldElement]) -> Cwe {
    let p = ctx.characteristic();
    let rm1 = ctx.size() - 1;
    let len = elements.len() as u64;
    let g = trace_of_power_table(ctx);
    let mut logs: Vec<u64> = elements
        .iter()
        .map(|&d| ctx.discrete_log(d).expect("defining sets exclude zero"))
        .collect();
    logs.sort_unstable();

    let fold = |mut acc: BTreeMap<Vec<u64>, u64>, a: u64| {
        let mut comp = vec![0u64; p as usize];
        let split = logs.partition_point(|&b| a + b < rm1);
        for &b in &logs[..split] {
            comp[g[(a + b) as usize] as usize] += 1;
        }
        for &b in &logs[split..] {
            comp[g[(a + b - rm1) as usize] as usize] += 1;
        }
        *acc.entry(comp).or_insert(0) += 1;
        acc
    };
    let merged =
        (0..rm1)
            .into_par_iter()
            .fold(BTreeMap::new, fold)
            .reduce(BTreeMap::new, |mut a, b| {
                for (comp, mult) in b {
                    *a.entry(comp).or_insert(0) += mult;
                }
                a
            });

    let mut cwe = Cwe::new(len, p);
    let mut zero_comp = vec![0u64; p as usize];
    zero_comp[0] = len;
    cwe.add_term(zero_comp, 1);
    for (comp, mult) in merged {
        cwe.add_term(comp, mult);
    }
    cwe
}

/// Ground-truth CWE of the code whose defining set is a union of classes.
pub fn brute_force_cwe(ctx: &FieldContext, ds: &DefiningSet) -> Cwe {
    cwe_by_enumeration(ctx, &ds.elements)
}

/// Per-class symbol-count profiles shared by every x, from one exhaustive
/// pass over all (x, d) pairs with d ranging over the whole of GF(r)*.
///
/// The profile of x stores, for each class i and symbol rho, how many d in
/// C_i give Tr(xd) = rho. The composition of x's codeword for any class
/// subset is then the sum of the chosen rows. Distinct profiles are tallied
/// with their x counts, so a single pass answers all 2^N - 1 subsets.
pub struct TraceProfileTally {
    pub order: u64,
    pub class_size: u64,
    symbols: u64,
    /// (flattened order-by-p profile, number of nonzero x sharing it)
    profiles: Vec<(Vec<u64>, u64)>,
}

pub fn trace_profile_tally(ctx: &FieldContext, part: &ClassPartition) -> TraceProfileTally {
    let p = ctx.characteristic() as usize;
    let order = part.order as usize;
    let rm1 = ctx.size() - 1;
    let g = trace_of_power_table(ctx);

    let mut profiles: Vec<(Vec<u64>, u64)> = Vec::new();
    let mut profile = vec![0u64; order * p];
    for a in 0..rm1 {
        profile.iter_mut().for_each(|c| *c = 0);
        let mut cls = 0usize;
        let mut idx = a as usize;
        let wrap = rm1 as usize;
        for _ in 0..rm1 {
            profile[cls * p + g[idx] as usize] += 1;
            cls += 1;
            if cls == order {
                cls = 0;
            }
            idx += 1;
            if idx == wrap {
                idx = 0;
            }
        }
        match profiles.iter_mut().find(|(q, _)| *q == profile) {
            Some((_, count)) => *count += 1,
            None => profiles.push((profile.clone(), 1)),
        }
    }
    TraceProfileTally {
        order: part.order,
        class_size: part.class_size,
        symbols: ctx.characteristic(),
        profiles,
    }
}

impl TraceProfileTally {
    /// Assemble the CWE for one class subset from the tallied profiles.
    pub fn cwe(&self, subset: &[u64]) -> Result<Cwe> {
        let subset = normalize_subset(self.order, subset)?;
        let p = self.symbols as usize;
        let len = self.class_size * subset.len() as u64;
        let mut cwe = Cwe::new(len, self.symbols);
        let mut zero_comp = vec![0u64; p];
        zero_comp[0] = len;
        cwe.add_term(zero_comp, 1);
        for (profile, count) in &self.profiles {
            let mut comp = vec![0u64; p];
            for &i in &subset {
                let row = &profile[i as usize * p..(i as usize + 1) * p];
                for (c, &v) in comp.iter_mut().zip(row) {
                    *c += v;
                }
            }
            cwe.add_term(comp, *count);
        }
        Ok(cwe)
    }
}

/// Length, dimension, and minimum distance read off a CWE whose
/// multiplicities tally all r = p^m values of x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeSummary {
    pub length: u64,
    pub dimension: u32,
    pub minimum_distance: u64,
}

pub fn code_summary(degree: u32, cwe: &Cwe) -> Result<CodeSummary> {
    let p = cwe.symbols;
    let r = p.checked_pow(degree).ok_or(Error::SizeCap {
        p,
        m: degree,
        cap: u64::MAX,
    })?;
    if cwe.total_multiplicity() != r {
        return Err(Error::Inconsistency(format!(
            "CWE multiplicities total {} for a field of size {r}",
            cwe.total_multiplicity()
        )));
    }
    let mut zero_comp = vec![0u64; p as usize];
    zero_comp[0] = cwe.length;
    let kernel = cwe
        .terms()
        .find(|(c, _)| *c == zero_comp)
        .map(|(_, m)| m)
        .ok_or_else(|| Error::Inconsistency("CWE lacks the zero-codeword term".into()))?;
    let mut e = 0u32;
    let mut k = kernel;
    while k % p == 0 {
        k /= p;
        e += 1;
    }
    if k != 1 || e > degree {
        return Err(Error::Inconsistency(format!(
            "zero-codeword multiplicity {kernel} is not a power of {p} dividing {r}"
        )));
    }
    let minimum_distance = cwe
        .minimum_distance()
        .ok_or_else(|| Error::Inconsistency("code has no nonzero codeword".into()))?;
    Ok(CodeSummary {
        length: cwe.length,
        dimension: degree - e,
        minimum_distance,
    })
}

/// Griesmer bound facts for an [n, k, d] code over GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GriesmerCheck {
    /// sum over i < k of ceil(d / p^i), the minimum possible length.
    pub bound: u64,
    /// Length equals the bound exactly.
    pub meets_bound: bool,
    /// No [n, k, d+1] code exists, i.e. the bound for d+1 exceeds n.
    pub distance_optimal: bool,
}

fn griesmer_sum(dimension: u32, distance: u64, p: u64) -> u64 {
    let mut sum = 0u64;
    let mut denom = 1u64;
    for _ in 0..dimension {
        sum += distance.div_ceil(denom);
        denom = denom.saturating_mul(p);
    }
    sum
}

pub fn griesmer_check(length: u64, dimension: u32, distance: u64, p: u64) -> GriesmerCheck {
    let bound = griesmer_sum(dimension, distance, p);
    assert!(
        bound <= length,
        "[{length},{dimension},{distance}] beats the Griesmer bound"
    );
    GriesmerCheck {
        bound,
        meets_bound: bound == length,
        distance_optimal: griesmer_sum(dimension, distance + 1, p) > length,
    }
}

/// Weight distributions of a full class-union code and of its puncturing to
/// one coset representative of GF(p)* per scalar line.
pub struct RepresentativeCheck {
    pub full: Vec<(u64, u64)>,
    pub reduced: Vec<(u64, u64)>,
    /// Reduced weights scaled by p - 1 reproduce the full distribution.
    pub consistent: bool,
}

/// Replace each class C_j, j in `subset`, by its first (r-1)/(N(p-1))
/// elements in generator order, one per scalar multiple, and compare weight
/// distributions. Scalars fix zeroness of symbols, so the full code's
/// weights must be exactly (p-1) times the reduced ones, with equal
/// frequencies.
pub fn coset_representative_check(
    ctx: &FieldContext,
    part: &ClassPartition,
    subset: &[u64],
) -> Result<RepresentativeCheck> {
    let subset = normalize_subset(part.order, subset)?;
    let p = ctx.characteristic();
    let quotient = (ctx.size() - 1) / (p - 1);
    if !quotient.is_multiple_of(part.order) {
        return Err(Error::NotRational {
            order: part.order,
            quotient,
        });
    }
    let reps_per_class = quotient / part.order;
    let mut rep_elements = Vec::new();
    for &j in &subset {
        for i in 0..reps_per_class {
            rep_elements.push(ctx.power_of_alpha(j + part.order * i));
        }
    }
    let ds = build_defining_set(part, &subset)?;
    let full = brute_force_cwe(ctx, &ds).weight_distribution();
    let reduced = cwe_by_enumeration(ctx, &rep_elements).weight_distribution();
    let scaled: Vec<(u64, u64)> = reduced.iter().map(|&(w, f)| (w * (p - 1), f)).collect();
    Ok(RepresentativeCheck {
        consistent: scaled == full,
        full,
        reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::cwe_from_periods;
    use crate::cyclotomy::gaussian_periods_exact;
    use crate::cyclotomy::partition_classes;
    use std::collections::BTreeMap;

    fn term_map(cwe: &Cwe) -> BTreeMap<Vec<u64>, u64> {
        cwe.terms().map(|(c, m)| (c.to_vec(), m)).collect()
    }

    #[test]
    fn defining_set_is_class_major_ascending() {
        let ctx = FieldContext::build(2, 6).unwrap();
        let part = partition_classes(&ctx, 3).unwrap();
        let ds = build_defining_set(&part, &[2, 1]).unwrap();
        assert_eq!(ds.subset, vec![1, 2]);
        assert_eq!(ds.elements.len(), 42);
        let (first, second) = ds.elements.split_at(21);
        assert!(first.iter().all(|&x| part.class_of(x) == Some(1)));
        assert!(second.iter().all(|&x| part.class_of(x) == Some(2)));
        assert!(first.windows(2).all(|w| w[0].index() < w[1].index()));
    }

    #[test]
    fn brute_force_binary_single_class() {
        let ctx = FieldContext::build(2, 6).unwrap();
        let part = partition_classes(&ctx, 3).unwrap();
        let ds = build_defining_set(&part, &[1]).unwrap();
        let cwe = brute_force_cwe(&ctx, &ds);
        assert_eq!(
            term_map(&cwe),
            BTreeMap::from([(vec![21, 0], 1), (vec![13, 8], 21), (vec![9, 12], 42),])
        );
    }

    #[test]
    fn brute_force_ternary_single_class() {
        let ctx = FieldContext::build(3, 4).unwrap();
        let part = partition_classes(&ctx, 4).unwrap();
        let ds = build_defining_set(&part, &[1]).unwrap();
        let cwe = brute_force_cwe(&ctx, &ds);
        assert_eq!(
            term_map(&cwe),
            BTreeMap::from([
                (vec![20, 0, 0], 1),
                (vec![8, 6, 6], 60),
                (vec![2, 9, 9], 20),
            ])
        );
    }

    #[test]
    fn brute_force_matches_period_formula_on_gf343() {
        let ctx = FieldContext::build(7, 3).unwrap();
        let part = partition_classes(&ctx, 3).unwrap();
        let periods = gaussian_periods_exact(&ctx, &part).unwrap();
        for bits in 1u64..8 {
            let subset: Vec<u64> = (0..3).filter(|i| bits >> i & 1 == 1).collect();
            let ds = build_defining_set(&part, &subset).unwrap();
            let brute = brute_force_cwe(&ctx, &ds);
            let formula = cwe_from_periods(7, part.class_size, &periods.eta, &subset).unwrap();
            assert_eq!(brute, formula, "subset {subset:?}");
        }
    }

    #[test]
    fn profile_tally_matches_plain_enumeration() {
        for (p, m, order) in [(2u64, 6u32, 3u64), (3, 4, 4), (5, 4, 4), (7, 3, 3)] {
            let ctx = FieldContext::build(p, m).unwrap();
            let part = partition_classes(&ctx, order).unwrap();
            let tally = trace_profile_tally(&ctx, &part);
            for bits in 1..(1u64 << order) {
                let subset: Vec<u64> = (0..order).filter(|i| bits >> i & 1 == 1).collect();
                let ds = build_defining_set(&part, &subset).unwrap();
                assert_eq!(
                    tally.cwe(&subset).unwrap(),
                    brute_force_cwe(&ctx, &ds),
                    "p = {p}, m = {m}, subset {subset:?}"
                );
            }
        }
    }

    #[test]
    fn summary_full_rank_code() {
        let ctx = FieldContext::build(2, 6).unwrap();
        let part = partition_classes(&ctx, 3).unwrap();
        let ds = build_defining_set(&part, &[1]).unwrap();
        let cwe = brute_force_cwe(&ctx, &ds);
        assert_eq!(
            code_summary(6, &cwe).unwrap(),
            CodeSummary {
                length: 21,
                dimension: 6,
                minimum_distance: 8,
            }
        );
    }

    #[test]
    fn summary_detects_dimension_drop() {
        // GF(9) with order 4: the single class {alpha, -alpha} pairs to a
        // rank-1 trace map, so the code is one-dimensional.
        let ctx = FieldContext::build(3, 2).unwrap();
        let part = partition_classes(&ctx, 4).unwrap();
        let ds = build_defining_set(&part, &[1]).unwrap();
        let cwe = brute_force_cwe(&ctx, &ds);
        assert_eq!(
            code_summary(2, &cwe).unwrap(),
            CodeSummary {
                length: 2,
                dimension: 1,
                minimum_distance: 2,
            }
        );
    }

    #[test]
    fn summary_rejects_wrong_totals() {
        let mut cwe = Cwe::new(3, 2);
        cwe.add_term(vec![3, 0], 1);
        cwe.add_term(vec![1, 2], 2);
        assert!(matches!(
            code_summary(6, &cwe),
            Err(Error::Inconsistency(_))
        ));
    }

    #[test]
    fn griesmer_known_values() {
        let check = griesmer_check(21, 6, 8, 2);
        assert_eq!(check.bound, 17);
        assert!(!check.meets_bound);

        let check = griesmer_check(42, 6, 20, 2);
        assert_eq!(check.bound, 41);
        assert!(!check.meets_bound);
        assert!(check.distance_optimal);

        // The simplex code meets the bound with room to spare on d + 1.
        let check = griesmer_check(7, 3, 4, 2);
        assert!(check.meets_bound);
        assert!(check.distance_optimal);
    }

    #[test]
    fn representative_code_scales_weights() {
        let ctx = FieldContext::build(7, 3).unwrap();
        let part = partition_classes(&ctx, 3).unwrap();
        for subset in [vec![0u64], vec![0, 1]] {
            let check = coset_representative_check(&ctx, &part, &subset).unwrap();
            assert!(check.consistent, "subset {subset:?}");
            assert_eq!(
                check.reduced.iter().map(|&(_, f)| f).sum::<u64>(),
                ctx.size()
            );
        }
    }
}
