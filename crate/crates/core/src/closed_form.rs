//! Closed-form Gaussian periods and weight enumerators for orders 3 and 4.
//!
//! When N is 3 or 4 the rational cases split cleanly in two. Either p = 1
//! (mod N) and the periods are driven by a quadratic-form decomposition of a
//! root of r (4c = s^2 + 27t^2 for the cubic case, sqrt(r) = u^2 + 4v^2 for
//! the quartic one), or p = -1 (mod N) with even m, the semiprimitive case,
//! where only the parity of m/2 matters. Everything here is plain integer
//! arithmetic; the enumeration modules never feed these functions anything,
//! which is exactly what makes the cross-checks in `sweep` meaningful.
//!
//! Two CWE builders live here. `cwe_from_periods` turns any rational period
//! vector into the enumerator of the code with defining set indexed by a
//! class subset. `cwe_closed_form` instead evaluates per-case formulas for
//! the multiset of period sums, written out independently, and covers
//! subsets of fewer than N classes.

use crate::cwe::Cwe;
use crate::cyclotomy::normalize_subset;
use crate::error::{Error, Result};
use crate::field::is_prime;

/// Which closed-form regime a (p, m, N) triple falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodCase {
    /// N = 3, p = 1 (mod 3): 4*r^(1/3) = s^2 + 27t^2.
    CubicDiophantine { s: i64, t: i64 },
    /// N = 3, p = 2 (mod 3), m even; branch on whether m/2 is even.
    CubicSemiprimitive { half_degree_even: bool },
    /// N = 4, p = 1 (mod 4): sqrt(r) = u^2 + 4v^2.
    QuarticDiophantine { u: i64, v: i64 },
    /// N = 4, p = 3 (mod 4), m even; branch on whether m/2 is even.
    QuarticSemiprimitive { half_degree_even: bool },
}

fn checked_size(p: u64, m: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    p.checked_pow(m).ok_or(Error::SizeCap {
        p,
        m,
        cap: u64::MAX,
    })
}

/// p^(m/d), asserting d | m.
fn root(p: u64, m: u32, d: u32) -> i64 {
    assert_eq!(m % d, 0, "degree {m} not divisible by {d}");
    p.pow(m / d) as i64
}

fn exact_div(num: i64, den: i64) -> i64 {
    assert_eq!(num % den, 0, "{num} not divisible by {den}");
    num / den
}

/// Solve 4c = s^2 + 27t^2 with c = r^(1/3), s = 1 (mod 3), gcd(s, p) = 1,
/// t > 0. Requires p = 1 (mod 3) and 3 | m; the solution is unique and its
/// uniqueness is asserted by exhausting the search space.
pub fn cubic_decomposition(p: u64, m: u32) -> Result<(i64, i64)> {
    let _ = checked_size(p, m)?;
    if p % 3 != 1 || !m.is_multiple_of(3) {
        return Err(Error::NoClosedForm(format!(
            "cubic decomposition needs p = 1 (mod 3) and 3 | m, got p = {p}, m = {m}"
        )));
    }
    let c = root(p, m, 3);
    let target = 4 * c;
    let mut found = None;
    let mut t = 1i64;
    while 27 * t * t <= target {
        let rest = target - 27 * t * t;
        let s = (rest as f64).sqrt().round() as i64;
        if s * s == rest && s % 3 != 0 && !s.unsigned_abs().is_multiple_of(p) {
            let s = if s.rem_euclid(3) == 1 { s } else { -s };
            assert!(
                found.is_none(),
                "cubic decomposition of {target} not unique"
            );
            found = Some((s, t));
        }
        t += 1;
    }
    let (s, t) = found.expect("cubic decomposition exists for p = 1 (mod 3)");
    assert_eq!(s * s + 27 * t * t, target);
    Ok((s, t))
}

/// Solve sqrt(r) = u^2 + 4v^2 with u = 1 (mod 4), gcd(u, p) = 1, v > 0.
/// Requires p = 1 (mod 4) and 4 | m. The gcd condition cuts the
/// representations of the non-prime sqrt(r) down to a single one.
pub fn quartic_decomposition(p: u64, m: u32) -> Result<(i64, i64)> {
    let _ = checked_size(p, m)?;
    if p % 4 != 1 || !m.is_multiple_of(4) {
        return Err(Error::NoClosedForm(format!(
            "quartic decomposition needs p = 1 (mod 4) and 4 | m, got p = {p}, m = {m}"
        )));
    }
    let target = root(p, m, 2);
    let mut found = None;
    let mut v = 1i64;
    while 4 * v * v < target {
        let rest = target - 4 * v * v;
        let u = (rest as f64).sqrt().round() as i64;
        if u * u == rest && !u.unsigned_abs().is_multiple_of(p) {
            let u = if u.rem_euclid(4) == 1 { u } else { -u };
            assert!(
                found.is_none(),
                "quartic decomposition of {target} not unique"
            );
            found = Some((u, v));
        }
        v += 1;
    }
    let (u, v) = found.expect("quartic decomposition exists for p = 1 (mod 4)");
    assert_eq!(u * u + 4 * v * v, target);
    Ok((u, v))
}

/// Decide which closed-form case applies, with the same domain checks the
/// exact path performs: the order divides r - 1, classes are non-degenerate,
/// and the periods are rational.
pub fn classify(p: u64, m: u32, order: u64) -> Result<PeriodCase> {
    let r = checked_size(p, m)?;
    if order < 2 || !(r - 1).is_multiple_of(order) {
        return Err(Error::BadOrder {
            order,
            size_minus_one: r - 1,
        });
    }
    if (r - 1) / order < 2 {
        return Err(Error::DegenerateClasses { order });
    }
    let quotient = (r - 1) / (p - 1);
    if !quotient.is_multiple_of(order) {
        return Err(Error::NotRational { order, quotient });
    }
    match (order, p % order) {
        (3, 1) => {
            let (s, t) = cubic_decomposition(p, m)?;
            Ok(PeriodCase::CubicDiophantine { s, t })
        }
        (3, 2) => Ok(PeriodCase::CubicSemiprimitive {
            half_degree_even: m.is_multiple_of(4),
        }),
        (4, 1) => {
            let (u, v) = quartic_decomposition(p, m)?;
            Ok(PeriodCase::QuarticDiophantine { u, v })
        }
        (4, 3) => Ok(PeriodCase::QuarticSemiprimitive {
            half_degree_even: m.is_multiple_of(4),
        }),
        _ => Err(Error::NoClosedForm(format!(
            "no closed form for order {order} with p = {p}"
        ))),
    }
}

/// Gaussian periods (eta_0, ..., eta_{N-1}) in closed form. The index
/// assignment follows the case formulas; compare with the exact path as a
/// multiset, since the formulas pin the special value's class only up to
/// relabeling of the non-principal classes.
pub fn periods_closed_form(p: u64, m: u32, order: u64) -> Result<Vec<i64>> {
    let case = classify(p, m, order)?;
    let eta = match case {
        PeriodCase::CubicDiophantine { s, t } => {
            let c = root(p, m, 3);
            vec![
                exact_div(s * c - 1, 3),
                -exact_div(2 + (s + 9 * t) * c, 6),
                -exact_div(2 + (s - 9 * t) * c, 6),
            ]
        }
        PeriodCase::CubicSemiprimitive { half_degree_even } => {
            let sq = root(p, m, 2);
            if half_degree_even {
                vec![
                    -exact_div(1 + 2 * sq, 3),
                    -exact_div(1 - sq, 3),
                    -exact_div(1 - sq, 3),
                ]
            } else {
                vec![
                    -exact_div(1 - 2 * sq, 3),
                    -exact_div(1 + sq, 3),
                    -exact_div(1 + sq, 3),
                ]
            }
        }
        PeriodCase::QuarticDiophantine { u, v } => {
            let sq = root(p, m, 2);
            let q = root(p, m, 4);
            vec![
                -exact_div(1 + sq + 2 * u * q, 4),
                -exact_div(1 - sq + 4 * v * q, 4),
                -exact_div(1 + sq - 2 * u * q, 4),
                -exact_div(1 - sq - 4 * v * q, 4),
            ]
        }
        PeriodCase::QuarticSemiprimitive { half_degree_even } => {
            let sq = root(p, m, 2);
            if half_degree_even {
                let e = -exact_div(1 - sq, 4);
                vec![-exact_div(1 + 3 * sq, 4), e, e, e]
            } else {
                let e = -exact_div(1 + sq, 4);
                vec![-exact_div(1 - 3 * sq, 4), e, e, e]
            }
        }
    };
    assert_eq!(eta.iter().sum::<i64>(), -1);
    Ok(eta)
}

/// Symbol composition of a codeword whose period sum is s: the zero symbol
/// appears (nl + (p-1)s)/p times and every nonzero symbol (nl - s)/p times.
fn composition(p: u64, nl: u64, s: i64) -> Vec<u64> {
    let p_i = p as i64;
    let nl_i = nl as i64;
    let zero = exact_div(nl_i + (p_i - 1) * s, p_i);
    let rest = exact_div(nl_i - s, p_i);
    assert!(zero >= 0 && rest >= 0, "negative symbol count");
    let mut comp = vec![rest as u64; p as usize];
    comp[0] = zero as u64;
    comp
}

/// Assemble a CWE from period-sum values: `s_values` pairs a sum with the
/// number of classes attaining it, and each class contributes n codewords.
fn assemble(p: u64, class_size: u64, nl: u64, order: u64, s_values: &[(i64, u64)]) -> Cwe {
    assert_eq!(s_values.iter().map(|&(_, c)| c).sum::<u64>(), order);
    let mut cwe = Cwe::new(nl, p);
    let mut zero_comp = vec![0u64; p as usize];
    zero_comp[0] = nl;
    cwe.add_term(zero_comp, 1);
    for &(s, count) in s_values {
        cwe.add_term(composition(p, nl, s), count * class_size);
    }
    cwe
}

/// CWE of the code defined by the classes in `subset`, evaluated directly
/// from a rational period vector: the codeword of any x in class k has
/// period sum S_k = sum over i in subset of eta_{k+i}. The x = 0 row
/// contributes the pure zero-symbol term, so multiplicities total r.
pub fn cwe_from_periods(p: u64, class_size: u64, eta: &[i64], subset: &[u64]) -> Result<Cwe> {
    let order = eta.len() as u64;
    let subset = normalize_subset(order, subset)?;
    let nl = class_size * subset.len() as u64;
    let s_values: Vec<(i64, u64)> = (0..order)
        .map(|k| {
            let s = subset
                .iter()
                .map(|&i| eta[((k + i) % order) as usize])
                .sum();
            (s, 1)
        })
        .collect();
    Ok(assemble(p, class_size, nl, order, &s_values))
}

/// CWE in closed form for a subset of fewer than N classes, from the
/// per-case period-sum formulas. Independent of `cwe_from_periods`: the sums
/// here are written out per branch rather than accumulated from a period
/// vector, except for single-class subsets where the period vector is the
/// stated formula.
pub fn cwe_closed_form(p: u64, m: u32, order: u64, subset: &[u64]) -> Result<Cwe> {
    let case = classify(p, m, order)?;
    let subset = normalize_subset(order, subset)?;
    let l = subset.len() as u64;
    if l >= order {
        return Err(Error::NoClosedForm(format!(
            "closed-form enumerators cover 1 <= #subset < {order}, got {l}"
        )));
    }
    let r = p.pow(m);
    let n = (r - 1) / order;
    let nl = n * l;
    let s_values: Vec<(i64, u64)> = match (order, l, case) {
        (_, 1, _) => periods_closed_form(p, m, order)?
            .into_iter()
            .map(|e| (e, 1))
            .collect(),
        (3, 2, PeriodCase::CubicDiophantine { s, t }) => {
            let c = root(p, m, 3);
            vec![
                (-exact_div(2 + s * c, 3), 1),
                (-exact_div(4 - (s + 9 * t) * c, 6), 1),
                (-exact_div(4 - (s - 9 * t) * c, 6), 1),
            ]
        }
        (3, 2, PeriodCase::CubicSemiprimitive { half_degree_even }) => {
            let sq = root(p, m, 2);
            if half_degree_even {
                vec![(-exact_div(2 + sq, 3), 2), (-2 * exact_div(1 - sq, 3), 1)]
            } else {
                vec![(-exact_div(2 - sq, 3), 2), (-2 * exact_div(1 + sq, 3), 1)]
            }
        }
        (4, 2, PeriodCase::QuarticDiophantine { u, v }) => {
            if (subset[1] - subset[0]) % 4 == 2 {
                let sq = root(p, m, 2);
                vec![(-exact_div(1 + sq, 2), 2), (-exact_div(1 - sq, 2), 2)]
            } else {
                let q = root(p, m, 4);
                let a = q * (u + 2 * v);
                let b = q * (u - 2 * v);
                vec![
                    (-exact_div(1 + a, 2), 1),
                    (-exact_div(1 - a, 2), 1),
                    (-exact_div(1 + b, 2), 1),
                    (-exact_div(1 - b, 2), 1),
                ]
            }
        }
        (4, 2, PeriodCase::QuarticSemiprimitive { .. }) => {
            let sq = root(p, m, 2);
            vec![(-exact_div(1 + sq, 2), 2), (-exact_div(1 - sq, 2), 2)]
        }
        (4, 3, PeriodCase::QuarticDiophantine { u, v }) => {
            let sq = root(p, m, 2);
            let q = root(p, m, 4);
            vec![
                (-exact_div(3 - sq - 2 * q * u, 4), 1),
                (-exact_div(3 - sq + 2 * q * u, 4), 1),
                (-exact_div(3 + sq - 4 * q * v, 4), 1),
                (-exact_div(3 + sq + 4 * q * v, 4), 1),
            ]
        }
        (4, 3, PeriodCase::QuarticSemiprimitive { half_degree_even }) => {
            let sq = root(p, m, 2);
            if half_degree_even {
                vec![(-exact_div(3 + sq, 4), 3), (-3 * exact_div(1 - sq, 4), 1)]
            } else {
                vec![(-exact_div(3 - sq, 4), 3), (-3 * exact_div(1 + sq, 4), 1)]
            }
        }
        _ => unreachable!("subset sizes 1..order with orders 3 and 4"),
    };
    Ok(assemble(p, n, nl, order, &s_values))
}
