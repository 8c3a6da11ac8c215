//! GF(p^m) construction with precomputed log, antilog, and trace tables.
//!
//! Elements are stored as indices in [0, r) where r = p^m: the base-p digits
//! of an index are the coordinates of the element in the polynomial basis
//! {1, X, ..., X^(m-1)} modulo a fixed irreducible polynomial. Construction
//! is fully deterministic: the modulus is the lexicographically smallest
//! monic irreducible of degree m (constant coefficient compared first) and
//! the generator alpha is the element of smallest index with multiplicative
//! order r - 1. Rebuilding a field for the same (p, m) therefore always
//! yields identical tables, which keeps every downstream enumeration
//! reproducible.

use crate::error::{Error, Result};

/// Default ceiling on the number of field elements.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 22;

/// Absolute ceiling; table indices are u32 and table memory is 12 bytes per
/// element, so anything past this is unusable on a desk machine anyway.
const HARD_SIZE_CAP: u64 = 1 << 28;

/// A field element, identified by its index in [0, r).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u64 {
        u64::from(self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Validated field shape: a prime characteristic, an extension degree, and
/// their power r = p^m kept under a configurable cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldParams {
    pub characteristic: u64,
    pub degree: u32,
    pub size: u64,
}

impl FieldParams {
    pub fn new(characteristic: u64, degree: u32) -> Result<Self> {
        Self::with_cap(characteristic, degree, DEFAULT_SIZE_CAP)
    }

    pub fn with_cap(characteristic: u64, degree: u32, cap: u64) -> Result<Self> {
        if !is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let cap = cap.min(HARD_SIZE_CAP);
        let over = || Error::SizeCap {
            p: characteristic,
            m: degree,
            cap,
        };
        let size = characteristic.checked_pow(degree).ok_or_else(over)?;
        if size > cap {
            return Err(over());
        }
        Ok(FieldParams {
            characteristic,
            degree,
            size,
        })
    }
}

/// Deterministic primality check by trial division; fine for the sizes the
/// cap admits.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of n, ascending.
fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A polynomial over GF(p), coefficients constant-first with no trailing
/// zeros (the zero polynomial is the empty vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<u64>,
}

impl Polynomial {
    fn from_vec(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Coefficients, constant term first, including the leading coefficient.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

// --- dense polynomial arithmetic over GF(p), constant-first vectors ---

fn poly_normalize(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            // ai*bj < 2^56 for p under the hard cap; the running sum is
            // reduced every step so nothing overflows.
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_normalize(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial f.
fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*f.last().expect("monic divisor"), 1);
    let mut rem = a.to_vec();
    while rem.len() >= f.len() && !rem.is_empty() {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - f.len();
        if lead != 0 {
            for (i, &fi) in f[..f.len() - 1].iter().enumerate() {
                let sub = (fi * lead) % p;
                let cur = rem[shift + i];
                rem[shift + i] = (cur + p - sub) % p;
            }
        }
        rem.pop();
        poly_normalize(&mut rem);
    }
    rem
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

fn poly_powmod(a: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut base = poly_rem(a, f, p);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, f, p);
        }
        base = poly_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

/// Does f (monic, degree m over GF(p)) have a monic divisor of degree in
/// [1, m/2]? Trial division over every candidate; the search spaces here are
/// tiny because m/2 stays small for any size under the cap.
fn has_small_divisor(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        for key in 0..count {
            let mut k = key;
            for gi in g[..d].iter_mut() {
                *gi = k % p;
                k /= p;
            }
            if poly_rem(f, &g, p).is_empty() {
                return true;
            }
        }
    }
    false
}

/// The smallest monic irreducible polynomial of degree m over GF(p), where
/// candidates X^m + c_{m-1}X^{m-1} + ... + c_0 are ordered by the value
/// c_0 + c_1*p + ... + c_{m-1}*p^{m-1}. First hits look like X^6 + X + 1
/// rather than X^6 + X^5 + 1.
pub fn find_irreducible(p: u64, m: u32) -> Result<Polynomial> {
    let params = FieldParams::new(p, m)?;
    let m = m as usize;
    for key in 0..params.size {
        let mut coeffs = vec![0u64; m + 1];
        coeffs[m] = 1;
        let mut k = key;
        for c in coeffs[..m].iter_mut() {
            *c = k % p;
            k /= p;
        }
        if !has_small_divisor(&coeffs, p) {
            return Ok(Polynomial::from_vec(coeffs));
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

/// A fully built field: modulus, generator, and the three lookup tables that
/// every enumeration in this crate runs on. Immutable after construction and
/// safe to share across threads.
pub struct FieldContext {
    params: FieldParams,
    modulus: Polynomial,
    alpha: FieldElement,
    /// log_table[x] = j with alpha^j = x for x != 0; u32::MAX at index 0.
    log_table: Vec<u32>,
    /// exp_table[j] = index of alpha^j, j in [0, r-1).
    exp_table: Vec<u32>,
    /// trace_table[x] = Tr(x) in [0, p).
    trace_table: Vec<u32>,
}

impl FieldContext {
    pub fn build(p: u64, m: u32) -> Result<Self> {
        Self::build_from_params(FieldParams::new(p, m)?)
    }

    pub fn build_with_cap(p: u64, m: u32, cap: u64) -> Result<Self> {
        Self::build_from_params(FieldParams::with_cap(p, m, cap)?)
    }

    fn build_from_params(params: FieldParams) -> Result<Self> {
        let (p, m, r) = (params.characteristic, params.degree, params.size);
        let modulus = find_irreducible(p, m)?;
        let f = modulus.coeffs();

        let index_to_poly = |idx: u64| -> Vec<u64> {
            let mut v = Vec::with_capacity(m as usize);
            let mut k = idx;
            for _ in 0..m {
                v.push(k % p);
                k /= p;
            }
            poly_normalize(&mut v);
            v
        };
        let poly_to_index = |poly: &[u64]| -> u64 {
            let mut idx = 0u64;
            for &c in poly.iter().rev() {
                idx = idx * p + c;
            }
            idx
        };

        // Generator: smallest index whose order is exactly r - 1, verified
        // with power tests against every prime factor of r - 1.
        let factors = distinct_prime_factors(r - 1);
        let mut alpha_idx = None;
        'search: for idx in 1..r {
            let a = index_to_poly(idx);
            for &q in &factors {
                let pw = poly_powmod(&a, (r - 1) / q, f, p);
                if pw == [1] {
                    continue 'search;
                }
            }
            if poly_powmod(&a, r - 1, f, p) != [1] {
                return Err(Error::Inconsistency(format!(
                    "candidate generator {idx} does not satisfy x^(r-1) = 1"
                )));
            }
            alpha_idx = Some(idx);
            break;
        }
        let alpha_idx =
            alpha_idx.ok_or_else(|| Error::Inconsistency("no generator found".into()))?;
        let alpha_poly = index_to_poly(alpha_idx);

        // Walk the powers of alpha once to fill both direction tables.
        let mut log_table = vec![u32::MAX; r as usize];
        let mut exp_table = vec![0u32; (r - 1) as usize];
        let mut cur = vec![1u64];
        for j in 0..(r - 1) {
            let idx = poly_to_index(&cur);
            exp_table[j as usize] = idx as u32;
            log_table[idx as usize] = j as u32;
            cur = poly_mulmod(&cur, &alpha_poly, f, p);
        }
        if cur != [1] {
            return Err(Error::Inconsistency(
                "generator walk did not close after r - 1 steps".into(),
            ));
        }
        if log_table[1..].contains(&u32::MAX) {
            return Err(Error::Inconsistency(
                "generator walk missed a nonzero element".into(),
            ));
        }

        // Tr(x) = sum of the Frobenius orbit of x is GF(p)-linear, so one
        // trace per basis monomial determines the whole table.
        let mut basis_traces = Vec::with_capacity(m as usize);
        for i in 0..m {
            let mut monomial = vec![0u64; i as usize + 1];
            monomial[i as usize] = 1;
            let mut orbit = poly_rem(&monomial, f, p);
            let mut sum = vec![0u64; m as usize];
            for _ in 0..m {
                for (s, &c) in sum.iter_mut().zip(orbit.iter()) {
                    *s = (*s + c) % p;
                }
                orbit = poly_powmod(&orbit, p, f, p);
            }
            poly_normalize(&mut sum);
            if sum.len() > 1 {
                return Err(Error::Inconsistency(format!(
                    "trace of basis monomial X^{i} is not in the prime field"
                )));
            }
            basis_traces.push(sum.first().copied().unwrap_or(0));
        }
        let mut trace_table = vec![0u32; r as usize];
        for (idx, slot) in trace_table.iter_mut().enumerate() {
            let mut k = idx as u64;
            let mut acc = 0u64;
            for &t in &basis_traces {
                acc += (k % p) * t;
                k /= p;
            }
            *slot = (acc % p) as u32;
        }

        // The trace map must hit every value in GF(p) exactly r/p times.
        let mut hits = vec![0u64; p as usize];
        for &t in &trace_table {
            hits[t as usize] += 1;
        }
        if hits.iter().any(|&h| h != r / p) {
            return Err(Error::Inconsistency(
                "trace table is not balanced over GF(p)".into(),
            ));
        }

        Ok(FieldContext {
            params,
            modulus,
            alpha: FieldElement(alpha_idx as u32),
            log_table,
            exp_table,
            trace_table,
        })
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn characteristic(&self) -> u64 {
        self.params.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.params.degree
    }

    /// Number of field elements r = p^m.
    pub fn size(&self) -> u64 {
        self.params.size
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    /// The element with the given index; panics if idx >= r.
    pub fn element(&self, idx: u64) -> FieldElement {
        assert!(idx < self.size(), "element index {idx} out of range");
        FieldElement(idx as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.characteristic();
        let (mut x, mut y) = (a.index(), b.index());
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.degree() {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.characteristic();
        let mut x = a.index();
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.degree() {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Product via the log/antilog tables.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let rm1 = self.size() - 1;
        let j = (u64::from(self.log_table[a.0 as usize]) + u64::from(self.log_table[b.0 as usize]))
            % rm1;
        FieldElement(self.exp_table[j as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::LogOfZero);
        }
        let rm1 = self.size() - 1;
        let j = (rm1 - u64::from(self.log_table[a.0 as usize])) % rm1;
        Ok(FieldElement(self.exp_table[j as usize]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        let rm1 = self.size() - 1;
        let j = (u64::from(self.log_table[a.0 as usize]) * (e % rm1)) % rm1;
        FieldElement(self.exp_table[j as usize])
    }

    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.characteristic())
    }

    /// Absolute trace down to GF(p), as an integer in [0, p).
    pub fn trace(&self, a: FieldElement) -> u64 {
        u64::from(self.trace_table[a.0 as usize])
    }

    /// Exponent j with alpha^j = a.
    pub fn discrete_log(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::LogOfZero);
        }
        Ok(u64::from(self.log_table[a.0 as usize]))
    }

    /// alpha^j for j taken modulo r - 1.
    pub fn power_of_alpha(&self, j: u64) -> FieldElement {
        let rm1 = self.size() - 1;
        FieldElement(self.exp_table[(j % rm1) as usize])
    }

    pub(crate) fn exp_slice(&self) -> &[u32] {
        &self.exp_table
    }

    pub(crate) fn trace_slice(&self) -> &[u32] {
        &self.trace_table
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn gf64() -> &'static FieldContext {
        static CTX: OnceLock<FieldContext> = OnceLock::new();
        CTX.get_or_init(|| FieldContext::build(2, 6).unwrap())
    }

    fn gf81() -> &'static FieldContext {
        static CTX: OnceLock<FieldContext> = OnceLock::new();
        CTX.get_or_init(|| FieldContext::build(3, 4).unwrap())
    }

    /// Independent irreducibility oracle: f of degree m factors iff it is
    /// the product of two monic polynomials of degree in [1, m-1]. Checks by
    /// brute-force multiplication instead of trial division.
    fn oracle_is_irreducible(f: &[u64], p: u64) -> bool {
        let m = f.len() - 1;
        for dg in 1..m {
            let dh = m - dg;
            for gkey in 0..p.pow(dg as u32) {
                let mut g = vec![0u64; dg + 1];
                g[dg] = 1;
                let mut k = gkey;
                for gi in g[..dg].iter_mut() {
                    *gi = k % p;
                    k /= p;
                }
                for hkey in 0..p.pow(dh as u32) {
                    let mut h = vec![0u64; dh + 1];
                    h[dh] = 1;
                    let mut k = hkey;
                    for hi in h[..dh].iter_mut() {
                        *hi = k % p;
                        k /= p;
                    }
                    if poly_mul(&g, &h, p) == f {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Oracle for the minimum: walk candidates in the same value order and
    /// pick the first polynomial the product oracle accepts.
    fn oracle_smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
        for key in 0..p.pow(m as u32) {
            let mut coeffs = vec![0u64; m + 1];
            coeffs[m] = 1;
            let mut k = key;
            for c in coeffs[..m].iter_mut() {
                *c = k % p;
                k /= p;
            }
            if oracle_is_irreducible(&coeffs, p) {
                return coeffs;
            }
        }
        unreachable!()
    }

    #[test]
    fn irreducible_matches_product_oracle() {
        for (p, max_m) in [(2u64, 6usize), (3, 4), (5, 3), (7, 2)] {
            for m in 1..=max_m {
                let found = find_irreducible(p, m as u32).unwrap();
                assert_eq!(
                    found.coeffs(),
                    oracle_smallest_irreducible(p, m),
                    "p = {p}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn irreducible_gf2_degree6() {
        // x^6 + x + 1
        let f = find_irreducible(2, 6).unwrap();
        assert_eq!(f.coeffs(), &[1, 1, 0, 0, 0, 0, 1]);
        assert_eq!(f.to_string(), "x^6 + x + 1");
    }

    #[test]
    fn irreducible_gf3_degree4() {
        // x^4 + x + 2, confirmed by the product oracle above.
        let f = find_irreducible(3, 4).unwrap();
        assert_eq!(f.coeffs(), &[2, 1, 0, 0, 1]);
    }

    #[test]
    fn irreducible_degree_one_is_x() {
        assert_eq!(find_irreducible(2, 1).unwrap().coeffs(), &[0, 1]);
        assert_eq!(find_irreducible(7, 1).unwrap().coeffs(), &[0, 1]);
    }

    #[test]
    fn alpha_is_smallest_primitive_root_mod_7() {
        // Orders mod 7: 2 has order 3, 3 is the first with order 6.
        let ctx = FieldContext::build(7, 1).unwrap();
        assert_eq!(ctx.alpha().index(), 3);
    }

    #[test]
    fn alpha_degenerate_binary_field() {
        let ctx = FieldContext::build(2, 1).unwrap();
        assert_eq!(ctx.alpha().index(), 1);
        assert_eq!(ctx.discrete_log(FieldElement::ONE).unwrap(), 0);
    }

    #[test]
    fn log_exp_tables_are_inverse_bijections() {
        for ctx in [gf64(), gf81()] {
            let r = ctx.size();
            let mut seen = vec![false; r as usize];
            for j in 0..r - 1 {
                let x = ctx.power_of_alpha(j);
                assert!(!seen[x.0 as usize]);
                seen[x.0 as usize] = true;
                assert_eq!(ctx.discrete_log(x).unwrap(), j);
            }
            assert!(!seen[0]);
        }
    }

    #[test]
    fn alpha_power_matches_repeated_multiplication() {
        let ctx = gf81();
        let mut cur = FieldElement::ONE;
        for j in 0..ctx.size() - 1 {
            assert_eq!(ctx.power_of_alpha(j), cur);
            cur = ctx.mul(cur, ctx.alpha());
        }
        assert_eq!(cur, FieldElement::ONE);
    }

    #[test]
    fn multiplicative_identities() {
        let ctx = gf64();
        for idx in 0..ctx.size() {
            let x = ctx.element(idx);
            assert_eq!(ctx.mul(x, FieldElement::ONE), x);
            assert_eq!(ctx.mul(x, FieldElement::ZERO), FieldElement::ZERO);
            if !x.is_zero() {
                let y = ctx.inv(x).unwrap();
                assert_eq!(ctx.mul(x, y), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn addition_is_componentwise_mod_p() {
        let ctx = gf81();
        let a = ctx.element(5); // digits (2, 1)
        let b = ctx.element(7); // digits (1, 2)
        assert_eq!(ctx.add(a, b).index(), 0);
        let c = ctx.element(1);
        assert_eq!(ctx.add(c, c).index(), 2);
        assert_eq!(ctx.add(ctx.add(c, c), c).index(), 0);
        for idx in 0..ctx.size() {
            let x = ctx.element(idx);
            assert_eq!(ctx.add(x, ctx.neg(x)), FieldElement::ZERO);
            assert_eq!(ctx.sub(x, x), FieldElement::ZERO);
        }
    }

    #[test]
    fn trace_is_linear_and_balanced() {
        for ctx in [gf64(), gf81()] {
            let p = ctx.characteristic();
            let r = ctx.size();
            // Exhaustive linearity over all pairs for these small fields.
            for a in 0..r {
                let x = ctx.element(a);
                for b in 0..r {
                    let y = ctx.element(b);
                    assert_eq!(ctx.trace(ctx.add(x, y)), (ctx.trace(x) + ctx.trace(y)) % p);
                }
            }
            let mut hits = vec![0u64; p as usize];
            for idx in 0..r {
                hits[ctx.trace(ctx.element(idx)) as usize] += 1;
            }
            assert!(hits.iter().all(|&h| h == r / p));
        }
    }

    #[test]
    fn trace_is_frobenius_invariant() {
        let ctx = gf81();
        for idx in 0..ctx.size() {
            let x = ctx.element(idx);
            assert_eq!(ctx.trace(ctx.frobenius(x)), ctx.trace(x));
        }
    }

    #[test]
    fn trace_of_one_is_degree_mod_p() {
        assert_eq!(gf64().trace(FieldElement::ONE), 0); // 6 mod 2
        assert_eq!(gf81().trace(FieldElement::ONE), 1); // 4 mod 3
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldContext::build(6, 2), Err(Error::NotPrime(6))));
        assert!(matches!(FieldContext::build(2, 0), Err(Error::ZeroDegree)));
        assert!(matches!(
            FieldParams::new(2, 23),
            Err(Error::SizeCap { .. })
        ));
        assert!(matches!(
            FieldParams::with_cap(2, 10, 1 << 9),
            Err(Error::SizeCap { .. })
        ));
        assert!(FieldParams::with_cap(2, 10, 1 << 10).is_ok());
    }

    #[test]
    fn log_of_zero_is_an_error() {
        assert!(matches!(
            gf64().discrete_log(FieldElement::ZERO),
            Err(Error::LogOfZero)
        ));
        assert!(matches!(
            gf64().inv(FieldElement::ZERO),
            Err(Error::LogOfZero)
        ));
    }

    proptest! {
        #[test]
        fn discrete_log_is_a_homomorphism(a in 1u64..64, b in 1u64..64) {
            let ctx = gf64();
            let (x, y) = (ctx.element(a), ctx.element(b));
            let lhs = ctx.discrete_log(ctx.mul(x, y)).unwrap();
            let rhs = (ctx.discrete_log(x).unwrap() + ctx.discrete_log(y).unwrap()) % 63;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pow_matches_iterated_multiplication(a in 0u64..81, e in 0u64..200) {
            let ctx = gf81();
            let x = ctx.element(a);
            let mut acc = FieldElement::ONE;
            for _ in 0..e {
                acc = ctx.mul(acc, x);
            }
            prop_assert_eq!(ctx.pow(x, e), acc);
        }
    }
}
