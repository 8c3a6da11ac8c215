//! Character sums as an independent floating-point check.
//!
//! The canonical additive character is psi(x) = zeta_p^Tr(x) and the
//! multiplicative characters are chi^t(alpha^j) = zeta_{r-1}^{tj}. Both take
//! values among the L-th roots of unity for L = p(r-1), so a single
//! precomputed table serves every sum and keeps rounding error down to a
//! few ulps per term.
//!
//! Gaussian periods have the expansion
//!
//! ```text
//! eta_k = (1/N) * sum over i < N of conj(chi^(ni))(alpha^k) * G(chi^(ni))
//! ```
//!
//! with n = (r-1)/N, which reaches the same numbers as the pure counting in
//! `cyclotomy` through entirely different arithmetic. The checks here exist
//! to catch systematic table or indexing bugs, not to prove identities, so
//! they compare within [`GAUSS_TOLERANCE`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// Absolute tolerance for every floating-point comparison in this module.
pub const GAUSS_TOLERANCE: f64 = 1e-6;

/// Largest root-of-unity table this module will allocate.
const UNITY_CAP: u64 = 1 << 26;

pub struct CharacterSystem<'a> {
    ctx: &'a FieldContext,
    /// unity[k] = exp(2 pi i k / L), L = p(r-1).
    unity: Vec<Complex64>,
    /// Trace of alpha^j, indexed by exponent.
    trace_of_power: Vec<u32>,
}

impl<'a> CharacterSystem<'a> {
    pub fn new(ctx: &'a FieldContext) -> Result<Self> {
        let p = ctx.characteristic();
        let rm1 = ctx.size() - 1;
        let l = p * rm1;
        if l > UNITY_CAP {
            return Err(Error::SizeCap {
                p,
                m: ctx.degree(),
                cap: UNITY_CAP,
            });
        }
        let step = std::f64::consts::TAU / l as f64;
        let unity = (0..l)
            .map(|k| Complex64::from_polar(1.0, step * k as f64))
            .collect();
        let exp = ctx.exp_slice();
        let tr = ctx.trace_slice();
        let trace_of_power = exp.iter().map(|&idx| tr[idx as usize]).collect();
        Ok(CharacterSystem {
            ctx,
            unity,
            trace_of_power,
        })
    }

    /// psi(x) = zeta_p^Tr(x).
    pub fn additive(&self, x: FieldElement) -> Complex64 {
        let rm1 = self.ctx.size() - 1;
        self.unity[(self.ctx.trace(x) * rm1) as usize]
    }

    /// chi^t(alpha^j) = zeta_{r-1}^{tj}.
    pub fn multiplicative(&self, t: u64, j: u64) -> Complex64 {
        let rm1 = self.ctx.size() - 1;
        let p = self.ctx.characteristic();
        self.unity[((t % rm1) * (j % rm1) % rm1 * p) as usize]
    }

    /// G(chi^t) = sum over x != 0 of chi^t(x) psi(x). The trivial character
    /// gives exactly -1 up to rounding; nontrivial ones have modulus
    /// sqrt(r).
    pub fn gauss_sum(&self, t: u64) -> Complex64 {
        let rm1 = self.ctx.size() - 1;
        let p = self.ctx.characteristic();
        let t = t % rm1;
        let mut mult_idx = 0u64;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..rm1 {
            let psi = self.unity[(u64::from(self.trace_of_power[j as usize]) * rm1) as usize];
            acc += self.unity[(mult_idx * p) as usize] * psi;
            mult_idx += t;
            if mult_idx >= rm1 {
                mult_idx -= rm1;
            }
        }
        acc
    }

    /// Gaussian periods through the Gauss-sum expansion, index-faithful to
    /// the field's class labeling. Imaginary parts are not discarded;
    /// rational cases must come out real to within tolerance.
    pub fn periods_via_gauss_sums(&self, order: u64) -> Result<Vec<Complex64>> {
        let rm1 = self.ctx.size() - 1;
        if order < 2 || !rm1.is_multiple_of(order) {
            return Err(Error::BadOrder {
                order,
                size_minus_one: rm1,
            });
        }
        let n = rm1 / order;
        let sums: Vec<Complex64> = (0..order).map(|i| self.gauss_sum(n * i)).collect();
        let mut eta = Vec::with_capacity(order as usize);
        for k in 0..order {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, g) in sums.iter().enumerate() {
                acc += self.multiplicative(n * i as u64, k).conj() * g;
            }
            eta.push(acc / order as f64);
        }
        Ok(eta)
    }

    /// Direct coset sum for eta_k starting from the representative
    /// alpha^(k + order * shift).
    fn coset_sum(&self, order: u64, k: u64, shift: u64) -> Complex64 {
        let rm1 = self.ctx.size() - 1;
        let n = rm1 / order;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let j = (k + order * ((shift + i) % n)) % rm1;
            acc += self.unity[(u64::from(self.trace_of_power[j as usize]) * rm1) as usize];
        }
        acc
    }

    /// Largest deviation of eta_k across different coset representatives;
    /// the summands are identical up to rotation, so anything beyond
    /// accumulated rounding is an indexing bug.
    pub fn period_shift_deviation(&self, order: u64) -> Result<f64> {
        let rm1 = self.ctx.size() - 1;
        if order < 2 || !rm1.is_multiple_of(order) {
            return Err(Error::BadOrder {
                order,
                size_minus_one: rm1,
            });
        }
        let n = rm1 / order;
        let mut worst = 0.0f64;
        for k in 0..order {
            let base = self.coset_sum(order, k, 0);
            for shift in [1, n / 2, n - 1] {
                let dev = (self.coset_sum(order, k, shift) - base).norm();
                worst = worst.max(dev);
            }
        }
        Ok(worst)
    }

    /// Reconstruct psi on GF(r)* from all r - 1 Gauss sums,
    ///
    /// ```text
    /// psi(y) = (1/(r-1)) * sum over t of G(chi^t) conj(chi^t)(y),
    /// ```
    ///
    /// and return the largest pointwise error. Quadratic in r.
    pub fn fourier_reconstruction_error(&self) -> f64 {
        let rm1 = self.ctx.size() - 1;
        let p = self.ctx.characteristic();
        let sums: Vec<Complex64> = (0..rm1).map(|t| self.gauss_sum(t)).collect();
        let mut worst = 0.0f64;
        for a in 0..rm1 {
            let mut idx = 0u64;
            let mut acc = Complex64::new(0.0, 0.0);
            for g in &sums {
                acc += g * self.unity[(idx * p) as usize].conj();
                idx += a;
                if idx >= rm1 {
                    idx -= rm1;
                }
            }
            let psi = self.unity[(u64::from(self.trace_of_power[a as usize]) * rm1) as usize];
            worst = worst.max((acc / rm1 as f64 - psi).norm());
        }
        worst
    }
}
