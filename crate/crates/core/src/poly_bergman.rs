//! True poly-Bargmann spaces `𝒜²_n`: reproducing kernels, orthogonal
//! projections and the projection coefficients of the Cauchy images.
//!
//! Elements of `𝒜²_n` are represented by their coefficients in the basis
//! `H_{j,n}`, `j = 0, 1, ...`; `‖H_{j,n}‖² = π j! n!`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ito_hermite::{c_mn, extended_crossover, hermite_eval, kummer_one_series, HermiteIndex};
use crate::quadrature::{GridSamples, PolarGrid, RadialRule};
use crate::special_fn::{chu_vandermonde, factorial, gamma_ratio, gauss2f1_unit, kummer_terminating, laguerre};
use crate::summation::{ComplexKahanSum, KahanSum};

/// Finite expansion `f = Σ_j α_j H_{j,n}` in the Landau level `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSequence {
    pub level: u32,
    pub coeffs: Vec<Complex64>,
}

impl CoefficientSequence {
    pub fn new(level: u32, coeffs: Vec<Complex64>) -> Self {
        Self { level, coeffs }
    }

    pub fn zeros(level: u32, len: usize) -> Self {
        Self { level, coeffs: vec![Complex64::new(0.0, 0.0); len] }
    }

    /// Sequence with a single unit coefficient at `j`.
    pub fn unit(level: u32, j: usize) -> Self {
        let mut s = Self::zeros(level, j + 1);
        s.coeffs[j] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at `j`, zero beyond the stored range.
    pub fn get(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or_default()
    }

    /// `‖f‖² = Σ_j π j! n! |α_j|²`.
    pub fn norm_sqr(&self) -> f64 {
        let nf = factorial(self.level);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| PI * factorial(j as u32) * nf * a.norm_sqr())
            .collect::<KahanSum>()
            .value()
    }

    /// Basis indices `(j, n)` carrying a nonzero coefficient.
    pub fn support(&self) -> Vec<HermiteIndex> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm_sqr() != 0.0)
            .map(|(j, _)| HermiteIndex::classical(j as u32, self.level))
            .collect()
    }
}

/// `f(z) = Σ_j H_{j,n}(z) α_j`.
pub fn synthesize(seq: &CoefficientSequence, z: Complex64) -> Complex64 {
    seq.coeffs
        .iter()
        .enumerate()
        .map(|(j, &a)| hermite_eval(j as u32, seq.level, z) * a)
        .collect::<ComplexKahanSum>()
        .value()
}

/// Level and truncation of the kernel expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelSpec {
    pub n: u32,
    pub truncation: u32,
}

impl KernelSpec {
    pub const DEFAULT_TRUNCATION: u32 = 60;

    pub fn new(n: u32, truncation: u32) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::KernelTruncation);
        }
        Ok(Self { n, truncation })
    }
}

/// Reproducing kernel of `𝒜²_n` in closed form, `e^{z w̄} L_n(|z-w|²) / π`.
///
/// The exponent is `z w̄` because `H_{1,0} = z` here; it is the conjugate
/// of the form obtained with `H_{1,0} = z̄`.
pub fn kernel_closed(n: u32, z: Complex64, w: Complex64) -> Complex64 {
    (z * w.conj()).exp() * (laguerre(n, (z - w).norm_sqr()) / PI)
}

fn kernel_term(m: u32, n: u32, z: Complex64, w: Complex64) -> Complex64 {
    hermite_eval(m, n, z) * hermite_eval(n, m, w) / (PI * factorial(m) * factorial(n))
}

/// `Σ_{m=0}^{M} H_{m,n}(z) H_{n,m}(w) / (π m! n!)`.
pub fn kernel_series(spec: KernelSpec, z: Complex64, w: Complex64) -> Complex64 {
    kernel_series_with_tail(spec, z, w).0
}

/// Truncated kernel series together with an estimate of the neglected tail:
/// the summed moduli of the next twenty terms.
pub fn kernel_series_with_tail(spec: KernelSpec, z: Complex64, w: Complex64) -> (Complex64, f64) {
    let value = (0..=spec.truncation).map(|m| kernel_term(m, spec.n, z, w)).collect::<ComplexKahanSum>().value();
    let tail = (spec.truncation + 1..=spec.truncation + 20)
        .map(|m| kernel_term(m, spec.n, z, w).norm())
        .collect::<KahanSum>()
        .value();
    (value, tail)
}

/// Coefficients `α_j = ⟨f, H_{j,n}⟩ / (π j! n!)`, `j = 0..=jmax`, of the
/// orthogonal projection of `f` onto `𝒜²_n`, by quadrature on `grid`
/// (which should carry the Gaussian weight, `β = 1`).
pub fn project_numeric<F>(f: F, n: u32, jmax: u32, grid: &PolarGrid) -> CoefficientSequence
where
    F: Fn(Complex64) -> Complex64,
{
    LevelBasis::new(grid, n, jmax).project(f)
}

/// Samples of `H_{0,n}, ..., H_{jmax,n}` on a grid, reusable across projections
/// onto level `n`.
pub struct LevelBasis<'g> {
    grid: &'g PolarGrid,
    n: u32,
    samples: Vec<GridSamples>,
}

impl<'g> LevelBasis<'g> {
    pub fn new(grid: &'g PolarGrid, n: u32, jmax: u32) -> Self {
        let samples = (0..=jmax).map(|j| grid.sample(|z| hermite_eval(j, n, z))).collect();
        Self { grid, n, samples }
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn project<F: Fn(Complex64) -> Complex64>(&self, f: F) -> CoefficientSequence {
        let fs = self.grid.sample(f);
        let coeffs = self
            .samples
            .iter()
            .enumerate()
            .map(|(j, hs)| self.grid.inner_product_samples(&fs, hs) / (PI * factorial(j as u32) * factorial(self.n)))
            .collect();
        CoefficientSequence::new(self.n, coeffs)
    }
}

/// `P_n(𝒞H_{j,k}) = coefficient · H_{target}`; `target` is `None` when the
/// projection vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectionTerm {
    pub coefficient: f64,
    pub target: Option<HermiteIndex>,
}

fn target_level(n: u32, j: u32, k: u32) -> Option<u32> {
    let m = n as i64 + j as i64 - k as i64 - 1;
    (m >= 0).then_some(m as u32)
}

/// Closed form of `P_n(𝒞H_{j,k})`:
///
/// ```text
/// (-1)^{n+k+1} Γ(n+j) / (2^{n+j} n! Γ(n+j-k)) · H_{n+j-k-1, n}
/// ```
///
/// and zero when `n + j - k - 1 < 0`.
pub fn projection_coefficient_closed(n: u32, j: u32, k: u32) -> ProjectionTerm {
    projection_with_sign_exponent(n, j, k, n + k + 1)
}

/// The same magnitude with the sign `(-1)^{n+k}`. This sign disagrees with
/// direct quadrature (for `(n, j, k) = (0, 1, 0)` it gives `+1/2` against
/// `-1/2`); it is kept so the discrepancy can be reproduced.
pub fn projection_coefficient_flipped_sign(n: u32, j: u32, k: u32) -> ProjectionTerm {
    projection_with_sign_exponent(n, j, k, n + k)
}

fn projection_with_sign_exponent(n: u32, j: u32, k: u32, sign_exp: u32) -> ProjectionTerm {
    let Some(m) = target_level(n, j, k) else {
        return ProjectionTerm { coefficient: 0.0, target: None };
    };
    // m >= 0 forces n + j >= 1, so both Gamma arguments are positive
    let sign = if sign_exp % 2 == 0 { 1.0 } else { -1.0 };
    let coefficient = sign * gamma_ratio(n + j, n + j - k) / (2f64.powi((n + j) as i32) * factorial(n));
    ProjectionTerm { coefficient, target: Some(HermiteIndex::classical(m, n)) }
}

/// `c_{a,b}` allowing `a = -1`: `c_{-1,b} = -1/(b+1)`.
fn c_signed(a: i64, b: u32) -> f64 {
    if a < 0 {
        -1.0 / (b as f64 + 1.0)
    } else {
        c_mn(a as u32, b)
    }
}

fn check_j_indices(m: i64, n: u32, j: u32, k: u32) -> Result<u32> {
    match target_level(n, j, k) {
        Some(t) if t as i64 == m => Ok(t),
        _ => Err(Error::JIndexMismatch { m, n, j, k }),
    }
}

/// Radial integral `J_{m,n,j,k}` with `m = n + j - k - 1`, through the
/// product formula for two Kummer functions against `e^{-2t}` and the
/// Chu–Vandermonde value of `₂F₁(-p, -q; c; 1)`:
///
/// ```text
/// J = -c_{m,n} c_{j-1,k} / (m! n!) · Γ(c) / 2^{p+q+c} · ₂F₁(-p, -q; c; 1)
/// p = min(m, n), q = min(j-1, k), c = |j-k-1| + 1
/// ```
///
/// `q = -1` when `j = 0`; the identity still holds because the series
/// terminates through `p`.
pub fn radial_j_closed(m: i64, n: u32, j: u32, k: u32) -> Result<f64> {
    let m = check_j_indices(m, n, j, k)?;
    let p = m.min(n);
    let q = (j as i64 - 1).min(k as i64);
    let c = (j as i64 - k as i64 - 1).unsigned_abs() as u32 + 1;
    let gauss = if q >= 0 { gauss2f1_unit(p, q as u32, c as f64) } else { chu_vandermonde(p, 1.0, c as f64) };
    let prefactor = -c_mn(m, n) * c_signed(j as i64 - 1, k) / (factorial(m) * factorial(n));
    let two_power = 2f64.powi(p as i32 + q as i32 + c as i32);
    Ok(prefactor * factorial(c - 1) / two_power * gauss)
}

/// `J_{m,n,j,k}` by Gauss–Laguerre quadrature of
/// `-c_{m,n} c_{j-1,k} / (m! n!) ∫ t^{|j-k-1|} R(t) e^{-2t} dt`, `R` the
/// product of the two Kummer factors.
///
/// For `j >= 1` the integrand is polynomial and an `e^{-2t}` rule is exact.
/// For `j = 0` the second factor is `₁F₁(1; k+2; t) ~ e^t`; it is paired with
/// one power of `e^{-t}` and integrated on an `e^{-t}` rule.
pub fn radial_j_quadrature(m: i64, n: u32, j: u32, k: u32, n_r: usize) -> Result<f64> {
    let m = check_j_indices(m, n, j, k)?;
    let p = m.min(n);
    let c = (j as i64 - k as i64 - 1).unsigned_abs() as u32 + 1;
    let power = (c - 1) as i32;
    let prefactor = -c_mn(m, n) * c_signed(j as i64 - 1, k) / (factorial(m) * factorial(n));
    let integral = if j >= 1 {
        let q = (j - 1).min(k);
        let rule = RadialRule::new(n_r, 2.0)?;
        rule.integrate(|t| t.powi(power) * kummer_terminating(p, c, t) * kummer_terminating(q, c, t))
    } else {
        let rule = RadialRule::new(n_r, 1.0)?;
        rule.integrate(|t| t.powi(power) * kummer_terminating(p, c, t) * kummer_one_times_exp(k, t))
    };
    Ok(prefactor * integral)
}

/// `e^{-t} ₁F₁(1; k+2; t)`, bounded for all `t >= 0`.
fn kummer_one_times_exp(k: u32, t: f64) -> f64 {
    if t <= extended_crossover(k) {
        (-t).exp() * kummer_one_series(k, t)
    } else {
        let mut partial = KahanSum::new();
        let mut term = 1.0;
        for i in 0..=k {
            partial.add(term);
            term *= t / (i as f64 + 1.0);
        }
        let lower = 1.0 - (-t).exp() * partial.value();
        factorial(k + 1) * lower / t.powi(k as i32 + 1)
    }
}
