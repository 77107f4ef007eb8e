//! Structure of the range of `P_n 𝒞`: spanning index sets, the coefficient
//! map `𝒜²_ℓ → 𝒜²_n`, the Gram matrix of the Cauchy images `ψ_{m,n}` with
//! its angular selection rule, the `E_ℓ` index families, and finite
//! truncations of `𝒞` for singular-value evidence.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cauchy::cauchy_hermite_closed;
use crate::error::{Error, Result};
use crate::ito_hermite::{c_mn, hermite_eval, HermiteIndex};
use crate::poly_bergman::{projection_coefficient_closed, CoefficientSequence};
use crate::quadrature::{gauss_legendre, GridOptions, PolarGrid};
use crate::special_fn::{factorial, kummer_terminating};
use crate::summation::KahanSum;
use crate::svd::{singular_values, DenseMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RangeVariant {
    /// `R^ℓ_n = P_n 𝒞(𝒜²_ℓ)`.
    R,
    /// `R̃^ℓ_n = P_n 𝒞(span{H_{ℓ,k}: k >= 0})`.
    RTilde,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeBasisSpec {
    pub variant: RangeVariant,
    pub ell: u32,
    pub n: u32,
}

/// Spanning indices of `R^ℓ_n` (first `count`) or of `R̃^ℓ_n` (all of them).
pub fn range_basis_indices(spec: RangeBasisSpec, count: usize) -> Vec<HermiteIndex> {
    let RangeBasisSpec { variant, ell, n } = spec;
    match variant {
        RangeVariant::R => {
            let first_j = (ell as i64 + 1 - n as i64).max(0);
            (0..count as i64)
                .map(|i| {
                    let j = first_j + i;
                    HermiteIndex::classical((n as i64 + j - ell as i64 - 1) as u32, n)
                })
                .collect()
        }
        RangeVariant::RTilde => (0..n + ell).map(|k| HermiteIndex::classical(k, n)).collect(),
    }
}

/// Spanning indices whose first entry is below `window`.
///
/// For `R` this truncates an infinite set; for `R̃` it is the whole set when
/// `window >= n + ℓ`.
pub fn range_window(spec: RangeBasisSpec, window: u32) -> Vec<HermiteIndex> {
    let all = match spec.variant {
        RangeVariant::R => range_basis_indices(spec, window as usize),
        RangeVariant::RTilde => range_basis_indices(spec, 0),
    };
    all.into_iter().filter(|idx| idx.m() < window as i32).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetRelation {
    Equal,
    StrictSubset,
    StrictSuperset,
    Incomparable,
}

/// Inclusion relation of two index sets.
pub fn index_set_relation(a: &[HermiteIndex], b: &[HermiteIndex]) -> SetRelation {
    let a_in_b = a.iter().all(|x| b.contains(x));
    let b_in_a = b.iter().all(|x| a.contains(x));
    match (a_in_b, b_in_a) {
        (true, true) => SetRelation::Equal,
        (true, false) => SetRelation::StrictSubset,
        (false, true) => SetRelation::StrictSuperset,
        (false, false) => SetRelation::Incomparable,
    }
}

/// Coefficients of `P_n 𝒞 f` for `f = Σ_j α_j H_{j,ℓ} ∈ 𝒜²_ℓ`.
pub fn pn_cauchy_on_coeffs(seq: &CoefficientSequence, n: u32) -> CoefficientSequence {
    let terms: Vec<(u32, Complex64)> = seq
        .coeffs
        .iter()
        .enumerate()
        .filter_map(|(j, &a)| {
            let term = projection_coefficient_closed(n, j as u32, seq.level);
            term.target.map(|t| (t.m() as u32, a * term.coefficient))
        })
        .collect();
    collect_terms(n, terms)
}

/// Coefficients of `P_n 𝒞 f` for `f = Σ_k β_k H_{ℓ,k}`.
pub fn pn_cauchy_on_tilde_coeffs(ell: u32, betas: &[Complex64], n: u32) -> CoefficientSequence {
    let terms: Vec<(u32, Complex64)> = betas
        .iter()
        .enumerate()
        .filter_map(|(k, &b)| {
            let term = projection_coefficient_closed(n, ell, k as u32);
            term.target.map(|t| (t.m() as u32, b * term.coefficient))
        })
        .collect();
    collect_terms(n, terms)
}

fn collect_terms(n: u32, terms: Vec<(u32, Complex64)>) -> CoefficientSequence {
    let len = terms.iter().map(|&(m, _)| m as usize + 1).max().unwrap_or(0);
    let mut out = CoefficientSequence::zeros(n, len);
    for (m, v) in terms {
        out.coeffs[m as usize] += v;
    }
    out
}

/// `ψ`-indices spanning `E_ℓ`: `(i, i+ℓ)` for `ℓ >= 0`, `(i+|ℓ|, i)` for
/// `ℓ < 0`, `i = 0..count`.
pub fn e_ell_indices(ell: i64, count: usize) -> Vec<HermiteIndex> {
    let shift = ell.unsigned_abs() as u32;
    (0..count as u32)
        .map(|i| if ell >= 0 { HermiteIndex::classical(i, i + shift) } else { HermiteIndex::classical(i + shift, i) })
        .collect()
}

/// Tolerances used by [`psi_gram`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GramTolerances {
    /// Bound on entries that the selection rule forces to zero.
    pub off_pattern: f64,
    /// Relative bound on the deviation of allowed entries from their radial
    /// one-dimensional integrals.
    pub radial_relative: f64,
}

impl Default for GramTolerances {
    fn default() -> Self {
        Self { off_pattern: 1e-9, radial_relative: 1e-8 }
    }
}

/// Gram matrix `⟨ψ_a, ψ_b⟩` with its expected zero pattern.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramReport {
    pub indices: Vec<HermiteIndex>,
    pub values: Vec<Vec<Complex64>>,
    /// `true` where `m - j != n - k`.
    pub expected_zero_mask: Vec<Vec<bool>>,
    /// Radial integral for each allowed entry, `None` on masked entries.
    pub radial_values: Vec<Vec<Option<f64>>>,
    pub max_violation: f64,
    pub max_radial_deviation: f64,
    pub tolerances: GramTolerances,
    pub pass: bool,
    pub radial_pass: bool,
}

impl GramReport {
    /// `((m,n),(j,k))` for every matrix entry, row-major.
    pub fn index_pairs(&self) -> Vec<(HermiteIndex, HermiteIndex)> {
        self.indices.iter().flat_map(|&a| self.indices.iter().map(move |&b| (a, b))).collect()
    }
}

fn selection_rule_allows(a: HermiteIndex, b: HermiteIndex) -> bool {
    a.m() as i64 - b.m() as i64 == a.n() as i64 - b.n() as i64
}

/// `⟨ψ_a, ψ_b⟩` for allowed pairs as a one-dimensional integral in `t`.
///
/// With `ψ(r e^{iθ}) = ρ(r²) e^{idθ}` and equal modes `d`, the scalar
/// product is `π ∫ ρ_a ρ_b e^{-t} dt`. When both first indices are
/// positive, `ρ_a ρ_b e^{-t} = c c t^{|d|} R(t) e^{-3t}` with `R` a product
/// of terminating Kummer sums, integrated exactly by an `e^{-3t}` rule.
/// Otherwise the extended factor is present and the integral is taken by
/// composite Gauss–Legendre on `[0, 60]` in unit panels.
pub fn psi_gram_radial(a: HermiteIndex, b: HermiteIndex, rule3: &PolarGrid) -> f64 {
    let (m, n) = a.as_classical().expect("ψ indices are nonnegative");
    let (j, k) = b.as_classical().expect("ψ indices are nonnegative");
    if m >= 1 && j >= 1 {
        let (m1, j1) = (m - 1, j - 1);
        let d = (m1 as i64 - n as i64).unsigned_abs() as u32;
        let pre = PI * c_mn(m1, n) * c_mn(j1, k);
        let (p, q) = (m1.min(n), j1.min(k));
        pre * rule3
            .radial()
            .integrate(|t| t.powi(d as i32) * kummer_terminating(p, d + 1, t) * kummer_terminating(q, d + 1, t))
    } else {
        let profile = |m: u32, n: u32, t: f64| cauchy_hermite_closed(m, n, Complex64::new(t.sqrt(), 0.0)).re;
        let mut acc = KahanSum::new();
        for panel in 0..60 {
            let (x, w) = gauss_legendre(24, panel as f64, panel as f64 + 1.0);
            for (&t, &wt) in x.iter().zip(&w) {
                acc.add(wt * profile(m, n, t) * profile(j, k, t) * (-t).exp());
            }
        }
        PI * acc.value()
    }
}

/// Gram matrix of `ψ_{m,n} = 𝒞H_{m,n}` over `indices`.
///
/// Pairs with both first indices positive are integrated as
/// `∫ H_{m-1,n} conj(H_{j-1,k}) e^{-3|z|²}` on an `e^{-3t}` grid of the same
/// size as `grid`; pairs involving an extended factor use the full
/// integrand on `grid` itself (Gaussian weight).
pub fn psi_gram(indices: &[HermiteIndex], grid: &PolarGrid, tol: GramTolerances) -> Result<GramReport> {
    if grid.beta() != 1.0 {
        return Err(Error::InvalidBeta(grid.beta()));
    }
    let classical: Vec<(u32, u32)> = indices
        .iter()
        .map(|idx| idx.as_classical().ok_or(Error::HermiteIndex { m: idx.m() as i64, n: idx.n() as i64 }))
        .collect::<Result<_>>()?;
    let grid3 = PolarGrid::new(grid.radial().len(), grid.angular_count(), 3.0)?;
    let full: Vec<_> = classical.iter().map(|&(m, n)| grid.sample(|z| cauchy_hermite_closed(m, n, z))).collect();
    let factors: Vec<_> =
        classical.iter().map(|&(m, n)| (m >= 1).then(|| grid3.sample(|z| hermite_eval(m - 1, n, z)))).collect();

    let size = indices.len();
    let mut values = vec![vec![Complex64::new(0.0, 0.0); size]; size];
    let mut mask = vec![vec![false; size]; size];
    let mut radial_values = vec![vec![None; size]; size];
    let mut max_violation: f64 = 0.0;
    let mut max_radial_deviation: f64 = 0.0;
    for a in 0..size {
        for b in 0..size {
            let v = match (&factors[a], &factors[b]) {
                (Some(fa), Some(fb)) => grid3.inner_product_samples(fa, fb),
                _ => grid.inner_product_samples(&full[a], &full[b]),
            };
            values[a][b] = v;
            if selection_rule_allows(indices[a], indices[b]) {
                let r = psi_gram_radial(indices[a], indices[b], &grid3);
                let dev = (v - r).norm();
                let rel = if r != 0.0 { dev / r.abs() } else { dev };
                max_radial_deviation = max_radial_deviation.max(rel);
                radial_values[a][b] = Some(r);
            } else {
                mask[a][b] = true;
                max_violation = max_violation.max(v.norm());
            }
        }
    }
    Ok(GramReport {
        indices: indices.to_vec(),
        values,
        expected_zero_mask: mask,
        radial_values,
        max_violation,
        max_radial_deviation,
        tolerances: tol,
        pass: max_violation < tol.off_pattern,
        radial_pass: max_radial_deviation < tol.radial_relative,
    })
}

/// Largest supported truncation degree.
pub const MAX_TRUNCATION_DEGREE: u32 = 12;

/// Indices `(j, k)` with `j + k <= degree`, by total degree then `j`.
pub fn total_degree_indices(degree: u32) -> Vec<HermiteIndex> {
    (0..=degree).flat_map(|d| (0..=d).map(move |j| HermiteIndex::classical(j, d - j))).collect()
}

/// Matrix of `𝒞` compressed to `span{H_{j,k}: j + k <= degree}` in the
/// orthonormal basis `H_{j,k} / √(π j! k!)`:
/// entries `⟨𝒞H_{j,k}, H_{m,n}⟩ / (π √(m! n! j! k!))`, rows `(m,n)`,
/// columns `(j,k)`.
pub fn truncated_operator_matrix(degree: u32, grid: &PolarGrid) -> Result<DenseMatrix> {
    if degree > MAX_TRUNCATION_DEGREE {
        return Err(Error::DegreeTooLarge(degree));
    }
    if grid.beta() != 1.0 {
        return Err(Error::InvalidBeta(grid.beta()));
    }
    let basis = total_degree_indices(degree);
    let hs: Vec<_> = basis.iter().map(|idx| grid.sample(|z| hermite_eval(idx.m() as u32, idx.n(), z))).collect();
    let psis: Vec<_> =
        basis.iter().map(|idx| grid.sample(|z| cauchy_hermite_closed(idx.m() as u32, idx.n(), z))).collect();
    let norm = |idx: &HermiteIndex| (factorial(idx.m() as u32) * factorial(idx.n())).sqrt();
    let mut a = DenseMatrix::zeros(basis.len(), basis.len());
    for (r, row_idx) in basis.iter().enumerate() {
        for (c, col_idx) in basis.iter().enumerate() {
            // modes differ unless m - n = j - 1 - k; the entry is then exactly zero
            if row_idx.m() - row_idx.n() as i32 != col_idx.m() - 1 - col_idx.n() as i32 {
                continue;
            }
            let v = grid.inner_product_samples(&psis[c], &hs[r]);
            a.set(r, c, v.re / (PI * norm(row_idx) * norm(col_idx)));
        }
    }
    Ok(a)
}

/// Singular values, descending, of [`truncated_operator_matrix`] on the
/// default Gaussian grid.
pub fn truncated_operator_svd(degree: u32) -> Result<Vec<f64>> {
    truncated_operator_svd_with(degree, &GridOptions::default())
}

pub fn truncated_operator_svd_with(degree: u32, opts: &GridOptions) -> Result<Vec<f64>> {
    if degree > MAX_TRUNCATION_DEGREE {
        return Err(Error::DegreeTooLarge(degree));
    }
    let grid = opts.polar_grid(1.0)?;
    Ok(singular_values(&truncated_operator_matrix(degree, &grid)?))
}
