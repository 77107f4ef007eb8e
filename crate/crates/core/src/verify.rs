//! Verification suites: each check compares two independently computed
//! values and produces a [`VerificationRecord`].
//!
//! Records come out in a fixed order and every pseudo-random input is drawn
//! from a seeded generator, so reports are byte-identical across runs.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cauchy::{cauchy_hermite_closed, cauchy_transform_numeric};
use crate::error::Result;
use crate::ito_hermite::{
    c_mn, hermite_eval, hermite_eval_extended, hermite_magnitude_scale, HermiteIndex, HermiteTable,
};
use crate::poly_bergman::{
    kernel_closed, kernel_series, projection_coefficient_closed, projection_coefficient_flipped_sign, radial_j_closed,
    radial_j_quadrature, CoefficientSequence, KernelSpec, LevelBasis,
};
use crate::quadrature::GridOptions;
use crate::range_analysis::{
    e_ell_indices, pn_cauchy_on_coeffs, psi_gram, range_basis_indices, truncated_operator_svd_with, GramTolerances,
    RangeBasisSpec, RangeVariant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hermite,
    Cauchy,
    Projection,
    Gram,
    Ranges,
    All,
}

impl Suite {
    pub const SINGLE: [Suite; 5] = [Suite::Hermite, Suite::Cauchy, Suite::Projection, Suite::Gram, Suite::Ranges];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Hermite => "hermite",
            Suite::Cauchy => "cauchy",
            Suite::Projection => "projection",
            Suite::Gram => "gram",
            Suite::Ranges => "ranges",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "hermite" => Ok(Suite::Hermite),
            "cauchy" => Ok(Suite::Cauchy),
            "projection" => Ok(Suite::Projection),
            "gram" => Ok(Suite::Gram),
            "ranges" => Ok(Suite::Ranges),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Quadrature,
    PaperConstant,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Quadrature => "quadrature",
            Provenance::PaperConstant => "paper-constant",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// Outcome of one comparison; `pass` iff `abs_err <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub test_id: String,
    pub suite: String,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub abs_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub provenance: Provenance,
}

/// Base tolerances of the individual checks. Relative tolerances are scaled
/// by the magnitude stated at each check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub hermite: f64,
    pub cauchy: f64,
    pub cauchy_linearity: f64,
    pub projection: f64,
    pub radial_j: f64,
    pub kernel: f64,
    pub kernel_hermiticity: f64,
    pub gram_off_pattern: f64,
    pub gram_radial: f64,
    pub exact: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermite: 1e-11,
            cauchy: 1e-6,
            cauchy_linearity: 1e-10,
            projection: 1e-8,
            radial_j: 1e-9,
            kernel: 1e-8,
            kernel_hermiticity: 1e-13,
            gram_off_pattern: 1e-9,
            gram_radial: 1e-8,
            exact: 0.0,
        }
    }
}

impl Tolerances {
    /// Every base tolerance set to `tol`.
    pub fn uniform(tol: f64) -> Self {
        Self {
            hermite: tol,
            cauchy: tol,
            cauchy_linearity: tol,
            projection: tol,
            radial_j: tol,
            kernel: tol,
            kernel_hermiticity: tol,
            gram_off_pattern: tol,
            gram_radial: tol,
            exact: tol,
        }
    }
}

/// Configuration of a verification run; loadable from a flat JSON file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    pub nr: usize,
    pub ntheta: usize,
    pub radius_pad: f64,
    pub kernel_truncation: u32,
    pub tolerances: Tolerances,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        let g = GridOptions::default();
        Self {
            nr: g.nr,
            ntheta: g.ntheta,
            radius_pad: g.radius_pad,
            kernel_truncation: KernelSpec::DEFAULT_TRUNCATION,
            tolerances: Tolerances::default(),
        }
    }
}

impl VerifyConfig {
    pub fn grid_options(&self) -> GridOptions {
        GridOptions { nr: self.nr, ntheta: self.ntheta, radius_pad: self.radius_pad }
    }
}

struct Recorder {
    suite: &'static str,
    records: Vec<VerificationRecord>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Self { suite, records: Vec::new() }
    }

    fn push(
        &mut self,
        test_id: impl Into<String>,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
        provenance: Provenance,
    ) {
        let abs_err = (lhs - rhs).norm();
        self.records.push(VerificationRecord {
            test_id: test_id.into(),
            suite: self.suite.to_string(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_err,
            tolerance,
            pass: abs_err <= tolerance,
            provenance,
        });
    }

    fn push_real(&mut self, id: impl Into<String>, lhs: f64, rhs: f64, tol: f64, prov: Provenance) {
        self.push(id, re(lhs), re(rhs), tol, prov);
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Run `suite` and return its records in a fixed order.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    config.grid_options().validate()?;
    KernelSpec::new(0, config.kernel_truncation)?;
    match suite {
        Suite::Hermite => hermite_suite(config),
        Suite::Cauchy => cauchy_suite(config),
        Suite::Projection => projection_suite(config),
        Suite::Gram => gram_suite(config),
        Suite::Ranges => ranges_suite(config),
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::SINGLE {
                all.extend(run_suite(s, config)?);
            }
            Ok(all)
        }
    }
}

/// Deterministic points in the disc `|z| <= radius`.
pub fn sample_points(seed: u64, count: usize, radius: f64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            let theta = 2.0 * PI * rng.gen::<f64>();
            Complex64::from_polar(r, theta)
        })
        .collect()
}

fn hermite_suite(config: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    let tol = config.tolerances.hermite;
    let mut rec = Recorder::new("hermite");
    let e = std::f64::consts::E;

    rec.push("hermite-example-h11", hermite_eval(1, 1, Complex64::new(1.0, 1.0)), re(1.0), 0.0, Provenance::ClosedForm);
    rec.push("hermite-example-h21", hermite_eval(2, 1, re(2.0)), re(4.0), 0.0, Provenance::ClosedForm);
    rec.push_real("hermite-example-c21", c_mn(2, 1), -2.0, 0.0, Provenance::ClosedForm);
    rec.push(
        "hermite-example-ext-n0",
        hermite_eval_extended(0, re(1.0)),
        re(-(e - 1.0)),
        1e-14,
        Provenance::ClosedForm,
    );
    rec.push(
        "hermite-example-ext-n1",
        hermite_eval_extended(1, re(1.0)),
        re(-(e - 2.0)),
        1e-14,
        Provenance::ClosedForm,
    );
    rec.push("hermite-example-ext-origin", hermite_eval_extended(0, re(0.0)), re(0.0), 0.0, Provenance::ClosedForm);

    // conjugate symmetry H_{n,m} = conj(H_{m,n})
    let pts = sample_points(0x5eed_0001, 20, 3.0);
    for m in 0..=8u32 {
        for n in 0..=8u32 {
            for (p, &z) in pts.iter().enumerate() {
                let a = hermite_eval(n, m, z);
                let b = hermite_eval(m, n, z).conj();
                rec.push(
                    format!("hermite-conj-{m}-{n}-p{p}"),
                    a,
                    b,
                    tol * b.norm().max(f64::MIN_POSITIVE),
                    Provenance::ClosedForm,
                );
            }
        }
    }

    // hypergeometric form against the recurrence table, relative to the
    // modulus majorant of the monomial expansion
    let pts = sample_points(0x5eed_0002, 6, 4.0);
    for (p, &z) in pts.iter().enumerate() {
        let table = HermiteTable::new(10, 10, z);
        for m in 0..=10u32 {
            for n in 0..=10u32 {
                let scale = hermite_magnitude_scale(m, n, z);
                rec.push(
                    format!("hermite-recurrence-{m}-{n}-p{p}"),
                    hermite_eval(m, n, z),
                    table.get(m, n),
                    tol * scale,
                    Provenance::ClosedForm,
                );
            }
        }
    }

    // index shifts: raising in z and the Landau eigen-identity
    let pts = sample_points(0x5eed_0003, 4, 3.0);
    for (p, &z) in pts.iter().enumerate() {
        for m in 0..=8u32 {
            for n in 0..=8u32 {
                let lowered = if n > 0 { hermite_eval(m, n - 1, z) * n as f64 } else { re(0.0) };
                let rhs = z * hermite_eval(m, n, z) - lowered;
                let scale = hermite_magnitude_scale(m + 1, n, z);
                rec.push(
                    format!("hermite-shift-{m}-{n}-p{p}"),
                    hermite_eval(m + 1, n, z),
                    rhs,
                    tol * scale,
                    Provenance::ClosedForm,
                );

                let mixed = if m > 0 && n > 0 { hermite_eval(m - 1, n - 1, z) * (m * n) as f64 } else { re(0.0) };
                let drift = if n > 0 { z.conj() * hermite_eval(m, n - 1, z) * n as f64 } else { re(0.0) };
                let scale = n as f64 * hermite_magnitude_scale(m, n, z);
                rec.push(
                    format!("hermite-landau-{m}-{n}-p{p}"),
                    mixed - drift,
                    hermite_eval(m, n, z) * -(n as f64),
                    tol * scale,
                    Provenance::ClosedForm,
                );
            }
        }
    }

    // the extension against the Cauchy transform of H_{0,n}
    let opts = config.grid_options();
    for n in 0..=4u32 {
        for &r in &[0.5, 1.0, 2.0] {
            let z = Complex64::from_polar(r, 0.7);
            let closed = hermite_eval_extended(n, z) * -(-z.norm_sqr()).exp();
            let numeric = cauchy_transform_numeric(|x| hermite_eval(0, n, x), z, &opts)?;
            rec.push(
                format!("hermite-extension-n{n}-r{r}"),
                closed,
                numeric,
                1e-6 * closed.norm(),
                Provenance::Quadrature,
            );
        }
    }
    Ok(rec.records)
}

/// Sample points of the closed-versus-quadrature Cauchy comparison.
pub const CAUCHY_POINTS: [(f64, f64); 5] = [(0.5, 0.0), (1.0, 1.0), (-2.0, 0.0), (0.3, -1.7), (0.0, 3.0)];

fn cauchy_suite(config: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    let tol = config.tolerances.cauchy;
    let opts = config.grid_options();
    let mut rec = Recorder::new("cauchy");

    rec.push(
        "cauchy-example-h10-origin",
        cauchy_hermite_closed(1, 0, re(0.0)),
        re(-1.0),
        0.0,
        Provenance::PaperConstant,
    );
    let v = cauchy_transform_numeric(|_| re(1.0), re(2.0), &opts)?;
    rec.push("cauchy-example-const-z2", v, re((1.0 - (-4.0f64).exp()) / 2.0), tol, Provenance::Quadrature);

    for m in 0..=5u32 {
        for n in 0..=5u32 {
            for (p, &(x, y)) in CAUCHY_POINTS.iter().enumerate() {
                let z = Complex64::new(x, y);
                let closed = cauchy_hermite_closed(m, n, z);
                let numeric = cauchy_transform_numeric(|w| hermite_eval(m, n, w), z, &opts)?;
                rec.push(
                    format!("cauchy-closed-vs-numeric-{m}-{n}-p{p}"),
                    numeric,
                    closed,
                    tol * (1.0 + closed.norm()),
                    Provenance::Quadrature,
                );
            }
        }
    }

    // linearity on random combinations of low-degree Hermite polynomials
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let rand_c = |rng: &mut ChaCha8Rng| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    for case in 0..5 {
        let fc: Vec<Complex64> = (0..6).map(|_| rand_c(&mut rng)).collect();
        let gc: Vec<Complex64> = (0..6).map(|_| rand_c(&mut rng)).collect();
        let (a, b) = (rand_c(&mut rng), rand_c(&mut rng));
        let combo = |c: &[Complex64], z: Complex64| {
            c.iter()
                .enumerate()
                .map(|(i, &ci)| ci * hermite_eval(i as u32 % 3, i as u32 / 3 + i as u32 % 2, z))
                .sum::<Complex64>()
        };
        let z = Complex64::new(0.4 + 0.1 * case as f64, -0.3);
        let lhs = cauchy_transform_numeric(|w| a * combo(&fc, w) + b * combo(&gc, w), z, &opts)?;
        let rhs = a * cauchy_transform_numeric(|w| combo(&fc, w), z, &opts)?
            + b * cauchy_transform_numeric(|w| combo(&gc, w), z, &opts)?;
        rec.push(
            format!("cauchy-linearity-{case}"),
            lhs,
            rhs,
            config.tolerances.cauchy_linearity * rhs.norm(),
            Provenance::Quadrature,
        );
    }

    // membership: ‖ψ_{m,n}‖² against its radial integral
    let grid = opts.polar_grid(1.0)?;
    let indices: Vec<HermiteIndex> =
        (0..=4).flat_map(|m| (0..=4).map(move |n| HermiteIndex::classical(m, n))).collect();
    let gram = psi_gram(&indices, &grid, gram_tolerances(config))?;
    for (i, idx) in indices.iter().enumerate() {
        let radial = gram.radial_values[i][i].expect("diagonal entries are allowed");
        rec.push(
            format!("cauchy-membership-{}-{}", idx.m(), idx.n()),
            gram.values[i][i],
            re(radial),
            config.tolerances.gram_radial * radial.abs(),
            Provenance::Quadrature,
        );
    }
    Ok(rec.records)
}

fn gram_tolerances(config: &VerifyConfig) -> GramTolerances {
    GramTolerances { off_pattern: config.tolerances.gram_off_pattern, radial_relative: config.tolerances.gram_radial }
}

/// Kernel comparison points, `|z| <= 2`.
pub const KERNEL_POINTS: [(f64, f64); 5] = [(0.0, 0.0), (1.2, -0.5), (-0.7, 1.6), (2.0, 0.0), (-1.1, -1.3)];

fn projection_suite(config: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    let tol = config.tolerances.projection;
    let opts = config.grid_options();
    let grid = opts.polar_grid(1.0)?;
    let mut rec = Recorder::new("projection");

    // the sign of the closed coefficient at (n, j, k) = (0, 1, 0)
    let oracle = LevelBasis::new(&grid, 0, 2).project(|z| cauchy_hermite_closed(1, 0, z));
    let closed = projection_coefficient_closed(0, 1, 0).coefficient;
    rec.push("prop-sign-n0j1k0", re(closed), oracle.coeffs[0], tol, Provenance::Quadrature);
    let flipped = projection_coefficient_flipped_sign(0, 1, 0).coefficient;
    rec.push(
        "prop-flipped-sign-mismatch-n0j1k0",
        re((flipped - oracle.coeffs[0].re).abs()),
        re(1.0),
        tol,
        Provenance::PaperConstant,
    );

    for n in 0..=4u32 {
        let basis = LevelBasis::new(&grid, n, 8);
        for j in 0..=4u32 {
            for k in 0..=4u32 {
                let term = projection_coefficient_closed(n, j, k);
                let numeric = basis.project(|z| cauchy_hermite_closed(j, k, z));
                let target = term.target.map(|t| t.m() as usize);
                let on_target = target.map_or(re(0.0), |m| numeric.coeffs[m]);
                rec.push(
                    format!("prop-coeff-n{n}-j{j}-k{k}"),
                    re(term.coefficient),
                    on_target,
                    tol,
                    Provenance::Quadrature,
                );
                let off = numeric
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| Some(i) != target)
                    .map(|(_, c)| c.norm())
                    .fold(0.0, f64::max);
                rec.push_real(format!("prop-offtarget-n{n}-j{j}-k{k}"), off, 0.0, tol, Provenance::Quadrature);
            }
        }
    }

    for n in 0..=4u32 {
        for j in 0..=4u32 {
            for k in 0..=4u32 {
                let m = n as i64 + j as i64 - k as i64 - 1;
                if m < 0 {
                    continue;
                }
                let closed = radial_j_closed(m, n, j, k)?;
                let quad = radial_j_quadrature(m, n, j, k, opts.nr)?;
                rec.push_real(
                    format!("radial-j-{m}-{n}-{j}-{k}"),
                    closed,
                    quad,
                    config.tolerances.radial_j * closed.abs(),
                    Provenance::Quadrature,
                );
            }
        }
    }

    for n in 0..=4u32 {
        let spec = KernelSpec::new(n, config.kernel_truncation)?;
        for (a, &(zx, zy)) in KERNEL_POINTS.iter().enumerate() {
            for (b, &(wx, wy)) in KERNEL_POINTS.iter().enumerate() {
                let (z, w) = (Complex64::new(zx, zy), Complex64::new(wx, wy));
                let closed = kernel_closed(n, z, w);
                rec.push(
                    format!("kernel-series-n{n}-z{a}-w{b}"),
                    kernel_series(spec, z, w),
                    closed,
                    config.tolerances.kernel,
                    Provenance::ClosedForm,
                );
                rec.push(
                    format!("kernel-hermitian-n{n}-z{a}-w{b}"),
                    closed,
                    kernel_closed(n, w, z).conj(),
                    config.tolerances.kernel_hermiticity * (1.0 + closed.norm()),
                    Provenance::ClosedForm,
                );
            }
        }
    }

    // reproducing property and orthogonality between levels
    let bases: Vec<LevelBasis> = (0..=5).map(|n| LevelBasis::new(&grid, n, 7)).collect();
    for m in 0..=5u32 {
        for n in 0..=5u32 {
            let alpha = bases[n as usize].project(|z| hermite_eval(m, n, z));
            rec.push(format!("reproduce-{m}-{n}"), alpha.coeffs[m as usize], re(1.0), tol, Provenance::Quadrature);
            let off = alpha
                .coeffs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != m as usize)
                .map(|(_, c)| c.norm())
                .fold(0.0, f64::max);
            rec.push_real(format!("reproduce-offdiag-{m}-{n}"), off, 0.0, tol, Provenance::Quadrature);
        }
    }
    for m in 0..=5u32 {
        for k in 0..=4u32 {
            for n in 0..=4u32 {
                if k == n {
                    continue;
                }
                let alpha = bases[n as usize].project(|z| hermite_eval(m, k, z));
                let max = alpha.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
                rec.push_real(format!("level-orthogonality-{m}-{k}-to-{n}"), max, 0.0, tol, Provenance::Quadrature);
            }
        }
    }
    Ok(rec.records)
}

fn gram_suite(config: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    let grid = config.grid_options().polar_grid(1.0)?;
    let tols = gram_tolerances(config);
    let mut rec = Recorder::new("gram");

    let indices: Vec<HermiteIndex> =
        (0..=5).flat_map(|m| (0..=5).map(move |n| HermiteIndex::classical(m, n))).collect();
    let report = psi_gram(&indices, &grid, tols)?;
    rec.push_real("gram-selection-rule-max", report.max_violation, 0.0, tols.off_pattern, Provenance::Quadrature);
    for (a, ia) in indices.iter().enumerate() {
        for (b, ib) in indices.iter().enumerate() {
            if let Some(radial) = report.radial_values[a][b] {
                rec.push(
                    format!("gram-radial-{}-{}-{}-{}", ia.m(), ia.n(), ib.m(), ib.n()),
                    report.values[a][b],
                    re(radial),
                    tols.radial_relative * radial.abs(),
                    Provenance::Quadrature,
                );
            }
        }
    }
    let pos = |m, n| indices.iter().position(|&i| i == HermiteIndex::classical(m, n)).unwrap();
    let (p10, p20) = (pos(1, 0), pos(2, 0));
    rec.push(
        "gram-psi10-norm",
        report.values[p10][p10],
        re(PI / 3.0),
        tols.radial_relative * PI / 3.0,
        Provenance::ClosedForm,
    );
    rec.push(
        "gram-psi20-norm",
        report.values[p20][p20],
        re(PI / 9.0),
        tols.radial_relative * PI / 9.0,
        Provenance::ClosedForm,
    );

    for l1 in -2i64..=2 {
        for l2 in (l1 + 1)..=2 {
            let mut idx = e_ell_indices(l1, 4);
            idx.extend(e_ell_indices(l2, 4));
            let rep = psi_gram(&idx, &grid, tols)?;
            // entries across the two blocks
            let cross = (0..4)
                .flat_map(|a| (4..8).map(move |b| (a, b)))
                .map(|(a, b)| rep.values[a][b].norm().max(rep.values[b][a].norm()))
                .fold(0.0, f64::max);
            rec.push_real(format!("e-ell-orthogonal-{l1}-{l2}"), cross, 0.0, tols.off_pattern, Provenance::Quadrature);
        }
    }
    Ok(rec.records)
}

fn ranges_suite(config: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    let exact = config.tolerances.exact;
    let mut rec = Recorder::new("ranges");

    let rt = |ell, n| RangeBasisSpec { variant: RangeVariant::RTilde, ell, n };
    rec.push_real(
        "rtilde-dim-0-0",
        range_basis_indices(rt(0, 0), 64).len() as f64,
        0.0,
        exact,
        Provenance::PaperConstant,
    );
    for ell in 0..=10u32 {
        for n in 0..=10u32 {
            if ell + n == 0 || ell + n > 10 {
                continue;
            }
            let dim = range_basis_indices(rt(ell, n), 64).len();
            rec.push_real(
                format!("rtilde-dim-{ell}-{n}"),
                dim as f64,
                (ell + n) as f64,
                exact,
                Provenance::PaperConstant,
            );
        }
    }

    // support of P_n 𝒞 f inside the spanning set of R^ℓ_n
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for ell in 0..=4u32 {
        for n in 0..=4u32 {
            let mut outside = 0usize;
            for _ in 0..50 {
                let len = rng.gen_range(1..=8);
                let coeffs = (0..len)
                    .map(|_| {
                        if rng.gen_bool(0.25) {
                            Complex64::new(0.0, 0.0)
                        } else {
                            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                        }
                    })
                    .collect();
                let out = pn_cauchy_on_coeffs(&CoefficientSequence::new(ell, coeffs), n);
                let allowed = range_basis_indices(RangeBasisSpec { variant: RangeVariant::R, ell, n }, out.len() + 1);
                outside += out.support().iter().filter(|i| !allowed.contains(i)).count();
            }
            rec.push_real(format!("r-support-{ell}-{n}"), outside as f64, 0.0, exact, Provenance::ClosedForm);
        }
    }

    // coefficient route against quadrature of P_n applied to 𝒞f
    let grid = config.grid_options().polar_grid(1.0)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for ell in 0..=4u32 {
        let coeffs: Vec<Complex64> =
            (0..4).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let seq = CoefficientSequence::new(ell, coeffs.clone());
        for n in 0..=4u32 {
            let closed = pn_cauchy_on_coeffs(&seq, n);
            let basis = LevelBasis::new(&grid, n, 8);
            let numeric = basis.project(|z| {
                coeffs.iter().enumerate().map(|(j, &a)| a * cauchy_hermite_closed(j as u32, ell, z)).sum()
            });
            let err = (0..numeric.len()).map(|i| (closed.get(i) - numeric.coeffs[i]).norm()).fold(0.0, f64::max);
            rec.push_real(
                format!("r-routes-{ell}-{n}"),
                err,
                0.0,
                config.tolerances.projection,
                Provenance::Quadrature,
            );
        }
    }

    // singular values of finite truncations
    let opts = config.grid_options();
    let s1 = truncated_operator_svd_with(1, &opts)?;
    let nearest = s1.iter().copied().min_by(|a, b| (a - 0.5).abs().total_cmp(&(b - 0.5).abs())).unwrap_or(f64::NAN);
    rec.push_real("svd-d1-contains-half", nearest, 0.5, 1e-12f64.max(exact), Provenance::Quadrature);
    let mut prev: Option<Vec<f64>> = None;
    for d in 0..=8u32 {
        let s = truncated_operator_svd_with(d, &opts)?;
        let bad = s.iter().filter(|v| !v.is_finite()).count() + s.windows(2).filter(|w| w[1] > w[0]).count();
        rec.push_real(format!("svd-d{d}-finite-descending"), bad as f64, 0.0, exact, Provenance::Quadrature);
        if let Some(p) = prev {
            // compressions to nested subspaces: s_k can only grow with the degree
            let drop = p.iter().zip(&s).map(|(a, b)| (a - b).max(0.0)).fold(0.0, f64::max);
            rec.push_real(format!("svd-d{d}-interlacing"), drop, 0.0, 1e-12f64.max(exact), Provenance::Quadrature);
        }
        prev = Some(s);
    }
    Ok(rec.records)
}

/// One JSON object per line.
pub fn render_jsonl(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub const CSV_HEADER: &str = "test_id,suite,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,tolerance,pass,provenance";

pub fn render_csv(records: &[VerificationRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{:e},{:e},{:e},{:e},{:e},{:e},{},{}",
            r.test_id,
            r.suite,
            r.lhs.re,
            r.lhs.im,
            r.rhs.re,
            r.rhs.im,
            r.abs_err,
            r.tolerance,
            r.pass,
            r.provenance.as_str()
        );
    }
    out
}

/// Per-suite pass/fail counts as CSV.
pub fn render_summary(records: &[VerificationRecord]) -> String {
    let mut out = String::from("suite,records,passed,failed\n");
    let mut suites: Vec<&str> = Vec::new();
    for r in records {
        if !suites.contains(&r.suite.as_str()) {
            suites.push(&r.suite);
        }
    }
    for s in suites {
        let total = records.iter().filter(|r| r.suite == s).count();
        let passed = records.iter().filter(|r| r.suite == s && r.pass).count();
        let _ = writeln!(out, "{s},{total},{passed},{}", total - passed);
    }
    out
}
