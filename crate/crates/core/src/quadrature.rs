//! Quadrature over the complex plane against Gaussian weights.
//!
//! A [`PolarGrid`] integrates `∫ F(z) e^{-β|z|²} dxdy` in the variables
//! `t = |z|²` and `θ = arg z`: Gauss–Laguerre nodes in `t` (weight
//! `e^{-βt}`) and the periodic trapezoid rule in `θ`, with
//! `dxdy = ½ dt dθ`. It is exact for `F = z^a z̄^b` whenever
//! `|a - b| < N_θ` and `(a + b)/2 <= 2 N_r - 1`.
//!
//! A [`SingularGrid`] handles the Cauchy kernel `1/(z - ξ)` by centring polar
//! coordinates on `z`: with `ξ = z + ρ e^{iθ}` the Jacobian `ρ` cancels the
//! pole, leaving a smooth integrand on `[0, R] × [0, 2π)`.
//!
//! All sums run over radial nodes in ascending order with the angular sum
//! innermost, using compensated accumulation.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::summation::{ComplexKahanSum, DoubleDouble, KahanSum};

/// Largest supported Gauss–Laguerre rule.
pub const MAX_RADIAL_NODES: usize = 200;

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

/// Evaluate `(L_n(x), L_{n-1}(x))` scaled by `e^{-x/2}`.
fn scaled_laguerre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p1 = (-0.5 * x).exp();
    let mut p2 = 0.0;
    for j in 0..n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = ((2.0 * jf + 1.0 - x) * p2 - jf * p3) / (jf + 1.0);
    }
    (p1, p2)
}

/// Unscaled `(L_n(x), L_{n-1}(x))` in double-double arithmetic.
fn laguerre_pair_dd(n: usize, x: DoubleDouble) -> (DoubleDouble, DoubleDouble) {
    let mut p1 = DoubleDouble::ONE;
    let mut p2 = DoubleDouble::ZERO;
    for j in 0..n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        let a = DoubleDouble::from_f64(2.0 * jf + 1.0).sub(x);
        p1 = a.mul(p2).sub(p3.mul_f64(jf)).div_f64(jf + 1.0);
    }
    (p1, p2)
}

/// Refine a Laguerre root with double-double Newton steps; returns the root
/// and `L_{n-1}` there.
fn polish_laguerre_root(n: usize, x: f64) -> (DoubleDouble, DoubleDouble) {
    let nf = n as f64;
    let mut root = DoubleDouble::from_f64(x);
    for _ in 0..3 {
        let (p1, p2) = laguerre_pair_dd(n, root);
        let dp = p1.sub(p2).mul_f64(nf).div(root);
        root = root.sub(p1.div(dp));
    }
    let (_, lower) = laguerre_pair_dd(n, root);
    (root, lower)
}

/// Nodes and weights of the `n`-point Gauss–Laguerre rule for `e^{-x}` on
/// `[0, ∞)`, by Newton iteration from asymptotic initial guesses.
///
/// The Laguerre values are carried with a factor `e^{-x/2}` so the
/// recurrence cannot overflow at the large nodes of high-order rules. Nodes
/// whose weight underflows to zero are dropped.
pub fn gauss_laguerre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || n > MAX_RADIAL_NODES {
        return Err(Error::RadialNodeCount(n));
    }
    let nf = n as f64;
    let mut nodes: Vec<f64> = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut x = 0.0;
    for i in 0..n {
        x = match i {
            0 => 3.0 / (1.0 + 2.4 * nf),
            1 => x + 15.0 / (1.0 + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                x + (1.0 + 2.55 * ai) / (1.9 * ai) * (x - nodes[i - 2])
            }
        };
        for _ in 0..NEWTON_MAX_ITER {
            let (p1, p2) = scaled_laguerre_pair(n, x);
            let dp = nf * (p1 - p2) / x;
            let prev = x;
            x = prev - p1 / dp;
            if (x - prev).abs() <= NEWTON_TOL * x.abs() {
                break;
            }
        }
        let (root, lower) = polish_laguerre_root(n, x);
        let d = lower.mul_f64(nf).to_f64();
        nodes.push(root.to_f64());
        // w = x / (n L_{n-1}(x))², divided twice so the square cannot overflow
        weights.push(root.to_f64() / d / d);
    }
    let (nodes, weights) = nodes.into_iter().zip(weights).filter(|&(_, w)| w > 0.0).unzip();
    Ok((nodes, weights))
}

/// `(P_n(x), P_{n-1}(x))` by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p1 = 1.0;
    let mut p2 = 0.0;
    for j in 0..n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = ((2.0 * jf + 1.0) * x * p2 - jf * p3) / (jf + 1.0);
    }
    (p1, p2)
}

/// `n`-point Gauss–Legendre rule on `[a, b]`.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss–Legendre needs at least one node");
    let nf = n as f64;
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..NEWTON_MAX_ITER {
            let (p1, p2) = legendre_pair(n, x);
            let dp = nf * (x * p1 - p2) / (x * x - 1.0);
            let prev = x;
            x = prev - p1 / dp;
            if (x - prev).abs() <= 1e-15 {
                break;
            }
        }
        let (p1, p2) = legendre_pair(n, x);
        let one_minus_sq = (1.0 - x) * (1.0 + x);
        let dp = nf * (p2 - x * p1) / one_minus_sq;
        let w = 2.0 * half / (one_minus_sq * dp * dp);
        nodes[i] = mid - half * x;
        nodes[n - 1 - i] = mid + half * x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss–Laguerre rule for the weight `e^{-βt}` on `[0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialRule {
    beta: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl RadialRule {
    pub fn new(n: usize, beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidBeta(beta));
        }
        let (x, w) = gauss_laguerre(n)?;
        Ok(Self { beta, nodes: x.iter().map(|x| x / beta).collect(), weights: w.iter().map(|w| w / beta).collect() })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫₀^∞ h(t) e^{-βt} dt`.
    pub fn integrate<H: Fn(f64) -> f64>(&self, h: H) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * h(t)).collect::<KahanSum>().value()
    }
}

/// `∫₀^∞ h(t) e^{-βt} dt` on the radial part of `grid`.
pub fn integrate_radial_weighted<H: Fn(f64) -> f64>(h: H, grid: &PolarGrid) -> f64 {
    grid.radial.integrate(h)
}

/// Product rule on the plane for `∫ F(z) e^{-β|z|²} dxdy`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarGrid {
    radial: RadialRule,
    angular_count: usize,
    // e^{iθ_j}, shared by every radial node
    phases: Vec<Complex64>,
}

/// Values of a function at every node of a [`PolarGrid`], radial-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSamples(Vec<Complex64>);

impl GridSamples {
    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }
}

impl PolarGrid {
    pub fn new(n_r: usize, n_theta: usize, beta: f64) -> Result<Self> {
        if n_theta < 2 {
            return Err(Error::AngularNodeCount(n_theta));
        }
        let radial = RadialRule::new(n_r, beta)?;
        let phases = (0..n_theta).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n_theta as f64)).collect();
        Ok(Self { radial, angular_count: n_theta, phases })
    }

    pub fn beta(&self) -> f64 {
        self.radial.beta
    }

    pub fn radial(&self) -> &RadialRule {
        &self.radial
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }

    /// Number of radial nodes times number of angular nodes.
    pub fn len(&self) -> usize {
        self.radial.len() * self.angular_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid points in summation order.
    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.radial.nodes.iter().flat_map(move |&t| self.phases.iter().map(move |&e| e * t.sqrt()))
    }

    pub fn sample<F: Fn(Complex64) -> Complex64>(&self, f: F) -> GridSamples {
        GridSamples(self.points().map(f).collect())
    }

    /// Weighted sum of per-node values `v(i, j)` where `i` is the radial
    /// and `j` the angular index.
    fn weighted_sum<V: Fn(usize, usize) -> Complex64>(&self, v: V) -> Complex64 {
        let angular_weight = PI / self.angular_count as f64;
        let mut outer = ComplexKahanSum::new();
        for (i, &w) in self.radial.weights.iter().enumerate() {
            let mut inner = ComplexKahanSum::new();
            for j in 0..self.angular_count {
                inner.add(v(i, j));
            }
            outer.add(inner.value() * (w * angular_weight));
        }
        outer.value()
    }

    /// `∫ F(z) e^{-β|z|²} dxdy`.
    pub fn integrate<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Complex64 {
        let roots: Vec<f64> = self.radial.nodes.iter().map(|t| t.sqrt()).collect();
        self.weighted_sum(|i, j| f(self.phases[j] * roots[i]))
    }

    /// `∫ a(z) conj(b(z)) e^{-β|z|²} dxdy` from pre-sampled values.
    pub fn inner_product_samples(&self, a: &GridSamples, b: &GridSamples) -> Complex64 {
        assert_eq!(a.0.len(), self.len(), "sample count does not match grid");
        assert_eq!(b.0.len(), self.len(), "sample count does not match grid");
        let n = self.angular_count;
        self.weighted_sum(|i, j| a.0[i * n + j] * b.0[i * n + j].conj())
    }
}

/// `⟨f, g⟩ = ∫ f(z) conj(g(z)) e^{-β|z|²} dxdy` on `grid`; with `β = 1`
/// this is the scalar product of `L²(ℂ, e^{-|z|²} dxdy)`.
pub fn inner_product_gaussian<F, G>(f: F, g: G, grid: &PolarGrid) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
    G: Fn(Complex64) -> Complex64,
{
    grid.integrate(|z| f(z) * g(z).conj())
}

/// Polar rule centred on the evaluation point of a Cauchy integral.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularGrid {
    center: Complex64,
    radius: f64,
    radial_nodes: Vec<f64>,
    radial_weights: Vec<f64>,
    angular_count: usize,
}

impl SingularGrid {
    /// Gauss–Legendre in `ρ ∈ [0, |center| + radius_pad]`, `n_theta`
    /// uniform angles.
    pub fn new(center: Complex64, n_r: usize, n_theta: usize, radius_pad: f64) -> Result<Self> {
        if n_r == 0 || n_r > MAX_RADIAL_NODES {
            return Err(Error::RadialNodeCount(n_r));
        }
        if n_theta < 2 {
            return Err(Error::AngularNodeCount(n_theta));
        }
        if !(radius_pad >= 10.0 && radius_pad.is_finite()) {
            return Err(Error::RadiusPad(radius_pad));
        }
        if !(center.re.is_finite() && center.im.is_finite()) {
            return Err(Error::NonFinitePoint { re: center.re, im: center.im });
        }
        let radius = center.norm() + radius_pad;
        let (radial_nodes, radial_weights) = gauss_legendre(n_r, 0.0, radius);
        Ok(Self { center, radius, radial_nodes, radial_weights, angular_count: n_theta })
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn radial_count(&self) -> usize {
        self.radial_nodes.len()
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }
}

/// `(1/π) ∫ f(ξ) e^{-|ξ|²} / (z - ξ) dxdy`.
///
/// With `ξ = z + ρe^{iθ}` the integrand becomes
/// `-(1/π) f(ξ) e^{-|ξ|²} e^{-iθ}` in `dρ dθ`.
pub fn cauchy_singular_quadrature<F>(f: F, z: Complex64, grid: &SingularGrid) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    if grid.center != z {
        return Err(Error::CenterMismatch { grid_center: grid.center.to_string(), point: z.to_string() });
    }
    let n_theta = grid.angular_count;
    let phases: Vec<Complex64> =
        (0..n_theta).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n_theta as f64)).collect();
    let dtheta = 2.0 * PI / n_theta as f64;
    let mut outer = ComplexKahanSum::new();
    for (&rho, &w) in grid.radial_nodes.iter().zip(&grid.radial_weights) {
        let mut inner = ComplexKahanSum::new();
        for e in &phases {
            let xi = z + e * rho;
            inner.add(f(xi) * (-xi.norm_sqr()).exp() * e.conj());
        }
        outer.add(inner.value() * (w * dtheta));
    }
    Ok(-outer.value() / PI)
}

/// Grid parameters shared by the command line and the verification suites.
///
/// `nr`/`ntheta` size the Gaussian [`PolarGrid`]; the singular grid uses
/// `3/2 · nr` radial and `2 · ntheta` angular nodes.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GridOptions {
    pub nr: usize,
    pub ntheta: usize,
    pub radius_pad: f64,
}

impl Default for GridOptions {
    fn default() -> Self {
        Self { nr: 64, ntheta: 128, radius_pad: 12.0 }
    }
}

impl GridOptions {
    pub fn polar_grid(&self, beta: f64) -> Result<PolarGrid> {
        PolarGrid::new(self.nr, self.ntheta, beta)
    }

    pub fn singular_nr(&self) -> usize {
        self.nr * 3 / 2
    }

    pub fn singular_ntheta(&self) -> usize {
        self.ntheta * 2
    }

    pub fn singular_grid(&self, center: Complex64) -> Result<SingularGrid> {
        SingularGrid::new(center, self.singular_nr(), self.singular_ntheta(), self.radius_pad)
    }

    /// Check every parameter without building a grid.
    pub fn validate(&self) -> Result<()> {
        if self.nr == 0 || self.singular_nr() > MAX_RADIAL_NODES || self.singular_nr() == 0 {
            return Err(Error::RadialNodeCount(self.nr));
        }
        if self.ntheta < 2 {
            return Err(Error::AngularNodeCount(self.ntheta));
        }
        if !(self.radius_pad >= 10.0 && self.radius_pad.is_finite()) {
            return Err(Error::RadiusPad(self.radius_pad));
        }
        Ok(())
    }
}
