//! Itô–Hermite polynomials `H_{m,n}(z, z̄)` and their `m = -1` extension.
//!
//! Convention: the power of `z` in the leading monomial is `m`, so
//! `H_{1,0} = z` and `H_{0,1} = z̄`. This is the convention of the
//! hypergeometric representation
//!
//! ```text
//! H_{m,n} = c_{m,n} z^m z̄^n / |z|^{2 min(m,n)} ₁F₁(-min(m,n); |m-n|+1; |z|²)
//! c_{m,n} = (-1)^{min(m,n)} max(m,n)! / |m-n|!
//! ```
//!
//! With it `conj(H_{m,n}) = H_{n,m}`, `∂_z̄ H_{m,n} = n H_{m,n-1}` and
//! `‖H_{m,n}‖² = π m! n!` in `L²(e^{-|z|²} dxdy)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special_fn::{factorial, gamma_ratio, kummer_terminating};
use crate::summation::KahanSum;

/// A finite point of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Self { re, im })
        } else {
            Err(Error::NonFinitePoint { re, im })
        }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.to_complex()
    }
}

/// Index pair `(m, n)` with `m >= -1`, `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HermiteIndex {
    m: i32,
    n: u32,
}

impl HermiteIndex {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m < -1 || n < 0 || m > i32::MAX as i64 || n > u32::MAX as i64 {
            return Err(Error::HermiteIndex { m, n });
        }
        Ok(Self { m: m as i32, n: n as u32 })
    }

    /// Index with both entries nonnegative.
    pub const fn classical(m: u32, n: u32) -> Self {
        Self { m: m as i32, n }
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_extended(&self) -> bool {
        self.m < 0
    }

    /// `(m, n)` as unsigned values when `m >= 0`.
    pub fn as_classical(&self) -> Option<(u32, u32)> {
        (self.m >= 0).then_some((self.m as u32, self.n))
    }
}

impl std::fmt::Display for HermiteIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// `c_{m,n} = (-1)^{min(m,n)} max(m,n)! / |m-n|!`.
pub fn c_mn(m: u32, n: u32) -> f64 {
    let lo = m.min(n);
    let hi = m.max(n);
    let sign = if lo % 2 == 0 { 1.0 } else { -1.0 };
    sign * gamma_ratio(hi + 1, hi - lo + 1)
}

/// `H_{m,n}(z, z̄)` through the two-branch hypergeometric form.
pub fn hermite_eval(m: u32, n: u32, z: Complex64) -> Complex64 {
    let t = z.norm_sqr();
    let c = c_mn(m, n);
    if m >= n {
        z.powu(m - n) * (c * kummer_terminating(n, m - n + 1, t))
    } else {
        z.conj().powu(n - m) * (c * kummer_terminating(m, n - m + 1, t))
    }
}

/// Evaluate any index in the supported range, dispatching to the extended
/// function for `m = -1`.
pub fn hermite_eval_index(idx: HermiteIndex, z: Complex64) -> Complex64 {
    match idx.as_classical() {
        Some((m, n)) => hermite_eval(m, n, z),
        None => hermite_eval_extended(idx.n(), z),
    }
}

/// Below this value of `|z|²` the extended function is summed as a power
/// series; above it the closed form with `e^t` is used.
pub fn extended_crossover(n: u32) -> f64 {
    (n as f64 + 1.0).max(0.25)
}

/// `₁F₁(1; n+2; t) = Σ_k t^k / (n+2)_k`, a series of positive terms.
///
/// Truncated once a term falls below `1e-17` of the running sum.
pub fn kummer_one_series(n: u32, t: f64) -> f64 {
    let b = n as f64 + 2.0;
    let mut acc = KahanSum::new();
    let mut term = 1.0;
    let mut k = 0.0;
    loop {
        acc.add(term);
        term *= t / (b + k);
        k += 1.0;
        if term <= 1e-17 * acc.value() {
            break;
        }
    }
    acc.value()
}

/// Truncated exponential series `e_n(t) = Σ_{k=0}^{n} t^k / k!`.
fn exp_partial(n: u32, t: f64) -> f64 {
    let mut acc = KahanSum::new();
    let mut term = 1.0;
    for k in 0..=n {
        acc.add(term);
        term *= t / (k as f64 + 1.0);
    }
    acc.value()
}

/// Extended function `H_{-1,n}(z, z̄) = -(n!/(n+1)!) z̄^{n+1} ₁F₁(1; n+2; |z|²)`.
///
/// Removable singularity at the origin: `H_{-1,n}(0) = 0`. The value grows
/// like `e^{|z|²}` and overflows beyond `|z|² ≈ 709`; use
/// [`extended_times_gaussian`] when the Gaussian factor is wanted.
pub fn hermite_eval_extended(n: u32, z: Complex64) -> Complex64 {
    let t = z.norm_sqr();
    if t == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let zb = z.conj().powu(n + 1);
    if t <= extended_crossover(n) {
        zb * (-kummer_one_series(n, t) / (n as f64 + 1.0))
    } else {
        let tail = t.exp() - exp_partial(n, t);
        zb * (-factorial(n) * tail / t.powi(n as i32 + 1))
    }
}

/// `e^{-|z|²} H_{-1,n}(z, z̄)` without forming `e^{|z|²}`.
pub fn extended_times_gaussian(n: u32, z: Complex64) -> Complex64 {
    let t = z.norm_sqr();
    if t == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let zb = z.conj().powu(n + 1);
    if t <= extended_crossover(n) {
        zb * (-(-t).exp() * kummer_one_series(n, t) / (n as f64 + 1.0))
    } else {
        // 1 - e^{-t} e_n(t) is the regularized lower incomplete gamma P(n+1, t)
        let lower = 1.0 - (-t).exp() * exp_partial(n, t);
        zb * (-factorial(n) * lower / t.powi(n as i32 + 1))
    }
}

/// Table of `H_{i,j}(z)` for `0 <= i <= max_m`, `0 <= j <= max_n`, built by
/// the index-raising recurrences.
#[derive(Debug, Clone)]
pub struct HermiteTable {
    max_m: u32,
    max_n: u32,
    values: Vec<Complex64>,
}

impl HermiteTable {
    /// Seeds `H_{0,0} = 1`, fills the first row with
    /// `H_{0,j+1} = z̄ H_{0,j} - 0·H_{-1,j}` and then every column with
    /// `H_{i+1,j} = z H_{i,j} - j H_{i,j-1}`.
    pub fn new(max_m: u32, max_n: u32, z: Complex64) -> Self {
        let cols = max_n as usize + 1;
        let mut values = vec![Complex64::new(0.0, 0.0); (max_m as usize + 1) * cols];
        values[0] = Complex64::new(1.0, 0.0);
        let zb = z.conj();
        for j in 0..max_n as usize {
            values[j + 1] = zb * values[j];
        }
        for i in 0..max_m as usize {
            for j in 0..cols {
                let lowered = if j > 0 { values[i * cols + j - 1] * j as f64 } else { Complex64::new(0.0, 0.0) };
                values[(i + 1) * cols + j] = z * values[i * cols + j] - lowered;
            }
        }
        Self { max_m, max_n, values }
    }

    pub fn get(&self, m: u32, n: u32) -> Complex64 {
        assert!(m <= self.max_m && n <= self.max_n, "index ({m},{n}) outside table");
        self.values[m as usize * (self.max_n as usize + 1) + n as usize]
    }

    pub fn max_m(&self) -> u32 {
        self.max_m
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }
}

/// `H_{m,n}(z)` from the recurrences only; independent of [`hermite_eval`].
pub fn hermite_recurrence_eval(m: u32, n: u32, z: Complex64) -> Complex64 {
    HermiteTable::new(m, n, z).get(m, n)
}

/// Absolute-value majorant of `H_{m,n}(z)`: the monomial expansion of
/// `H_{m,n}` evaluated with every coefficient replaced by its modulus.
///
/// Used as the scale for relative comparisons near zeros of `H_{m,n}`.
pub fn hermite_magnitude_scale(m: u32, n: u32, z: Complex64) -> f64 {
    let r = z.norm();
    let lo = m.min(n);
    let d = (m.max(n) - lo) as i32;
    let t = r * r;
    let mut acc = KahanSum::new();
    let mut term = 1.0;
    for k in 0..=lo {
        acc.add(term);
        term *= (lo - k) as f64 * t / ((d as f64 + 1.0 + k as f64) * (k as f64 + 1.0));
    }
    c_mn(m, n).abs() * r.powi(d) * acc.value()
}
