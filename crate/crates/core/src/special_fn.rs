//! Terminating hypergeometric sums, Laguerre polynomials and factorial ratios.
//!
//! Every value here is a finite sum or a finite product. Series are summed
//! in ascending order of the summation index with double-double
//! accumulation, so results are bit-reproducible.

use crate::summation::DoubleDouble;

const FACTORIALS: [f64; 21] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
];

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// `n!`, exact up to `20!`.
pub fn factorial(n: u32) -> f64 {
    match FACTORIALS.get(n as usize) {
        Some(&f) => f,
        None => ln_gamma(n as f64 + 1.0).exp(),
    }
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// `Γ(a) / Γ(b)` for positive integers, by cancelling the shorter product.
///
/// Exact in double precision for `a, b <= 21`.
pub fn gamma_ratio(a: u32, b: u32) -> f64 {
    assert!(a >= 1 && b >= 1, "gamma_ratio needs positive arguments, got ({a}, {b})");
    if a >= b {
        (b..a).fold(1.0, |acc, i| acc * i as f64)
    } else {
        1.0 / (a..b).fold(1.0, |acc, i| acc * i as f64)
    }
}

/// Laguerre polynomial `L_n(t)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1-t) L_k - k L_{k-1}`.
pub fn laguerre(n: u32, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let tt = DoubleDouble::from_f64(t);
    let mut prev = DoubleDouble::ONE;
    let mut cur = DoubleDouble::ONE.sub(tt);
    for k in 1..n {
        let kf = k as f64;
        let next = cur.mul_f64(2.0 * kf + 1.0).sub(cur.mul(tt)).sub(prev.mul_f64(kf)).div_f64(kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur.to_f64()
}

/// Parameters of a terminating Kummer series `₁F₁(-p; b; t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TerminatingSeriesSpec {
    pub p: u32,
    pub b: u32,
    pub t: f64,
}

impl TerminatingSeriesSpec {
    pub fn new(p: u32, b: u32, t: f64) -> Option<Self> {
        (b >= 1 && t >= 0.0 && t.is_finite()).then_some(Self { p, b, t })
    }

    /// Number of terms in the sum.
    pub fn term_count(&self) -> usize {
        self.p as usize + 1
    }

    pub fn evaluate(&self) -> f64 {
        kummer_terminating(self.p, self.b, self.t)
    }
}

/// `₁F₁(-p; b; t) = Σ_{k=0}^{p} (-p)_k / (b)_k · t^k / k!`.
pub fn kummer_terminating(p: u32, b: u32, t: f64) -> f64 {
    assert!(b >= 1, "kummer_terminating needs b >= 1");
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    for k in 0..p {
        let kf = k as f64;
        // term_{k+1} = term_k (k - p) t / ((b + k)(k + 1))
        term = term.mul_f64(kf - p as f64).mul_f64(t).div_f64(b as f64 + kf).div_f64(kf + 1.0);
        sum = sum.add(term);
    }
    sum.to_f64()
}

/// `₂F₁(-p, b; c; 1)` by the Chu–Vandermonde identity `(c - b)_p / (c)_p`.
///
/// `b` may be any real; the series terminates through the first parameter.
pub fn chu_vandermonde(p: u32, b: f64, c: f64) -> f64 {
    (0..p).fold(1.0, |acc, i| {
        let i = i as f64;
        acc * (c - b + i) / (c + i)
    })
}

/// `₂F₁(-p, -q; c; 1) = (c + q)_p / (c)_p`.
pub fn gauss2f1_unit(p: u32, q: u32, c: f64) -> f64 {
    assert!(c > 0.0, "gauss2f1_unit needs c > 0");
    chu_vandermonde(p, -(q as f64), c)
}
