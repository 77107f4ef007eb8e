//! The Gaussian-weighted Cauchy transform
//! `𝒞f(z) = (1/π) ∫ f(ξ) e^{-|ξ|²} / (z - ξ) dxdy`
//! and its closed-form action on the Itô–Hermite basis,
//! `𝒞H_{m,n} = -e^{-|z|²} H_{m-1,n}`.

use num_complex::Complex64;

use crate::error::Result;
use crate::ito_hermite::{extended_times_gaussian, hermite_eval, HermiteIndex};
use crate::quadrature::{cauchy_singular_quadrature, GridOptions};

/// `𝒞f(z)` by singular polar quadrature centred on `z`.
pub fn cauchy_transform_numeric<F>(f: F, z: Complex64, opts: &GridOptions) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    let grid = opts.singular_grid(z)?;
    cauchy_singular_quadrature(f, z, &grid)
}

/// `(𝒞H_{m,n})(z) = -e^{-|z|²} H_{m-1,n}(z)`.
///
/// For `m = 0` the extended function `H_{-1,n}` enters; the product with
/// the Gaussian is formed without overflow and vanishes at `z = 0`.
pub fn cauchy_hermite_closed(m: u32, n: u32, z: Complex64) -> Complex64 {
    if m == 0 {
        -extended_times_gaussian(n, z)
    } else {
        -(-z.norm_sqr()).exp() * hermite_eval(m - 1, n, z)
    }
}

/// `ψ_{m,n} = 𝒞H_{m,n}`, always evaluated through the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PsiFunction {
    m: u32,
    n: u32,
}

impl PsiFunction {
    pub fn new(m: u32, n: u32) -> Self {
        Self { m, n }
    }

    pub fn index(&self) -> HermiteIndex {
        HermiteIndex::classical(self.m, self.n)
    }

    /// Index of the Hermite factor, `(m - 1, n)`.
    pub fn hermite_factor(&self) -> (i64, u32) {
        (self.m as i64 - 1, self.n)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        cauchy_hermite_closed(self.m, self.n, z)
    }

    /// Angular frequency: `ψ_{m,n}(r e^{iθ}) = ψ_{m,n}(r) e^{i(m-1-n)θ}`.
    pub fn angular_mode(&self) -> i64 {
        self.m as i64 - 1 - self.n as i64
    }
}
