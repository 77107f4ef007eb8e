//! Numerics for the Gaussian-weighted planar Cauchy transform.
//!
//! The crate evaluates Itô–Hermite polynomials (including the `m = -1`
//! extension), the reproducing kernels and orthogonal projections of the
//! true poly-Bargmann spaces `𝒜²_n`, the closed-form action of the Cauchy
//! transform on the Hermite basis, and the structure of its range, each with
//! an independent quadrature route for cross-checking.

pub mod cauchy;
pub mod error;
pub mod ito_hermite;
pub mod poly_bergman;
pub mod quadrature;
pub mod range_analysis;
pub mod special_fn;
pub mod summation;
pub mod svd;
pub mod verify;

pub use num_complex::Complex64;

pub use cauchy::{cauchy_hermite_closed, cauchy_transform_numeric, PsiFunction};
pub use error::{Error, Result};
pub use ito_hermite::{
    c_mn, hermite_eval, hermite_eval_extended, hermite_eval_index, hermite_recurrence_eval, ComplexPoint, HermiteIndex,
};
pub use poly_bergman::{
    kernel_closed, kernel_series, project_numeric, projection_coefficient_closed, radial_j_closed, synthesize,
    CoefficientSequence, KernelSpec, LevelBasis, ProjectionTerm,
};
pub use quadrature::{GridOptions, PolarGrid, SingularGrid};
pub use range_analysis::{
    e_ell_indices, pn_cauchy_on_coeffs, psi_gram, range_basis_indices, truncated_operator_svd, GramReport,
    RangeBasisSpec, RangeVariant,
};
pub use verify::{run_suite, Suite, VerificationRecord, VerifyConfig};
