use thiserror::Error;

/// Domain errors raised by grid construction, index validation and the
/// operator truncations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radial node count {0} is outside 1..=200")]
    RadialNodeCount(usize),
    #[error("angular node count {0} must be at least 2")]
    AngularNodeCount(usize),
    #[error("weight exponent beta = {0} must be positive and finite")]
    InvalidBeta(f64),
    #[error("radius pad {0} must be at least 10")]
    RadiusPad(f64),
    #[error("singular grid is centred at {grid_center} but the evaluation point is {point}")]
    CenterMismatch { grid_center: String, point: String },
    #[error("Hermite index ({m}, {n}) is outside the supported range m >= -1, n >= 0")]
    HermiteIndex { m: i64, n: i64 },
    #[error("radial J integral requires m = n + j - k - 1, got m = {m}, n = {n}, j = {j}, k = {k}")]
    JIndexMismatch { m: i64, n: u32, j: u32, k: u32 },
    #[error("truncation degree {0} exceeds the supported maximum 12")]
    DegreeTooLarge(u32),
    #[error("point coordinates must be finite, got ({re}, {im})")]
    NonFinitePoint { re: f64, im: f64 },
    #[error("kernel truncation must be at least 1")]
    KernelTruncation,
}

pub type Result<T> = std::result::Result<T, Error>;
