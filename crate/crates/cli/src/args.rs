use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wcauchy", version, about = "Itô–Hermite polynomials and the Gaussian-weighted Cauchy transform")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON configuration file (keys: nr, ntheta, radius_pad, kernel_truncation, tolerances).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Radial Gauss–Laguerre nodes of the Gaussian grid.
    #[arg(long, global = true)]
    pub nr: Option<usize>,
    /// Angular nodes of the Gaussian grid.
    #[arg(long, global = true)]
    pub ntheta: Option<usize>,
    /// Radial extent beyond |z| of the singular Cauchy grid.
    #[arg(long, global = true)]
    pub radius_pad: Option<f64>,
    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Machine-readable output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Hermite,
    Psi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    R,
    Rtilde,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Hermite,
    Cauchy,
    Projection,
    Gram,
    Ranges,
    All,
}

/// `RE,IM`.
pub fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected RE,IM, got '{s}'"))?;
    let re = re.trim().parse().map_err(|e| format!("bad real part '{re}': {e}"))?;
    let im = im.trim().parse().map_err(|e| format!("bad imaginary part '{im}': {e}"))?;
    Ok((re, im))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate H_{m,n}(z); m = -1 selects the extended function.
    Hermite {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, value_name = "RE,IM")]
        z: (f64, f64),
    },
    /// Cauchy transform of H_{m,n} at z by the closed form, optionally against quadrature.
    Cauchy {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, value_name = "RE,IM")]
        z: (f64, f64),
        /// Also evaluate by singular quadrature and print the difference.
        #[arg(long)]
        numeric: bool,
    },
    /// Coefficients of the projection of H_{m,n} or ψ_{m,n} onto level N.
    Project {
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
        #[arg(long, value_enum)]
        source: Source,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Largest coefficient index.
        #[arg(long, allow_hyphen_values = true, default_value_t = 8)]
        jmax: i64,
    },
    /// Gram matrix of ψ_{m,n} for m, n <= K.
    Gram {
        #[arg(long, allow_hyphen_values = true)]
        max_index: i64,
    },
    /// Spanning Hermite indices of a range space.
    Ranges {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true)]
        ell: i64,
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
        /// Number of indices listed for the infinite `r` variant.
        #[arg(long, allow_hyphen_values = true, default_value_t = 8)]
        count: i64,
    },
    /// Singular values of the Cauchy transform on span{H_{j,k}: j + k <= D}.
    Svd {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
    /// Run verification suites; exits 1 if any record fails.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Replace every base tolerance by this value.
        #[arg(long)]
        tolerance: Option<f64>,
        /// Also write the per-suite pass/fail CSV summary here.
        #[arg(long, value_name = "PATH")]
        summary: Option<PathBuf>,
    },
}
