use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;
use weighted_cauchy::poly_bergman::{projection_coefficient_closed, LevelBasis};
use weighted_cauchy::range_analysis::{
    index_set_relation, psi_gram, range_basis_indices, range_window, truncated_operator_svd_with, GramTolerances,
    RangeBasisSpec, RangeVariant, MAX_TRUNCATION_DEGREE,
};
use weighted_cauchy::verify::{render_csv, render_jsonl, render_summary, run_suite, Suite, Tolerances, VerifyConfig};
use weighted_cauchy::{
    cauchy_hermite_closed, cauchy_transform_numeric, hermite_eval, hermite_eval_index, Complex64, ComplexPoint,
    HermiteIndex,
};

use crate::args::{Command, Format, Source, SuiteArg, Variant};
use crate::format::{complex, real};

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    /// A numeric precondition does not hold (exit 3).
    Domain(String),
    /// Configuration or output file problems (exit 2).
    Setup(String),
}

impl From<weighted_cauchy::Error> for CliError {
    fn from(e: weighted_cauchy::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub struct Output {
    pub text: String,
    /// Extra file content, written to the path given with `verify --summary`.
    pub summary: Option<String>,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, summary: None, pass: true }
    }
}

pub const MAX_JMAX: i64 = 40;
pub const MAX_GRAM_INDEX: i64 = 12;
pub const MAX_RANGE_COUNT: i64 = 10_000;

fn nonnegative(name: &str, v: i64, max: i64) -> Result<u32, CliError> {
    if v < 0 {
        return Err(CliError::Domain(format!("{name} must be >= 0, got {v}")));
    }
    if v > max {
        return Err(CliError::Domain(format!("{name} must be <= {max}, got {v}")));
    }
    Ok(v as u32)
}

fn classical(m: i64, n: i64, what: &str) -> Result<(u32, u32), CliError> {
    let idx = HermiteIndex::new(m, n)?;
    idx.as_classical().ok_or_else(|| CliError::Domain(format!("{what} needs m >= 0, got m = {m}")))
}

fn point(z: (f64, f64)) -> Result<Complex64, CliError> {
    Ok(ComplexPoint::new(z.0, z.1)?.to_complex())
}

#[derive(Serialize)]
struct Value {
    re: f64,
    im: f64,
}

impl From<Complex64> for Value {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

pub fn run(command: &Command, config: &VerifyConfig, format: Option<Format>) -> Result<Output, CliError> {
    let grid_opts = config.grid_options();
    grid_opts.validate()?;
    match *command {
        Command::Hermite { m, n, z } => {
            let idx = HermiteIndex::new(m, n)?;
            let z = point(z)?;
            let v = hermite_eval_index(idx, z);
            Ok(Output::ok(match format {
                None => format!("{}\n", complex(v)),
                Some(Format::Json) => to_json(&json!({"m": m, "n": n, "z": Value::from(z), "value": Value::from(v)})),
                Some(Format::Csv) => {
                    format!("m,n,z_re,z_im,re,im\n{m},{n},{:e},{:e},{:e},{:e}\n", z.re, z.im, v.re, v.im)
                }
            }))
        }
        Command::Cauchy { m, n, z, numeric } => {
            let (m, n) = classical(m, n, "the Cauchy transform of H_{m,n}")?;
            let z = point(z)?;
            let closed = cauchy_hermite_closed(m, n, z);
            let num =
                if numeric { Some(cauchy_transform_numeric(|w| hermite_eval(m, n, w), z, &grid_opts)?) } else { None };
            let diff = num.map(|v| (v - closed).norm());
            Ok(Output::ok(match format {
                None => match (num, diff) {
                    (Some(v), Some(d)) => {
                        format!("closed {}\nnumeric {}\nabs_diff {}\n", complex(closed), complex(v), real(d))
                    }
                    _ => format!("{}\n", complex(closed)),
                },
                Some(Format::Json) => to_json(&json!({
                    "m": m, "n": n, "z": Value::from(z),
                    "closed": Value::from(closed),
                    "numeric": num.map(Value::from),
                    "abs_diff": diff,
                })),
                Some(Format::Csv) => {
                    let mut s = String::from("m,n,z_re,z_im,closed_re,closed_im");
                    if num.is_some() {
                        s.push_str(",numeric_re,numeric_im,abs_diff");
                    }
                    let _ = write!(s, "\n{m},{n},{:e},{:e},{:e},{:e}", z.re, z.im, closed.re, closed.im);
                    if let (Some(v), Some(d)) = (num, diff) {
                        let _ = write!(s, ",{:e},{:e},{:e}", v.re, v.im, d);
                    }
                    s.push('\n');
                    s
                }
            }))
        }
        Command::Project { level, source, m, n, jmax } => {
            let level = nonnegative("level", level, i64::from(u32::MAX))?;
            let jmax = nonnegative("jmax", jmax, MAX_JMAX)?;
            let (m, n) = classical(m, n, "the projection source")?;
            let grid = grid_opts.polar_grid(1.0)?;
            let basis = LevelBasis::new(&grid, level, jmax);
            let (numeric, predicted): (_, Vec<f64>) = match source {
                Source::Hermite => {
                    let alpha = basis.project(|z| hermite_eval(m, n, z));
                    let pred = (0..=jmax).map(|j| if n == level && j == m { 1.0 } else { 0.0 }).collect();
                    (alpha, pred)
                }
                Source::Psi => {
                    let alpha = basis.project(|z| cauchy_hermite_closed(m, n, z));
                    let term = projection_coefficient_closed(level, m, n);
                    let pred = (0..=jmax)
                        .map(|j| match term.target {
                            Some(t) if t.m() as u32 == j => term.coefficient,
                            _ => 0.0,
                        })
                        .collect();
                    (alpha, pred)
                }
            };
            let rows: Vec<_> = numeric
                .coeffs
                .iter()
                .zip(&predicted)
                .enumerate()
                .map(|(j, (&v, &p))| (j, v, p, (v - p).norm()))
                .collect();
            Ok(Output::ok(match format {
                None => {
                    rows.iter().map(|(j, v, p, d)| format!("{j} {} {} {}\n", complex(*v), real(*p), real(*d))).collect()
                }
                Some(Format::Json) => {
                    let table: Vec<_> = rows
                        .iter()
                        .map(|(j, v, p, d)| json!({"j": j, "numeric": Value::from(*v), "closed": p, "abs_diff": d}))
                        .collect();
                    let src = match source {
                        Source::Hermite => "hermite",
                        Source::Psi => "psi",
                    };
                    to_json(&json!({"level": level, "source": src, "m": m, "n": n, "coefficients": table}))
                }
                Some(Format::Csv) => {
                    let mut s = String::from("j,numeric_re,numeric_im,closed,abs_diff\n");
                    for (j, v, p, d) in &rows {
                        let _ = writeln!(s, "{j},{:e},{:e},{:e},{:e}", v.re, v.im, p, d);
                    }
                    s
                }
            }))
        }
        Command::Gram { max_index } => {
            let k = nonnegative("max-index", max_index, MAX_GRAM_INDEX)?;
            let grid = grid_opts.polar_grid(1.0)?;
            let indices: Vec<_> = (0..=k).flat_map(|m| (0..=k).map(move |n| HermiteIndex::classical(m, n))).collect();
            let tol = GramTolerances {
                off_pattern: config.tolerances.gram_off_pattern,
                radial_relative: config.tolerances.gram_radial,
            };
            let report = psi_gram(&indices, &grid, tol)?;
            let pass = report.pass && report.radial_pass;
            let text = match format {
                Some(Format::Json) => to_json(&report),
                _ => {
                    let mut s = String::from("index");
                    for idx in &indices {
                        let _ = write!(s, ",\"{idx}\"");
                    }
                    s.push('\n');
                    for (a, idx) in indices.iter().enumerate() {
                        let _ = write!(s, "\"{idx}\"");
                        for v in &report.values[a] {
                            let _ = write!(s, ",{}", complex(*v));
                        }
                        s.push('\n');
                    }
                    s
                }
            };
            Ok(Output { text, summary: None, pass })
        }
        Command::Ranges { variant, ell, level, count } => {
            let ell = nonnegative("ell", ell, i64::from(u32::MAX) - 1)?;
            let level = nonnegative("level", level, i64::from(u32::MAX))?;
            let count = nonnegative("count", count, MAX_RANGE_COUNT)? as usize;
            let variant = match variant {
                Variant::R => RangeVariant::R,
                Variant::Rtilde => RangeVariant::RTilde,
            };
            let spec = RangeBasisSpec { variant, ell, n: level };
            let indices = range_basis_indices(spec, count);
            let listed: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
            Ok(Output::ok(match format {
                None => format!("{}\n", listed.join(" ")),
                Some(Format::Json) => {
                    // inclusion against the next source level, compared on a common window
                    let window = level + ell + count as u32 + 2;
                    let next = RangeBasisSpec { ell: ell + 1, ..spec };
                    let relation = index_set_relation(&range_window(spec, window), &range_window(next, window));
                    let pairs: Vec<[i64; 2]> = indices.iter().map(|i| [i.m() as i64, i.n() as i64]).collect();
                    to_json(&json!({
                        "variant": variant,
                        "ell": ell,
                        "level": level,
                        "indices": pairs,
                        "complete": variant == RangeVariant::RTilde,
                        "relation_to_next_ell": { "window": window, "relation": relation },
                    }))
                }
                Some(Format::Csv) => {
                    let mut s = String::from("m,n\n");
                    for i in &indices {
                        let _ = writeln!(s, "{},{}", i.m(), i.n());
                    }
                    s
                }
            }))
        }
        Command::Svd { degree } => {
            let d = nonnegative("degree", degree, i64::from(MAX_TRUNCATION_DEGREE))?;
            let s = truncated_operator_svd_with(d, &grid_opts)?;
            Ok(Output::ok(match format {
                None => s.iter().map(|v| format!("{}\n", real(*v))).collect(),
                Some(Format::Json) => to_json(&json!({"degree": d, "singular_values": s})),
                Some(Format::Csv) => {
                    let mut out = String::from("k,value\n");
                    for (k, v) in s.iter().enumerate() {
                        let _ = writeln!(out, "{k},{v:e}");
                    }
                    out
                }
            }))
        }
        Command::Verify { suite, tolerance, .. } => {
            let mut config = *config;
            if let Some(t) = tolerance {
                if !(t >= 0.0 && t.is_finite()) {
                    return Err(CliError::Domain(format!("tolerance must be finite and >= 0, got {t}")));
                }
                config.tolerances = Tolerances::uniform(t);
            }
            let suite = match suite {
                SuiteArg::Hermite => Suite::Hermite,
                SuiteArg::Cauchy => Suite::Cauchy,
                SuiteArg::Projection => Suite::Projection,
                SuiteArg::Gram => Suite::Gram,
                SuiteArg::Ranges => Suite::Ranges,
                SuiteArg::All => Suite::All,
            };
            let records = run_suite(suite, &config)?;
            let pass = records.iter().all(|r| r.pass);
            let text = match format {
                Some(Format::Csv) => render_csv(&records),
                _ => render_jsonl(&records),
            };
            Ok(Output { text, summary: Some(render_summary(&records)), pass })
        }
    }
}
