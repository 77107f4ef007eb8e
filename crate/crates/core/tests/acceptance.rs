//! Acceptance criteria, one line of output per criterion.
//!
//! Runs as a plain binary (no libtest harness) so the report is printed on
//! every `cargo test`; the process exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weighted_cauchy::ito_hermite::hermite_eval;
use weighted_cauchy::poly_bergman::{
    kernel_closed, kernel_series, projection_coefficient_closed, projection_coefficient_flipped_sign,
    CoefficientSequence, KernelSpec, LevelBasis,
};
use weighted_cauchy::range_analysis::{
    pn_cauchy_on_coeffs, psi_gram, range_basis_indices, truncated_operator_svd, GramTolerances, RangeBasisSpec,
    RangeVariant,
};
use weighted_cauchy::special_fn::factorial;
use weighted_cauchy::verify::{render_csv, render_jsonl, run_suite, Suite, VerifyConfig, CAUCHY_POINTS, KERNEL_POINTS};
use weighted_cauchy::{cauchy_hermite_closed, cauchy_transform_numeric, Complex64, GridOptions, HermiteIndex};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn basis_orthonormality() -> Outcome {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    let idx: Vec<(u32, u32)> = (0..=6).flat_map(|m| (0..=6).map(move |n| (m, n))).collect();
    let samples: Vec<_> = idx.iter().map(|&(m, n)| grid.sample(|z| hermite_eval(m, n, z))).collect();
    let mut worst = 0.0f64;
    for (a, &(m, n)) in idx.iter().enumerate() {
        for (b, &(j, k)) in idx.iter().enumerate() {
            let expected = if (m, n) == (j, k) { PI * factorial(m) * factorial(n) } else { 0.0 };
            let v = grid.inner_product_samples(&samples[a], &samples[b]);
            worst = worst.max((v - expected).norm());
        }
    }
    outcome(worst < 1e-9, format!("max |<H_mn,H_jk> - pi m! n! delta| = {worst:.3e}"))
}

fn cauchy_action() -> Outcome {
    let opts = GridOptions::default();
    let mut worst = 0.0f64;
    let mut worst_at_zero = 0.0f64;
    let mut zeros = 0;
    for m in 0..=5 {
        for n in 0..=5 {
            for &(x, y) in &CAUCHY_POINTS {
                let z = Complex64::new(x, y);
                let closed = cauchy_hermite_closed(m, n, z);
                let numeric = cauchy_transform_numeric(|w| hermite_eval(m, n, w), z, &opts).unwrap();
                let err = (numeric - closed).norm();
                // H_{2,1} vanishes at 1+i, where only the absolute error means anything
                if closed.norm() > 1e-12 {
                    worst = worst.max(err / closed.norm());
                } else {
                    zeros += 1;
                    worst_at_zero = worst_at_zero.max(err / (1.0 + closed.norm()));
                }
            }
        }
    }
    // the constant function against (1 - e^{-|z|²})/z
    let mut worst_const = 0.0f64;
    for &(x, y) in &CAUCHY_POINTS {
        let z = Complex64::new(x, y);
        let elementary = (1.0 - (-z.norm_sqr()).exp()) / z;
        let numeric = cauchy_transform_numeric(|_| Complex64::new(1.0, 0.0), z, &opts).unwrap();
        let closed = cauchy_hermite_closed(0, 0, z);
        worst_const = worst_const
            .max((numeric - elementary).norm() / elementary.norm())
            .max((closed - elementary).norm() / elementary.norm());
    }
    outcome(
        worst < 1e-6 && worst_at_zero < 1e-6 && worst_const < 1e-6,
        format!(
            "max relative error {worst:.3e}; {zeros} exact zeros, max abs error there {worst_at_zero:.3e}; constant function vs (1-e^-t)/z {worst_const:.3e}"
        ),
    )
}

fn projection_coefficient() -> Outcome {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    let mut worst = 0.0f64;
    for n in 0..=4 {
        let basis = LevelBasis::new(&grid, n, 8);
        for j in 0..=4 {
            for k in 0..=4 {
                let term = projection_coefficient_closed(n, j, k);
                let numeric = basis.project(|z| cauchy_hermite_closed(j, k, z));
                for (i, c) in numeric.coeffs.iter().enumerate() {
                    let expected = match term.target {
                        Some(t) if t.m() as usize == i => term.coefficient,
                        _ => 0.0,
                    };
                    worst = worst.max((c - expected).norm());
                }
            }
        }
    }
    let oracle = LevelBasis::new(&grid, 0, 2).project(|z| cauchy_hermite_closed(1, 0, z)).coeffs[0];
    let proof_sign = projection_coefficient_closed(0, 1, 0).coefficient;
    let display_sign = projection_coefficient_flipped_sign(0, 1, 0).coefficient;
    let proof_ok = (proof_sign - oracle).norm() < 1e-8;
    let display_rejected = (display_sign - oracle).norm() > 1e-8;
    outcome(
        worst < 1e-8 && proof_ok && display_rejected,
        format!(
            "max abs error {worst:.3e}; at (0,1,0) oracle {:.6}, proof sign {proof_sign:+.6}, display sign {display_sign:+.6} {}",
            oracle.re,
            if display_rejected { "rejected" } else { "NOT rejected" }
        ),
    )
}

fn kernel_identity() -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..=4 {
        let spec = KernelSpec::new(n, 60).unwrap();
        for &(zx, zy) in &KERNEL_POINTS {
            for &(wx, wy) in &KERNEL_POINTS {
                let (z, w) = (Complex64::new(zx, zy), Complex64::new(wx, wy));
                worst = worst.max((kernel_series(spec, z, w) - kernel_closed(n, z, w)).norm());
            }
        }
    }
    outcome(worst < 1e-8, format!("max |series - closed| = {worst:.3e}"))
}

fn range_structure() -> Outcome {
    let spec = |variant, ell, n| RangeBasisSpec { variant, ell, n };
    let mut dims_ok = range_basis_indices(spec(RangeVariant::RTilde, 0, 0), 64).is_empty();
    for ell in 0..=10u32 {
        for n in 0..=(10 - ell) {
            if ell + n > 0 {
                dims_ok &= range_basis_indices(spec(RangeVariant::RTilde, ell, n), 64).len() == (ell + n) as usize;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut outside = 0usize;
    let mut nonzero_outputs = 0usize;
    for _ in 0..50 {
        let ell = rng.gen_range(0..=4u32);
        let len = rng.gen_range(1..=10);
        let coeffs = (0..len)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
                }
            })
            .collect();
        let seq = CoefficientSequence::new(ell, coeffs);
        for n in 0..=4 {
            let out = pn_cauchy_on_coeffs(&seq, n);
            let allowed = range_basis_indices(spec(RangeVariant::R, ell, n), out.len() + 1);
            let support = out.support();
            nonzero_outputs += usize::from(!support.is_empty());
            outside += support.iter().filter(|i| !allowed.contains(i)).count();
        }
    }
    outcome(
        dims_ok && outside == 0,
        format!(
            "rtilde dimensions {}; {outside} support indices outside R over 250 projections ({nonzero_outputs} nonzero)",
            if dims_ok { "exact" } else { "WRONG" }
        ),
    )
}

fn selection_rule() -> Outcome {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    let idx: Vec<HermiteIndex> = (0..=5).flat_map(|m| (0..=5).map(move |n| HermiteIndex::classical(m, n))).collect();
    let rep = psi_gram(&idx, &grid, GramTolerances::default()).unwrap();
    let at = |m, n| idx.iter().position(|&i| i == HermiteIndex::classical(m, n)).unwrap();
    let rel = |v: Complex64, exact: f64| (v - exact).norm() / exact;
    let e10 = rel(rep.values[at(1, 0)][at(1, 0)], PI / 3.0);
    let e20 = rel(rep.values[at(2, 0)][at(2, 0)], PI / 9.0);
    outcome(
        rep.pass && rep.radial_pass && e10 < 1e-8 && e20 < 1e-8,
        format!(
            "max off-pattern {:.3e}; max radial deviation {:.3e}; |psi_10|^2 rel {e10:.1e}; |psi_20|^2 rel {e20:.1e}",
            rep.max_violation, rep.max_radial_deviation
        ),
    )
}

fn compactness_evidence() -> Outcome {
    let s = truncated_operator_svd(8).unwrap();
    let finite = s.iter().all(|v| v.is_finite());
    let sorted = s.windows(2).all(|w| w[0] >= w[1]);
    let half = s.len() / 2;
    let head = s[0];
    let tail = s[half..].iter().copied().fold(0.0, f64::max);
    outcome(
        finite && sorted && tail < head,
        format!(
            "{} values, s_0 = {head:.6}, max over tail from k = {half} is {tail:.3e}, last {:.3e}",
            s.len(),
            s[s.len() - 1]
        ),
    )
}

fn determinism() -> Outcome {
    let config = VerifyConfig::default();
    let a = run_suite(Suite::All, &config).unwrap();
    let b = run_suite(Suite::All, &config).unwrap();
    let same = render_jsonl(&a) == render_jsonl(&b) && render_csv(&a) == render_csv(&b);
    let failing = a.iter().filter(|r| !r.pass).count();
    outcome(same && failing == 0, format!("{} records, identical bytes: {same}, failing records: {failing}", a.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("basis orthonormality", Duration::from_secs(10), basis_orthonormality),
        ("cauchy action", Duration::from_secs(60), cauchy_action),
        ("projection coefficient", Duration::from_secs(60), projection_coefficient),
        ("kernel identity", Duration::from_secs(5), kernel_identity),
        ("range structure", Duration::from_secs(5), range_structure),
        ("gram selection rule", Duration::from_secs(120), selection_rule),
        ("compactness evidence", Duration::from_secs(30), compactness_evidence),
        ("determinism", Duration::from_secs(120), determinism),
    ];
    let mut all = true;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed <= *budget;
        all &= pass;
        println!(
            "criterion {} ({name}): {} [{:.2}s of {}s] {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            out.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
