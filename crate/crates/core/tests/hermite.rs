use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use weighted_cauchy::ito_hermite::{
    c_mn, extended_crossover, extended_times_gaussian, hermite_eval, hermite_eval_extended, hermite_eval_index,
    hermite_magnitude_scale, hermite_recurrence_eval, ComplexPoint, HermiteIndex,
};
use weighted_cauchy::{Complex64, Error};

/// Gaussian integer `a + bi`.
#[derive(Clone)]
struct GInt(BigInt, BigInt);

impl GInt {
    fn mul(&self, o: &GInt) -> GInt {
        GInt(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }

    fn pow(&self, k: u32) -> GInt {
        (0..k).fold(GInt(BigInt::one(), BigInt::zero()), |acc, _| acc.mul(self))
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `H_{m,n}(a+bi) = Σ_k (−1)^k k! C(m,k) C(n,k) z^{m−k} z̄^{n−k}`, exactly.
fn hermite_exact(m: u32, n: u32, a: i64, b: i64) -> (f64, f64) {
    let z = GInt(BigInt::from(a), BigInt::from(b));
    let zb = GInt(BigInt::from(a), BigInt::from(-b));
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    let mut kfact = BigInt::one();
    for k in 0..=m.min(n) {
        if k > 0 {
            kfact *= BigInt::from(k);
        }
        let c = &kfact * binom(m, k) * binom(n, k) * if k % 2 == 0 { 1 } else { -1 };
        let p = z.pow(m - k).mul(&zb.pow(n - k));
        re += &c * p.0;
        im += &c * p.1;
    }
    (re.to_f64().unwrap(), im.to_f64().unwrap())
}

#[test]
fn hypergeometric_form_matches_exact_monomial_expansion() {
    for &(a, b) in &[(0, 0), (1, 1), (2, 0), (-1, 2), (3, -1), (0, -3)] {
        let z = Complex64::new(a as f64, b as f64);
        for m in 0..=10 {
            for n in 0..=10 {
                let (re, im) = hermite_exact(m, n, a, b);
                let exact = Complex64::new(re, im);
                let got = hermite_eval(m, n, z);
                let scale = hermite_magnitude_scale(m, n, z);
                assert!((got - exact).norm() <= 1e-13 * scale, "({m},{n}) at {z}: {got} vs {exact}");
                let rec = hermite_recurrence_eval(m, n, z);
                assert!((rec - exact).norm() <= 1e-13 * scale, "recurrence ({m},{n}) at {z}");
            }
        }
    }
}

#[test]
fn index_and_point_validation() {
    assert_eq!(HermiteIndex::new(-2, 0), Err(Error::HermiteIndex { m: -2, n: 0 }));
    assert!(HermiteIndex::new(0, -1).is_err());
    assert!(HermiteIndex::new(-1, 3).unwrap().is_extended());
    assert_eq!(HermiteIndex::new(2, 3).unwrap().as_classical(), Some((2, 3)));
    assert!(ComplexPoint::new(f64::NAN, 0.0).is_err());
    assert!(ComplexPoint::new(1.0, f64::INFINITY).is_err());
    assert_eq!(ComplexPoint::new(1.0, 2.0).unwrap().to_complex(), Complex64::new(1.0, 2.0));
}

#[test]
fn structure_constant_examples() {
    assert_eq!(c_mn(0, 0), 1.0);
    assert_eq!(c_mn(1, 0), 1.0);
    assert_eq!(c_mn(2, 1), -2.0);
    assert_eq!(c_mn(1, 2), -2.0);
}

/// Coefficients of `H_{m,n}` on the monomials `z^a z̄^b`, keyed by `(a, b)`.
fn monomials(m: u32, n: u32) -> Vec<((u32, u32), BigInt)> {
    let mut kfact = BigInt::one();
    (0..=m.min(n))
        .map(|k| {
            if k > 0 {
                kfact *= BigInt::from(k);
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            ((m - k, n - k), &kfact * binom(m, k) * binom(n, k) * sign)
        })
        .collect()
}

fn d_zbar(p: &[((u32, u32), BigInt)]) -> Vec<((u32, u32), BigInt)> {
    p.iter().filter(|((_, b), _)| *b > 0).map(|&((a, b), ref c)| ((a, b - 1), c * BigInt::from(b))).collect()
}

#[test]
fn polyanalyticity_order() {
    for m in 0..=8 {
        for n in 0..=8 {
            let mut p = monomials(m, n);
            for step in 1..=n {
                p = d_zbar(&p);
                // ∂_z̄ lowers the second index: ∂_z̄^s H_{m,n} = n!/(n−s)! H_{m,n−s}
                let scale: BigInt = (0..step).map(|i| BigInt::from(n - i)).product();
                let expected: Vec<_> = monomials(m, n - step).into_iter().map(|(k, c)| (k, c * &scale)).collect();
                assert_eq!(p, expected, "({m},{n}) after {step} lowerings");
            }
            assert!(d_zbar(&p).is_empty(), "({m},{n}) is not polyanalytic of order {}", n + 1);
        }
    }
}

/// `H_{-1,n}` from `-(z̄^{n+1}/(n+1)) Σ_k t^k/(n+2)_k` with exact partial sums.
fn extended_oracle(n: u32, z: Complex64, t_num: i64, t_den: i64) -> Complex64 {
    let t = BigRational::new(BigInt::from(t_num), BigInt::from(t_den));
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    for k in 0..200i64 {
        sum += term.clone();
        term = term * t.clone() / BigRational::from_integer(BigInt::from(n as i64 + 2 + k));
    }
    z.conj().powu(n + 1) * (-sum.to_f64().unwrap() / (n as f64 + 1.0))
}

#[test]
fn extended_function_on_both_sides_of_the_crossover() {
    for n in 0..=6 {
        for &(num, den) in &[(1, 100), (1, 5), (1, 4), (1, 2), (1, 1), (3, 1), (6, 1), (9, 1)] {
            let t = num as f64 / den as f64;
            let z = Complex64::from_polar(t.sqrt(), 0.9);
            let oracle = extended_oracle(n, z, num, den);
            let got = hermite_eval_extended(n, z);
            assert!((got - oracle).norm() <= 1e-13 * oracle.norm(), "n={n} t={t}: {got} vs {oracle}");
            let damped = extended_times_gaussian(n, z);
            assert!((damped - oracle * (-t).exp()).norm() <= 1e-13 * damped.norm(), "n={n} t={t}");
        }
    }
}

#[test]
fn extended_examples() {
    let e = std::f64::consts::E;
    assert!((hermite_eval_extended(0, Complex64::new(1.0, 0.0)).re + (e - 1.0)).abs() < 1e-14);
    assert!((hermite_eval_extended(1, Complex64::new(1.0, 0.0)).re + (e - 2.0)).abs() < 1e-14);
    assert_eq!(hermite_eval_extended(3, Complex64::new(0.0, 0.0)), Complex64::new(0.0, 0.0));
    let idx = HermiteIndex::new(-1, 0).unwrap();
    assert_eq!(hermite_eval_index(idx, Complex64::new(1.0, 0.0)), hermite_eval_extended(0, Complex64::new(1.0, 0.0)));
    assert!(extended_crossover(0) >= 0.25);
}

#[test]
fn extended_is_continuous_at_the_crossover() {
    for n in 0..=10 {
        let tau = extended_crossover(n);
        let below = Complex64::new((tau * (1.0 - 1e-12)).sqrt(), 0.0);
        let above = Complex64::new((tau * (1.0 + 1e-12)).sqrt(), 0.0);
        let (a, b) = (hermite_eval_extended(n, below), hermite_eval_extended(n, above));
        assert!((a - b).norm() <= 1e-10 * a.norm(), "n={n}");
    }
}

fn point() -> impl Strategy<Value = Complex64> {
    (0.0f64..3.0, 0.0f64..std::f64::consts::TAU).prop_map(|(r, th)| Complex64::from_polar(r, th))
}

proptest! {
    #[test]
    fn conjugate_symmetry(m in 0u32..=8, n in 0u32..=8, z in point()) {
        let a = hermite_eval(n, m, z);
        let b = hermite_eval(m, n, z).conj();
        prop_assert!((a - b).norm() <= 1e-11 * hermite_magnitude_scale(m, n, z));
    }

    #[test]
    fn closed_form_agrees_with_recurrence(m in 0u32..=10, n in 0u32..=10, z in point().prop_map(|z| z * (4.0 / 3.0))) {
        let a = hermite_eval(m, n, z);
        let b = hermite_recurrence_eval(m, n, z);
        prop_assert!((a - b).norm() <= 1e-11 * hermite_magnitude_scale(m, n, z));
    }

    #[test]
    fn raising_in_z(m in 0u32..=8, n in 0u32..=8, z in point()) {
        let lowered = if n > 0 { hermite_eval(m, n - 1, z) * n as f64 } else { Complex64::new(0.0, 0.0) };
        let residual = hermite_eval(m + 1, n, z) - z * hermite_eval(m, n, z) + lowered;
        prop_assert!(residual.norm() <= 1e-11 * hermite_magnitude_scale(m + 1, n, z));
    }

    #[test]
    fn raising_in_zbar(m in 0u32..=8, n in 0u32..=8, z in point()) {
        let lowered = if m > 0 { hermite_eval(m - 1, n, z) * m as f64 } else { Complex64::new(0.0, 0.0) };
        let residual = hermite_eval(m, n + 1, z) - z.conj() * hermite_eval(m, n, z) + lowered;
        prop_assert!(residual.norm() <= 1e-11 * hermite_magnitude_scale(m, n + 1, z));
    }

    #[test]
    fn landau_eigen_identity(m in 0u32..=8, n in 1u32..=8, z in point()) {
        let mixed = if m > 0 { hermite_eval(m - 1, n - 1, z) * (m * n) as f64 } else { Complex64::new(0.0, 0.0) };
        let drift = z.conj() * hermite_eval(m, n - 1, z) * n as f64;
        let residual = mixed - drift + hermite_eval(m, n, z) * n as f64;
        prop_assert!(residual.norm() <= 1e-11 * n as f64 * hermite_magnitude_scale(m, n, z));
    }

    #[test]
    fn rotation_covariance(m in 0u32..=8, n in 0u32..=8, z in point(), phi in 0.0f64..6.3) {
        // H_{m,n}(e^{iφ} z) = e^{i(m−n)φ} H_{m,n}(z)
        let rot = Complex64::from_polar(1.0, phi);
        let lhs = hermite_eval(m, n, z * rot);
        let rhs = hermite_eval(m, n, z) * Complex64::from_polar(1.0, (m as f64 - n as f64) * phi);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * hermite_magnitude_scale(m, n, z));
    }
}
