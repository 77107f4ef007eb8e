use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use weighted_cauchy::summation::{kahan_sum, DoubleDouble, KahanSum};

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap()
}

fn exact_dd(x: DoubleDouble) -> BigRational {
    exact(x.hi) + exact(x.lo)
}

#[test]
fn compensated_sum_beats_naive() {
    let xs: Vec<f64> = std::iter::once(1.0).chain(std::iter::repeat(1e-16).take(10_000)).collect();
    let naive: f64 = xs.iter().sum();
    assert_eq!(naive, 1.0);
    assert!((kahan_sum(xs.iter().copied()) - (1.0 + 1e-12)).abs() < 1e-20);
    assert_eq!(xs.into_iter().collect::<KahanSum>().value(), 1.0 + 1e-12);
}

proptest! {
    #[test]
    fn kahan_sum_is_correctly_rounded_for_short_sums(xs in proptest::collection::vec(-1e6f64..1e6, 1..40)) {
        let truth: BigRational = xs.iter().map(|&x| exact(x)).fold(BigRational::from_integer(BigInt::from(0)), |a, b| a + b);
        let got = kahan_sum(xs.iter().copied());
        let err = (exact(got) - &truth).to_f64().unwrap().abs();
        prop_assert!(err <= 2.0 * f64::EPSILON * truth.to_f64().unwrap().abs().max(1e-300) + 1e-300);
    }

    #[test]
    fn dd_ops_carry_about_106_bits(a in -1e3f64..1e3, b in -1e3f64..1e3, c in 0.5f64..2.0) {
        let (x, y) = (DoubleDouble::from_f64(a), DoubleDouble::from_f64(b));
        let sum = exact(a) + exact(b);
        prop_assert_eq!(exact_dd(x.add(y)), sum.clone());
        let prod = exact(a) * exact(b);
        prop_assert_eq!(exact_dd(x.mul(y)), prod);
        let q = x.div_f64(c);
        let err = ((exact_dd(q) - exact(a) / exact(c)) / exact(a.abs().max(1e-300))).to_f64().unwrap().abs();
        prop_assert!(err < 1e-30);
        let q = x.div(DoubleDouble { hi: c, lo: c * 1e-17 });
        let back = q.mul(DoubleDouble { hi: c, lo: c * 1e-17 }).sub(x).to_f64().abs();
        prop_assert!(back <= 1e-29 * a.abs().max(1e-300));
    }
}
