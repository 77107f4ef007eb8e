//! Fixed-width number formatting for command output.

use weighted_cauchy::Complex64;

pub const SIGNIFICANT_DIGITS: usize = 15;

/// `x` with 15 significant digits, trailing zeros kept.
///
/// Plain notation for decimal exponents in `[-5, 15)`, scientific otherwise.
pub fn real(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", SIGNIFICANT_DIGITS - 1, 0.0);
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{mantissa}e{exp}")
    }
}

/// `a+bi`, or just `a` when the imaginary part is exactly zero.
pub fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return real(z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", real(z.re), real(z.im.abs()))
}
