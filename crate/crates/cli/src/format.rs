//! Locale-independent number formatting with a fixed count of significant
//! digits.

/// Formats `x` with at most `digits` significant digits, trailing zeros
/// removed. Uses plain notation for exponents in `[-5, digits)` and
/// scientific notation otherwise.
pub fn fmt_num(x: f64, digits: usize) -> String {
    let digits = digits.clamp(1, 17);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Comma-separated list.
pub fn fmt_list(values: &[f64], digits: usize) -> String {
    values
        .iter()
        .map(|v| fmt_num(*v, digits))
        .collect::<Vec<_>>()
        .join(",")
}
