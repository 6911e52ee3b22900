//! Number formatting and comma-separated dataset output.

use std::io::{self, Write};

const SIGNIFICANT: usize = 9;

/// Formats `x` with 9 significant digits, trailing zeros trimmed.
///
/// Plain decimal notation is used for decimal exponents in `[-4, 9)`,
/// scientific notation otherwise. Negative zero prints as `0`.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-4..SIGNIFICANT as i32).contains(&exponent) {
        let decimals = (SIGNIFICANT as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    if trimmed == "-0" {
        "0".into()
    } else {
        trimmed.into()
    }
}

/// Writes a header row and one record per row, LF-terminated, with
/// [`sig9`] floats and an empty field for missing values.
pub fn write_csv<W, I>(out: &mut W, header: &[&str], rows: I) -> io::Result<usize>
where
    W: Write,
    I: IntoIterator<Item = Vec<Option<f64>>>,
{
    writeln!(out, "{}", header.join(","))?;
    let mut count = 0;
    for row in rows {
        let fields: Vec<String> = row
            .into_iter()
            .map(|v| v.map(sig9).unwrap_or_default())
            .collect();
        writeln!(out, "{}", fields.join(","))?;
        count += 1;
    }
    Ok(count)
}
