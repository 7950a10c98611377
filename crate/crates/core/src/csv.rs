//! Minimal CSV helpers shared by the serializers.
//!
//! Every real number is written with 17 significant digits so that a value
//! read back parses to the same `f64`.

use crate::error::{Error, Result};

/// Formats a float with 17 significant digits.
pub fn fmt(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

pub fn join(values: impl IntoIterator<Item = f64>) -> String {
    values.into_iter().map(fmt).collect::<Vec<_>>().join(",")
}

pub(crate) fn parse_f64(field: &str) -> Result<f64> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::InvalidInput(format!("not a number: {field:?}")))
}

pub(crate) fn parse_usize(field: &str) -> Result<usize> {
    field
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::InvalidInput(format!("not a non-negative integer: {field:?}")))
}

/// Checks that `line` equals the expected header.
pub(crate) fn expect_header(line: Option<&str>, header: &str) -> Result<()> {
    match line {
        Some(l) if l.trim() == header => Ok(()),
        other => Err(Error::InvalidInput(format!(
            "expected header {header:?}, found {other:?}"
        ))),
    }
}

pub(crate) fn fields(line: Option<&str>, count: usize) -> Result<Vec<&str>> {
    let line = line.ok_or_else(|| Error::InvalidInput("unexpected end of input".into()))?;
    let parts: Vec<&str> = line.trim().split(',').collect();
    if parts.len() != count {
        return Err(Error::InvalidInput(format!(
            "expected {count} fields, found {} in {line:?}",
            parts.len()
        )));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn formatted_floats_round_trip(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            prop_assert_eq!(parse_f64(&fmt(x)).unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt(-2.0), "-2.0000000000000000e0");
    }
}
