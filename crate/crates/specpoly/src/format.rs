//! Textual interchange formats: the ascending-power pretty notation
//! (printed by `IntPoly`'s `Display`), the JSON polynomial schema
//! `{"n": int, "poly": [decimal strings]}`, and the CSV value-table layout.
//!
//! All three readers handle untrusted input: malformed text is a
//! `FormatError`, never a panic.

use crate::polyz::IntPoly;
use crate::theorems::TableRow;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use std::str::FromStr;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty polynomial expression")]
    Empty,
    #[error("unexpected character {found:?} at byte {at}")]
    UnexpectedChar { found: char, at: usize },
    #[error("malformed term at byte {at}")]
    MalformedTerm { at: usize },
    #[error("exponent {exponent} exceeds the supported maximum {max}")]
    ExponentTooLarge { exponent: usize, max: usize },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("JSON polynomial does not match the schema: {0}")]
    JsonSchema(&'static str),
    #[error("CSV line {line}: {reason}")]
    Csv { line: usize, reason: String },
}

/// Parses the pretty notation back into a polynomial, e.g.
/// `"7 - 14x + 7x^2 - x^3"`. Inverse of `IntPoly`'s `Display` on its
/// output; also accepts repeated exponents (coefficients add up) and
/// arbitrary spacing around `+`/`-`.
pub fn parse_poly(input: &str) -> Result<IntPoly, FormatError> {
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let mut terms: Vec<(usize, BigInt)> = Vec::new();

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(FormatError::Empty);
    }
    let mut first = true;
    while pos < bytes.len() {
        // sign
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(FormatError::UnexpectedChar {
                found: input[pos..].chars().next().unwrap(),
                at: pos,
            });
        }
        first = false;

        let term_start = pos;
        // magnitude digits (optional when an x part follows)
        let digit_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let digits = &input[digit_start..pos];

        // variable part
        let mut exponent = 0usize;
        let mut has_var = false;
        if pos < bytes.len() && bytes[pos] == b'x' {
            has_var = true;
            pos += 1;
            exponent = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let e_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                exponent = input[e_start..pos]
                    .parse::<usize>()
                    .map_err(|_| FormatError::MalformedTerm { at: term_start })?;
                // bound the allocation a hostile exponent could force
                const MAX_EXPONENT: usize = 1 << 20;
                if exponent > MAX_EXPONENT {
                    return Err(FormatError::ExponentTooLarge {
                        exponent,
                        max: MAX_EXPONENT,
                    });
                }
            }
        }

        if digits.is_empty() && !has_var {
            return Err(FormatError::MalformedTerm { at: term_start });
        }
        let mut coeff = if digits.is_empty() {
            BigInt::from(1)
        } else {
            BigInt::from_str(digits).map_err(|_| FormatError::MalformedTerm { at: term_start })?
        };
        if negative {
            coeff = -coeff;
        }
        terms.push((exponent, coeff));
        skip_ws(&mut pos);
    }

    let max_deg = terms.iter().map(|&(e, _)| e).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); max_deg + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPoly::new(coeffs))
}

/// `{"n": N, "poly": ["c0", "c1", ...]}` with decimal-string coefficients
/// in ascending degree.
pub fn poly_to_json(n: u64, p: &IntPoly) -> Value {
    json!({
        "n": n,
        "poly": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

/// Parses the JSON polynomial schema.
pub fn poly_from_json(input: &str) -> Result<(u64, IntPoly), FormatError> {
    let value: Value =
        serde_json::from_str(input).map_err(|e| FormatError::Json(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or(FormatError::JsonSchema("top level must be an object"))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or(FormatError::JsonSchema("\"n\" must be a nonnegative integer"))?;
    let arr = obj
        .get("poly")
        .and_then(Value::as_array)
        .ok_or(FormatError::JsonSchema("\"poly\" must be an array"))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for item in arr {
        let s = item
            .as_str()
            .ok_or(FormatError::JsonSchema("coefficients must be strings"))?;
        coeffs.push(
            BigInt::from_str(s.trim())
                .map_err(|_| FormatError::JsonSchema("coefficients must be decimal integers"))?,
        );
    }
    Ok((n, IntPoly::new(coeffs)))
}

pub const CSV_HEADER: &str = "n,phi_n_0,phi_2n_4,phi_3n_3,phi_4n_2,phi_6n_1,v_n";

pub fn table_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.phi_n_0, r.phi_2n_4, r.phi_3n_3, r.phi_4n_2, r.phi_6n_1, r.v_n
        ));
    }
    out
}

pub fn table_from_csv(input: &str) -> Result<Vec<TableRow>, FormatError> {
    let mut lines = input.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == CSV_HEADER => {}
        _ => {
            return Err(FormatError::Csv {
                line: 1,
                reason: format!("expected header {CSV_HEADER:?}"),
            })
        }
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(FormatError::Csv {
                line: idx + 1,
                reason: format!("expected 7 fields, found {}", fields.len()),
            });
        }
        let big = |s: &str| {
            BigInt::from_str(s.trim()).map_err(|_| FormatError::Csv {
                line: idx + 1,
                reason: format!("not an integer: {s:?}"),
            })
        };
        let small = |s: &str| {
            s.trim().parse::<u64>().map_err(|_| FormatError::Csv {
                line: idx + 1,
                reason: format!("not a nonnegative integer: {s:?}"),
            })
        };
        rows.push(TableRow {
            n: small(fields[0])?,
            phi_n_0: big(fields[1])?,
            phi_2n_4: big(fields[2])?,
            phi_3n_3: big(fields[3])?,
            phi_4n_2: big(fields[4])?,
            phi_6n_1: big(fields[5])?,
            v_n: small(fields[6])?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::value_table;

    #[test]
    fn parse_round_trips_paper_style() {
        for coeffs in [
            vec![7, -14, 7, -1],
            vec![2, -1],
            vec![0, 16, -20, 8, -1],
            vec![-1, 1, 1],
            vec![5],
            vec![],
        ] {
            let p = IntPoly::from_i64(&coeffs);
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("  ").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("3y").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("+ +").is_err());
        assert!(parse_poly("3 4").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = IntPoly::from_i64(&[5, -5, 1]);
        let s = poly_to_json(5, &p).to_string();
        let (n, q) = poly_from_json(&s).unwrap();
        assert_eq!((n, q), (5, p));
        assert!(poly_from_json("{\"n\": 3}").is_err());
        assert!(poly_from_json("{\"n\": 3, \"poly\": [1]}").is_err());
        assert!(poly_from_json("not json").is_err());
    }

    #[test]
    fn csv_round_trip() {
        let rows = value_table(23);
        let csv = table_to_csv(&rows);
        assert_eq!(table_from_csv(&csv).unwrap(), rows);
        assert!(table_from_csv("bad header\n1,2").is_err());
    }
}
