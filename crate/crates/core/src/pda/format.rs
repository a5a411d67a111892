//! The `PDA v1` text format.
//!
//! ```text
//! PDA v1
//! K=4 F=6 Z=3 S=4
//! * * 0 1
//! ...
//! ```
//!
//! Line two carries the claimed parameters, separated by single spaces.
//! Then exactly `F` lines of `K` tokens, each `*` or a decimal integer
//! below `S`. Every line ends in `\n` and has no trailing spaces.

use thiserror::Error;

use super::{Entry, PdaArray, PdaError};

pub const MAGIC: &str = "PDA v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error("line 1: expected \"{MAGIC}\"")]
    BadMagic,
    #[error("line 2: malformed header: {0}")]
    BadHeader(String),
    #[error("header declares F={declared} rows but {found} were given")]
    RowCount { declared: usize, found: usize },
    #[error("line {line}: expected {expected} tokens, found {found}")]
    ColumnCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: bad token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: integer {value} is not below S={s}")]
    SymbolOutOfRange { line: usize, value: usize, s: usize },
    #[error(transparent)]
    Structure(#[from] PdaError),
}

fn parse_header(line: &str) -> Result<[usize; 4], ParseError> {
    let bad = || ParseError::BadHeader(line.to_string());
    let fields: Vec<&str> = line.split(' ').collect();
    if fields.len() != 4 {
        return Err(bad());
    }
    let mut out = [0usize; 4];
    for (slot, (field, key)) in out.iter_mut().zip(fields.iter().zip(["K", "F", "Z", "S"])) {
        let value = field
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(bad)?;
        *slot = parse_decimal(value).ok_or_else(bad)?;
    }
    Ok(out)
}

/// Plain base-10 digits only; no sign, no whitespace.
fn parse_decimal(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

/// Parses a `PDA v1` document. The PDA conditions are not checked here.
pub fn parse(input: &[u8]) -> Result<PdaArray, ParseError> {
    let text = std::str::from_utf8(input).map_err(|_| ParseError::Utf8)?;
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');

    if lines.next() != Some(MAGIC) {
        return Err(ParseError::BadMagic);
    }
    let header = lines
        .next()
        .ok_or_else(|| ParseError::BadHeader(String::new()))?;
    let [k, f, z, s] = parse_header(header)?;

    let rows: Vec<&str> = lines.collect();
    if rows.len() != f {
        return Err(ParseError::RowCount {
            declared: f,
            found: rows.len(),
        });
    }

    let mut cells = Vec::with_capacity(f.saturating_mul(k));
    for (idx, row) in rows.iter().enumerate() {
        let line = idx + 3;
        let tokens: Vec<&str> = row.split(' ').collect();
        if tokens.len() != k {
            return Err(ParseError::ColumnCount {
                line,
                expected: k,
                found: tokens.len(),
            });
        }
        for token in tokens {
            let entry = if token == "*" {
                Entry::Star
            } else {
                let value = parse_decimal(token).ok_or_else(|| ParseError::BadToken {
                    line,
                    token: token.to_string(),
                })?;
                if value >= s {
                    return Err(ParseError::SymbolOutOfRange { line, value, s });
                }
                Entry::Int(value)
            };
            cells.push(entry);
        }
    }
    Ok(PdaArray::from_cells(f, k, cells, z, s)?)
}

/// Canonical `PDA v1` text for an array.
pub fn serialize(p: &PdaArray) -> String {
    let params = p.params();
    let mut out = format!(
        "{MAGIC}\nK={} F={} Z={} S={}\n",
        params.k, params.f, params.z, params.s
    );
    out.push_str(&p.to_string());
    out
}
