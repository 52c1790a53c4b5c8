//! cdd/lrs-style text files.
//!
//! ```text
//! <optional name line>
//! H-representation | V-representation
//! [linearity k i1 ... ik]
//! begin
//! m d rational
//! <m rows of d rationals>
//! end
//! ```
//!
//! Blank lines and lines starting with `*` are comments. Column 0 is the
//! `b` column of an H-file and the 1/0 vertex/ray flag of a V-file.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use log::warn;
use thiserror::Error;

use super::{HRep, Rep, VRep};
use crate::arith::{RMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("no H-representation or V-representation line")]
    MissingKind,
    #[error("line {line}: unexpected header line {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("missing begin line")]
    MissingBegin,
    #[error("missing end line")]
    MissingEnd,
    #[error("line {line}: expected `m d rational`")]
    MalformedSize { line: usize },
    #[error("line {line}: malformed linearity line")]
    BadLinearity { line: usize },
    #[error("line {line}: {token:?} is not a rational number")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongColumnCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("V-representation with linearity: the polyhedron is not pointed")]
    LinearityInVRep,
    #[error("row {row}: leading entry must be 0 or positive in a V-representation")]
    BadLeadingEntry { row: usize },
    #[error("row {row} is all zero")]
    ZeroRow { row: usize },
    #[error("V-representation without any vertex row")]
    NoVertex,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    H,
    V,
}

fn is_comment(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('*')
}

fn parse_rational(token: &str, line: usize) -> Result<Rational, ParseError> {
    let bad = || ParseError::BadToken {
        line,
        token: token.to_string(),
    };
    if token.contains('.') || token.contains(['e', 'E']) {
        return Err(bad());
    }
    if let Some((_, den)) = token.split_once('/') {
        if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(bad());
        }
    }
    Rational::from_str(token).map_err(|_| bad())
}

fn parse_linearity(rest: &str, line: usize) -> Result<BTreeSet<usize>, ParseError> {
    let bad = ParseError::BadLinearity { line };
    let nums: Vec<usize> = rest
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| bad.clone()))
        .collect::<Result<_, _>>()?;
    let (&k, idx) = nums.split_first().ok_or(bad.clone())?;
    if idx.len() != k || idx.contains(&0) {
        return Err(bad);
    }
    Ok(idx.iter().map(|i| i - 1).collect())
}

/// Parses an H- or V-file.
///
/// V-file rows with a positive leading entry other than 1 are divided by it.
/// Row order is preserved.
pub fn parse_rep(text: &str) -> Result<Rep, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut kind = None;
    let mut linearity: Option<(BTreeSet<usize>, usize)> = None;
    let mut seen_other = false;

    // header
    loop {
        let Some((ln, raw)) = lines.next() else {
            return Err(if kind.is_none() {
                ParseError::MissingKind
            } else {
                ParseError::MissingBegin
            });
        };
        if is_comment(raw) {
            continue;
        }
        let line = raw.trim();
        match line {
            "H-representation" if kind.is_none() => kind = Some(Kind::H),
            "V-representation" if kind.is_none() => kind = Some(Kind::V),
            "begin" => break,
            _ if line.starts_with("linearity") => {
                linearity = Some((parse_linearity(&line["linearity".len()..], ln)?, ln));
            }
            _ if kind.is_none() && !seen_other => seen_other = true,
            _ => {
                return Err(ParseError::MalformedHeader {
                    line: ln,
                    text: line.to_string(),
                })
            }
        }
    }
    let kind = kind.ok_or(ParseError::MissingKind)?;
    if kind == Kind::V && linearity.is_some() {
        return Err(ParseError::LinearityInVRep);
    }

    let (size_ln, size_line) = lines
        .by_ref()
        .find(|(_, l)| !is_comment(l))
        .ok_or(ParseError::MissingEnd)?;
    let fields: Vec<&str> = size_line.split_whitespace().collect();
    let (m, d) = match fields.as_slice() {
        [m, d, ty] if matches!(*ty, "rational" | "integer") => (
            m.parse::<usize>()
                .map_err(|_| ParseError::MalformedSize { line: size_ln })?,
            d.parse::<usize>()
                .map_err(|_| ParseError::MalformedSize { line: size_ln })?,
        ),
        _ => return Err(ParseError::MalformedSize { line: size_ln }),
    };
    if d == 0 {
        return Err(ParseError::MalformedSize { line: size_ln });
    }

    let mut rows = Vec::with_capacity(m);
    let mut ended = false;
    for (ln, raw) in lines.by_ref() {
        if is_comment(raw) {
            continue;
        }
        if raw.trim() == "end" {
            ended = true;
            break;
        }
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.len() != d {
            return Err(ParseError::WrongColumnCount {
                line: ln,
                expected: d,
                found: tokens.len(),
            });
        }
        let row = tokens
            .iter()
            .map(|t| parse_rational(t, ln))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if !ended {
        return Err(ParseError::MissingEnd);
    }
    if rows.len() != m {
        return Err(ParseError::WrongRowCount {
            expected: m,
            found: rows.len(),
        });
    }
    if let Some((ln, _)) = lines.find(|(_, l)| !is_comment(l)) {
        warn!("ignoring content after `end` (line {ln} onwards)");
    }
    if let Some(i) = rows
        .iter()
        .position(|r| r.iter().all(num_traits::Zero::is_zero))
    {
        return Err(ParseError::ZeroRow { row: i + 1 });
    }

    let matrix = RMatrix::from_rows(d, rows).expect("row widths checked");
    match kind {
        Kind::H => {
            let (eqs, lin_line) = linearity.unwrap_or_default();
            if eqs.iter().any(|&i| i >= m) {
                return Err(ParseError::BadLinearity { line: lin_line });
            }
            Ok(Rep::H(HRep::new(matrix, eqs).expect("rows validated")))
        }
        Kind::V => {
            use num_traits::Signed;
            if let Some(i) = matrix.iter_rows().position(|r| r[0].is_negative()) {
                return Err(ParseError::BadLeadingEntry { row: i + 1 });
            }
            if matrix.iter_rows().all(|r| num_traits::Zero::is_zero(&r[0])) {
                return Err(ParseError::NoVertex);
            }
            Ok(Rep::V(
                VRep::from_scaled_rows(matrix).expect("leading entries validated"),
            ))
        }
    }
}

/// Writes a representation in the text format, rows in their stored order.
pub fn emit_rep(rep: &Rep) -> String {
    let mut out = String::new();
    let rows = rep.rows();
    match rep {
        Rep::H(h) => {
            out.push_str("H-representation\n");
            if !h.equalities().is_empty() {
                let idx: Vec<String> = h.equalities().iter().map(|i| (i + 1).to_string()).collect();
                let _ = writeln!(out, "linearity {} {}", idx.len(), idx.join(" "));
            }
        }
        Rep::V(_) => out.push_str("V-representation\n"),
    }
    out.push_str("begin\n");
    let _ = writeln!(out, "{} {} rational", rows.nrows(), rows.ncols());
    for row in rows.iter_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out.push_str("end\n");
    out
}
