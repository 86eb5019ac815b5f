//! The line-oriented H-format:
//!
//! ```text
//! # comment
//! dim 2
//! ineq 2 1 >= 5
//! eq   -1 4 = 2
//! ```
//!
//! `eq` rows expand to an `ineq` row and its negation. Everything after a
//! `#` is ignored.

use super::HPoly;
use crate::error::{Error, Result};
use crate::{LinRel, Scalar, Vector};

pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

/// Splits a line into whitespace-separated tokens with 1-based columns,
/// stopping at `#`.
pub(crate) fn tokens(line: &str) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &body[s..i], column: body[..s].chars().count() + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &body[s..], column: body[..s].chars().count() + 1 });
    }
    out
}

pub(crate) fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

pub(crate) fn parse_scalar<T: Scalar>(tok: &Token<'_>, line: usize) -> Result<T> {
    T::parse_literal(tok.text)
        .ok_or_else(|| parse_error(line, tok.column, format!("invalid rational literal `{}`", tok.text)))
}

pub(crate) fn parse_natural(tok: &Token<'_>, line: usize) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| parse_error(line, tok.column, format!("expected a natural number, got `{}`", tok.text)))
}

/// Parses the `dim <n>` header; returns the dimension and the remaining lines.
pub(crate) fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<usize> {
    for (no, line) in lines.by_ref() {
        let toks = tokens(line);
        let Some(first) = toks.first() else { continue };
        if first.text != "dim" {
            return Err(parse_error(no, first.column, "expected `dim <n>` header"));
        }
        let Some(n) = toks.get(1) else {
            return Err(parse_error(no, first.column + 3, "missing dimension"));
        };
        if let Some(extra) = toks.get(2) {
            return Err(parse_error(no, extra.column, "unexpected token after dimension"));
        }
        return parse_natural(n, no);
    }
    Err(parse_error(1, 1, "missing `dim <n>` header"))
}

pub fn parse_hformat<T: Scalar>(text: &str) -> Result<HPoly<T>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let dim = parse_header(&mut lines)?;
    let mut rows = Vec::new();
    for (no, line) in lines {
        let toks = tokens(line);
        let Some(kw) = toks.first() else { continue };
        let (is_eq, sep) = match kw.text {
            "ineq" => (false, ">="),
            "eq" => (true, "="),
            other => return Err(parse_error(no, kw.column, format!("unknown keyword `{other}`"))),
        };
        if toks.len() != dim + 3 {
            let col = toks.get(dim + 3).map_or(kw.column, |t| t.column);
            return Err(parse_error(
                no,
                col,
                format!("expected {dim} coefficients, `{sep}` and a right-hand side"),
            ));
        }
        let normal = toks[1..=dim].iter().map(|t| parse_scalar(t, no)).collect::<Result<Vec<T>>>()?;
        let rel = &toks[dim + 1];
        if rel.text != sep {
            return Err(parse_error(no, rel.column, format!("expected `{sep}`, got `{}`", rel.text)));
        }
        let offset = parse_scalar(&toks[dim + 2], no)?;
        let row = LinRel::new(Vector::new(normal), offset);
        if is_eq {
            rows.push(row.clone());
            rows.push(row.neg());
        } else {
            rows.push(row);
        }
    }
    Ok(HPoly::new_unchecked(dim, rows))
}

pub fn to_hformat<T: Scalar>(p: &HPoly<T>) -> String {
    let mut out = format!("dim {}\n", p.dim());
    for r in p.rows() {
        out.push_str("ineq");
        for a in r.normal.entries() {
            out.push(' ');
            out.push_str(&a.to_string());
        }
        out.push_str(&format!(" >= {}\n", r.offset));
    }
    out
}
