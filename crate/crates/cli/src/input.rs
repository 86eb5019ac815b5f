use std::fs;
use std::path::Path;

use polyface::hrep::parse_hformat;
use polyface::poly::{parse_matrix, parse_vformat};
use polyface::{FmConfig, QMatrix, QPoly, QVector, Rational, Scalar};

use crate::commands::Failure;

pub fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

/// Whether the text lists points rather than inequalities.
fn is_vformat(text: &str) -> bool {
    text.lines().any(|l| l.split('#').next().unwrap_or("").trim_start().starts_with("point"))
}

/// Points of a V-format file.
pub fn points(path: &Path) -> Result<(usize, Vec<QVector>), Failure> {
    Ok(parse_vformat(&read(path)?)?)
}

/// The polyhedron described by an H- or V-format file.
pub fn poly(path: &Path, cfg: &FmConfig) -> Result<QPoly, Failure> {
    let text = read(path)?;
    if is_vformat(&text) {
        let (dim, pts) = parse_vformat(&text)?;
        Ok(QPoly::conv_with(dim, &pts, cfg)?)
    } else {
        Ok(QPoly::new(parse_hformat(&text)?))
    }
}

pub fn matrix(path: &Path) -> Result<QMatrix, Failure> {
    Ok(parse_matrix(&read(path)?)?)
}

/// Comma-separated rationals.
pub fn vector(text: &str, what: &str) -> Result<QVector, Failure> {
    let entries = text
        .split(',')
        .map(|t| {
            Rational::parse_literal(t.trim()).ok_or_else(|| Failure::parse(format!("{what}: bad rational literal {:?}", t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QVector::new(entries))
}

/// Semicolon-separated vectors; empty text gives none.
pub fn vectors(text: &str, what: &str) -> Result<Vec<QVector>, Failure> {
    text.split(';').map(str::trim).filter(|t| !t.is_empty()).map(|t| vector(t, what)).collect()
}

/// Comma-separated naturals.
pub fn naturals(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Failure::parse(format!("{what}: expected a natural number, got {:?}", t.trim()))))
        .collect()
}
