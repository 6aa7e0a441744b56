//! Parsers for command-line class specifications and the matrix file format.

use grassmann_roberts::chow::parse_term;
use grassmann_roberts::{BigRational, ChowElement, GrassmannShape};

pub fn parse_class(shape: GrassmannShape, specs: &[String]) -> Result<ChowElement, String> {
    let terms = specs
        .iter()
        .map(|s| parse_term(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    ChowElement::from_terms(shape, terms).map_err(|e| e.to_string())
}

/// First non-blank line `k`, then `k` rows of `k` whitespace-separated
/// rationals. Lines starting with `#` are ignored.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<BigRational>>, String> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or("empty matrix file")?;
    let k: usize = header
        .parse()
        .map_err(|_| format!("first line must be the size, got {header:?}"))?;
    let mut rows = Vec::with_capacity(k);
    for (lineno, line) in lines {
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<BigRational>()
                    .map_err(|_| format!("line {}: cannot parse {t:?}", lineno + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != k {
        return Err(format!("expected {k} rows, found {}", rows.len()));
    }
    Ok(rows)
}
