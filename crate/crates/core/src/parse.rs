//! The set literal format shared by all CLI commands: comma-separated decimal
//! integers with optional whitespace ("0,1,2,5,6,10"), or "@path" to read one
//! set per line from a file.

use crate::error::{Error, Result};
use crate::intset::IntSet;
use std::fs;

/// Elements are capped so every downstream sum, product with a gcd scale,
/// and doubling stays inside i64.
const MAX_MAGNITUDE: i64 = 1 << 60;

pub fn parse_set(s: &str) -> Result<IntSet> {
    let mut elems = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(Error::Parse(format!("empty element in \"{s}\"")));
        }
        let x: i64 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer \"{tok}\"")))?;
        if x.abs() > MAX_MAGNITUDE {
            return Err(Error::Parse(format!("element {x} exceeds ±2^60")));
        }
        elems.push(x);
    }
    Ok(IntSet::new(elems))
}

/// A literal yields one set; "@path" yields one set per non-empty line.
pub fn parse_set_arg(s: &str) -> Result<Vec<IntSet>> {
    if let Some(path) = s.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_string(),
            source,
        })?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_set)
            .collect()
    } else {
        Ok(vec![parse_set(s)?])
    }
}

pub fn format_set(a: &IntSet) -> String {
    let strs: Vec<String> = a.iter().map(|e| e.to_string()).collect();
    strs.join(",")
}
