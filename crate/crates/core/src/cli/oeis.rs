//! Offline cross-checks against OEIS b-files.

use std::path::Path;

use clap::ValueEnum;

use crate::arith::Int;
use crate::error::{Error, Result};

/// A parsed b-file: consecutive terms starting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisReference {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    /// `A_n`, indexed by `n`.
    Totals,
    /// `A_{n,1}`; term `m` of the file is compared with `A_{m+1,1} = A_m`.
    #[value(name = "refined-row-1")]
    RefinedRow1,
}

impl Sequence {
    pub fn name(self) -> &'static str {
        match self {
            Self::Totals => "totals",
            Self::RefinedRow1 => "refined-row-1",
        }
    }
}

/// The sequence id implied by a file name: `b005130.txt` gives `A005130`,
/// anything else its stem.
pub fn id_from_path(path: &Path) -> String {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    match stem.strip_prefix('b') {
        Some(digits) if digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit()) => format!("A{digits}"),
        _ => stem,
    }
}

/// Parses `index value` lines; blank lines and lines starting with `#` are
/// skipped. Indices must be consecutive.
pub fn parse_bfile(text: &str, id: impl Into<String>) -> Result<OeisReference> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |why: &str| Error::InvalidArgument(format!("b-file line {}: {why}: {line:?}", lineno + 1));
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad("expected `index value`"));
        };
        let index: i64 = index.parse().map_err(|_| bad("bad index"))?;
        let value: Int = value.parse().map_err(|_| bad("bad value"))?;
        let start = *offset.get_or_insert(index);
        if index != start + terms.len() as i64 {
            return Err(bad("indices are not consecutive"));
        }
        terms.push(value.to_string());
    }
    let offset = offset.ok_or_else(|| Error::InvalidArgument("b-file has no terms".into()))?;
    Ok(OeisReference {
        id: id.into(),
        offset,
        terms,
    })
}

impl OeisReference {
    /// `(index, value)` pairs.
    pub fn indexed(&self) -> impl Iterator<Item = (i64, Int)> + '_ {
        self.terms
            .iter()
            .enumerate()
            .map(|(t, v)| (self.offset + t as i64, v.parse().expect("validated when parsed")))
    }
}
