//! Serialized tables: JSON documents, CSV, and aligned text layouts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::poly::BinomBasisExpansion;
use crate::refined::ExtendedMatrix;
use crate::triangle::RefinedTable;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// `A_{n,i_1,...,i_d}` on increasing tuples.
    Refined,
    /// The square completion `Â_{n,i,j}`.
    Extended,
    /// Binomial-basis coefficients of `G_n` on all `n^d` tuples.
    Coefficients,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    /// RFC 3339 creation time; recorded in cache files only, so that
    /// printed documents do not depend on when they were produced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub n: usize,
    pub d: usize,
    pub kind: TableKind,
    pub entries: Vec<Entry>,
    pub meta: Meta,
}

fn meta() -> Meta {
    Meta {
        version: VERSION.to_string(),
        generated: None,
    }
}

impl TableDocument {
    pub fn from_refined(table: &RefinedTable) -> Self {
        Self {
            n: table.n(),
            d: table.d(),
            kind: TableKind::Refined,
            entries: table
                .iter()
                .map(|(ix, v)| Entry {
                    indices: ix.clone(),
                    value: v.to_string(),
                })
                .collect(),
            meta: meta(),
        }
    }

    /// A document holding selected entries of a refined table.
    pub fn from_refined_entries(n: usize, d: usize, entries: Vec<(Vec<usize>, Int)>) -> Self {
        Self {
            n,
            d,
            kind: TableKind::Refined,
            entries: entries
                .into_iter()
                .map(|(indices, v)| Entry {
                    indices,
                    value: v.to_string(),
                })
                .collect(),
            meta: meta(),
        }
    }

    pub fn from_extended(m: &ExtendedMatrix) -> Self {
        let n = m.n();
        let entries = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| Entry {
                indices: vec![i, j],
                value: m.get(i, j).to_string(),
            })
            .collect();
        Self {
            n,
            d: 2,
            kind: TableKind::Extended,
            entries,
            meta: meta(),
        }
    }

    pub fn from_expansion(e: &BinomBasisExpansion) -> Self {
        let (n, d) = (e.n(), e.d());
        let entries = e
            .coefficients()
            .iter()
            .enumerate()
            .map(|(flat, v)| Entry {
                indices: crate::poly::multi_index(flat, n, d).into_iter().map(|t| t + 1).collect(),
                value: v.to_string(),
            })
            .collect();
        Self {
            n,
            d,
            kind: TableKind::Coefficients,
            entries,
            meta: meta(),
        }
    }

    /// Parses every value back to an exact integer.
    pub fn values(&self) -> Result<Vec<Int>> {
        self.entries
            .iter()
            .map(|e| {
                e.value
                    .parse::<Int>()
                    .map_err(|_| Error::InvalidArgument(format!("not an integer: {:?}", e.value)))
            })
            .collect()
    }

    /// Rebuilds a complete refined table, checking kind and entry count.
    pub fn to_refined(&self) -> Result<RefinedTable> {
        if self.kind != TableKind::Refined {
            return Err(Error::InvalidArgument(format!("expected a refined table, got {:?}", self.kind)));
        }
        let values = self.values()?;
        let map: BTreeMap<Vec<usize>, Int> = self
            .entries
            .iter()
            .zip(values)
            .map(|(e, v)| (e.indices.clone(), v))
            .collect();
        RefinedTable::from_entries(self.n, self.d, map)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("bad table document: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("indices,value\n");
        for e in &self.entries {
            let ix: Vec<String> = e.indices.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{},{}", ix.join(" "), e.value);
        }
        out
    }

    /// Aligned text: a row for `d = 1`, a square grid for `d = 2` (blank
    /// where a refined table has no entry), and one line per tuple otherwise.
    pub fn to_pretty(&self) -> String {
        let width = self.entries.iter().map(|e| e.value.len()).max().unwrap_or(1);
        let mut out = String::new();
        match self.d {
            1 => {
                let cells: Vec<String> = self.entries.iter().map(|e| format!("{:>width$}", e.value)).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
            2 => {
                let by_index: BTreeMap<&[usize], &str> = self
                    .entries
                    .iter()
                    .map(|e| (e.indices.as_slice(), e.value.as_str()))
                    .collect();
                for i in 1..=self.n {
                    let cells: Vec<String> = (1..=self.n)
                        .map(|j| format!("{:>width$}", by_index.get([i, j].as_slice()).copied().unwrap_or("")))
                        .collect();
                    let _ = writeln!(out, "{}", cells.join(" ").trim_end());
                }
            }
            _ => {
                for e in &self.entries {
                    let ix: Vec<String> = e.indices.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "({}) {:>width$}", ix.join(", "), e.value);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refined::extend_matrix;
    use crate::triangle::build_table;

    #[test]
    fn json_round_trip_is_identity() {
        for (n, d) in [(1, 1), (5, 1), (5, 2), (6, 3)] {
            let doc = TableDocument::from_refined(&build_table(n, d).unwrap());
            let text = doc.to_json();
            let back = TableDocument::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), text);
            assert_eq!(back.to_refined().unwrap(), build_table(n, d).unwrap());
        }
    }

    #[test]
    fn large_values_survive_as_strings() {
        let doc = TableDocument::from_refined(&build_table(16, 1).unwrap());
        let total: Int = doc.values().unwrap().into_iter().sum();
        assert!(total > Int::from(u64::MAX));
        assert_eq!(TableDocument::from_json(&doc.to_json()).unwrap().values().unwrap().into_iter().sum::<Int>(), total);
    }

    #[test]
    fn layouts() {
        let row = TableDocument::from_refined(&build_table(5, 1).unwrap());
        assert_eq!(row.to_pretty(), " 42 105 135 105  42\n");
        assert_eq!(row.to_csv().lines().next(), Some("indices,value"));
        assert_eq!(row.to_csv().lines().nth(2), Some("2,105"));

        let m = TableDocument::from_extended(&extend_matrix(&build_table(4, 2).unwrap()).unwrap());
        assert_eq!(m.entries.len(), 16);
        assert_eq!(m.to_pretty().lines().last(), Some("-7 -5 -2  0"));

        let pairs = TableDocument::from_refined(&build_table(3, 2).unwrap());
        assert_eq!(pairs.to_pretty(), "  1 1\n    1\n\n");
        assert_eq!(pairs.to_csv(), "indices,value\n1 2,1\n1 3,1\n2 3,1\n");
    }

    #[test]
    fn rejects_bad_documents() {
        let mut doc = TableDocument::from_refined(&build_table(4, 2).unwrap());
        doc.entries.pop();
        assert!(doc.to_refined().is_err());
        doc.entries[0].value = "1.5".into();
        assert!(doc.values().is_err());
        assert!(TableDocument::from_json("{").is_err());
        let ext = TableDocument::from_extended(&extend_matrix(&build_table(3, 2).unwrap()).unwrap());
        assert!(ext.to_refined().is_err());
    }

    #[test]
    fn timestamp_is_omitted_unless_set() {
        let mut doc = TableDocument::from_refined(&build_table(2, 1).unwrap());
        assert!(!doc.to_json().contains("generated"));
        doc.meta.generated = Some("2026-01-01T00:00:00Z".into());
        let back = TableDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back.meta.generated.as_deref(), Some("2026-01-01T00:00:00Z"));
    }
}
