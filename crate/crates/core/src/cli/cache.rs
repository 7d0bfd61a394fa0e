//! On-disk cache of refined tables, one JSON document per `(n, d)`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use super::document::{TableDocument, TableKind, VERSION};
use super::CliError;
use crate::triangle::{build_table, RefinedTable};

#[derive(Clone, Debug)]
pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Self { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Entries are keyed by tool version so that an upgrade never reads
    /// tables written by another release.
    pub fn path(&self, n: usize, d: usize) -> PathBuf {
        self.root.join(format!("v{VERSION}")).join(format!("refined-n{n}-d{d}.json"))
    }

    /// The cached table, or `None` if it is absent or unreadable.
    pub fn load(&self, n: usize, d: usize) -> Option<RefinedTable> {
        let text = fs::read_to_string(self.path(n, d)).ok()?;
        let doc = TableDocument::from_json(&text).ok()?;
        if doc.kind != TableKind::Refined || doc.n != n || doc.d != d || doc.meta.version != VERSION {
            return None;
        }
        doc.to_refined().ok()
    }

    /// Writes through a temporary file so that concurrent readers never see
    /// a partial document.
    pub fn store(&self, table: &RefinedTable) -> io::Result<()> {
        let path = self.path(table.n(), table.d());
        let dir = path.parent().expect("cache entries live in a directory");
        fs::create_dir_all(dir)?;
        let mut doc = TableDocument::from_refined(table);
        doc.meta.generated = Some(chrono::Utc::now().to_rfc3339());
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(doc.to_json().as_bytes())?;
        tmp.persist(&path).map(drop).map_err(|e| e.error)
    }
}

/// A table from `cache` if present there, otherwise computed (and stored).
pub fn cached_table(cache: Option<&Cache>, n: usize, d: usize) -> Result<RefinedTable, CliError> {
    if let Some(table) = cache.and_then(|c| c.load(n, d)) {
        return Ok(table);
    }
    let table = build_table(n, d)?;
    if let Some(c) = cache {
        c.store(&table).map_err(|source| CliError::Io {
            path: c.path(n, d),
            source,
        })?;
    }
    Ok(table)
}
