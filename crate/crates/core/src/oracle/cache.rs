//! On-disk character tables, one JSON file per `n`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CharacterTable;
use crate::error::{KronError, Result};
use crate::partition::Partition;

pub const TABLE_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct TableFile {
    schema_version: u32,
    n: u32,
    partitions: Vec<Partition>,
    /// Centralizer orders as decimal strings.
    z: Vec<String>,
    values: Vec<Vec<i64>>,
}

pub fn table_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("chartable-v{TABLE_SCHEMA_VERSION}-n{n}.json"))
}

/// The user's default cache directory: `$KRON22_CACHE_DIR`, else
/// `$XDG_CACHE_HOME/kron22`, else `$HOME/.cache/kron22`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os("KRON22_CACHE_DIR") {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("kron22"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("kron22"))
}

/// Reads a cached table. Anything unreadable, of the wrong version or
/// internally inconsistent yields `None`.
pub fn load(dir: &Path, n: u32) -> Option<CharacterTable> {
    let text = fs::read_to_string(table_path(dir, n)).ok()?;
    let file: TableFile = serde_json::from_str(&text).ok()?;
    if file.schema_version != TABLE_SCHEMA_VERSION || file.n != n {
        return None;
    }
    let expected = Partition::all(n);
    if file.partitions != expected
        || file.values.len() != expected.len()
        || file.z.len() != expected.len()
        || file.values.iter().any(|row| row.len() != expected.len())
    {
        return None;
    }
    let z = file
        .z
        .iter()
        .map(|s| s.parse().ok())
        .collect::<Option<Vec<_>>>()?;
    let table = CharacterTable {
        n,
        partitions: file.partitions,
        z,
        values: file.values,
    };
    table.spot_check().then_some(table)
}

/// Writes a table atomically (temporary file, then rename).
pub fn store(dir: &Path, table: &CharacterTable) -> Result<()> {
    let io = |e: std::io::Error| KronError::Cache(e.to_string());
    fs::create_dir_all(dir).map_err(io)?;
    let file = TableFile {
        schema_version: TABLE_SCHEMA_VERSION,
        n: table.n,
        partitions: table.partitions.clone(),
        z: table.z.iter().map(|z| z.to_string()).collect(),
        values: table.values.clone(),
    };
    let text = serde_json::to_string(&file).map_err(|e| KronError::Cache(e.to_string()))?;
    let target = table_path(dir, table.n);
    let tmp = target.with_extension(format!("json.tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, &target).map_err(io)?;
    Ok(())
}
