use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use super::AtlasRecord;
use crate::error::Result;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "TORIC_ATLAS_CACHE";

/// `$TORIC_ATLAS_CACHE`, or `./atlas-cache`.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from("atlas-cache"), PathBuf::from)
}

fn cache_file(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("n{n}.jsonl"))
}

/// Appends records to the JSONL file for their vertex count.
pub fn cache_store<'a>(dir: &Path, records: impl IntoIterator<Item = &'a AtlasRecord>) -> Result<()> {
    let mut by_n: HashMap<usize, String> = HashMap::new();
    for rec in records {
        let buf = by_n.entry(rec.n).or_default();
        buf.push_str(&serde_json::to_string(rec)?);
        buf.push('\n');
    }
    if by_n.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(dir)?;
    for (n, buf) in by_n {
        let mut f = OpenOptions::new().create(true).append(true).open(cache_file(dir, n))?;
        f.write_all(buf.as_bytes())?;
    }
    Ok(())
}

/// Records loaded from a cache file.
#[derive(Debug, Default)]
pub struct CacheLoad {
    /// One record per canonical code; a later line replaces an earlier one.
    pub records: HashMap<String, AtlasRecord>,
    /// One-based line numbers that did not parse.
    pub corrupted: Vec<usize>,
}

/// Reads the cache for `n`. A missing file is an empty cache.
pub fn cache_load(dir: &Path, n: usize) -> Result<CacheLoad> {
    let path = cache_file(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(CacheLoad::default()),
        Err(e) => return Err(e.into()),
    };
    let mut load = CacheLoad::default();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<AtlasRecord>(line) {
            Ok(rec) if rec.n == n => {
                load.records.insert(rec.code.clone(), rec);
            }
            _ => load.corrupted.push(k + 1),
        }
    }
    Ok(load)
}
