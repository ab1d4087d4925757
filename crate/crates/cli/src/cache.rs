//! File cache for the expensive closure computations.
//!
//! One JSON file per `(kind, n, w, lambda)`, named by a content hash of the
//! configuration. Files embed a format version; entries written by another
//! format version, or whose embedded configuration disagrees with the
//! request, are ignored and recomputed.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u64 = 1;

pub struct CacheKey<'a> {
    pub kind: &'a str,
    pub n: u8,
    pub w: String,
    pub lambda: String,
}

impl CacheKey<'_> {
    fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!(
            "v{}|{}|{}|{}|{}",
            FORMAT_VERSION, self.kind, self.n, self.w, self.lambda
        ));
        let digest = hasher.finalize();
        digest
            .iter()
            .take(8)
            .map(|b| format!("{b:02x}"))
            .collect::<String>()
    }

    fn file_name(&self) -> String {
        format!("{}-{}.json", self.kind, self.digest())
    }
}

pub fn cache_path(dir: &Path, key: &CacheKey) -> PathBuf {
    dir.join(key.file_name())
}

/// Returns the cached result value when a valid entry exists.
pub fn load(dir: &Path, key: &CacheKey) -> Option<Value> {
    let text = fs::read_to_string(cache_path(dir, key)).ok()?;
    let value: Value = serde_json::from_str(&text).ok()?;
    if value.get("format_version")?.as_u64()? != FORMAT_VERSION {
        return None;
    }
    if value.get("kind")?.as_str()? != key.kind
        || value.get("n")?.as_u64()? != key.n as u64
        || value.get("w")?.as_str()? != key.w
        || value.get("lambda")?.as_str()? != key.lambda
    {
        return None;
    }
    value.get("result").cloned()
}

pub fn store(dir: &Path, key: &CacheKey, result: &Value) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut entry = Map::new();
    entry.insert("format_version".into(), json!(FORMAT_VERSION));
    entry.insert("kind".into(), json!(key.kind));
    entry.insert("n".into(), json!(key.n));
    entry.insert("w".into(), json!(key.w));
    entry.insert("lambda".into(), json!(key.lambda));
    entry.insert("result".into(), result.clone());
    let text = serde_json::to_string(&Value::Object(entry)).expect("JSON rendering cannot fail");
    fs::write(cache_path(dir, key), text)
}
