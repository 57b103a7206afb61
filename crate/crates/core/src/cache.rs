//! Content-addressed memo for expensive, deterministic results.
//!
//! Keys are the SHA-256 of `{"schema", "kind", "inputs"}` serialized as JSON, so
//! any change of prime, points or conditions lands in a fresh entry. Values live in
//! memory for the process and optionally as `<kind>-<hash>.json` in a directory.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;

pub const CACHE_SCHEMA: u32 = 1;

#[derive(Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
    memo: Mutex<HashMap<String, serde_json::Value>>,
}

impl Cache {
    pub fn memory() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache { dir: Some(dir.to_path_buf()), memo: Mutex::default() })
    }

    pub fn key<K: Serialize>(kind: &str, inputs: &K) -> Result<String> {
        let body = serde_json::json!({ "schema": CACHE_SCHEMA, "kind": kind, "inputs": inputs });
        let digest = Sha256::digest(serde_json::to_vec(&body)?);
        Ok(format!("{kind}-{}", hex::encode(digest)))
    }

    pub fn get_or_compute<K, T, C>(&self, kind: &str, inputs: &K, compute: C) -> Result<T>
    where
        K: Serialize,
        T: Serialize + DeserializeOwned,
        C: FnOnce() -> Result<T>,
    {
        let key = Self::key(kind, inputs)?;
        if let Some(v) = self.memo.lock().expect("cache lock").get(&key) {
            return Ok(serde_json::from_value(v.clone())?);
        }
        if let Some(path) = self.path(&key) {
            if let Ok(text) = std::fs::read_to_string(&path) {
                if let Ok(v) = serde_json::from_str::<serde_json::Value>(&text) {
                    if let Ok(out) = serde_json::from_value::<T>(v["value"].clone()) {
                        self.memo.lock().expect("cache lock").insert(key, v["value"].clone());
                        return Ok(out);
                    }
                }
            }
        }
        let out = compute()?;
        let value = serde_json::to_value(&out)?;
        if let Some(path) = self.path(&key) {
            let body = serde_json::json!({ "kind": kind, "inputs": inputs, "value": value });
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_string_pretty(&body)?)?;
            std::fs::rename(&tmp, &path)?;
        }
        self.memo.lock().expect("cache lock").insert(key, value);
        Ok(out)
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }
}
