use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::CODE_VERSION;

/// Content-addressed JSON store, one file per entry.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    /// Canonical key object for `(command, params, code version, precision cap)`.
    pub fn key(command: &str, params: &Value, precision_bits: u32) -> Value {
        json!({
            "command": command,
            "params": params,
            "code_version": CODE_VERSION,
            "precision_bits": precision_bits,
        })
    }

    pub fn digest(key: &Value) -> String {
        hex::encode(Sha256::digest(key.to_string().as_bytes()))
    }

    pub fn path_for(&self, key: &Value) -> PathBuf {
        self.dir.join(format!("{}.json", Cache::digest(key)))
    }

    /// Stored payload, if present and written under the same key.
    pub fn load(&self, key: &Value) -> Option<Value> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        if &v["key"] != key {
            return None;
        }
        Some(v["value"].clone())
    }

    pub fn store(&self, key: &Value, value: &Value) -> std::io::Result<()> {
        let entry = json!({"key": key, "value": value});
        crate::write_atomic(&self.path_for(key), &crate::format::to_json(&entry))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_key_sensitivity() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::open(dir.path()).unwrap();
        let k1 = Cache::key("tables", &json!({"n": 3}), 128);
        let k2 = Cache::key("tables", &json!({"n": 3}), 256);
        assert_ne!(Cache::digest(&k1), Cache::digest(&k2));
        assert!(c.load(&k1).is_none());
        c.store(&k1, &json!({"lo": "0.5"})).unwrap();
        assert_eq!(c.load(&k1).unwrap(), json!({"lo": "0.5"}));
        assert!(c.load(&k2).is_none());
        // no temporary files left behind
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
