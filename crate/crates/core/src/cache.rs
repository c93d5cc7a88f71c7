//! A content-addressed result cache on disk. Keys combine the ring's
//! content hash with an operation id and its parameters; values are opaque
//! byte strings (in practice, serialized reports).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "RINGLAB_CACHE_DIR";

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CacheKey {
    pub ring_hash: String,
    pub operation: String,
    pub params: String,
}

impl CacheKey {
    fn file_name(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.ring_hash.as_bytes());
        h.update([0]);
        h.update(self.operation.as_bytes());
        h.update([0]);
        h.update(self.params.as_bytes());
        format!("{}.json", hex::encode(h.finalize()))
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: CacheKey,
    value: String,
}

/// A cache rooted at a directory; a `None` root means caching is disabled
/// (requested, unwritable, or simply absent) and every lookup misses.
pub struct ResultCache {
    root: Option<PathBuf>,
}

impl ResultCache {
    pub fn disabled() -> ResultCache {
        ResultCache { root: None }
    }

    /// Opens a cache at `dir`, creating it if needed. An unwritable
    /// directory degrades to a disabled cache with a warning on stderr,
    /// never an error.
    pub fn open(dir: &Path) -> ResultCache {
        match std::fs::create_dir_all(dir) {
            Ok(()) => ResultCache {
                root: Some(dir.to_path_buf()),
            },
            Err(e) => {
                eprintln!(
                    "warning: cache directory {} is unusable ({e}); continuing without cache",
                    dir.display()
                );
                ResultCache::disabled()
            }
        }
    }

    /// Opens the cache named by [`CACHE_DIR_ENV`], when set.
    pub fn from_env() -> ResultCache {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) => ResultCache::open(Path::new(&dir)),
            None => ResultCache::disabled(),
        }
    }

    pub fn is_enabled(&self) -> bool {
        self.root.is_some()
    }

    /// Returns the cached value, evicting entries whose stored key does not
    /// match (hash drift or corruption).
    pub fn get(&self, key: &CacheKey) -> Option<String> {
        let root = self.root.as_ref()?;
        let path = root.join(key.file_name());
        let text = std::fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<Entry>(&text) {
            Ok(entry) if &entry.key == key => Some(entry.value),
            _ => {
                let _ = std::fs::remove_file(&path);
                None
            }
        }
    }

    /// Stores a value atomically (write to a temporary file, then rename).
    /// Failures degrade to a no-op.
    pub fn put(&self, key: &CacheKey, value: &str) {
        let Some(root) = self.root.as_ref() else {
            return;
        };
        let entry = Entry {
            key: key.clone(),
            value: value.to_string(),
        };
        let Ok(json) = serde_json::to_string(&entry) else {
            return;
        };
        let final_path = root.join(key.file_name());
        let tmp_path = root.join(format!("{}.tmp.{}", key.file_name(), std::process::id()));
        if std::fs::write(&tmp_path, json).is_ok() && std::fs::rename(&tmp_path, &final_path).is_err() {
            let _ = std::fs::remove_file(&tmp_path);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_cache(tag: &str) -> (ResultCache, PathBuf) {
        let dir = std::env::temp_dir().join(format!("ringlab-cache-{tag}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        (ResultCache::open(&dir), dir)
    }

    fn key() -> CacheKey {
        CacheKey {
            ring_hash: "abc".into(),
            operation: "classify".into(),
            params: "{}".into(),
        }
    }

    #[test]
    fn put_then_get_is_byte_identical() {
        let (cache, dir) = temp_cache("roundtrip");
        let value = r#"{"holds":true}"#;
        cache.put(&key(), value);
        assert_eq!(cache.get(&key()).as_deref(), Some(value));
        let _ = std::fs::remove_dir_all(dir);
    }

    #[test]
    fn different_params_miss() {
        let (cache, dir) = temp_cache("params");
        cache.put(&key(), "v1");
        let mut other = key();
        other.params = "changed".into();
        assert_eq!(cache.get(&other), None);
        let _ = std::fs::remove_dir_all(dir);
    }

    #[test]
    fn corrupted_entry_is_evicted() {
        let (cache, dir) = temp_cache("corrupt");
        cache.put(&key(), "value");
        let file = dir.join(key().file_name());
        std::fs::write(&file, "not json").unwrap();
        assert_eq!(cache.get(&key()), None);
        assert!(!file.exists(), "corrupted entry must be removed");
        let _ = std::fs::remove_dir_all(dir);
    }

    #[test]
    fn disabled_cache_always_misses() {
        let cache = ResultCache::disabled();
        cache.put(&key(), "value");
        assert_eq!(cache.get(&key()), None);
        assert!(!cache.is_enabled());
    }
}
