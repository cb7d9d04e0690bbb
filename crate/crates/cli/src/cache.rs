//! On-disk cache for expensive artifacts (t-tables, censuses).
//!
//! Each entry is one JSON file holding the payload verbatim together with a
//! format version tag, the key it was stored under and a SHA-256 of the
//! payload. Anything that does not line up is treated as a miss, so a stale
//! or damaged cache only ever costs a recomputation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

/// Bumped whenever a cached payload format changes.
pub const CACHE_VERSION: &str = "fplwb-cache-1";

/// Upper bound on entry files we are willing to read back.
const MAX_ENTRY_BYTES: u64 = 1 << 30;

/// What an entry stores: artifact kind, grid size and a parameter string
/// (hashed into the file name).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub kind: String,
    pub n: usize,
    pub params: String,
}

impl CacheKey {
    pub fn new(kind: &str, n: usize, params: impl Into<String>) -> Self {
        CacheKey {
            kind: kind.to_string(),
            n,
            params: params.into(),
        }
    }

    pub fn params_hash(&self) -> String {
        sha256_hex(self.params.as_bytes())
    }

    fn file_name(&self) -> String {
        let kind: String = self
            .kind
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '-' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        format!("{kind}-n{}-{}.json", self.n, &self.params_hash()[..16])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub key: CacheKey,
    pub sha256: String,
    pub payload: String,
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache entry is not valid JSON: {0}")]
    Malformed(String),
    #[error("cache entry has version {found:?}, expected {expected:?}")]
    Version { found: String, expected: String },
    #[error("cache entry belongs to a different key")]
    KeyMismatch,
    #[error("cache payload checksum does not match")]
    Checksum,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl CacheEntry {
    pub fn new(version: &str, key: &CacheKey, payload: &str) -> Self {
        CacheEntry {
            version: version.to_string(),
            key: key.clone(),
            sha256: sha256_hex(payload.as_bytes()),
            payload: payload.to_string(),
        }
    }

    pub fn encode(&self) -> String {
        serde_json::to_string(self).expect("cache entry serializes")
    }

    /// Parses an entry and checks its version tag and payload checksum.
    pub fn decode(bytes: &[u8], version: &str) -> Result<Self, CacheError> {
        let entry: CacheEntry =
            serde_json::from_slice(bytes).map_err(|e| CacheError::Malformed(e.to_string()))?;
        if entry.version != version {
            return Err(CacheError::Version {
                found: entry.version,
                expected: version.to_string(),
            });
        }
        if sha256_hex(entry.payload.as_bytes()) != entry.sha256 {
            return Err(CacheError::Checksum);
        }
        Ok(entry)
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache::with_version(dir, CACHE_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        Cache {
            dir: dir.into(),
            version: version.to_string(),
        }
    }

    /// `--cache-dir`, then `FPLWB_CACHE` (both folded into `explicit` by the
    /// argument parser), then the platform cache directory.
    pub fn default_dir(explicit: Option<&Path>) -> Option<PathBuf> {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| dirs::cache_dir().map(|d| d.join("fplwb")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// The stored payload, or why there is none usable.
    pub fn try_get(&self, key: &CacheKey) -> Result<Option<String>, CacheError> {
        let path = self.path_for(key);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut bytes = Vec::new();
        std::io::Read::read_to_end(&mut std::io::Read::take(file, MAX_ENTRY_BYTES), &mut bytes)?;
        let entry = CacheEntry::decode(&bytes, &self.version)?;
        if entry.key != *key {
            return Err(CacheError::KeyMismatch);
        }
        Ok(Some(entry.payload))
    }

    /// Like [`Cache::try_get`] but logs problems and reports them as a miss.
    pub fn get(&self, key: &CacheKey) -> Option<String> {
        match self.try_get(key) {
            Ok(hit) => hit,
            Err(e) => {
                log::warn!("ignoring cache entry {}: {e}", self.path_for(key).display());
                None
            }
        }
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// over the final name so readers never see a partial entry.
    pub fn put(&self, key: &CacheKey, payload: &str) -> Result<(), CacheError> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(
            CacheEntry::new(&self.version, key, payload)
                .encode()
                .as_bytes(),
        )?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path_for(key)).map_err(|e| e.error)?;
        Ok(())
    }

    /// Cached payload if usable, otherwise `compute()`, stored for next time.
    /// Write failures are logged and otherwise ignored.
    pub fn get_or_compute<E>(
        &self,
        key: &CacheKey,
        compute: impl FnOnce() -> Result<String, E>,
    ) -> Result<String, E> {
        if let Some(hit) = self.get(key) {
            return Ok(hit);
        }
        let payload = compute()?;
        if let Err(e) = self.put(key, &payload) {
            log::warn!(
                "could not write cache entry {}: {e}",
                self.path_for(key).display()
            );
        }
        Ok(payload)
    }
}
