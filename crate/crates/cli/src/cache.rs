//! Content-addressed on-disk store for reduced Gröbner bases.
//!
//! An entry lives at `<dir>/<sha256(key)>.json` and repeats the full key, so
//! a hash collision or a damaged file reads as a miss. Writes go through a
//! temporary file and a rename under a process-wide lock.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use vdlab::groebner::{BasisStore, GroebnerBasis};
use vdlab::Polynomial;

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    nvars: usize,
    basis: Vec<String>,
}

pub struct DiskCache {
    dir: PathBuf,
    lock: Mutex<()>,
}

impl DiskCache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir, lock: Mutex::new(()) })
    }

    /// `$VDLAB_CACHE_DIR`, else `$XDG_CACHE_HOME/vdlab`, else `~/.cache/vdlab`.
    pub fn default_dir() -> PathBuf {
        if let Some(d) = std::env::var_os("VDLAB_CACHE_DIR") {
            return PathBuf::from(d);
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return Path::new(&d).join("vdlab");
        }
        match std::env::var_os("HOME") {
            Some(h) => Path::new(&h).join(".cache").join("vdlab"),
            None => PathBuf::from(".vdlab-cache"),
        }
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{hex}.json"))
    }

    fn read(&self, path: &Path, key: &str, nvars: usize) -> Result<Option<Vec<Polynomial>>, String> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.to_string()),
        };
        let entry: Entry = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if entry.key != key || entry.nvars != nvars {
            return Err("key mismatch".into());
        }
        entry
            .basis
            .iter()
            .map(|s| Polynomial::parse(s, nvars).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}

impl BasisStore for DiskCache {
    fn load(&self, key: &str, nvars: usize) -> Option<Vec<Polynomial>> {
        let path = self.path_for(key);
        match self.read(&path, key, nvars) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("warning: ignoring corrupt cache entry {}: {e}", path.display());
                None
            }
        }
    }

    fn save(&self, key: &str, gb: &GroebnerBasis) {
        let entry = Entry {
            key: key.to_string(),
            nvars: gb.nvars(),
            basis: gb.basis().iter().map(ToString::to_string).collect(),
        };
        let path = self.path_for(key);
        let _guard = self.lock.lock().unwrap_or_else(|e| e.into_inner());
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let written = fs::File::create(&tmp).and_then(|mut f| {
            f.write_all(serde_json::to_string(&entry).expect("entry serializes").as_bytes())?;
            f.sync_all()
        });
        if let Err(e) = written.and_then(|_| fs::rename(&tmp, &path)) {
            eprintln!("warning: could not write cache entry {}: {e}", path.display());
            let _ = fs::remove_file(&tmp);
        }
    }
}
