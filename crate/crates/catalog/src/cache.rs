//! Content-addressed invariant cache with atomic writes.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

use crate::CatalogError;

/// Engine version; records written by other versions are ignored.
pub const ENGINE_VERSION: &str = concat!("homdim-", env!("CARGO_PKG_VERSION"), "/1");

const EXTENSION: &str = "rec";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub input_hash: String,
    /// Check id or invariant name.
    pub name: String,
    pub cutoff: usize,
    pub modulus: u32,
    pub seed: u64,
    /// Ordered `key = value` lines.
    pub payload: Vec<(String, String)>,
    pub version: String,
}

impl InvariantRecord {
    pub fn new(input_hash: &str, name: &str, cutoff: usize, modulus: u32, seed: u64) -> Self {
        InvariantRecord {
            input_hash: input_hash.into(),
            name: name.into(),
            cutoff,
            modulus,
            seed,
            payload: Vec::new(),
            version: ENGINE_VERSION.into(),
        }
    }

    fn key_lines(&self) -> String {
        format!(
            "version = {}\ninput = {}\nname = {}\ncutoff = {}\nmodulus = {}\nseed = {}\n",
            self.version, self.input_hash, self.name, self.cutoff, self.modulus, self.seed
        )
    }

    /// File stem: hash of every key field.
    pub fn key(&self) -> String {
        hex::encode(Sha256::digest(self.key_lines().as_bytes()))
    }

    fn encode(&self) -> String {
        let mut out = self.key_lines();
        out.push_str("---\n");
        for (k, v) in &self.payload {
            out.push_str(&format!("{k} = {v}\n"));
        }
        out
    }

    fn decode(text: &str) -> Option<InvariantRecord> {
        let (head, body) = text.split_once("---\n")?;
        let mut fields = head
            .lines()
            .map(|l| l.split_once(" = ").map(|(k, v)| (k, v.to_string())));
        let mut next = |name: &str| match fields.next()? {
            Some((k, v)) if k == name => Some(v),
            _ => None,
        };
        let version = next("version")?;
        let input_hash = next("input")?;
        let name = next("name")?;
        let cutoff = next("cutoff")?.parse().ok()?;
        let modulus = next("modulus")?.parse().ok()?;
        let seed = next("seed")?.parse().ok()?;
        let payload = body
            .lines()
            .map(|l| {
                l.split_once(" = ")
                    .map(|(k, v)| (k.to_string(), v.to_string()))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(InvariantRecord {
            input_hash,
            name,
            cutoff,
            modulus,
            seed,
            payload,
            version,
        })
    }

    fn same_key(&self, other: &InvariantRecord) -> bool {
        self.key_lines() == other.key_lines()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(InvariantRecord),
    Miss,
    /// The record file exists but does not decode; holds its key.
    Corrupt(String),
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Cache, CatalogError> {
        fs::create_dir_all(dir).map_err(|e| CatalogError::Io(format!("{}: {e}", dir.display())))?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.{EXTENSION}"))
    }

    /// The stored record for the key fields of `probe`. Unreadable or
    /// mismatching records are misses.
    pub fn get(&self, probe: &InvariantRecord) -> Option<InvariantRecord> {
        match self.lookup(probe) {
            Lookup::Hit(rec) => Some(rec),
            _ => None,
        }
    }

    /// Like [`Cache::get`], but tells corrupt records apart from misses.
    pub fn lookup(&self, probe: &InvariantRecord) -> Lookup {
        let Ok(text) = fs::read_to_string(self.path(&probe.key())) else {
            return Lookup::Miss;
        };
        match InvariantRecord::decode(&text) {
            Some(rec) if rec.same_key(probe) => Lookup::Hit(rec),
            Some(_) => Lookup::Miss,
            None => Lookup::Corrupt(probe.key()),
        }
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// over the final path.
    pub fn put(&self, rec: &InvariantRecord) -> Result<(), CatalogError> {
        let io = |e: std::io::Error| CatalogError::Io(format!("{}: {e}", self.dir.display()));
        let mut tmp = NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(rec.encode().as_bytes()).map_err(io)?;
        tmp.persist(self.path(&rec.key()))
            .map_err(|e| io(e.error))?;
        Ok(())
    }

    fn records(&self) -> Result<Vec<PathBuf>, CatalogError> {
        let entries = fs::read_dir(&self.dir).map_err(|e| CatalogError::Io(e.to_string()))?;
        let mut out: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == EXTENSION))
            .collect();
        out.sort();
        Ok(out)
    }

    /// `(records, records written by the current engine version)`.
    pub fn stats(&self) -> Result<(usize, usize), CatalogError> {
        let files = self.records()?;
        let current = files
            .iter()
            .filter_map(|p| fs::read_to_string(p).ok())
            .filter_map(|t| InvariantRecord::decode(&t))
            .filter(|r| r.version == ENGINE_VERSION)
            .count();
        Ok((files.len(), current))
    }

    pub fn clear(&self) -> Result<usize, CatalogError> {
        let files = self.records()?;
        for p in &files {
            fs::remove_file(p).map_err(|e| CatalogError::Io(e.to_string()))?;
        }
        Ok(files.len())
    }
}
