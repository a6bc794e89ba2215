//! Append-only result cache.
//!
//! Each line is `key lattice_cap enum_cap complete checksum record`, where
//! `checksum` is the SHA-256 of the other five fields. A line that fails to
//! parse or whose checksum does not match marks the whole file as corrupt:
//! it is then ignored for lookups and never appended to.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use normcover::{Caps, PermGroup};
use sha2::{Digest, Sha256};

use crate::record::Record;

/// Hex SHA-256 of the degree and the sorted generator images.
pub fn fingerprint(group: &PermGroup) -> String {
    let mut images: Vec<Vec<u32>> = group
        .generators()
        .iter()
        .map(|g| g.images().to_vec())
        .collect();
    images.sort();
    images.dedup();
    let mut h = Sha256::new();
    h.update(b"group\n");
    h.update((group.degree() as u64).to_le_bytes());
    for im in &images {
        h.update((im.len() as u64).to_le_bytes());
        for &x in im {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

/// Hex SHA-256 of arbitrary key parts, for entries that are not groups.
pub fn key_of(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Entry {
    key: String,
    lattice: u64,
    enumeration: u64,
    complete: bool,
    record: String,
}

fn checksum(key: &str, lattice: u64, enumeration: u64, complete: bool, record: &str) -> String {
    let body = format!("{key} {lattice} {enumeration} {complete} {record}");
    hex::encode(Sha256::digest(body.as_bytes()))
}

impl Entry {
    fn line(&self) -> String {
        let sum = checksum(
            &self.key,
            self.lattice,
            self.enumeration,
            self.complete,
            &self.record,
        );
        format!(
            "{} {} {} {} {} {}",
            self.key, self.lattice, self.enumeration, self.complete, sum, self.record
        )
    }

    fn parse(line: &str) -> Option<Entry> {
        let mut it = line.splitn(6, ' ');
        let key = it.next()?.to_string();
        let lattice = it.next()?.parse().ok()?;
        let enumeration = it.next()?.parse().ok()?;
        let complete = it.next()?.parse().ok()?;
        let sum = it.next()?;
        let record = it.next()?.to_string();
        if key.len() != 64 || sum != checksum(&key, lattice, enumeration, complete, &record) {
            return None;
        }
        Some(Entry {
            key,
            lattice,
            enumeration,
            complete,
            record,
        })
    }
}

pub struct Cache {
    path: PathBuf,
    entries: Vec<Entry>,
    corrupt: bool,
}

impl Cache {
    /// Loads the cache at `path`. A missing file is an empty cache.
    pub fn open(path: &Path) -> Result<Cache> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(e).with_context(|| format!("reading cache {}", path.display())),
        };
        let mut entries = Vec::new();
        let mut corrupt = false;
        for line in text.lines().filter(|l| !l.is_empty()) {
            match Entry::parse(line) {
                Some(e) => entries.push(e),
                None => {
                    corrupt = true;
                    break;
                }
            }
        }
        if corrupt {
            eprintln!(
                "warning: cache {} failed its integrity check; ignoring it",
                path.display()
            );
            entries.clear();
        }
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
            corrupt,
        })
    }

    /// The latest entry for `key` that answers under `caps`. A complete
    /// result answers under any caps; a result cut short by a cap answers
    /// only when the current caps are no larger.
    pub fn lookup(&self, key: &str, caps: &Caps) -> Option<Record> {
        self.entries
            .iter()
            .rev()
            .find(|e| {
                e.key == key
                    && (e.complete
                        || (caps.lattice <= e.lattice && caps.enumeration <= e.enumeration))
            })
            .and_then(|e| Record::parse(&e.record))
    }

    /// Appends an entry, unless the file is corrupt.
    pub fn store(&mut self, key: &str, caps: &Caps, complete: bool, record: &Record) -> Result<()> {
        if self.corrupt {
            return Ok(());
        }
        let entry = Entry {
            key: key.to_string(),
            lattice: caps.lattice,
            enumeration: caps.enumeration,
            complete,
            record: record.to_string(),
        };
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening cache {}", self.path.display()))?;
        writeln!(f, "{}", entry.line())?;
        self.entries.push(entry);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use normcover::constructions::named::sym;

    #[test]
    fn store_lookup_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let caps = Caps::default();
        let key = fingerprint(&sym(4).unwrap());
        let rec = Record::new().with("sigma", 4);
        let mut c = Cache::open(&path).unwrap();
        assert_eq!(c.lookup(&key, &caps), None);
        c.store(&key, &caps, true, &rec).unwrap();
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.lookup(&key, &caps.with_lattice(10)), Some(rec.clone()));

        let skipped = Record::new().with("skipped", "cap");
        let other = fingerprint(&sym(5).unwrap());
        let mut c = Cache::open(&path).unwrap();
        c.store(&other, &caps.with_lattice(100), false, &skipped)
            .unwrap();
        assert_eq!(c.lookup(&other, &caps.with_lattice(50)), Some(skipped));
        assert_eq!(c.lookup(&other, &caps.with_lattice(200)), None);

        let text = fs::read_to_string(&path)
            .unwrap()
            .replace("sigma=4", "sigma=5");
        fs::write(&path, text).unwrap();
        let c = Cache::open(&path).unwrap();
        assert!(c.corrupt);
        assert_eq!(c.lookup(&key, &caps), None);
    }

    #[test]
    fn fingerprint_ignores_generator_order() {
        use normcover::perm::parse_perm_list;
        let a =
            PermGroup::from_generators(3, parse_perm_list("(1,2),(1,2,3)", 3).unwrap()).unwrap();
        let b =
            PermGroup::from_generators(3, parse_perm_list("(1,2,3),(1,2)", 3).unwrap()).unwrap();
        assert_eq!(fingerprint(&a), fingerprint(&b));
        let c =
            PermGroup::from_generators(4, parse_perm_list("(1,2,3),(1,2)", 4).unwrap()).unwrap();
        assert_ne!(fingerprint(&a), fingerprint(&c));
    }
}
