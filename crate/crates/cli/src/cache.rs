//! On-disk cache of `Q` expansions. Each entry is one file holding a format
//! tag, the key, a SHA-256 of the payload and the payload itself, the
//! canonical text rendering of the symmetric function. Entries that fail
//! any check are recomputed.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use eqsym::combinatorics::partitions;
use eqsym::eulerian::{q_sym, Selector, EULERIAN_SIZE_CAP};
use eqsym::{Basis, SymF};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

pub const FORMAT_TAG: &str = "eqsym-cache/1";
const EXT: &str = "entry";

/// Object kind, parameters, basis and value cap.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CacheKey {
    pub kind: &'static str,
    pub params: String,
    pub basis: Basis,
    pub cap: usize,
}

impl CacheKey {
    pub fn q(selector: &Selector, basis: Basis) -> CacheKey {
        CacheKey { kind: "q", params: selector.to_string(), basis, cap: EULERIAN_SIZE_CAP }
    }

    pub fn render(&self) -> String {
        format!("{}|{}|{}|{}", self.kind, self.params, self.basis.prefix(), self.cap)
    }

    fn file_name(&self) -> String {
        format!("{}.{EXT}", &sha256_hex(&self.render())[..20])
    }
}

fn sha256_hex(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

#[derive(Debug, PartialEq)]
pub enum Lookup {
    Hit(SymF),
    Miss,
    Corrupt(String),
}

/// A parsed entry file.
#[derive(Debug)]
pub struct Entry {
    pub key: String,
    pub value: SymF,
}

fn parse_entry(text: &str) -> std::result::Result<Entry, String> {
    let mut lines = text.splitn(4, '\n');
    let tag = lines.next().unwrap_or_default();
    if tag != FORMAT_TAG {
        return Err(format!("format tag {tag:?}"));
    }
    let key = lines.next().and_then(|l| l.strip_prefix("key ")).ok_or("missing key line")?;
    let sum = lines.next().and_then(|l| l.strip_prefix("sha256 ")).ok_or("missing checksum line")?;
    let payload = lines.next().ok_or("missing payload")?.trim_end_matches('\n');
    if sha256_hex(payload) != sum {
        return Err("checksum mismatch".into());
    }
    let value: SymF = payload.parse().map_err(|e| format!("payload: {e}"))?;
    Ok(Entry { key: key.to_string(), value })
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn get(&self, key: &CacheKey) -> Lookup {
        let path = self.dir.join(key.file_name());
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(e.to_string()),
        };
        match parse_entry(&text) {
            Ok(e) if e.key == key.render() && e.value.basis() == key.basis => Lookup::Hit(e.value),
            Ok(e) => Lookup::Corrupt(format!("key {:?} stored under {:?}", e.key, key.render())),
            Err(why) => Lookup::Corrupt(why),
        }
    }

    /// Writes through a temporary file and a rename, so readers never see
    /// a partial entry and concurrent writers of one key do not interleave.
    pub fn put(&self, key: &CacheKey, value: &SymF) -> Result<()> {
        let payload = value.to_string();
        let back: SymF = payload.parse().context("rendering does not re-parse")?;
        anyhow::ensure!(&back == value, "rendering of {} does not round-trip", key.render());
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let name = key.file_name();
        let tmp = self.dir.join(format!("{name}.tmp.{}.{:?}", std::process::id(), std::thread::current().id()));
        {
            let mut f = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
            write!(f, "{FORMAT_TAG}\nkey {}\nsha256 {}\n{payload}\n", key.render(), sha256_hex(&payload))?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.dir.join(name))?;
        Ok(())
    }

    /// Cached `Q` in `basis`; missing or corrupt entries are recomputed
    /// and rewritten.
    pub fn q(&self, selector: &Selector, basis: Basis) -> Result<SymF> {
        let key = CacheKey::q(selector, basis);
        if let Lookup::Hit(f) = self.get(&key) {
            return Ok(f);
        }
        let f = q_sym(selector, basis)?;
        self.put(&key, &f)?;
        Ok(f)
    }

    fn entry_paths(&self) -> Result<Vec<PathBuf>> {
        let mut out = Vec::new();
        match fs::read_dir(&self.dir) {
            Ok(rd) => {
                for e in rd {
                    let p = e?.path();
                    if p.extension().is_some_and(|x| x == EXT) {
                        out.push(p);
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        out.sort();
        Ok(out)
    }

    /// `(key or file name, parsed entry or reason)` for every entry file,
    /// sorted by key.
    pub fn list(&self) -> Result<Vec<(String, std::result::Result<Entry, String>)>> {
        let mut out = Vec::new();
        for p in self.entry_paths()? {
            let parsed = fs::read_to_string(&p).map_err(|e| e.to_string()).and_then(|t| parse_entry(&t));
            let label = match &parsed {
                Ok(e) => e.key.clone(),
                Err(_) => p.file_name().unwrap_or_default().to_string_lossy().into_owned(),
            };
            out.push((label, parsed));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Removes every entry and stray temporary file; returns the count.
    pub fn clear(&self) -> Result<usize> {
        let mut removed = 0;
        let rd = match fs::read_dir(&self.dir) {
            Ok(rd) => rd,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        for e in rd {
            let p = e?.path();
            let name = p.file_name().unwrap_or_default().to_string_lossy().into_owned();
            if name.ends_with(&format!(".{EXT}")) || name.contains(&format!(".{EXT}.tmp.")) {
                fs::remove_file(&p)?;
                removed += 1;
            }
        }
        Ok(removed)
    }

    /// Stores `Q_{n,j}`, `Q_{n,j,k}` and `Q_{lambda,j}` in the `h` basis for
    /// every `n <= n_max`; returns the number of entries written.
    pub fn warm(&self, n_max: usize) -> Result<usize> {
        let selectors = selectors_up_to(n_max);
        selectors.par_iter().try_for_each(|s| -> Result<()> {
            let f = q_sym(s, Basis::H)?;
            self.put(&CacheKey::q(s, Basis::H), &f)
        })?;
        Ok(selectors.len())
    }

    /// Validates every entry and recomputes a deterministic tenth of them
    /// (every tenth in key order, at least one).
    pub fn check(&self) -> Result<CheckSummary> {
        let entries = self.list()?;
        let mut summary = CheckSummary { entries: entries.len(), ..Default::default() };
        let valid: Vec<&Entry> = entries
            .iter()
            .filter_map(|(label, e)| match e {
                Ok(e) => Some(e),
                Err(why) => {
                    summary.corrupt.push(format!("{label}: {why}"));
                    None
                }
            })
            .collect();
        for (i, e) in valid.iter().enumerate() {
            if i % 10 != 0 {
                continue;
            }
            summary.sampled += 1;
            match recompute(&e.key) {
                Ok(fresh) if fresh == e.value => {}
                Ok(_) => summary.mismatched.push(e.key.clone()),
                Err(why) => summary.mismatched.push(format!("{}: {why}", e.key)),
            }
        }
        Ok(summary)
    }
}

#[derive(Debug, Default)]
pub struct CheckSummary {
    pub entries: usize,
    pub sampled: usize,
    pub corrupt: Vec<String>,
    pub mismatched: Vec<String>,
}

impl CheckSummary {
    pub fn ok(&self) -> bool {
        self.corrupt.is_empty() && self.mismatched.is_empty()
    }
}

fn recompute(key: &str) -> Result<SymF> {
    let fields: Vec<&str> = key.split('|').collect();
    let [kind, params, basis, _cap] = fields[..] else {
        anyhow::bail!("malformed key {key:?}");
    };
    anyhow::ensure!(kind == "q", "unknown kind {kind:?}");
    let selector: Selector = params.parse()?;
    Ok(q_sym(&selector, basis.parse()?)?)
}

pub fn selectors_up_to(n_max: usize) -> Vec<Selector> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for j in 0..n.max(1) {
            out.push(Selector::NJ { n, j });
            for k in 0..=n {
                out.push(Selector::NJK { n, j, k });
            }
            for lambda in partitions(n) {
                out.push(Selector::LambdaJ { lambda, j });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path());
        let sel = Selector::NJ { n: 4, j: 1 };
        let key = CacheKey::q(&sel, Basis::H);
        assert_eq!(cache.get(&key), Lookup::Miss);
        let f = cache.q(&sel, Basis::H).unwrap();
        assert_eq!(cache.get(&key), Lookup::Hit(f.clone()));

        let path = dir.path().join(key.file_name());
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replace("h[", "e[")).unwrap();
        assert!(matches!(cache.get(&key), Lookup::Corrupt(_)));
        assert_eq!(cache.q(&sel, Basis::H).unwrap(), f);
        assert_eq!(cache.get(&key), Lookup::Hit(f));
    }

    #[test]
    fn warm_list_check_clear() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path().join("nested"));
        assert!(cache.list().unwrap().is_empty());
        let written = cache.warm(3).unwrap();
        assert_eq!(cache.list().unwrap().len(), selectors_up_to(3).len());
        assert!(written > 10);
        let summary = cache.check().unwrap();
        assert!(summary.ok() && summary.sampled >= 1);
        assert_eq!(cache.clear().unwrap(), written);
        assert!(cache.list().unwrap().is_empty());
    }
}
