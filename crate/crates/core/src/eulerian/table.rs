//! One pass over `S_n` collecting the joint distribution of cycle type, exc,
//! des, maj and the Exd set. Everything in this module is derived from it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::combinatorics::permutation::enumerate_with_first;
use crate::combinatorics::{Partition, Permutation};
use crate::error::{Error, Result};

/// Largest `n` for which the full table is built.
pub const EULERIAN_SIZE_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub cycle_type: Partition,
    pub exc: u32,
    pub des: u32,
    pub maj: u32,
    pub exd: u32,
}

impl ClassKey {
    pub fn of(p: &Permutation) -> ClassKey {
        ClassKey {
            cycle_type: p.cycle_type(),
            exc: p.exc() as u32,
            des: p.des() as u32,
            maj: p.maj() as u32,
            exd: p.exd_mask(),
        }
    }

    pub fn fix(&self) -> u32 {
        self.cycle_type.multiplicity(1) as u32
    }
}

pub struct EulerianTable {
    n: usize,
    rows: Vec<(ClassKey, u64)>,
}

impl EulerianTable {
    /// Enumerates `S_n` afresh, bypassing the shared cache.
    pub fn build(n: usize) -> Result<EulerianTable> {
        if n == 0 {
            return Ok(EulerianTable { n, rows: vec![(ClassKey::of(&Permutation::identity(0)), 1)] });
        }
        let parts: Vec<HashMap<ClassKey, u64>> = (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut local = HashMap::new();
                for p in enumerate_with_first(n, first).expect("within cap") {
                    *local.entry(ClassKey::of(&p)).or_insert(0) += 1;
                }
                local
            })
            .collect();
        let mut merged: BTreeMap<ClassKey, u64> = BTreeMap::new();
        for part in parts {
            for (k, c) in part {
                *merged.entry(k).or_insert(0) += c;
            }
        }
        Ok(EulerianTable { n, rows: merged.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rows sorted by key, each with its multiplicity.
    pub fn rows(&self) -> &[(ClassKey, u64)] {
        &self.rows
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.1).sum()
    }
}

type Cache = RwLock<HashMap<usize, Arc<EulerianTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The shared table for `S_n`.
pub fn table(n: usize) -> Result<Arc<EulerianTable>> {
    if n > EULERIAN_SIZE_CAP {
        return Err(Error::Capacity { what: "permutation size", requested: n, cap: EULERIAN_SIZE_CAP });
    }
    if let Some(t) = cache().read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(EulerianTable::build(n)?);
    Ok(cache().write().unwrap().entry(n).or_insert(built).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_are_factorials() {
        let mut f = 1u64;
        for n in 0..=7 {
            if n > 0 {
                f *= n as u64;
            }
            assert_eq!(table(n).unwrap().total(), f);
        }
        assert!(table(EULERIAN_SIZE_CAP + 1).is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let t = table(5).unwrap();
        let mut seq: BTreeMap<ClassKey, u64> = BTreeMap::new();
        for p in crate::combinatorics::permutation::enumerate_permutations(5).unwrap() {
            *seq.entry(ClassKey::of(&p)).or_insert(0) += 1;
        }
        assert_eq!(seq.into_iter().collect::<Vec<_>>(), t.rows().to_vec());
    }
}
