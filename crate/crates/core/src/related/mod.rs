//! Multiset derangements, words with no adjacent repeats and words with no
//! double descents, whose `t`-graded enumerators coincide with (the images
//! under `omega` of) Eulerian quasisymmetric functions.

pub mod derangements;
pub mod identities;
pub mod words;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{invalid, Result};
use crate::eulerian::{a_poly, PermClass, Stat};
use crate::polyalg::{Poly, Var};
use crate::symfunc::MonExpansion;

pub use derangements::{d_graded, d_poly, multiset_derangements, MultisetDerangement};
pub use identities::{
    gessel_identities, verify_askey_ismail, verify_multiset_derangements, verify_no_adjacent_repeats,
    verify_stanley_words,
};
pub use words::{descents, u_graded, u_tilde_graded, words, y_graded, y_poly, ConstrainedWord, WordConstraint};

/// Largest word length or array order enumerated here.
pub const RELATED_SIZE_CAP: usize = 7;

/// A `t`-graded enumerator: entry `j` is the coefficient of `t^j`.
pub type Graded = Vec<MonExpansion>;

fn check_caps(n: usize, nvars: usize) -> Result<()> {
    if n > RELATED_SIZE_CAP || nvars > RELATED_SIZE_CAP {
        return invalid(format!("n = {n}, N = {nvars} exceeds the cap {RELATED_SIZE_CAP}"));
    }
    Ok(())
}

/// Content vector to coefficients of `t^0, t^1, ...`.
type Tally = BTreeMap<Vec<u32>, Vec<i64>>;

fn tally_add(tally: &mut Tally, content: &[u32], grade: &[i64]) {
    let slot = tally.entry(content.to_vec()).or_default();
    if slot.len() < grade.len() {
        slot.resize(grade.len(), 0);
    }
    for (s, g) in slot.iter_mut().zip(grade) {
        *s += g;
    }
}

fn merge_tallies(mut a: Tally, b: Tally) -> Tally {
    for (k, v) in b {
        tally_add(&mut a, &k, &v);
    }
    a
}

fn tally_to_graded(nvars: usize, tally: Tally) -> Result<Graded> {
    let len = tally.values().filter_map(|g| g.iter().rposition(|&c| c != 0)).max().map_or(0, |top| top + 1);
    let mut out = vec![MonExpansion::new(nvars); len];
    for (content, grades) in tally {
        for (j, &c) in grades.iter().enumerate().take(len) {
            out[j].add_term(content.clone(), &BigRational::from_integer(BigInt::from(c)))?;
        }
    }
    Ok(out)
}

/// Coefficient of `t^j`, zero past the top degree.
pub fn grade(g: &Graded, j: usize, nvars: usize) -> MonExpansion {
    g.get(j).cloned().unwrap_or_else(|| MonExpansion::new(nvars))
}

/// Exponent vector of a word over `1..=nvars`.
fn content_of(w: &[u32], nvars: usize) -> Vec<u32> {
    let mut c = vec![0u32; nvars];
    for &v in w {
        c[v as usize - 1] += 1;
    }
    c
}

/// `sum_{sigma in D_n} q^{comaj(sigma) + exc(sigma)}`, the dimension
/// polynomial attached to derangements.
pub fn derangement_comaj_exc(n: usize) -> Result<Poly> {
    let a = a_poly(&[Stat::Comaj, Stat::Exc], &PermClass::FixedPoints(n, 0))?.value;
    let rules = BTreeMap::from([(Var::T, Poly::var(Var::Q))]);
    a.substitute(&rules)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comaj_exc_small() {
        assert_eq!(derangement_comaj_exc(0).unwrap(), Poly::one());
        assert_eq!(derangement_comaj_exc(1).unwrap(), Poly::zero());
        // 21: comaj = 1 - 1 = 0, exc = 1
        assert_eq!(derangement_comaj_exc(2).unwrap(), Poly::var(Var::Q));
        let d4 = derangement_comaj_exc(4).unwrap();
        assert_eq!(d4.eval_ones(), BigInt::from(9));
    }

    #[test]
    fn caps() {
        assert!(d_graded(8, 2).is_err());
        assert!(y_graded(3, 8).is_err());
    }
}
