//! Explicit monomial expansions in finitely many variables.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::symf::{Basis, SymF};
use crate::combinatorics::permutation::next_permutation;
use crate::combinatorics::Partition;
use crate::error::{invalid, Error, Result};

/// Polynomial in `x_1..x_N`; keys are exponent vectors of length `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonExpansion {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// Number of distinct rearrangements of `v`.
fn orbit_size(v: &[u32]) -> u128 {
    let mut counts: BTreeMap<u32, u128> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_default() += 1;
    }
    let fact = |k: u128| (1..=k).product::<u128>();
    counts.values().fold(fact(v.len() as u128), |acc, &c| acc / fact(c))
}

impl MonExpansion {
    pub fn new(nvars: usize) -> MonExpansion {
        MonExpansion { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &BigRational) -> Result<()> {
        if exps.len() != self.nvars {
            return invalid(format!("exponent vector of length {} in {} variables", exps.len(), self.nvars));
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(exps.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
        Ok(())
    }

    pub fn add(&self, o: &MonExpansion) -> Result<MonExpansion> {
        if self.nvars != o.nvars {
            return invalid(format!("variable counts differ: {} vs {}", self.nvars, o.nvars));
        }
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> MonExpansion {
        let mut out = MonExpansion::new(self.nvars);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), &(x * c)).expect("same length");
        }
        out
    }

    /// Monomial expansion of a symmetric function; parts beyond `N` vanish.
    pub fn from_symf(f: &SymF, nvars: usize) -> Result<MonExpansion> {
        let m = f.convert(Basis::M)?;
        let mut out = MonExpansion::new(nvars);
        for (lambda, c) in m.terms() {
            if lambda.len() > nvars {
                continue;
            }
            let mut v: Vec<u32> = lambda.parts().iter().map(|&x| x as u32).collect();
            v.resize(nvars, 0);
            v.sort_unstable();
            loop {
                out.add_term(v.clone(), c)?;
                if !next_permutation(&mut v) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Coefficients constant on every orbit of exponent rearrangements.
    pub fn is_symmetric(&self) -> bool {
        let mut orbits: BTreeMap<Vec<u32>, (&BigRational, u128)> = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut key = k.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            match orbits.get_mut(&key) {
                None => {
                    orbits.insert(key, (c, 1));
                }
                Some((c0, n)) => {
                    if *c0 != c {
                        return false;
                    }
                    *n += 1;
                }
            }
        }
        orbits.iter().all(|(k, (_, n))| *n == orbit_size(k))
    }

    /// Reads off the `m`-basis expansion.
    pub fn to_symf(&self) -> Result<SymF> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric(format!("monomial expansion in {} variables", self.nvars)));
        }
        let mut terms = Vec::new();
        for (k, c) in &self.terms {
            let mut sorted = k.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if &sorted == k {
                terms.push((Partition::from_parts(k.iter().map(|&x| x as usize)), c.clone()));
            }
        }
        Ok(SymF::from_terms(Basis::M, terms))
    }

    /// `d/dx_N` followed by `x_N = 0`, leaving `N - 1` variables.
    pub fn derive_last_at_zero(&self) -> Result<MonExpansion> {
        if self.nvars == 0 {
            return invalid("no variable to differentiate");
        }
        let mut out = MonExpansion::new(self.nvars - 1);
        for (k, c) in &self.terms {
            if k[self.nvars - 1] == 1 {
                out.add_term(k[..self.nvars - 1].to_vec(), c)?;
            }
        }
        Ok(out)
    }
}

/// Renders e.g. `x1^2*x2 + 2*x1*x2*x3`, largest exponent vector first.
impl fmt::Display for MonExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { format!("x{}", v + 1) } else { format!("x{}^{e}", v + 1) })
                .collect();
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::symf::sym;

    #[test]
    fn renders() {
        let m = MonExpansion::from_symf(&sym("m[2] + 2*m[1,1]"), 2).unwrap();
        assert_eq!(m.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(MonExpansion::new(3).to_string(), "0");
    }

    #[test]
    fn expansion_of_e2_and_h2() {
        let e2 = MonExpansion::from_symf(&sym("e[2]"), 3).unwrap();
        assert_eq!(e2.len(), 3);
        assert!(e2.is_symmetric());
        let h2 = MonExpansion::from_symf(&sym("h[2]"), 2).unwrap();
        assert_eq!(h2.len(), 3);
        assert_eq!(h2.to_symf().unwrap(), sym("m[2] + m[1,1]"));
    }

    #[test]
    fn asymmetric_detected() {
        let mut f = MonExpansion::new(2);
        f.add_term(vec![2, 0], &BigRational::from_integer(1.into())).unwrap();
        assert!(!f.is_symmetric());
        assert!(f.to_symf().is_err());
    }
}
