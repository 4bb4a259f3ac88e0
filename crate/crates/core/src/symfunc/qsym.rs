//! Quasisymmetric functions in the fundamental basis `F_{S,n}`, with
//! monomial expansion, symmetry detection and principal specializations.
//!
//! `F_{S,n}` is the sum of `x_{i_1}...x_{i_n}` over `i_1 >= ... >= i_n >= 1`
//! with a strict drop after every position in `S`. A subset of `[n-1]` is
//! stored as a bitmask, bit `i-1` standing for `i`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::MonExpansion;
use super::symf::{Basis, SymF};
use crate::combinatorics::permutation::next_permutation;
use crate::error::{invalid, Error, Result};
use crate::polyalg::{pochhammer, q_binomial, Poly, PolyFraction, TruncSeries, Var};

/// Largest degree handled by the subset-mask representation.
pub const QSYM_DEGREE_CAP: usize = 24;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QSymF {
    terms: BTreeMap<(usize, u32), BigRational>,
}

pub fn mask_of(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &i| m | (1 << (i - 1)))
}

pub fn set_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b as usize + 1).collect()
}

fn full_mask(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        (1u32 << (n - 1)) - 1
    }
}

fn mask_sum(mask: u32) -> usize {
    set_of(mask).into_iter().sum()
}

/// Descent mask of a monomial: partial sums of the nonzero exponents read
/// from the highest variable down, excluding the total.
fn monomial_descents(exps: &[u32]) -> u32 {
    let mut mask = 0;
    let mut acc = 0usize;
    let nonzero: Vec<u32> = exps.iter().rev().copied().filter(|&e| e > 0).collect();
    for &e in nonzero.iter().take(nonzero.len().saturating_sub(1)) {
        acc += e as usize;
        mask |= 1 << (acc - 1);
    }
    mask
}

/// Weak compositions of `n` into `k` parts.
fn weak_compositions(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 1 {
            cur.push(n as u32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=n {
            cur.push(a as u32);
            rec(n - a, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Strong compositions of `n` (as exponent vectors without zeros).
fn compositions(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..1u32 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut last = 0;
            for i in 1..n {
                if cuts >> (i - 1) & 1 == 1 {
                    parts.push((i - last) as u32);
                    last = i;
                }
            }
            parts.push((n - last) as u32);
            parts
        })
        .collect()
}

impl QSymF {
    pub fn zero() -> QSymF {
        QSymF::default()
    }

    pub fn one() -> QSymF {
        let mut f = QSymF::zero();
        f.add_mask(0, 0, &BigRational::one());
        f
    }

    /// `F_{S,n}`.
    pub fn fundamental(set: &[usize], n: usize) -> Result<QSymF> {
        if n > QSYM_DEGREE_CAP {
            return Err(Error::Capacity { what: "quasisymmetric degree", requested: n, cap: QSYM_DEGREE_CAP });
        }
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i >= n.max(1)) {
            return invalid(format!("{bad} is not in [{}]", n.saturating_sub(1)));
        }
        let mut f = QSymF::zero();
        f.add_mask(n, mask_of(set), &BigRational::one());
        Ok(f)
    }

    pub(crate) fn add_mask(&mut self, n: usize, mask: u32, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((n, mask)).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(n, mask));
        }
    }

    /// Adds `c * F_{mask,n}`; used when accumulating over permutations.
    pub fn add_fundamental(&mut self, n: usize, mask: u32, c: i64) {
        self.add_mask(n, mask, &BigRational::from_integer(BigInt::from(c)));
    }

    pub fn terms(&self) -> &BTreeMap<(usize, u32), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, set: &[usize], n: usize) -> BigRational {
        self.terms.get(&(n, mask_of(set))).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|k| k.0).collect();
        d.dedup();
        d
    }

    pub fn homogeneous_part(&self, n: usize) -> QSymF {
        QSymF { terms: self.terms.iter().filter(|(k, _)| k.0 == n).map(|(k, c)| (*k, c.clone())).collect() }
    }

    pub fn add(&self, o: &QSymF) -> QSymF {
        let mut out = self.clone();
        for (&(n, m), c) in &o.terms {
            out.add_mask(n, m, c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> QSymF {
        let mut out = QSymF::zero();
        for (&(n, m), x) in &self.terms {
            out.add_mask(n, m, &(x * c));
        }
        out
    }

    pub fn sub(&self, o: &QSymF) -> QSymF {
        self.add(&o.scale(&-BigRational::one()))
    }

    /// `F_{S,n} -> F_{[n-1] \ S, n}`.
    pub fn omega(&self) -> QSymF {
        let mut out = QSymF::zero();
        for (&(n, m), c) in &self.terms {
            out.add_mask(n, full_mask(n) & !m, c);
        }
        out
    }

    /// Coefficient of the monomial whose nonzero exponents, in variable
    /// order, form `composition`.
    fn composition_coefficient(&self, composition: &[u32]) -> BigRational {
        let n: usize = composition.iter().map(|&x| x as usize).sum();
        let d = monomial_descents(composition);
        self.terms
            .range((n, 0)..=(n, u32::MAX))
            .filter(|((_, s), _)| s & !d == 0)
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Exact expansion in `x_1..x_N`.
    pub fn to_monomial(&self, nvars: usize) -> Result<MonExpansion> {
        if nvars == 0 {
            return invalid("need at least one variable");
        }
        let mut out = MonExpansion::new(nvars);
        for n in self.degrees() {
            for exps in weak_compositions(n, nvars) {
                let d = monomial_descents(&exps);
                let c: BigRational = self
                    .terms
                    .range((n, 0)..=(n, u32::MAX))
                    .filter(|((_, s), _)| s & !d == 0)
                    .map(|(_, c)| c.clone())
                    .sum();
                out.add_term(exps, &c)?;
            }
        }
        Ok(out)
    }

    /// Symmetric in `x_1..x_N`; requires every degree to be at most `N`, where
    /// this is the same as symmetry in infinitely many variables.
    pub fn is_symmetric(&self, nvars: usize) -> Result<bool> {
        if let Some(d) = self.degree().filter(|&d| d > nvars) {
            return invalid(format!("degree {d} exceeds {nvars} variables"));
        }
        Ok(self.is_symmetric_function())
    }

    /// Symmetry as a formal quasisymmetric function: the coefficient of each
    /// composition equals that of its sorted rearrangement.
    pub fn is_symmetric_function(&self) -> bool {
        self.degrees().into_iter().all(|n| {
            let mut cache: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
            compositions(n).into_iter().all(|alpha| {
                let mut sorted = alpha.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                let want = cache.entry(sorted.clone()).or_insert_with(|| self.composition_coefficient(&sorted)).clone();
                self.composition_coefficient(&alpha) == want
            })
        })
    }

    /// The `m`-basis expansion; fails unless symmetric.
    pub fn to_symf(&self) -> Result<SymF> {
        if !self.is_symmetric_function() {
            return Err(Error::NotSymmetric(format!("{self}")));
        }
        let mut terms = Vec::new();
        for n in self.degrees() {
            for lambda in crate::combinatorics::partitions(n) {
                let exps: Vec<u32> = lambda.parts().iter().map(|&x| x as u32).collect();
                terms.push((lambda, self.composition_coefficient(&exps)));
            }
        }
        Ok(SymF::from_terms(Basis::M, terms))
    }

    /// Fundamental expansion of a symmetric function.
    pub fn from_symf(f: &SymF) -> Result<QSymF> {
        let m = f.convert(Basis::M)?;
        let mut out = QSymF::zero();
        for (lambda, c) in m.terms() {
            let n = lambda.size();
            if n > QSYM_DEGREE_CAP {
                return Err(Error::Capacity { what: "quasisymmetric degree", requested: n, cap: QSYM_DEGREE_CAP });
            }
            let mut alpha: Vec<u32> = lambda.parts().iter().map(|&x| x as u32).collect();
            alpha.sort_unstable();
            loop {
                // M_alpha = sum over T containing D(alpha) of (-1)^{|T - D|} F_T.
                let d = monomial_descents(&alpha);
                let free = full_mask(n) & !d;
                let mut sub = free;
                loop {
                    let sign = if sub.count_ones() % 2 == 0 { c.clone() } else { -c.clone() };
                    out.add_mask(n, d | sub, &sign);
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & free;
                }
                if !next_permutation(&mut alpha) {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn common_denominator(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Stable principal specialization `x_i = q^(i-1)`, summed termwise as
    /// `q^{sum S} / (q;q)_n`.
    pub fn ps_stable(&self) -> PolyFraction {
        let top = self.degree().unwrap_or(0);
        let l = self.common_denominator();
        let q = Poly::var(Var::Q);
        let mut num = Poly::zero();
        for (&(n, m), c) in &self.terms {
            let scaled = (c * BigRational::from_integer(l.clone())).to_integer();
            let mut cofactor = Poly::one();
            for i in n + 1..=top {
                cofactor = &cofactor * &(&Poly::one() - &q.pow(i as u32));
            }
            num = &num + &(Poly::term(scaled, &[(Var::Q, mask_sum(m) as i32)]) * cofactor);
        }
        let den = pochhammer(&q, top).scale(&l);
        PolyFraction::new(num, den).expect("nonzero denominator")
    }

    /// Principal specialization in `m` variables `1, q, ..., q^(m-1)`.
    pub fn ps_m(&self, m: usize) -> PolyFraction {
        let l = self.common_denominator();
        let mut num = Poly::zero();
        for (&(n, s), c) in &self.terms {
            let scaled = (c * BigRational::from_integer(l.clone())).to_integer();
            let value = if n == 0 {
                Poly::one()
            } else {
                let k = s.count_ones() as usize;
                if m < k + 1 {
                    Poly::zero()
                } else {
                    q_binomial(m - k - 1 + n, n).expect("k <= n").shift(&q_shift(mask_sum(s)))
                }
            };
            num = &num + &value.scale(&scaled);
        }
        PolyFraction::new(num, Poly::constant(l)).expect("nonzero denominator")
    }

    /// `sum_m ps_m(f) p^m` truncated after `p^order`.
    pub fn ps_m_sum(&self, order: usize) -> TruncSeries<PolyFraction> {
        TruncSeries::from_coeffs(Var::P, order, (0..=order).map(|m| self.ps_m(m)).collect())
    }
}

fn q_shift(e: usize) -> crate::polyalg::Exponents {
    let mut x = [0; crate::polyalg::poly::NVARS];
    x[Var::Q.index()] = e as i32;
    x
}

impl fmt::Display for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(n, m), c)| {
                let set: Vec<String> = set_of(m).iter().map(|x| x.to_string()).collect();
                let elem = format!("F[{{{}}},{n}]", set.join(","));
                if c.is_one() {
                    elem
                } else {
                    format!("{c}*{elem}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSymF({self})")
    }
}

/// Monomial expansion of a quasisymmetric function in `N` variables.
pub fn qsym_to_monomial(f: &QSymF, nvars: usize) -> Result<MonExpansion> {
    f.to_monomial(nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;
    use crate::symfunc::symf::{e, h, sym};

    #[test]
    fn fundamental_extremes() {
        for n in 1..=6 {
            let fh = QSymF::fundamental(&[], n).unwrap();
            assert_eq!(fh.to_symf().unwrap().convert(Basis::H).unwrap(), h(n));
            let all: Vec<usize> = (1..n).collect();
            let fe = QSymF::fundamental(&all, n).unwrap();
            assert_eq!(fe.to_symf().unwrap().convert(Basis::E).unwrap(), e(n));
        }
        assert!(QSymF::fundamental(&[3], 3).is_err());
        assert!(QSymF::fundamental(&[0], 3).is_err());
    }

    #[test]
    fn two_variable_expansion() {
        let f = QSymF::fundamental(&[1], 2).unwrap().to_monomial(2).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient(&[1, 1]), BigRational::one());
    }

    /// Brute force over weakly decreasing index sequences.
    fn brute_expansion(set: &[usize], n: usize, nvars: usize) -> MonExpansion {
        let mut out = MonExpansion::new(nvars);
        let mut seq = vec![1usize; n];
        loop {
            let ok = (0..n.saturating_sub(1)).all(|j| {
                seq[j] >= seq[j + 1] && (!set.contains(&(j + 1)) || seq[j] > seq[j + 1])
            });
            if ok {
                let mut exps = vec![0u32; nvars];
                for &i in &seq {
                    exps[i - 1] += 1;
                }
                out.add_term(exps, &BigRational::one()).unwrap();
            }
            let mut k = 0;
            while k < n && seq[k] == nvars {
                seq[k] = 1;
                k += 1;
            }
            if k == n {
                break;
            }
            seq[k] += 1;
        }
        out
    }

    #[test]
    fn monomial_expansion_matches_sequences() {
        for n in 0..=4 {
            for mask in 0..(1u32 << (n as u32).max(1) - 1) {
                let set = set_of(mask);
                let f = QSymF::fundamental(&set, n).unwrap();
                for nvars in 1..=4 {
                    assert_eq!(f.to_monomial(nvars).unwrap(), brute_expansion(&set, n, nvars), "{set:?} {n}");
                }
            }
        }
    }

    #[test]
    fn symmetry_detection() {
        assert!(!QSymF::fundamental(&[1], 3).unwrap().is_symmetric(3).unwrap());
        assert!(!QSymF::fundamental(&[1], 3).unwrap().to_monomial(3).unwrap().is_symmetric());
        assert!(QSymF::fundamental(&[], 2).unwrap().is_symmetric(2).unwrap());
        assert!(QSymF::fundamental(&[], 4).unwrap().is_symmetric(3).is_err());
    }

    #[test]
    fn h_agrees_with_truncated_monomials() {
        for n in 0..=7 {
            let f = QSymF::fundamental(&[], n).unwrap();
            for nvars in n.max(1)..=n.max(1) + 1 {
                let a = f.to_monomial(nvars).unwrap();
                let b = MonExpansion::from_symf(&h(n), nvars).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn symf_round_trip() {
        for n in 0..=6 {
            for lambda in partitions(n) {
                let f = SymF::basis_element(Basis::S, lambda);
                let q = QSymF::from_symf(&f).unwrap();
                assert!(q.is_symmetric_function());
                assert!(q.to_symf().unwrap().equals(&f).unwrap());
                assert_eq!(q.omega(), QSymF::from_symf(&f.omega().unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn stable_specializations() {
        let q = Poly::var(Var::Q);
        for n in 0..=6 {
            let f = QSymF::fundamental(&[], n).unwrap();
            assert_eq!(f.ps_stable(), PolyFraction::new(Poly::one(), pochhammer(&q, n)).unwrap());
        }
        let f = QSymF::fundamental(&[1, 3, 4], 5).unwrap();
        let want = PolyFraction::new(Poly::term(1, &[(Var::Q, 8)]), pochhammer(&q, 5)).unwrap();
        assert_eq!(f.ps_stable(), want);
        assert_eq!(QSymF::one().ps_stable(), PolyFraction::one());
    }

    #[test]
    fn stable_specialization_is_multiplicative_on_h() {
        let q = Poly::var(Var::Q);
        for n in 0..=6 {
            for lambda in partitions(n) {
                let f = QSymF::from_symf(&SymF::basis_element(Basis::H, lambda.clone())).unwrap();
                let den = lambda.parts().iter().fold(Poly::one(), |acc, &k| &acc * &pochhammer(&q, k));
                assert_eq!(f.ps_stable(), PolyFraction::new(Poly::one(), den).unwrap(), "{lambda}");
            }
        }
    }

    #[test]
    fn finite_specializations_match_substitution() {
        // Substitute 1, q, ..., q^(m-1) into the monomial expansion directly.
        let f = QSymF::fundamental(&[2], 3).unwrap().add(&QSymF::fundamental(&[1, 2], 3).unwrap());
        for m in 1..=4 {
            let mono = f.to_monomial(m).unwrap();
            let mut direct = Poly::zero();
            for (exps, c) in mono.terms() {
                let e: u32 = exps.iter().enumerate().map(|(i, &x)| i as u32 * x).sum();
                direct = &direct + &Poly::term(c.to_integer(), &[(Var::Q, e as i32)]);
            }
            assert_eq!(f.ps_m(m), PolyFraction::from_poly(direct));
        }
        let h2 = sym("h[2]");
        let sum = QSymF::from_symf(&h2).unwrap().ps_m_sum(3);
        assert_eq!(*sum.coefficient_of(0).unwrap(), PolyFraction::zero());
    }
}
