//! Power-sum to monomial transition matrices and their inverses, built once
//! per degree and shared behind a read-mostly lock.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{partitions, Partition};
use crate::error::{Error, Result};

/// Largest degree for which monomial transition tables are built.
pub const TABLE_DEGREE_CAP: usize = 12;

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_to_m[mu][lambda]`: coefficient of `m_lambda` in `p_mu`.
    pub p_to_m: Vec<Vec<BigInt>>,
    /// `m_to_p[lambda][mu]`: coefficient of `p_mu` in `m_lambda`.
    pub m_to_p: Vec<Vec<BigRational>>,
}

type Cache = RwLock<HashMap<usize, Arc<DegreeTables>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn tables(n: usize) -> Result<Arc<DegreeTables>> {
    if n > TABLE_DEGREE_CAP {
        return Err(Error::Capacity { what: "monomial transition degree", requested: n, cap: TABLE_DEGREE_CAP });
    }
    if let Some(t) = cache().read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(build(n));
    let mut w = cache().write().unwrap();
    Ok(w.entry(n).or_insert(built).clone())
}

fn build(n: usize) -> DegreeTables {
    let parts = partitions(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let p_to_m: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|mu| parts.iter().map(|lambda| BigInt::from(power_sum_monomial_coeff(mu, lambda))).collect())
        .collect();
    let m_to_p = invert(&p_to_m);
    DegreeTables { parts, index, p_to_m, m_to_p }
}

/// Number of ways to distribute the parts of `mu` into slots of sizes
/// `lambda` exactly, i.e. the coefficient of `x^lambda` in `p_mu`.
pub(crate) fn power_sum_monomial_coeff(mu: &Partition, lambda: &Partition) -> u128 {
    fn rec(mu: &[usize], idx: usize, caps: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u128>) -> u128 {
        if idx == mu.len() {
            return u128::from(caps.iter().all(|&c| c == 0));
        }
        if let Some(&v) = memo.get(&(idx, caps.clone())) {
            return v;
        }
        let part = mu[idx];
        let mut total = 0u128;
        let mut i = 0;
        while i < caps.len() {
            let c = caps[i];
            let mut j = i;
            while j < caps.len() && caps[j] == c {
                j += 1;
            }
            if c >= part {
                let mut next = caps.clone();
                next[i] = c - part;
                next.sort_unstable_by(|a, b| b.cmp(a));
                total += (j - i) as u128 * rec(mu, idx + 1, next, memo);
            }
            i = j;
        }
        memo.insert((idx, caps), total);
        total
    }
    if mu.size() != lambda.size() {
        return 0;
    }
    rec(mu.parts(), 0, lambda.parts().to_vec(), &mut HashMap::new())
}

fn invert(a: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("transition matrix is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < col {
                    let (lo, hi) = m.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = m.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_coefficients() {
        // p_1^2 = m_2 + 2 m_11
        assert_eq!(power_sum_monomial_coeff(&part(&[1, 1]), &part(&[2])), 1);
        assert_eq!(power_sum_monomial_coeff(&part(&[1, 1]), &part(&[1, 1])), 2);
        assert_eq!(power_sum_monomial_coeff(&part(&[2]), &part(&[1, 1])), 0);
        assert_eq!(power_sum_monomial_coeff(&part(&[1; 6]), &part(&[1; 6])), 720);
        assert_eq!(power_sum_monomial_coeff(&part(&[2, 1, 1]), &part(&[2, 2])), 2);
    }

    #[test]
    fn inverse_is_inverse() {
        for n in 0..=7 {
            let t = tables(n).unwrap();
            let k = t.parts.len();
            for i in 0..k {
                for j in 0..k {
                    let s: BigRational = (0..k)
                        .map(|l| &t.m_to_p[i][l] * BigRational::from_integer(t.p_to_m[l][j].clone()))
                        .sum();
                    let e = if i == j { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(s, e);
                }
            }
        }
        assert!(tables(TABLE_DEGREE_CAP + 1).is_err());
    }
}
