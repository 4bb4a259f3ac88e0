//! Irreducible characters of the symmetric group by rim-hook removal on
//! beta-sets, memoized across calls.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::combinatorics::Partition;
use crate::error::{invalid, Result};

type Memo = RwLock<HashMap<(Partition, Vec<usize>), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `chi^lambda` evaluated at the class of cycle type `mu`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return invalid(format!("character sizes differ: {lambda} vs {mu}"));
    }
    Ok(chi(lambda, mu.parts()))
}

fn chi(lambda: &Partition, mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    if lambda.len() <= 1 {
        // The trivial character; also covers the empty-sum base.
        return 1;
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.parts()[i] + (l - 1 - i)).collect();
    let mut total = 0i64;
    for i in 0..l {
        let b = beta[i];
        if b < k {
            continue;
        }
        let nb = b - k;
        if beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts = (0..l).map(|j| nbeta[j] - (l - 1 - j));
        let smaller = Partition::from_parts(parts);
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * chi(&smaller, rest);
    }
    memo().write().unwrap().insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..7 {
            for mu in partitions(n) {
                assert_eq!(mn_character(&part(&[n]), &mu).unwrap(), 1);
                let ones = Partition::new(vec![1; n]).unwrap();
                assert_eq!(mn_character(&ones, &mu).unwrap(), mu.sign());
            }
        }
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert!(mn_character(&part(&[2]), &part(&[1])).is_err());
    }

    /// Degrees (values at the identity) by the hook length formula.
    #[test]
    fn degrees_match_hook_lengths() {
        for n in 1..9 {
            for lambda in partitions(n) {
                let conj = lambda.conjugate();
                let mut hooks: u128 = 1;
                for (i, &row) in lambda.parts().iter().enumerate() {
                    for j in 0..row {
                        hooks *= (row - j - 1 + conj.parts()[j] - i - 1 + 1) as u128;
                    }
                }
                let fact: u128 = (1..=n as u128).product();
                let ones = Partition::new(vec![1; n]).unwrap();
                assert_eq!(mn_character(&lambda, &ones).unwrap() as u128, fact / hooks, "{lambda}");
            }
        }
    }

    /// Column orthogonality: sum_lambda chi^lambda_mu chi^lambda_nu = z_mu delta.
    #[test]
    fn column_orthogonality() {
        use num_bigint::BigInt;
        for n in 1..8 {
            let ps = partitions(n);
            for mu in &ps {
                for nu in &ps {
                    let s: i64 = ps
                        .iter()
                        .map(|l| mn_character(l, mu).unwrap() * mn_character(l, nu).unwrap())
                        .sum();
                    let expect = if mu == nu { mu.z() } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expect);
                }
            }
        }
    }
}
