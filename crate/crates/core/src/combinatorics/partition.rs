use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Integer partition with parts stored weakly decreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return invalid(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(parts: impl IntoIterator<Item = usize>) -> Partition {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order `prod i^(m_i) m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                acc *= i * k;
            }
        }
        acc
    }

    /// `(-1)^(n - length)`, the sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// gcd of the parts (0 for the empty partition).
    pub fn gcd(&self) -> usize {
        self.0.iter().fold(0, |g, &p| g.gcd(&p))
    }

    /// The partition whose parts are those of `self` and `other` together.
    pub fn concat(&self, other: &Partition) -> Partition {
        Partition::from_parts(self.0.iter().chain(&other.0).copied())
    }

    pub fn scale(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Parts larger than one.
    pub fn without_ones(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    pub fn with_ones(&self, k: usize) -> Partition {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat(1).take(k));
        Partition(v)
    }

    /// Exponent notation, e.g. `3 2^2 1`.
    pub fn exponent_notation(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        let mut out = Vec::new();
        for (part, m) in self.multiplicities().into_iter().rev() {
            out.push(if m == 1 { part.to_string() } else { format!("{part}^{m}") });
        }
        out.join(" ")
    }
}

/// All partitions of `n` in reverse lexicographic order (`[n]` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions ordered by number of parts, then reverse lexicographically;
/// the row order of the character tables.
pub fn partitions_by_length(n: usize) -> Vec<Partition> {
    let mut v = partitions(n);
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    v
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[4,2]`, `4,2`, or an empty list.
    fn from_str(s: &str) -> Result<Partition> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(part(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(part(&[5]).z(), BigInt::from(5));
        assert_eq!(part(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
    }

    #[test]
    fn sum_of_inverse_centralizers_is_one() {
        use num_rational::BigRational;
        for n in 0..9 {
            let s: BigRational = partitions(n)
                .iter()
                .map(|l| BigRational::new(1.into(), l.z()))
                .sum();
            assert_eq!(s, BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn table_order_for_six() {
        let labels: Vec<String> = partitions_by_length(6).iter().map(|p| p.exponent_notation()).collect();
        assert_eq!(
            labels,
            vec!["6", "5 1", "4 2", "3^2", "4 1^2", "3 2 1", "2^3", "3 1^3", "2^2 1^2", "2 1^4", "1^6"]
        );
    }

    #[test]
    fn misc_accessors() {
        let l = part(&[4, 2, 2, 1]);
        assert_eq!(l.conjugate(), part(&[4, 3, 1, 1]));
        assert_eq!(l.gcd(), 1);
        assert_eq!(part(&[4, 2]).gcd(), 2);
        assert_eq!(l.multiplicity(2), 2);
        assert_eq!(l.without_ones(), part(&[4, 2, 2]));
        assert_eq!(part(&[3]).concat(&part(&[4, 1])), part(&[4, 3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("[4,2]".parse::<Partition>().unwrap(), part(&[4, 2]));
    }
}
