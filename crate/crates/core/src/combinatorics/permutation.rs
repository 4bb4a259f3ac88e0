use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::partition::Partition;
use crate::error::{invalid, Error, Result};
use crate::polyalg::{Poly, Var};

/// Default size cap for exhaustive enumeration.
pub const DEFAULT_SIZE_CAP: usize = 10;

/// One-line notation on `[n]`; `n = 0` is the empty word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub des_set: Vec<usize>,
    pub exc_set: Vec<usize>,
    pub exd_set: Vec<usize>,
    pub des: usize,
    pub exc: usize,
    pub maj: usize,
    pub inv: usize,
    pub fix: usize,
    pub comaj: usize,
    pub cycle_type: Partition,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Permutation> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return invalid(format!("{word:?} is not a permutation of [{n}]"));
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { word: (1..=n).collect() }
    }

    /// Builds a permutation of `[n]` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n || seen[x] {
                    return invalid(format!("bad cycle list {cycles:?} on [{n}]"));
                }
                seen[x] = true;
                word[x - 1] = c[(i + 1) % c.len()];
            }
        }
        Ok(Permutation { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `sigma(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.word[i - 1] > self.word[i]).collect()
    }

    pub fn excedance_set(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.word[i - 1] > i).collect()
    }

    /// Descents of the word with excedance letters barred, under the order
    /// `1' < ... < n' < 1 < ... < n`.
    pub fn exd_set(&self) -> Vec<usize> {
        let mask = self.exd_mask();
        (1..self.len()).filter(|&i| mask >> (i - 1) & 1 == 1).collect()
    }

    /// Bit `i-1` set iff `i` lies in the Exd set.
    pub fn exd_mask(&self) -> u32 {
        let n = self.len();
        let key = |i: usize| {
            let v = self.word[i - 1];
            if v > i {
                v
            } else {
                n + v
            }
        };
        let mut mask = 0;
        for i in 1..n {
            if key(i) > key(i + 1) {
                mask |= 1 << (i - 1);
            }
        }
        mask
    }

    pub fn des(&self) -> usize {
        (1..self.len()).filter(|&i| self.word[i - 1] > self.word[i]).count()
    }

    pub fn exc(&self) -> usize {
        (1..=self.len()).filter(|&i| self.word[i - 1] > i).count()
    }

    pub fn maj(&self) -> usize {
        (1..self.len()).filter(|&i| self.word[i - 1] > self.word[i]).sum()
    }

    pub fn fix(&self) -> usize {
        (1..=self.len()).filter(|&i| self.word[i - 1] == i).count()
    }

    pub fn inv(&self) -> usize {
        let w = &self.word;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn comaj(&self) -> usize {
        let n = self.len();
        n * n.saturating_sub(1) / 2 - self.maj()
    }

    /// Cycles with the smallest element first, sorted by smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.word[x - 1];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts(self.cycles().iter().map(|c| c.len()))
    }

    pub fn statistics(&self) -> Statistics {
        let des_set = self.descent_set();
        let exc_set = self.excedance_set();
        let maj = des_set.iter().sum();
        Statistics {
            des: des_set.len(),
            exc: exc_set.len(),
            exd_set: self.exd_set(),
            maj,
            inv: self.inv(),
            fix: self.fix(),
            comaj: self.comaj(),
            cycle_type: self.cycle_type(),
            des_set,
            exc_set,
        }
    }

    /// Cycle notation such as `(1,4,6,3)(2,5)(7,8)`.
    pub fn cycle_notation(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.word.len() > 9 { "," } else { "" };
        let s: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits `32541`, or comma-separated letters for `n > 9`.
    fn from_str(s: &str) -> Result<Permutation> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation::identity(0));
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad letter in {s:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad letter {c:?}"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

/// Rearranges `w` into its lexicographic successor; false at the last one.
pub fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Lexicographic stream over a set of permutations.
pub struct Permutations {
    current: Option<Vec<usize>>,
    /// Positions `< frozen` never change (used to split work by prefix).
    frozen: usize,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ[self.frozen..]) {
            self.current = Some(succ);
        }
        Some(Permutation { word: cur })
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity { what: "permutation size", requested: n, cap });
    }
    Ok(())
}

/// All of `S_n` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    enumerate_permutations_capped(n, DEFAULT_SIZE_CAP)
}

pub fn enumerate_permutations_capped(n: usize, cap: usize) -> Result<Permutations> {
    check_cap(n, cap)?;
    Ok(Permutations { current: Some((1..=n).collect()), frozen: 0 })
}

/// Permutations of `[n]` with `sigma(1) = first`, lexicographically.
pub fn enumerate_with_first(n: usize, first: usize) -> Result<Permutations> {
    check_cap(n, DEFAULT_SIZE_CAP)?;
    if first == 0 || first > n {
        return invalid(format!("first letter {first} outside [{n}]"));
    }
    let mut w = vec![first];
    w.extend((1..=n).filter(|&x| x != first));
    Ok(Permutations { current: Some(w), frozen: 1 })
}

/// Permutations of a given cycle type, in lexicographic order.
pub fn enumerate_by_cycle_type(lambda: &Partition) -> Result<impl Iterator<Item = Permutation>> {
    let target = lambda.clone();
    Ok(enumerate_permutations(lambda.size())?.filter(move |p| p.cycle_type() == target))
}

/// `A_n(t) = sum t^des`, checked against the excedance enumerator.
pub fn eulerian_poly(n: usize) -> Result<Poly> {
    let mut by_des = vec![0i64; n.max(1)];
    let mut by_exc = vec![0i64; n.max(1)];
    for p in enumerate_permutations(n)? {
        by_des[p.des()] += 1;
        by_exc[p.exc()] += 1;
    }
    if by_des != by_exc {
        return Err(Error::InvalidInput(format!("des and exc distributions differ at n = {n}")));
    }
    Ok(by_des
        .iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (j, &c)| &acc + &Poly::term(c, &[(Var::T, j as i32)])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let st = perm("32541").statistics();
        assert_eq!(st.des_set, vec![1, 3, 4]);
        assert_eq!(st.exc_set, vec![1, 3]);
        assert_eq!((st.des, st.exc, st.inv, st.maj), (3, 2, 6, 8));
        assert_eq!(perm("531462").exd_set(), vec![1, 4]);
    }

    #[test]
    fn identity_and_empty() {
        let st = Permutation::identity(4).statistics();
        assert!(st.des_set.is_empty() && st.exc_set.is_empty() && st.exd_set.is_empty());
        assert_eq!(st.fix, 4);
        assert_eq!(st.cycle_type, Partition::new(vec![1, 1, 1, 1]).unwrap());
        let e = Permutation::identity(0).statistics();
        assert_eq!((e.des, e.exc, e.maj, e.inv, e.fix, e.comaj), (0, 0, 0, 0, 0, 0));
        assert!(e.cycle_type.is_empty());
    }

    #[test]
    fn malformed_words() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_permutations(0).unwrap().count(), 1);
        assert_eq!(enumerate_permutations(3).unwrap().count(), 6);
        assert_eq!(enumerate_permutations(4).unwrap().filter(|p| p.exc() == 1).count(), 11);
        assert!(enumerate_permutations(11).is_err());
        let all: Vec<_> = enumerate_permutations(4).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let split: usize = (1..=5).map(|f| enumerate_with_first(5, f).unwrap().count()).sum();
        assert_eq!(split, 120);
    }

    #[test]
    fn cycle_type_classes() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(enumerate_by_cycle_type(&p(&[5])).unwrap().count(), 24);
        assert_eq!(enumerate_by_cycle_type(&p(&[1, 1, 1])).unwrap().count(), 1);
        assert_eq!(enumerate_by_cycle_type(&p(&[2, 2])).unwrap().filter(|s| s.exc() == 2).count(), 3);
    }

    #[test]
    fn cycles_round_trip() {
        let s = perm("45162387");
        assert_eq!(s.cycle_notation(), "(1,4,6,3)(2,5)(7,8)");
        assert_eq!(Permutation::from_cycles(8, &s.cycles()).unwrap(), s);
    }

    #[test]
    fn eulerian_polynomials() {
        assert_eq!(eulerian_poly(0).unwrap(), Poly::one());
        assert_eq!(eulerian_poly(2).unwrap(), poly("1 + t"));
        assert_eq!(eulerian_poly(4).unwrap(), poly("1 + 11*t + 11*t^2 + t^3"));
    }

    #[test]
    fn exd_lemmas_small() {
        for n in 0..=6 {
            for s in enumerate_permutations(n).unwrap() {
                let exd = s.exd_set();
                assert_eq!(exd.iter().sum::<usize>(), s.maj() - s.exc());
                let expected = if n == 0 || s.at(1) == 1 { s.des() } else { s.des() - 1 };
                assert_eq!(exd.len(), expected, "{s}");
                assert_eq!(s.comaj() + s.maj(), n * n.saturating_sub(1) / 2);
            }
        }
    }
}
