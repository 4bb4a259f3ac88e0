//! Words over `1..=N` restricted by local descent or repetition rules.

use rayon::prelude::*;
use serde::Serialize;

use super::{check_caps, content_of, merge_tallies, tally_add, tally_to_graded, Graded, Tally};
use crate::error::{invalid, Result};
use crate::symfunc::MonExpansion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WordConstraint {
    /// `w(i) != w(i+1)` throughout.
    NoAdjacentRepeat,
    /// No double descent and no descent at the last position.
    NoDoubleDescent,
    /// As `NoDoubleDescent`, and no descent at the first position either.
    NoDoubleDescentInterior,
}

impl WordConstraint {
    pub fn admits(self, w: &[u32]) -> bool {
        let n = w.len();
        match self {
            WordConstraint::NoAdjacentRepeat => w.windows(2).all(|p| p[0] != p[1]),
            WordConstraint::NoDoubleDescent => {
                w.windows(3).all(|p| !(p[0] > p[1] && p[1] > p[2])) && (n < 2 || w[n - 2] <= w[n - 1])
            }
            WordConstraint::NoDoubleDescentInterior => {
                WordConstraint::NoDoubleDescent.admits(w) && (n < 2 || w[0] <= w[1])
            }
        }
    }

    /// Whether some extension of `prefix` can still be admitted.
    fn prefix_ok(self, prefix: &[u32]) -> bool {
        let n = prefix.len();
        match self {
            WordConstraint::NoAdjacentRepeat => n < 2 || prefix[n - 2] != prefix[n - 1],
            WordConstraint::NoDoubleDescent => n < 3 || !(prefix[n - 3] > prefix[n - 2] && prefix[n - 2] > prefix[n - 1]),
            WordConstraint::NoDoubleDescentInterior => {
                WordConstraint::NoDoubleDescent.prefix_ok(prefix) && (n != 2 || prefix[0] <= prefix[1])
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstrainedWord {
    word: Vec<u32>,
    constraint: WordConstraint,
}

impl ConstrainedWord {
    pub fn new(word: Vec<u32>, constraint: WordConstraint) -> Result<ConstrainedWord> {
        if word.contains(&0) {
            return invalid(format!("{word:?} has a zero letter"));
        }
        if !constraint.admits(&word) {
            return invalid(format!("{word:?} violates {constraint:?}"));
        }
        Ok(ConstrainedWord { word, constraint })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn constraint(&self) -> WordConstraint {
        self.constraint
    }

    pub fn des(&self) -> usize {
        descents(&self.word)
    }
}

pub fn descents(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

fn for_each_word(n: usize, nvars: usize, c: WordConstraint, first: u32, f: &mut impl FnMut(&[u32])) {
    fn go(n: usize, nvars: u32, c: WordConstraint, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if cur.len() == n {
            if c.admits(cur) {
                f(cur);
            }
            return;
        }
        for v in 1..=nvars {
            cur.push(v);
            if c.prefix_ok(cur) {
                go(n, nvars, c, cur, f);
            }
            cur.pop();
        }
    }
    let mut cur = vec![first];
    go(n, nvars as u32, c, &mut cur, f);
}

/// Every admissible word of length `n` over `1..=nvars`, lexicographically.
pub fn words(n: usize, nvars: usize, c: WordConstraint) -> Result<Vec<ConstrainedWord>> {
    check_caps(n, nvars)?;
    let mut out = Vec::new();
    if n == 0 {
        out.push(ConstrainedWord { word: Vec::new(), constraint: c });
        return Ok(out);
    }
    for first in 1..=nvars as u32 {
        for_each_word(n, nvars, c, first, &mut |w| out.push(ConstrainedWord { word: w.to_vec(), constraint: c }));
    }
    Ok(out)
}

/// Sums `weight(des(w))` (coefficients of `t^0, t^1, ...`) over admissible
/// words of length `n >= 1`, parallel over the first letter.
fn graded_sum(n: usize, nvars: usize, c: WordConstraint, weight: impl Fn(usize) -> Vec<i64> + Sync) -> Result<Graded> {
    check_caps(n, nvars)?;
    let tally = (1..=nvars as u32)
        .into_par_iter()
        .map(|first| {
            let mut t = Tally::new();
            for_each_word(n, nvars, c, first, &mut |w| tally_add(&mut t, &content_of(w, nvars), &weight(descents(w))));
            t
        })
        .reduce(Tally::new, merge_tallies);
    tally_to_graded(nvars, tally)
}

fn unit(nvars: usize) -> Result<Graded> {
    let mut one = MonExpansion::new(nvars);
    one.add_term(vec![0; nvars], &num_rational::BigRational::from_integer(1.into()))?;
    Ok(vec![one])
}

/// `t^shift (1+t)^power`.
fn shifted_binomial(shift: usize, power: usize) -> Vec<i64> {
    let mut row = vec![0i64; shift + power + 1];
    let mut b = 1i64;
    for k in 0..=power {
        row[shift + k] = b;
        b = b * (power - k) as i64 / (k as i64 + 1);
    }
    row
}

fn single(j: usize) -> Vec<i64> {
    shifted_binomial(j, 0)
}

/// `sum_j Y_{n,j} t^j`: words with no adjacent repeats, graded by descents.
pub fn y_graded(n: usize, nvars: usize) -> Result<Graded> {
    if n == 0 {
        check_caps(n, nvars)?;
        return unit(nvars);
    }
    graded_sum(n, nvars, WordConstraint::NoAdjacentRepeat, single)
}

pub fn y_poly(n: usize, j: usize, nvars: usize) -> Result<MonExpansion> {
    Ok(super::grade(&y_graded(n, nvars)?, j, nvars))
}

/// `sum_w x^w t^des(w) (1+t)^(n-1-2 des(w))` over words of length `n` with
/// no double descent and no final descent; `1` for `n = 0`.
pub fn u_graded(n: usize, nvars: usize) -> Result<Graded> {
    if n == 0 {
        check_caps(n, nvars)?;
        return unit(nvars);
    }
    graded_sum(n, nvars, WordConstraint::NoDoubleDescent, |d| shifted_binomial(d, n - 1 - 2 * d))
}

/// `sum_w x^w t^(des(w)+1) (1+t)^(n-2-2 des(w))` over words of length `n`
/// that also have no initial descent; `1` for `n = 0` and `0` for `n = 1`.
pub fn u_tilde_graded(n: usize, nvars: usize) -> Result<Graded> {
    match n {
        0 => {
            check_caps(n, nvars)?;
            unit(nvars)
        }
        1 => {
            check_caps(n, nvars)?;
            Ok(Vec::new())
        }
        _ => graded_sum(n, nvars, WordConstraint::NoDoubleDescentInterior, |d| shifted_binomial(d + 1, n - 2 - 2 * d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(c.into())
    }

    #[test]
    fn small_y() {
        let y = y_poly(1, 0, 2).unwrap();
        assert_eq!((y.coefficient(&[1, 0]), y.coefficient(&[0, 1]), y.len()), (int(1), int(1), 2));
        let y = y_poly(2, 0, 2).unwrap();
        assert_eq!((y.coefficient(&[1, 1]), y.len()), (int(1), 1));
        assert_eq!(y_poly(2, 1, 2).unwrap().coefficient(&[1, 1]), int(1));
        assert_eq!(y_poly(0, 0, 3).unwrap().coefficient(&[0, 0, 0]), int(1));
    }

    #[test]
    fn constraints() {
        use WordConstraint::*;
        assert!(NoAdjacentRepeat.admits(&[1, 2, 1]));
        assert!(!NoAdjacentRepeat.admits(&[1, 1]));
        assert!(!NoDoubleDescent.admits(&[3, 2, 1, 4]));
        assert!(NoDoubleDescent.admits(&[1, 2]));
        assert!(!NoDoubleDescent.admits(&[2, 1]));
        assert!(NoDoubleDescent.admits(&[2, 1, 3]));
        assert!(!NoDoubleDescentInterior.admits(&[2, 1, 3]));
        assert!(NoDoubleDescentInterior.admits(&[1, 3, 2, 4]));
        assert!(ConstrainedWord::new(vec![1, 1], NoAdjacentRepeat).is_err());
        assert_eq!(ConstrainedWord::new(vec![1, 3, 2, 4], NoDoubleDescent).unwrap().des(), 1);
    }

    #[test]
    fn single_letters() {
        let u = u_graded(1, 3).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u[0].len(), 3);
        assert!(u_tilde_graded(1, 3).unwrap().is_empty());
        assert_eq!(shifted_binomial(1, 3), vec![0, 1, 3, 3, 1]);
    }

    proptest! {
        #[test]
        fn pruned_listing_matches_filter(n in 1usize..5, nvars in 1usize..4, which in 0usize..3) {
            let c = [WordConstraint::NoAdjacentRepeat, WordConstraint::NoDoubleDescent, WordConstraint::NoDoubleDescentInterior][which];
            let listed: Vec<Vec<u32>> = words(n, nvars, c).unwrap().into_iter().map(|w| w.word().to_vec()).collect();
            let mut all = Vec::new();
            let total = (nvars as u32).pow(n as u32);
            for code in 0..total {
                let w: Vec<u32> = (0..n).map(|i| code / (nvars as u32).pow((n - 1 - i) as u32) % nvars as u32 + 1).collect();
                if c.admits(&w) {
                    all.push(w);
                }
            }
            prop_assert_eq!(listed, all);
        }
    }
}
