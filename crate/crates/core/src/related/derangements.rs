//! Two-row arrays with a weakly increasing top row, a rearranged bottom row
//! and no column repeating an entry.

use rayon::prelude::*;

use super::{check_caps, merge_tallies, tally_add, tally_to_graded, Graded, Tally};
use crate::error::{invalid, Result};
use crate::symfunc::MonExpansion;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisetDerangement {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl MultisetDerangement {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<MultisetDerangement> {
        if top.contains(&0) || top.windows(2).any(|w| w[0] > w[1]) {
            return invalid(format!("top row {top:?} is not weakly increasing over positive integers"));
        }
        let mut sorted = bottom.clone();
        sorted.sort_unstable();
        if sorted != top {
            return invalid(format!("bottom row {bottom:?} is not a rearrangement of {top:?}"));
        }
        if let Some(i) = top.iter().zip(&bottom).position(|(a, b)| a == b) {
            return invalid(format!("column {} repeats {}", i + 1, top[i]));
        }
        Ok(MultisetDerangement { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// Columns whose top entry is smaller than the bottom one.
    pub fn exc(&self) -> usize {
        self.top.iter().zip(&self.bottom).filter(|(a, b)| a < b).count()
    }
}

/// All weak compositions of `n` into `parts` parts, lexicographically.
pub(crate) fn contents(n: usize, parts: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == parts {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in 0..=left {
            cur.push(c);
            go(left - c, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n as u32, parts, &mut Vec::new(), &mut out);
    out
}

fn top_row(content: &[u32]) -> Vec<u32> {
    content.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat(i as u32 + 1).take(c as usize)).collect()
}

/// Visits every admissible bottom row for the top row of `content`.
fn for_each_bottom(content: &[u32], f: &mut impl FnMut(&[u32], &[u32])) {
    fn go(top: &[u32], rem: &mut [u32], cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32], &[u32])) {
        let i = cur.len();
        if i == top.len() {
            f(top, cur);
            return;
        }
        for v in 0..rem.len() {
            let value = v as u32 + 1;
            if rem[v] == 0 || value == top[i] {
                continue;
            }
            rem[v] -= 1;
            cur.push(value);
            go(top, rem, cur, f);
            cur.pop();
            rem[v] += 1;
        }
    }
    let top = top_row(content);
    let mut rem = content.to_vec();
    go(&top, &mut rem, &mut Vec::with_capacity(top.len()), f);
}

/// Every multiset derangement with the given content, in lexicographic
/// order of bottom rows.
pub fn multiset_derangements(content: &[u32]) -> Vec<MultisetDerangement> {
    let mut out = Vec::new();
    for_each_bottom(content, &mut |top, bottom| {
        out.push(MultisetDerangement { top: top.to_vec(), bottom: bottom.to_vec() });
    });
    out
}

fn exc_histogram(content: &[u32]) -> Vec<i64> {
    let n: u32 = content.iter().sum();
    let mut hist = vec![0i64; n as usize + 1];
    for_each_bottom(content, &mut |top, bottom| {
        hist[top.iter().zip(bottom).filter(|(a, b)| a < b).count()] += 1;
    });
    hist
}

/// `sum_j d_{n,j} t^j` in `x_1..x_nvars`.
pub fn d_graded(n: usize, nvars: usize) -> Result<Graded> {
    check_caps(n, nvars)?;
    let tally = contents(n, nvars)
        .par_iter()
        .map(|c| {
            let mut t = Tally::new();
            let hist = exc_histogram(c);
            if hist.iter().any(|&x| x != 0) {
                tally_add(&mut t, c, &hist);
            }
            t
        })
        .reduce(Tally::new, merge_tallies);
    tally_to_graded(nvars, tally)
}

/// `d_{n,j}` in `x_1..x_nvars`: multiset derangements of order `n` with
/// `j` excedances, weighted by their top rows.
pub fn d_poly(n: usize, j: usize, nvars: usize) -> Result<MonExpansion> {
    Ok(super::grade(&d_graded(n, nvars)?, j, nvars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(c.into())
    }

    #[test]
    fn order_two() {
        let d = d_poly(2, 1, 2).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coefficient(&[1, 1]), int(1));
        assert!(d_poly(2, 0, 2).unwrap().is_empty());
        assert!(d_poly(1, 0, 3).unwrap().is_empty());
        assert_eq!(d_poly(0, 0, 2).unwrap().coefficient(&[0, 0]), int(1));
    }

    #[test]
    fn listing_matches_histogram() {
        let content = [2, 1, 2];
        let list = multiset_derangements(&content);
        let hist = exc_histogram(&content);
        for (j, &c) in hist.iter().enumerate() {
            assert_eq!(list.iter().filter(|d| d.exc() == j).count() as i64, c);
        }
        for d in &list {
            assert!(MultisetDerangement::new(d.top().to_vec(), d.bottom().to_vec()).is_ok());
        }
        // 11 cannot be deranged
        assert!(multiset_derangements(&[2]).is_empty());
    }

    #[test]
    fn validation() {
        assert!(MultisetDerangement::new(vec![1, 2], vec![2, 1]).is_ok());
        assert!(MultisetDerangement::new(vec![1, 2], vec![1, 2]).is_err());
        assert!(MultisetDerangement::new(vec![2, 1], vec![1, 2]).is_err());
        assert!(MultisetDerangement::new(vec![1, 2], vec![2, 2]).is_err());
    }

    #[test]
    fn contents_count() {
        assert_eq!(contents(3, 3).len(), 10);
        assert_eq!(contents(0, 0), vec![Vec::<u32>::new()]);
        assert!(contents(2, 0).is_empty());
    }
}
