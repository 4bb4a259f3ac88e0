//! Lyndon and increasing factorizations.
//!
//! A Lyndon word here is strictly larger than each of its proper rotations.
//! That is the classical notion over the reversed alphabet, so the
//! factorization is the classical one computed with the comparison flipped.
//! Its factors are nonincreasing in the reversed-alphabet lexicographic
//! order, which agrees with the natural lexicographic order except that a
//! proper prefix counts as larger; `lyndon_order` captures this.

use std::cmp::Ordering;
use std::ops::Range;

use crate::combinatorics::Partition;

/// Lexicographic order over the reversed alphabet, flipped: first
/// difference decides by the natural order, and a proper prefix is larger.
pub fn lyndon_order<T: Ord>(u: &[T], v: &[T]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    v.len().cmp(&u.len())
}

/// Strictly larger than every proper rotation.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    let n = w.len();
    n > 0
        && (1..n).all(|r| {
            let rot = w[r..].iter().chain(&w[..r]);
            w.iter().cmp(rot) == Ordering::Greater
        })
}

/// Factor boundaries of the Lyndon factorization (Duval's algorithm with
/// the comparison reversed).
pub fn lyndon_ranges<T: Ord>(w: &[T]) -> Vec<Range<usize>> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && w[k] >= w[j] {
            if w[k] > w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(i..i + j - k);
            i += j - k;
        }
    }
    out
}

pub fn lyndon_factorize<T: Ord + Clone>(w: &[T]) -> Vec<Vec<T>> {
    lyndon_ranges(w).into_iter().map(|r| w[r].to_vec()).collect()
}

/// Partition formed by the Lyndon factor lengths.
pub fn lyndon_type<T: Ord>(w: &[T]) -> Partition {
    Partition::from_parts(lyndon_ranges(w).into_iter().map(|r| r.len()))
}

/// Factor boundaries of the increasing factorization `a_i^{j_i} u_i` with
/// `u_i` nonempty over letters below `a_i` and `a_1 <= a_2 <= ...`, if any.
/// The factorization is read greedily: the run of `a_i` is maximal and
/// `u_i` stops at the first letter `>= a_i`.
pub fn increasing_ranges<T: Ord>(w: &[T]) -> Option<Vec<Range<usize>>> {
    if w.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let a = &w[i];
        let mut j = i;
        while j < w.len() && w[j] == *a {
            j += 1;
        }
        let tail = j;
        while j < w.len() && w[j] < *a {
            j += 1;
        }
        if j == tail {
            return None;
        }
        out.push(i..j);
        i = j;
    }
    Some(out)
}

pub fn increasing_factorize<T: Ord + Clone>(w: &[T]) -> Option<Vec<Vec<T>>> {
    increasing_ranges(w).map(|rs| rs.into_iter().map(|r| w[r].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::parse_word;
    use proptest::prelude::*;

    fn digits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn banner_factorization() {
        let w = parse_word("2'27'57'5'47").unwrap();
        let f: Vec<String> = lyndon_factorize(&w).iter().map(|x| crate::combinatorics::format_word(x)).collect();
        assert_eq!(f, vec!["2'2", "7'5", "7'5'47"]);
        assert_eq!(lyndon_type(&w), Partition::from_parts([4, 2, 2]));
    }

    #[test]
    fn integer_word_factorizations() {
        let w = digits("87886699558795");
        let inc: Vec<Vec<u8>> = increasing_factorize(&w).unwrap();
        assert_eq!(inc, vec![digits("87"), digits("8866"), digits("995587"), digits("95")]);
        assert_eq!(lyndon_factorize(&w), vec![digits("87"), digits("8866"), digits("99558795")]);
    }

    #[test]
    fn single_letters() {
        assert_eq!(lyndon_factorize(&[3u8]), vec![vec![3]]);
        assert!(increasing_factorize(&[3u8]).is_none());
        assert!(lyndon_factorize::<u8>(&[]).is_empty());
        // a prefix pair stays one factor
        assert_eq!(lyndon_factorize(&digits("221")), vec![digits("221")]);
    }

    /// All factorizations into Lyndon words that are nonincreasing under
    /// `lyndon_order`, found by search.
    fn all_lyndon_factorizations(w: &[u8]) -> Vec<Vec<Vec<u8>>> {
        if w.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for cut in 1..=w.len() {
            let head = &w[..cut];
            if !is_lyndon(head) {
                continue;
            }
            for rest in all_lyndon_factorizations(&w[cut..]) {
                if rest.first().map_or(true, |f| lyndon_order(head, f) != Ordering::Greater) {
                    let mut v = vec![head.to_vec()];
                    v.extend(rest);
                    out.push(v);
                }
            }
        }
        out
    }

    proptest! {
        #[test]
        fn factorization_is_the_unique_one(w in prop::collection::vec(1u8..4, 0..9)) {
            let all = all_lyndon_factorizations(&w);
            prop_assert_eq!(all.len(), 1);
            prop_assert_eq!(&all[0], &lyndon_factorize(&w));
        }

        #[test]
        fn increasing_exists_iff_no_singleton_factor(w in prop::collection::vec(1u8..5, 1..10)) {
            let has = increasing_factorize(&w).is_some();
            prop_assert_eq!(has, lyndon_type(&w).multiplicity(1) == 0);
            if let Some(f) = increasing_factorize(&w) {
                prop_assert_eq!(f.concat(), w);
            }
        }
    }
}
