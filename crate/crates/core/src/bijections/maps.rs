//! The pair-to-ornament map and its inverse, and the banner-to-ornament map
//! and its inverse.

use std::cmp::Ordering;

use super::objects::{lyndon_sort, Banner, CompatiblePair, Necklace, Ornament};
use super::words::lyndon_factorize;
use crate::combinatorics::{BicoloredLetter, Permutation, Word};
use crate::error::Result;

/// Writes `sigma` in cycle form, bars every excedance position, and
/// replaces each `i` by `s_i`.
pub fn gr_phi(pair: &CompatiblePair) -> Result<Ornament> {
    let sigma = pair.sigma();
    let s = pair.s();
    let mut out = Vec::new();
    for cycle in sigma.cycles() {
        let word: Word = cycle
            .iter()
            .map(|&i| BicoloredLetter { value: s[i - 1], barred: sigma.at(i) > i })
            .collect();
        out.push(Necklace::new(&word)?);
    }
    Ok(Ornament::new(out))
}

/// Compares the infinite clockwise readings of `a` from `i` and of `b`
/// from `j`. Two periodic words agreeing on `|a| + |b|` letters are equal.
fn cmp_infinite(a: &[BicoloredLetter], i: usize, b: &[BicoloredLetter], j: usize) -> Ordering {
    for t in 0..a.len() + b.len() {
        match a[(i + t) % a.len()].cmp(&b[(j + t) % b.len()]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Inverse of `gr_phi`. Positions are ranked by their infinite readings,
/// ties going to the necklace that comes later in the stored order; the
/// `i`-th largest position receives label `i`.
pub fn gr_eta(r: &Ornament) -> Result<CompatiblePair> {
    let neck = r.necklaces();
    let mut positions: Vec<(usize, usize)> =
        neck.iter().enumerate().flat_map(|(k, n)| (0..n.len()).map(move |i| (k, i))).collect();
    positions.sort_by(|&(ka, ia), &(kb, ib)| {
        cmp_infinite(neck[kb].word(), ib, neck[ka].word(), ia).then(kb.cmp(&ka))
    });
    let mut label = neck.iter().map(|n| vec![0usize; n.len()]).collect::<Vec<_>>();
    for (rank, &(k, i)) in positions.iter().enumerate() {
        label[k][i] = rank + 1;
    }
    let s: Vec<u32> = positions.iter().map(|&(k, i)| neck[k].word()[i].value).collect();
    let sigma = Permutation::from_cycles(r.size(), &label)?;
    CompatiblePair::new(sigma, s)
}

/// Splits a banner into Lyndon factors and closes each into a necklace.
pub fn banner_to_ornament(b: &Banner) -> Result<Ornament> {
    let parts = lyndon_factorize(b.word())
        .into_iter()
        .map(|f| Necklace::new(&f))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ornament::new(parts))
}

/// Concatenates the necklaces' largest rotations in factorization order.
pub fn ornament_to_banner(r: &Ornament) -> Result<Banner> {
    let mut words: Vec<Word> = r.necklaces().iter().map(|n| n.word().to_vec()).collect();
    lyndon_sort(&mut words);
    Banner::new(words.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_example() {
        let sigma = Permutation::new(vec![4, 5, 1, 6, 2, 3, 8, 7]).unwrap();
        let pair = CompatiblePair::new(sigma, vec![7, 7, 7, 5, 5, 4, 2, 2]).unwrap();
        let r = gr_phi(&pair).unwrap();
        assert_eq!(r.to_string(), "{7'5'47,7'5,2'2}");
        assert_eq!(gr_eta(&r).unwrap(), pair);
    }

    #[test]
    fn eta_example() {
        let r: Ornament = "{7'3'35,7'35'3,7'35'3,5}".parse().unwrap();
        let pair = gr_eta(&r).unwrap();
        let expect = Permutation::from_cycles(13, &[vec![1, 8, 13, 6], vec![2, 11, 4, 9], vec![3, 12, 5, 10], vec![7]]).unwrap();
        assert_eq!(pair.sigma(), &expect);
        assert_eq!(pair.s(), &[7, 7, 7, 5, 5, 5, 5, 3, 3, 3, 3, 3, 3]);
        assert_eq!(gr_phi(&pair).unwrap(), r);
    }

    #[test]
    fn small_cases() {
        let id = CompatiblePair::new(Permutation::identity(3), vec![4, 4, 4]).unwrap();
        assert_eq!(gr_phi(&id).unwrap().to_string(), "{4,4,4}");
        let swap = CompatiblePair::new(Permutation::new(vec![2, 1]).unwrap(), vec![3, 3]).unwrap();
        assert_eq!(gr_phi(&swap).unwrap().to_string(), "{3'3}");
        let single: Ornament = "{6}".parse().unwrap();
        let p = gr_eta(&single).unwrap();
        assert_eq!((p.sigma().word(), p.s()), (&[1usize][..], &[6u32][..]));
    }

    #[test]
    fn banner_example() {
        let b: Banner = "2'27'57'5'47".parse().unwrap();
        let r = banner_to_ornament(&b).unwrap();
        assert_eq!(r.to_string(), "{7'5'47,7'5,2'2}");
        assert_eq!(ornament_to_banner(&r).unwrap(), b);
        let c: Banner = "5".parse().unwrap();
        assert_eq!(banner_to_ornament(&c).unwrap().to_string(), "{5}");
    }

    proptest::proptest! {
        #[test]
        fn random_pairs_round_trip(
            word in (1usize..=7).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()),
            raw in proptest::collection::vec(0u32..3, 7),
        ) {
            let n = word.len();
            let sigma = Permutation::new(word).unwrap();
            let exd = sigma.exd_set();
            // build s from the bottom up, stepping at every Exd position
            let mut s = vec![0u32; n];
            s[n - 1] = 1 + raw[n - 1];
            for i in (1..n).rev() {
                let forced = exd.contains(&i) as u32;
                s[i - 1] = s[i] + forced.max(raw[i - 1] / 2);
            }
            let pair = CompatiblePair::new(sigma, s).unwrap();
            let r = gr_phi(&pair).unwrap();
            prop_assert_eq!(gr_eta(&r).unwrap(), pair);
            let b = ornament_to_banner(&r).unwrap();
            prop_assert_eq!(banner_to_ornament(&b).unwrap(), r);
        }
    }
}
