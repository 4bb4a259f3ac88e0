//! The value-swapping involution behind symmetry of `Q_{lambda,j}`, and the
//! bar-complementing involutions on ornaments and banners.

use std::collections::BTreeSet;

use super::objects::{Banner, Necklace, Ornament};
use crate::combinatorics::{BicoloredLetter, Word};
use crate::error::Result;

fn is_pair_value(l: BicoloredLetter, k: u32) -> bool {
    l.value == k || l.value == k + 1
}

fn swap_value(l: BicoloredLetter, k: u32) -> BicoloredLetter {
    l.with_value(if l.value == k { k + 1 } else { k })
}

/// Swaps values and repairs the bars at switches: a `k+1` followed by `k`
/// gets a bar, a `k` followed by `k+1` loses it. A linear run leaves its
/// last letter alone, since its follower is an intruder.
fn swap_even(letters: &mut [BicoloredLetter], k: u32, circular: bool) {
    for l in letters.iter_mut() {
        *l = swap_value(*l, k);
    }
    let n = letters.len();
    let followers = if circular { n } else { n.saturating_sub(1) };
    for i in 0..followers {
        let next = letters[(i + 1) % n].value;
        let cur = letters[i].value;
        if cur == k + 1 && next == k {
            letters[i].barred = true;
        } else if cur == k && next == k + 1 {
            letters[i].barred = false;
        }
    }
}

/// Odd segments: exchange the lengths of each pair of runs, keep bars in
/// place, then swap the bar states of the new and old switch positions
/// when the new switch is wrong.
fn swap_odd(letters: &mut [BicoloredLetter], k: u32) {
    let mut runs: Vec<(u32, usize)> = Vec::new();
    for l in letters.iter() {
        match runs.last_mut() {
            Some((v, c)) if *v == l.value => *c += 1,
            _ => runs.push((l.value, 1)),
        }
    }
    let first = runs[0].0;
    let bars: Vec<bool> = letters.iter().map(|l| l.barred).collect();
    let mut pos = 0;
    for pair in runs.chunks(2) {
        let (m1, m2) = (pair[0].1, pair[1].1);
        for t in 0..m2 {
            letters[pos + t] = BicoloredLetter { value: first, barred: bars[pos + t] };
        }
        for t in 0..m1 {
            letters[pos + m2 + t] = BicoloredLetter { value: if first == k { k + 1 } else { k }, barred: bars[pos + m2 + t] };
        }
        // the switch now sits at the end of the first run
        let new_switch = pos + m2 - 1;
        let old_switch = pos + m1 - 1;
        let wanted = first != k;
        if letters[new_switch].barred != wanted {
            let a = letters[new_switch].barred;
            letters[new_switch].barred = letters[old_switch].barred;
            letters[old_switch].barred = a;
        }
        pos += m1 + m2;
    }
}

fn switches(letters: &[BicoloredLetter]) -> usize {
    letters.windows(2).filter(|p| p[0].value != p[1].value).count()
}

/// The involution on one necklace exchanging the multiplicities of `k` and
/// `k+1` while keeping the bar count.
pub fn swap_necklace(n: &Necklace, k: u32) -> Result<Necklace> {
    let w = n.word();
    if !w.iter().any(|&l| is_pair_value(l, k)) {
        return Ok(n.clone());
    }
    let len = w.len();
    let mut out: Word = w.to_vec();
    match (0..len).find(|&i| !is_pair_value(w[i], k)) {
        None => swap_even(&mut out, k, true),
        Some(intruder) => {
            // rotate so that an intruder comes last, then cut into runs
            out.rotate_left((intruder + 1) % len);
            let mut i = 0;
            while i < len {
                if !is_pair_value(out[i], k) {
                    i += 1;
                    continue;
                }
                let start = i;
                while i < len && is_pair_value(out[i], k) {
                    i += 1;
                }
                let seg = &mut out[start..i];
                if switches(seg) % 2 == 0 {
                    swap_even(seg, k, false);
                } else {
                    swap_odd(seg, k);
                }
            }
        }
    }
    Necklace::new(&out)
}

pub fn involution_swap_values(r: &Ornament, k: u32) -> Result<Ornament> {
    Ok(Ornament::new(r.necklaces().iter().map(|n| swap_necklace(n, k)).collect::<Result<_>>()?))
}

/// Maps the `i`-th smallest value present to the `i`-th largest.
fn value_reversal(values: impl Iterator<Item = u32>) -> impl Fn(u32) -> u32 {
    let present: Vec<u32> = values.collect::<BTreeSet<_>>().into_iter().collect();
    move |v| {
        let i = present.binary_search(&v).expect("value present");
        present[present.len() - 1 - i]
    }
}

/// Toggles every bar on nonsingleton necklaces, then reverses values.
pub fn involution_complement(r: &Ornament) -> Result<Ornament> {
    let rev = value_reversal(r.values().into_iter());
    let out = r
        .necklaces()
        .iter()
        .map(|n| {
            let toggle = n.len() > 1;
            let w: Word = n
                .word()
                .iter()
                .map(|&l| BicoloredLetter { value: rev(l.value), barred: l.barred ^ toggle })
                .collect();
            Necklace::new(&w)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ornament::new(out))
}

/// Toggles every bar except on the last letter, then reverses values.
pub fn involution_complement_banner(b: &Banner) -> Result<Banner> {
    let rev = value_reversal(b.values().into_iter());
    let n = b.len();
    let w: Word = b
        .word()
        .iter()
        .enumerate()
        .map(|(i, &l)| BicoloredLetter { value: rev(l.value), barred: l.barred ^ (i + 1 < n) })
        .collect();
    Banner::new(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::parse_word;

    fn neck(s: &str) -> Necklace {
        Necklace::new(&parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn two_letter_example() {
        let r = neck("22'11'1222'2'11111");
        let got = swap_necklace(&r, 1).unwrap();
        assert_eq!(got, neck("1122'2'111'122222'"));
        assert_eq!(swap_necklace(&got, 1).unwrap(), r);
    }

    #[test]
    fn intruder_example() {
        let r = neck("5'3344'3'33'366'3'334'244");
        let got = swap_necklace(&r, 3).unwrap();
        assert_eq!(got, neck("5'44'334'44'466'344'4'233"));
        assert_eq!(swap_necklace(&got, 3).unwrap(), r);
    }

    #[test]
    fn untouched_without_k() {
        let r = neck("7'5");
        assert_eq!(swap_necklace(&r, 2).unwrap(), r);
    }

    #[test]
    fn complements() {
        let r: Ornament = "{4}".parse().unwrap();
        assert_eq!(involution_complement(&r).unwrap(), r);
        let r: Ornament = "{3'1,2}".parse().unwrap();
        // values {1,2,3} reverse; bars toggle on the 2-necklace only
        assert_eq!(involution_complement(&r).unwrap().to_string(), "{3'1,2}");
        let b: Banner = "3'12".parse().unwrap();
        let c = involution_complement_banner(&b).unwrap();
        assert_eq!(c.bars(), 3 - 1 - 1);
        assert_eq!(involution_complement_banner(&c).unwrap(), b);
    }
}
