//! Bicolored necklaces, ornaments, banners and compatible pairs.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::words::{is_lyndon, lyndon_order, lyndon_type};
use crate::combinatorics::{format_word, parse_word, BicoloredLetter, Partition, Permutation, Word};
use crate::error::{invalid, Error, Result};

/// Local condition between consecutive letters: a barred letter is
/// followed by a letter of no larger value, an unbarred one by a letter of
/// no smaller value.
pub fn step_ok(a: BicoloredLetter, b: BicoloredLetter) -> bool {
    if a.barred {
        b.value <= a.value
    } else {
        b.value >= a.value
    }
}

pub fn bar_count(w: &[BicoloredLetter]) -> usize {
    w.iter().filter(|l| l.barred).count()
}

/// Exponent vector of `prod x_{|a|}` in `nvars` variables, or `None` when a
/// value exceeds `nvars`.
pub fn weight_exponents<'a>(letters: impl IntoIterator<Item = &'a u32>, nvars: usize) -> Option<Vec<u32>> {
    let mut e = vec![0u32; nvars];
    for &v in letters {
        *e.get_mut(v as usize - 1)? += 1;
    }
    Some(e)
}

fn is_primitive(w: &[BicoloredLetter]) -> bool {
    let n = w.len();
    (1..n).all(|r| n % r != 0 || w[r..].iter().chain(&w[..r]).ne(w.iter()))
}

/// Largest rotation of a circular word.
fn max_rotation(w: &[BicoloredLetter]) -> Word {
    (0..w.len().max(1))
        .map(|r| w[r.min(w.len())..].iter().chain(&w[..r.min(w.len())]).copied().collect::<Word>())
        .max()
        .unwrap_or_default()
}

/// A primitive circular word obeying the local conditions, stored as its
/// largest rotation (a Lyndon banner).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace(Word);

impl Necklace {
    /// Validates a circular word given from any starting point.
    pub fn new(circular: &[BicoloredLetter]) -> Result<Necklace> {
        let n = circular.len();
        if n == 0 {
            return invalid("a necklace has at least one letter");
        }
        if n == 1 && circular[0].barred {
            return invalid("a one-letter necklace is unbarred");
        }
        if n > 1 {
            for i in 0..n {
                if !step_ok(circular[i], circular[(i + 1) % n]) {
                    return invalid(format!("({}) breaks the local condition at {}", format_word(circular), i + 1));
                }
            }
        }
        if !is_primitive(circular) {
            return invalid(format!("({}) is not primitive", format_word(circular)));
        }
        Ok(Necklace(max_rotation(circular)))
    }

    pub fn word(&self) -> &[BicoloredLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bars(&self) -> usize {
        bar_count(&self.0)
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.0))
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A multiset of necklaces, kept sorted in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ornament(Vec<Necklace>);

impl Ornament {
    pub fn new(mut necklaces: Vec<Necklace>) -> Ornament {
        necklaces.sort_by(|a, b| b.cmp(a));
        Ornament(necklaces)
    }

    pub fn necklaces(&self) -> &[Necklace] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Necklace::len).sum()
    }

    pub fn bars(&self) -> usize {
        self.0.iter().map(Necklace::bars).sum()
    }

    /// Partition of necklace sizes.
    pub fn shape(&self) -> Partition {
        Partition::from_parts(self.0.iter().map(Necklace::len))
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().flat_map(|n| n.0.iter().map(|l| l.value)).collect()
    }

    pub fn weight(&self, nvars: usize) -> Option<Vec<u32>> {
        weight_exponents(&self.values(), nvars)
    }
}

impl fmt::Display for Ornament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Ornament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `{7'5'47,7'5,2'2}`.
impl FromStr for Ornament {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ornament> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("ornament {s:?} is not wrapped in braces")))?;
        if inner.trim().is_empty() {
            return Ok(Ornament(Vec::new()));
        }
        let necklaces = inner
            .split(',')
            .map(|p| Necklace::new(&parse_word(p.trim().trim_start_matches('(').trim_end_matches(')'))?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ornament::new(necklaces))
    }
}

impl Serialize for Ornament {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A word whose last letter is unbarred and whose consecutive letters obey
/// the local conditions. The empty word is a banner.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Banner(Word);

impl Banner {
    pub fn new(word: Word) -> Result<Banner> {
        if let Some(last) = word.last() {
            if last.barred {
                return invalid(format!("{} ends with a barred letter", format_word(&word)));
            }
        }
        if let Some(i) = word.windows(2).position(|p| !step_ok(p[0], p[1])) {
            return invalid(format!("{} breaks the local condition at {}", format_word(&word), i + 1));
        }
        Ok(Banner(word))
    }

    pub fn empty() -> Banner {
        Banner(Vec::new())
    }

    pub fn word(&self) -> &[BicoloredLetter] {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bars(&self) -> usize {
        bar_count(&self.0)
    }

    pub fn lyndon_type(&self) -> Partition {
        lyndon_type(&self.0)
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.value).collect()
    }

    pub fn weight(&self, nvars: usize) -> Option<Vec<u32>> {
        weight_exponents(&self.values(), nvars)
    }
}

impl fmt::Display for Banner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.0))
    }
}

impl fmt::Debug for Banner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Banner({self})")
    }
}

impl FromStr for Banner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Banner> {
        Banner::new(parse_word(s)?)
    }
}

impl Serialize for Banner {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A permutation with a weakly decreasing sequence that drops strictly at
/// every Exd position.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CompatiblePair {
    sigma: Permutation,
    s: Vec<u32>,
}

impl CompatiblePair {
    pub fn new(sigma: Permutation, s: Vec<u32>) -> Result<CompatiblePair> {
        if s.len() != sigma.len() {
            return invalid(format!("sequence length {} differs from n = {}", s.len(), sigma.len()));
        }
        if s.contains(&0) || s.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("{s:?} is not a weakly decreasing positive sequence"));
        }
        for i in sigma.exd_set() {
            if s[i - 1] == s[i] {
                return invalid(format!("{s:?} does not drop at Exd position {i}"));
            }
        }
        Ok(CompatiblePair { sigma, s })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }
}

/// Every banner of length `len` with values at most `cap`.
pub fn banners(len: usize, cap: u32) -> Vec<Banner> {
    fn go(len: usize, cap: u32, cur: &mut Word, out: &mut Vec<Banner>) {
        if cur.len() == len {
            if cur.last().map_or(true, |l| !l.barred) {
                out.push(Banner(cur.clone()));
            }
            return;
        }
        for v in 1..=cap {
            for barred in [false, true] {
                let l = BicoloredLetter { value: v, barred };
                if cur.last().map_or(true, |&p| step_ok(p, l)) {
                    cur.push(l);
                    go(len, cap, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(len, cap, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every necklace of the given size with values at most `cap`, in
/// increasing order.
pub fn necklaces(size: usize, cap: u32) -> Vec<Necklace> {
    if size == 0 {
        return Vec::new();
    }
    let mut out: Vec<Necklace> = banners(size, cap)
        .into_iter()
        .filter(|b| is_lyndon(b.word()))
        .map(|b| Necklace(b.into_word()))
        .collect();
    out.sort();
    out
}

/// Multisets of `k` items drawn from `n` (as weakly increasing indices).
fn index_multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every ornament of the given type with values at most `cap`.
pub fn ornaments(shape: &Partition, cap: u32) -> Vec<Ornament> {
    let mut acc: Vec<Vec<Necklace>> = vec![Vec::new()];
    for (size, mult) in shape.multiplicities() {
        let pool = necklaces(size, cap);
        let picks = index_multisets(pool.len(), mult);
        let mut next = Vec::with_capacity(acc.len() * picks.len());
        for base in &acc {
            for pick in &picks {
                let mut v = base.clone();
                v.extend(pick.iter().map(|&i| pool[i].clone()));
                next.push(v);
            }
        }
        acc = next;
    }
    acc.into_iter().map(Ornament::new).collect()
}

/// Every compatible pair on `S_n` with sequence values at most `cap`.
pub fn compatible_pairs(n: usize, cap: u32) -> Result<Vec<CompatiblePair>> {
    let mut out = Vec::new();
    for sigma in crate::combinatorics::enumerate_permutations(n)? {
        let exd = sigma.exd_mask();
        let mut stack: Vec<(Vec<u32>, u32)> = vec![(Vec::new(), cap)];
        while let Some((s, top)) = stack.pop() {
            if s.len() == n {
                out.push(CompatiblePair { sigma: sigma.clone(), s });
                continue;
            }
            let i = s.len();
            // position i (1-based) must drop strictly when it lies in Exd
            let bound = if i > 0 && exd >> (i - 1) & 1 == 1 { top.saturating_sub(1) } else { top };
            for v in (1..=bound).rev() {
                let mut t = s.clone();
                t.push(v);
                stack.push((t, v));
            }
        }
    }
    Ok(out)
}

/// Orders Lyndon banners so that their concatenation factors back into them.
pub fn lyndon_sort(words: &mut [Word]) {
    words.sort_by(|a, b| lyndon_order(a, b));
}
