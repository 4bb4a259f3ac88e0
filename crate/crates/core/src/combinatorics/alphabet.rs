use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Error, Result};

/// A letter `v` or its barred copy `v'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BicoloredLetter {
    pub value: u32,
    pub barred: bool,
}

impl BicoloredLetter {
    pub fn new(value: u32, barred: bool) -> Result<BicoloredLetter> {
        if value == 0 {
            return invalid("letter values start at 1");
        }
        Ok(BicoloredLetter { value, barred })
    }

    pub fn plain(value: u32) -> BicoloredLetter {
        BicoloredLetter { value, barred: false }
    }

    pub fn bar(value: u32) -> BicoloredLetter {
        BicoloredLetter { value, barred: true }
    }

    /// Rank under `1 < 1' < 2 < 2' < ...`.
    pub fn necklace_rank(self) -> u64 {
        2 * self.value as u64 + self.barred as u64
    }

    /// Rank under `1' < ... < n' < 1 < ... < n`.
    pub fn exd_rank(self, n: u32) -> u64 {
        if self.barred {
            self.value as u64
        } else {
            (n + self.value) as u64
        }
    }

    pub fn toggled(self) -> BicoloredLetter {
        BicoloredLetter { value: self.value, barred: !self.barred }
    }

    pub fn with_value(self, value: u32) -> BicoloredLetter {
        BicoloredLetter { value, barred: self.barred }
    }
}

/// Letters compare by the necklace order `1 < 1' < 2 < 2' < ...`.
impl Ord for BicoloredLetter {
    fn cmp(&self, o: &Self) -> Ordering {
        self.necklace_rank().cmp(&o.necklace_rank())
    }
}

impl PartialOrd for BicoloredLetter {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for BicoloredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value > 9 {
            write!(f, "({})", self.value)?;
        } else {
            write!(f, "{}", self.value)?;
        }
        if self.barred {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BicoloredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type Word = Vec<BicoloredLetter>;

/// Renders a word as digits with trailing apostrophes, e.g. `7'5'47`.
pub fn format_word(w: &[BicoloredLetter]) -> String {
    w.iter().map(|l| l.to_string()).collect()
}

/// Parses `7'5'47`; values above 9 are written `(12)`. Spaces, dots and
/// middle dots are ignored so factorizations can be written `2'2.7'5`.
pub fn parse_word(s: &str) -> Result<Word> {
    let chars: Vec<char> = s.chars().filter(|c| !matches!(c, ' ' | '.' | '·' | '\t')).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let value = if chars[i] == '(' {
            let close = chars[i..]
                .iter()
                .position(|&c| c == ')')
                .ok_or_else(|| Error::Parse(format!("unclosed '(' in {s:?}")))?;
            let digits: String = chars[i + 1..i + close].iter().collect();
            i += close + 1;
            digits.parse::<u32>().map_err(|_| Error::Parse(format!("bad letter in {s:?}")))?
        } else {
            let d = chars[i].to_digit(10).ok_or_else(|| Error::Parse(format!("bad letter {:?} in {s:?}", chars[i])))?;
            i += 1;
            d
        };
        let barred = chars.get(i) == Some(&'\'');
        if barred {
            i += 1;
        }
        out.push(BicoloredLetter::new(value, barred).map_err(|e| Error::Parse(e.to_string()))?);
    }
    Ok(out)
}

/// Weakly increasing sequence with a mark `1 <= b < len`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MarkedSequence {
    omega: Vec<u32>,
    b: usize,
}

impl MarkedSequence {
    pub fn new(omega: Vec<u32>, b: usize) -> Result<MarkedSequence> {
        if omega.len() < 2 {
            return invalid(format!("marked sequence {omega:?} is shorter than 2"));
        }
        if omega.windows(2).any(|w| w[0] > w[1]) || omega.contains(&0) {
            return invalid(format!("{omega:?} is not a weakly increasing positive sequence"));
        }
        if b == 0 || b >= omega.len() {
            return invalid(format!("mark {b} outside 1..{}", omega.len()));
        }
        Ok(MarkedSequence { omega, b })
    }

    pub fn omega(&self) -> &[u32] {
        &self.omega
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }
}

impl fmt::Display for MarkedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.omega.iter().map(|x| x.to_string()).collect();
        write!(f, "({}, {})", s.join(if self.omega.iter().any(|&x| x > 9) { "," } else { "" }), self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let one = BicoloredLetter::plain(1);
        let one_bar = BicoloredLetter::bar(1);
        let two = BicoloredLetter::plain(2);
        assert!(one < one_bar && one_bar < two);
        assert!(one_bar.exd_rank(2) < BicoloredLetter::bar(2).exd_rank(2));
        assert!(BicoloredLetter::bar(2).exd_rank(2) < one.exd_rank(2));
    }

    #[test]
    fn word_text_round_trip() {
        let w = parse_word("7'5'47").unwrap();
        assert_eq!(w.len(), 4);
        assert!(w[0].barred && w[1].barred && !w[2].barred);
        assert_eq!(format_word(&w), "7'5'47");
        let big = parse_word("(12)'3").unwrap();
        assert_eq!(big[0], BicoloredLetter::bar(12));
        assert_eq!(format_word(&big), "(12)'3");
        assert!(parse_word("0").is_err());
        assert!(parse_word("x").is_err());
    }

    #[test]
    fn marked_sequences() {
        assert!(MarkedSequence::new(vec![2, 2, 3], 1).is_ok());
        assert!(MarkedSequence::new(vec![2, 2, 3], 3).is_err());
        assert!(MarkedSequence::new(vec![2, 1], 1).is_err());
        assert!(MarkedSequence::new(vec![2], 0).is_err());
    }
}
