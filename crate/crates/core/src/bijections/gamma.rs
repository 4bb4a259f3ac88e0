//! Splitting a banner without singleton Lyndon factors into a shorter such
//! banner and a marked sequence, and the inverse insertion.

use super::objects::Banner;
use super::words::increasing_ranges;
use crate::combinatorics::{format_word, BicoloredLetter, MarkedSequence, Word};
use crate::error::{invalid, Result};

/// True when the Lyndon type has no part of size 1 (the empty banner
/// included).
pub fn in_b0(b: &Banner) -> bool {
    b.is_empty() || increasing_ranges(b.word()).is_some()
}

fn sorted_values(letters: &[BicoloredLetter]) -> Vec<u32> {
    let mut v: Vec<u32> = letters.iter().map(|l| l.value).collect();
    v.sort_unstable();
    v
}

/// `gamma(B) = (B', (omega, b))` with `wt(B) = wt(B') wt(omega)` and
/// `bar(B) = bar(B') + b`.
pub fn gamma(banner: &Banner) -> Result<(Banner, MarkedSequence)> {
    let w = banner.word();
    if w.len() < 2 {
        return invalid(format!("gamma needs length at least 2, got {}", format_word(w)));
    }
    let ranges = match increasing_ranges(w) {
        Some(r) => r,
        None => return invalid(format!("{} has a Lyndon factor of length 1", format_word(w))),
    };
    let last = ranges.last().expect("nonempty").clone();
    let head = &w[..last.start];
    let block = &w[last.clone()];
    let a = block[0];
    let p = block.iter().take_while(|&&x| x == a).count();
    // i[0] = a, i[1..=l] the letters after the run
    let mut i: Vec<BicoloredLetter> = vec![a];
    i.extend_from_slice(&block[p..]);
    let l = i.len() - 1;
    let r = (1..=l).find(|&t| !i[t].barred).expect("a banner ends unbarred");
    let prev = i[r - 1];
    let mut s = l;
    for t in r..=l {
        if !i[t].barred && i[t] < prev {
            continue;
        }
        s = if i[t].barred && i[t] <= prev { t } else { t - 1 };
        break;
    }
    if s == l {
        let omega = sorted_values(block);
        let b = block.iter().filter(|x| x.barred).count();
        Ok((Banner::new(head.to_vec())?, MarkedSequence::new(omega, b)?))
    } else {
        let taken = &i[1..=s];
        let omega = sorted_values(taken);
        let b = taken.iter().filter(|x| x.barred).count();
        let mut rest: Word = head.to_vec();
        rest.extend(std::iter::repeat(a).take(p));
        rest.extend_from_slice(&i[s + 1..]);
        Ok((Banner::new(rest)?, MarkedSequence::new(omega, b)?))
    }
}

/// Inverse of `gamma`.
pub fn gamma_inverse(prefix: &Banner, marked: &MarkedSequence) -> Result<Banner> {
    let w = prefix.word();
    let ranges = if w.is_empty() {
        Vec::new()
    } else {
        increasing_ranges(w).ok_or_else(|| {
            crate::error::Error::InvalidInput(format!("{} has a Lyndon factor of length 1", format_word(w)))
        })?
    };
    let omega = marked.omega();
    let len = omega.len();
    let b = marked.b();
    let bar = |v: u32| BicoloredLetter::bar(v);
    let plain = |v: u32| BicoloredLetter::plain(v);
    // barred top b values in decreasing order, then the rest increasing
    let mut full: Word = omega[len - b..].iter().rev().map(|&v| bar(v)).collect();
    full.extend(omega[..len - b].iter().map(|&v| plain(v)));

    let last = ranges.last().cloned();
    match last {
        Some(range) if w[range.start].value > omega[len - 1] => {
            let block = &w[range.clone()];
            let a = block[0];
            let p = block.iter().take_while(|&&x| x == a).count();
            let j1 = block[p];
            let insert: Word = if j1 > bar(omega[len - b]) {
                full
            } else {
                let mut v: Word = omega[len - b + 1..].iter().rev().map(|&v| bar(v)).collect();
                v.extend(omega[..len - b].iter().map(|&v| plain(v)));
                v.push(bar(omega[len - b]));
                v
            };
            let mut out: Word = w[..range.start + p].to_vec();
            out.extend(insert);
            out.extend_from_slice(&block[p..]);
            Banner::new(out)
        }
        _ => {
            let mut out = w.to_vec();
            out.extend(full);
            Banner::new(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn banner(s: &str) -> Banner {
        s.parse().unwrap()
    }

    #[test]
    fn case_one_example() {
        let b = banner("2'2'2'1.5'224'2.8'8'7'5'2235");
        let (rest, m) = gamma(&b).unwrap();
        assert_eq!(m, MarkedSequence::new(vec![2, 2, 3, 5, 5, 7, 8, 8], 4).unwrap());
        assert_eq!(rest, banner("2'2'2'1.5'224'2"));
        assert_eq!(gamma_inverse(&rest, &m).unwrap(), b);
    }

    #[test]
    fn case_two_examples() {
        let b = banner("2'2'2'1.5'224'2.8'8'7'5'22356'24");
        let (rest, m) = gamma(&b).unwrap();
        assert_eq!(m, MarkedSequence::new(vec![2, 2, 3, 5, 5, 7], 2).unwrap());
        assert_eq!(rest, banner("2'2'2'1.5'224'2.8'8'6'24"));
        assert_eq!(gamma_inverse(&rest, &m).unwrap(), b);

        let b = banner("2'2'2'1.5'224'2.8'8'7'5'2235'46'24");
        let (rest, m) = gamma(&b).unwrap();
        assert_eq!(m, MarkedSequence::new(vec![2, 2, 3, 5, 5, 7], 3).unwrap());
        assert_eq!(rest, banner("2'2'2'1.5'224'2.8'8'46'24"));
        assert_eq!(gamma_inverse(&rest, &m).unwrap(), b);
    }

    #[test]
    fn rejects_singleton_factors() {
        assert!(gamma(&banner("12")).is_err());
        assert!(gamma(&banner("2")).is_err());
        assert!(in_b0(&Banner::empty()));
        assert!(!in_b0(&banner("1")));
    }
}
