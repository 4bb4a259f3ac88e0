//! Exhaustive round-trip checks, weight sums and the worked examples.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::gamma::{gamma, gamma_inverse, in_b0};
use super::involutions::{involution_complement, involution_complement_banner, involution_swap_values};
use super::maps::{banner_to_ornament, gr_eta, gr_phi, ornament_to_banner};
use super::objects::{banners, compatible_pairs, ornaments, Banner, CompatiblePair, Ornament};
use super::words::{increasing_factorize, lyndon_factorize};
use crate::combinatorics::{format_word, parse_word, partitions, MarkedSequence, Partition, Permutation};
use crate::error::Result;
use crate::eulerian::{q_fun, Selector};
use crate::report::{guarded, VerifyReport};
use crate::symfunc::{qsym_to_monomial, MonExpansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Ornaments,
    Banners,
    Pairs,
}

fn add_weight(m: &mut MonExpansion, w: Option<Vec<u32>>) -> Result<()> {
    if let Some(e) = w {
        m.add_term(e, &BigRational::one())?;
    }
    Ok(())
}

/// `sum wt` over the objects of type `lambda` with `j` bars (or
/// excedances) whose values fit in `nvars` variables.
pub fn weight_sum(kind: WeightKind, lambda: &Partition, j: usize, nvars: usize) -> Result<MonExpansion> {
    let mut out = MonExpansion::new(nvars);
    let cap = nvars as u32;
    match kind {
        WeightKind::Ornaments => {
            for r in ornaments(lambda, cap) {
                if r.bars() == j {
                    add_weight(&mut out, r.weight(nvars))?;
                }
            }
        }
        WeightKind::Banners => {
            for b in banners(lambda.size(), cap) {
                if b.bars() == j && &b.lyndon_type() == lambda {
                    add_weight(&mut out, b.weight(nvars))?;
                }
            }
        }
        WeightKind::Pairs => {
            for p in compatible_pairs(lambda.size(), cap)? {
                if p.sigma().exc() == j && &p.sigma().cycle_type() == lambda {
                    add_weight(&mut out, super::objects::weight_exponents(p.s(), nvars))?;
                }
            }
        }
    }
    Ok(out)
}

/// `eta(phi(pair)) = pair` over every compatible pair with `n <= n_max` and
/// values at most `n`, and `phi(eta(R)) = R` over the matching ornaments.
pub fn verify_phi_eta(n_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("phi-eta-round-trip").param("n_max", n_max);
    guarded(report, |rep| {
        for n in 1..=n_max {
            let cap = n as u32;
            let mut counts: BTreeMap<(Partition, usize), usize> = BTreeMap::new();
            for pair in compatible_pairs(n, cap)? {
                let r = gr_phi(&pair)?;
                let ty = pair.sigma().cycle_type();
                let exc = pair.sigma().exc();
                rep.check(r.shape() == ty && r.bars() == exc, || format!("phi({pair:?}) = {r} has the wrong type or bars"));
                let back = gr_eta(&r)?;
                rep.check(back == pair, || format!("eta(phi({pair:?})) = {back:?}"));
                *counts.entry((ty, exc)).or_default() += 1;
            }
            let mut ornament_counts: BTreeMap<(Partition, usize), usize> = BTreeMap::new();
            for lambda in partitions(n) {
                for r in ornaments(&lambda, cap) {
                    let pair = gr_eta(&r)?;
                    let again = gr_phi(&pair)?;
                    rep.check(again == r, || format!("phi(eta({r})) = {again}"));
                    *ornament_counts.entry((lambda.clone(), r.bars())).or_default() += 1;
                }
            }
            rep.check(counts == ornament_counts, || format!("n={n}: pair and ornament counts differ"));
        }
        Ok(())
    })
}

/// Banner/ornament round trips for lengths `1..=len_max` and values at most
/// `cap`, with type, bar and weight bookkeeping.
pub fn verify_banner_ornament(len_max: usize, cap: u32) -> VerifyReport {
    let report = VerifyReport::theorem("banner-ornament-round-trip").param("len_max", len_max).param("value_cap", cap);
    guarded(report, |rep| {
        let nv = cap as usize;
        for len in 1..=len_max {
            let mut seen = 0usize;
            for b in banners(len, cap) {
                let r = banner_to_ornament(&b)?;
                rep.check(
                    r.shape() == b.lyndon_type() && r.bars() == b.bars() && r.weight(nv) == b.weight(nv),
                    || format!("bookkeeping fails for {b}"),
                );
                let back = ornament_to_banner(&r)?;
                rep.check(back == b, || format!("{b} -> {r} -> {back}"));
                seen += 1;
            }
            let mut total = 0usize;
            for lambda in partitions(len) {
                for r in ornaments(&lambda, cap) {
                    let b = ornament_to_banner(&r)?;
                    rep.check(banner_to_ornament(&b)? == r, || format!("{r} -> {b} does not return"));
                    total += 1;
                }
            }
            rep.check(seen == total, || format!("length {len}: {seen} banners vs {total} ornaments"));
        }
        Ok(())
    })
}

fn marked_sequences(len: usize, cap: u32) -> Vec<MarkedSequence> {
    fn go(len: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for v in lo..=cap {
            cur.push(v);
            go(len, cap, cur, out);
            cur.pop();
        }
    }
    let mut seqs = Vec::new();
    go(len, cap, &mut Vec::new(), &mut seqs);
    seqs.into_iter()
        .flat_map(|w| (1..len).map(move |b| MarkedSequence::new(w.clone(), b).expect("valid by construction")))
        .collect()
}

/// `gamma` and its inverse over the banners without singleton factors of
/// length `2..=n_max` with values at most `cap`, in both directions.
pub fn verify_gamma(n_max: usize, cap: u32) -> VerifyReport {
    let report = VerifyReport::theorem("gamma-round-trip").param("n_max", n_max).param("value_cap", cap);
    guarded(report, |rep| {
        let nv = cap as usize;
        let b0: Vec<Vec<Banner>> =
            (0..=n_max).map(|n| banners(n, cap).into_iter().filter(in_b0).collect()).collect();
        for n in 2..=n_max {
            for b in &b0[n] {
                let (rest, m) = gamma(b)?;
                let mut wt = rest.values();
                wt.extend_from_slice(m.omega());
                wt.sort_unstable();
                let mut orig = b.values();
                orig.sort_unstable();
                rep.check(
                    in_b0(&rest) && rest.len() + m.len() == n && rest.len() + 2 <= n,
                    || format!("gamma({b}) = ({rest}, {m}) has the wrong shape"),
                );
                rep.check(wt == orig && b.bars() == rest.bars() + m.b(), || format!("gamma({b}) breaks weight or bars"));
                let back = gamma_inverse(&rest, &m)?;
                rep.check(&back == b, || format!("gamma^-1(gamma({b})) = {back}"));
            }
            let mut images = 0usize;
            for m_len in 0..=n - 2 {
                let seqs = marked_sequences(n - m_len, cap);
                for prefix in &b0[m_len] {
                    for m in &seqs {
                        let b = gamma_inverse(prefix, m)?;
                        rep.check(in_b0(&b) && b.weight(nv).is_some(), || format!("gamma^-1({prefix}, {m}) = {b}"));
                        let (p2, m2) = gamma(&b)?;
                        rep.check(&p2 == prefix && &m2 == m, || format!("gamma(gamma^-1({prefix}, {m})) = ({p2}, {m2})"));
                        images += 1;
                    }
                }
            }
            rep.check(images == b0[n].len(), || format!("n={n}: {} banners vs {images} pairs", b0[n].len()));
        }
        Ok(())
    })
}

/// The value swaps and the complements are involutions with the stated
/// effect on multiplicities and bars, over ornaments and banners of size
/// `1..=size_max` with values at most `cap`.
pub fn verify_involutions(size_max: usize, cap: u32) -> VerifyReport {
    let report = VerifyReport::theorem("ornament-involutions").param("size_max", size_max).param("value_cap", cap);
    guarded(report, |rep| {
        let nv = cap as usize;
        for n in 1..=size_max {
            for lambda in partitions(n) {
                let singles = lambda.multiplicity(1);
                for r in ornaments(&lambda, cap) {
                    let w = r.weight(nv).expect("values within cap");
                    for k in 1..cap {
                        let s = involution_swap_values(&r, k)?;
                        let mut expect = w.clone();
                        expect.swap(k as usize - 1, k as usize);
                        rep.check(s.weight(nv) == Some(expect) && s.bars() == r.bars() && s.shape() == lambda, || {
                            format!("swap {k} on {r} gives {s}")
                        });
                        rep.check(involution_swap_values(&s, k)? == r, || format!("swap {k} is not an involution at {r}"));
                    }
                    let c = involution_complement(&r)?;
                    rep.check(c.shape() == lambda && c.bars() == n - singles - r.bars(), || {
                        format!("complement of {r} is {c}")
                    });
                    rep.check(involution_complement(&c)? == r, || format!("complement is not an involution at {r}"));
                }
            }
            for b in banners(n, cap) {
                let c = involution_complement_banner(&b)?;
                rep.check(c.bars() == n - 1 - b.bars(), || format!("banner complement of {b} is {c}"));
                rep.check(involution_complement_banner(&c)? == b, || format!("banner complement is not an involution at {b}"));
            }
        }
        Ok(())
    })
}

/// `Q_{lambda,j}` in `nvars` variables against the ornament, banner and
/// compatible-pair weight sums.
pub fn verify_weight_sums(n_max: usize, nvars: usize) -> VerifyReport {
    let report = VerifyReport::theorem("weight-sums").param("n_max", n_max).param("nvars", nvars);
    guarded(report, |rep| {
        for n in 1..=n_max {
            for lambda in partitions(n) {
                for j in 0..n {
                    let q = q_fun(&Selector::LambdaJ { lambda: lambda.clone(), j })?;
                    let direct = qsym_to_monomial(&q.value, nvars)?;
                    for kind in [WeightKind::Ornaments, WeightKind::Banners, WeightKind::Pairs] {
                        let sum = weight_sum(kind, &lambda, j, nvars)?;
                        rep.check(sum == direct, || format!("{kind:?} sum differs at {lambda}, j={j}"));
                    }
                }
            }
        }
        Ok(())
    })
}

/// The worked examples for each map.
pub fn bijection_fixtures() -> VerifyReport {
    let report = VerifyReport::theorem("bijection-fixtures");
    guarded(report, |rep| {
        let sigma = Permutation::new(vec![4, 5, 1, 6, 2, 3, 8, 7])?;
        let pair = CompatiblePair::new(sigma, vec![7, 7, 7, 5, 5, 4, 2, 2])?;
        let r = gr_phi(&pair)?;
        rep.check(r.to_string() == "{7'5'47,7'5,2'2}", || format!("phi example gives {r}"));

        let r: Ornament = "{7'3'35,7'35'3,7'35'3,5}".parse()?;
        let got = gr_eta(&r)?;
        let sigma = Permutation::from_cycles(13, &[vec![1, 8, 13, 6], vec![2, 11, 4, 9], vec![3, 12, 5, 10], vec![7]])?;
        rep.check(got.sigma() == &sigma && got.s() == [7, 7, 7, 5, 5, 5, 5, 3, 3, 3, 3, 3, 3], || {
            format!("eta example gives {:?}", got)
        });

        let cases = [
            ("2'2'2'1.5'224'2.8'8'7'5'2235", vec![2, 2, 3, 5, 5, 7, 8, 8], 4, "2'2'2'15'224'2"),
            ("2'2'2'1.5'224'2.8'8'7'5'22356'24", vec![2, 2, 3, 5, 5, 7], 2, "2'2'2'15'224'28'8'6'24"),
            ("2'2'2'1.5'224'2.8'8'7'5'2235'46'24", vec![2, 2, 3, 5, 5, 7], 3, "2'2'2'15'224'28'8'46'24"),
        ];
        for (text, omega, b, rest) in cases {
            let banner: Banner = text.parse()?;
            let (p, m) = gamma(&banner)?;
            rep.check(m.omega() == omega.as_slice() && m.b() == b && p.to_string() == rest, || {
                format!("gamma({text}) gives ({p}, {m})")
            });
        }

        let w = parse_word("2'27'57'5'47")?;
        let f: Vec<String> = lyndon_factorize(&w).iter().map(|x| format_word(x)).collect();
        rep.check(f == ["2'2", "7'5", "7'5'47"], || format!("Lyndon factors {f:?}"));

        let digits: Vec<u8> = "87886699558795".bytes().collect();
        let inc: Vec<String> = increasing_factorize(&digits)
            .unwrap_or_default()
            .into_iter()
            .map(|x| String::from_utf8(x).expect("ascii"))
            .collect();
        rep.check(inc == ["87", "8866", "995587", "95"], || format!("increasing factors {inc:?}"));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_pass() {
        let r = bijection_fixtures();
        assert!(r.passed(), "{}", r.summary_line());
    }

    #[test]
    fn small_round_trips() {
        for r in [
            verify_phi_eta(4),
            verify_banner_ornament(4, 3),
            verify_gamma(4, 3),
            verify_involutions(4, 3),
            verify_weight_sums(3, 3),
        ] {
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn weight_sum_examples() {
        // lambda = (1), j = 0, two variables: x1 + x2
        let m = weight_sum(WeightKind::Ornaments, &Partition::from_parts([1]), 0, 2).unwrap();
        assert_eq!(m.len(), 2);
        let direct = qsym_to_monomial(&q_fun(&Selector::LambdaJ { lambda: Partition::from_parts([2]), j: 1 }).unwrap().value, 2).unwrap();
        assert_eq!(weight_sum(WeightKind::Banners, &Partition::from_parts([2]), 1, 2).unwrap(), direct);
    }
}
