//! Characters of the representations whose Frobenius characteristic is
//! `Q_{(n),j}`, the conjectured closed form `G_lambda(t)`, and the
//! power-sum expansion of `sum_j Q_{n,j} t^j`.

use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::qfun::{q_lambda, q_nj};
use crate::combinatorics::{eulerian_poly, partitions, partitions_by_length, Partition};
use crate::error::{invalid, Error, Result};
use crate::polyalg::poly::small;
use crate::polyalg::{var_int, Poly, Var};
use crate::report::{guarded, CheckKind, VerifyReport};
use crate::symfunc::Basis;

/// Keeps the terms `a_i t^i` with `gcd(m, i) = 1`.
pub fn erase_non_coprime(f: &Poly, m: usize) -> Poly {
    let mut out = Poly::zero();
    for (e, c) in f.terms() {
        if (e[Var::T.index()] as usize).gcd(&m) == 1 {
            out.add_term(*e, c);
        }
    }
    out
}

/// `A_k(t) prod [lambda_i]_t` for `k = len(lambda)`.
pub fn stem_weight(lambda: &Partition) -> Result<Poly> {
    let mut acc = eulerian_poly(lambda.len())?;
    for &part in lambda.parts() {
        acc = &acc * &var_int(Var::T, part);
    }
    Ok(acc)
}

/// `G_lambda(t) = (t A_{k-1}(t) prod [lambda_i]_t)` with the terms whose
/// exponent shares a factor with `gcd(lambda)` erased.
pub fn g_lambda(lambda: &Partition) -> Result<Poly> {
    if lambda.is_empty() {
        return invalid("G is defined for nonempty partitions");
    }
    let mut acc = &Poly::var(Var::T) * &eulerian_poly(lambda.len() - 1)?;
    for &part in lambda.parts() {
        acc = &acc * &var_int(Var::T, part);
    }
    Ok(erase_non_coprime(&acc, lambda.gcd()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharTable {
    pub n: usize,
    /// Excedance counts heading the columns, `1..=n/2`.
    pub columns: Vec<usize>,
    pub rows: Vec<(Partition, Vec<i64>)>,
}

impl CharTable {
    pub fn value(&self, mu: &Partition, j: usize) -> Option<i64> {
        let col = self.columns.iter().position(|&c| c == j)?;
        self.rows.iter().find(|(p, _)| p == mu).map(|(_, v)| v[col])
    }

    /// Aligned text: one row per class, one column per `(n,j)`.
    pub fn render(&self) -> String {
        let labels: Vec<String> = self.rows.iter().map(|(p, _)| p.exponent_notation()).collect();
        let w0 = labels.iter().map(String::len).max().unwrap_or(1).max(1);
        let heads: Vec<String> = self.columns.iter().map(|j| format!("{},{}", self.n, j)).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| self.rows.iter().map(|(_, v)| v[c].to_string().len()).chain([heads[c].len()]).max().unwrap_or(1))
            .collect();
        let mut out = format!("{:w0$} |", "");
        for (h, w) in heads.iter().zip(&widths) {
            out.push_str(&format!(" {h:>w$}"));
        }
        out.push('\n');
        for (label, (_, vals)) in labels.iter().zip(&self.rows) {
            out.push_str(&format!("{label:w0$} |"));
            for (v, w) in vals.iter().zip(&widths) {
                out.push_str(&format!(" {v:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// `chi(mu) = z_mu [p_mu] Q_{(n),j}` for every class `mu` and `1 <= j <= n/2`.
pub fn char_table(n: usize) -> Result<CharTable> {
    if n == 0 {
        return invalid("character tables start at n = 1");
    }
    let columns: Vec<usize> = (1..=(n / 2).max(1)).collect();
    let cycle = Partition::from_parts([n]);
    let qs = columns.iter().map(|&j| q_lambda(&cycle, j, Basis::P)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for mu in partitions_by_length(n) {
        let mut vals = Vec::with_capacity(columns.len());
        for q in &qs {
            let x = q.coefficient(&mu) * BigRational::from_integer(mu.z());
            if !x.is_integer() {
                return invalid(format!("non-integral character value {x} at {mu}"));
            }
            vals.push(small(&x.to_integer()).ok_or_else(|| Error::InvalidInput("character too large".into()))?);
        }
        rows.push((mu, vals));
    }
    Ok(CharTable { n, columns, rows })
}

/// Published character tables for `n = 4..=8`, rows in class order.
pub const REFERENCE_TABLES: &[(usize, &[(&[usize], &[i64])])] = &[
    (4, &[(&[4], &[1, 0]), (&[3, 1], &[1, 1]), (&[2, 2], &[1, 0]), (&[2, 1, 1], &[1, 2]), (&[1, 1, 1, 1], &[1, 4])]),
    (
        5,
        &[
            (&[5], &[1, 1]),
            (&[4, 1], &[1, 1]),
            (&[3, 2], &[1, 2]),
            (&[3, 1, 1], &[1, 2]),
            (&[2, 2, 1], &[1, 3]),
            (&[2, 1, 1, 1], &[1, 5]),
            (&[1, 1, 1, 1, 1], &[1, 11]),
        ],
    ),
    (
        6,
        &[
            (&[6], &[1, 0, 0]),
            (&[5, 1], &[1, 1, 1]),
            (&[4, 2], &[1, 0, 2]),
            (&[3, 3], &[1, 2, 0]),
            (&[4, 1, 1], &[1, 2, 2]),
            (&[3, 2, 1], &[1, 3, 4]),
            (&[2, 2, 2], &[1, 0, 6]),
            (&[3, 1, 1, 1], &[1, 5, 6]),
            (&[2, 2, 1, 1], &[1, 6, 10]),
            (&[2, 1, 1, 1, 1], &[1, 12, 22]),
            (&[1, 1, 1, 1, 1, 1], &[1, 26, 66]),
        ],
    ),
    (
        7,
        &[
            (&[7], &[1, 1, 1]),
            (&[6, 1], &[1, 1, 1]),
            (&[5, 2], &[1, 2, 2]),
            (&[4, 3], &[1, 2, 3]),
            (&[5, 1, 1], &[1, 2, 2]),
            (&[4, 2, 1], &[1, 3, 4]),
            (&[3, 3, 1], &[1, 3, 5]),
            (&[3, 2, 2], &[1, 4, 7]),
            (&[4, 1, 1, 1], &[1, 5, 6]),
            (&[3, 2, 1, 1], &[1, 6, 11]),
            (&[2, 2, 2, 1], &[1, 7, 16]),
            (&[3, 1, 1, 1, 1], &[1, 12, 23]),
            (&[2, 2, 1, 1, 1], &[1, 13, 34]),
            (&[2, 1, 1, 1, 1, 1], &[1, 27, 92]),
            (&[1, 1, 1, 1, 1, 1, 1], &[1, 57, 302]),
        ],
    ),
    (
        8,
        &[
            (&[8], &[1, 0, 1, 0]),
            (&[7, 1], &[1, 1, 1, 1]),
            (&[6, 2], &[1, 0, 2, 0]),
            (&[5, 3], &[1, 2, 3, 3]),
            (&[4, 4], &[1, 0, 3, 0]),
            (&[6, 1, 1], &[1, 2, 2, 2]),
            (&[5, 2, 1], &[1, 3, 4, 4]),
            (&[4, 3, 1], &[1, 3, 5, 6]),
            (&[4, 2, 2], &[1, 0, 7, 0]),
            (&[3, 3, 2], &[1, 4, 8, 10]),
            (&[5, 1, 1, 1], &[1, 5, 6, 6]),
            (&[4, 2, 1, 1], &[1, 6, 11, 12]),
            (&[3, 3, 1, 1], &[1, 6, 12, 16]),
            (&[3, 2, 2, 1], &[1, 7, 17, 22]),
            (&[2, 2, 2, 2], &[1, 0, 23, 0]),
            (&[4, 1, 1, 1, 1], &[1, 12, 23, 24]),
            (&[3, 2, 1, 1, 1], &[1, 13, 35, 46]),
            (&[2, 2, 2, 1, 1], &[1, 14, 47, 68]),
            (&[3, 1, 1, 1, 1, 1], &[1, 27, 93, 118]),
            (&[2, 2, 1, 1, 1, 1], &[1, 28, 119, 184]),
            (&[2, 1, 1, 1, 1, 1, 1], &[1, 58, 359, 604]),
            (&[1, 1, 1, 1, 1, 1, 1, 1], &[1, 120, 1191, 2416]),
        ],
    ),
];

/// The published table for `n`, as a `CharTable`.
pub fn reference_table(n: usize) -> Option<CharTable> {
    let (_, rows) = REFERENCE_TABLES.iter().find(|(m, _)| *m == n)?;
    Some(CharTable {
        n,
        columns: (1..=n / 2).collect(),
        rows: rows.iter().map(|(p, v)| (Partition::from_parts(p.iter().copied()), v.to_vec())).collect(),
    })
}

/// Computed tables against the published ones for `4 <= n <= n_max`.
pub fn verify_char_tables(n_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("char-tables").param("n_max", n_max);
    guarded(report, |rep| {
        for n in 4..=n_max.min(8) {
            let computed = char_table(n)?;
            let reference = reference_table(n).expect("tables for 4..=8");
            rep.check(computed.rows.len() == reference.rows.len(), || format!("n={n}: row count"));
            for ((p, v), (rp, rv)) in computed.rows.iter().zip(&reference.rows) {
                rep.check(p == rp && v == rv, || format!("n={n} row {}: computed {v:?}, published {rv:?}", rp.exponent_notation()));
            }
        }
        Ok(())
    })
}

/// Character values of `V_{(n),j}` against the coefficients of `G_mu(t)`
/// for every class, every `j` and `2 <= n <= n_max`; classes with a fixed
/// point are the proved case.
pub fn verify_character_formula(n_max: usize) -> VerifyReport {
    let report = VerifyReport::new("character-formula", CheckKind::Confirmation).param("n_max", n_max);
    guarded(report, |rep| {
        for n in 2..=n_max {
            let cycle = Partition::from_parts([n]);
            for j in 0..n {
                let q = q_lambda(&cycle, j, Basis::P)?;
                for mu in partitions(n) {
                    let chi = q.coefficient(&mu) * BigRational::from_integer(mu.z());
                    let g = g_lambda(&mu)?.coeff_of(Var::T, j as i32).eval_ones();
                    rep.check(chi == BigRational::from_integer(g.clone()), || format!("n={n} j={j} class {mu}: {chi} vs {g}"));
                }
            }
        }
        Ok(())
    })
}

/// `sum_j Q_{n,j} t^j = sum_lambda z_lambda^{-1} A_{len}(t) prod [lambda_i]_t p_lambda`,
/// plus the value `a_{n-1,j-1}` of `chi_{V_(n),j}` at the identity.
pub fn verify_power_sum_expansion(n_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("power-sum-expansion").param("n_max", n_max);
    guarded(report, |rep| {
        for n in 1..=n_max {
            let weights: Vec<(Partition, Poly)> =
                partitions(n).into_iter().map(|l| stem_weight(&l).map(|w| (l, w))).collect::<Result<_>>()?;
            for j in 0..n {
                let q = q_nj(n, j, Basis::P)?;
                for (lambda, w) in &weights {
                    let expect = BigRational::new(w.coeff_of(Var::T, j as i32).eval_ones(), lambda.z());
                    rep.check(q.coefficient(lambda) == expect, || format!("n={n} j={j} at {lambda}"));
                }
            }
            let eulerian = eulerian_poly(n - 1)?;
            let identity = Partition::from_parts(vec![1; n]);
            let cycle = Partition::from_parts([n]);
            for j in 1..n {
                let chi = q_lambda(&cycle, j, Basis::P)?.coefficient(&identity) * BigRational::from_integer(identity.z());
                let a = eulerian.coeff_of(Var::T, j as i32 - 1).eval_ones();
                rep.check(chi == BigRational::from_integer(a.clone()), || format!("identity class n={n} j={j}: {chi} vs {a}"));
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly;
    use num_bigint::BigInt;

    #[test]
    fn erasure_example() {
        assert_eq!(erase_non_coprime(&poly("1 + t + 2*t^2 + 3*t^3"), 2), poly("t + 3*t^3"));
    }

    #[test]
    fn g_examples() {
        // n = 6, class 2^3: j = 1..3 -> 1, 0, 6
        let g = g_lambda(&Partition::from_parts([2, 2, 2])).unwrap();
        let vals: Vec<BigInt> = (1..=3).map(|j| g.coeff_of(Var::T, j).eval_ones()).collect();
        assert_eq!(vals, vec![1.into(), 0.into(), 6.into()]);
        assert!(g_lambda(&Partition::empty()).is_err());
    }

    #[test]
    fn tables_match_small() {
        for n in 4..=6 {
            assert_eq!(char_table(n).unwrap(), reference_table(n).unwrap());
        }
        let t = char_table(6).unwrap();
        assert_eq!(t.value(&Partition::from_parts([2, 2, 2]), 3), Some(6));
        assert_eq!(t.value(&Partition::from_parts([1; 6]), 3), Some(66));
        assert!(t.render().lines().count() == 12);
    }

    #[test]
    fn reports_small() {
        for r in [verify_character_formula(6), verify_power_sum_expansion(6), verify_char_tables(6)] {
            assert!(r.passed(), "{}", r.summary_line());
        }
    }
}
