//! Plethystic structure of `Q_{lambda,j}`, dimensions, and restriction to
//! `S_{n-1}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::qfun::{a_lambda_j, a_poly, q_lambda, q_lambda_poly, q_nj, PermClass, Stat};
use crate::combinatorics::permutation::enumerate_by_cycle_type;
use crate::combinatorics::{eulerian_poly, partitions, Partition};
use crate::error::Result;
use crate::polyalg::{q_binomial, Poly, Var};
use crate::report::{guarded, VerifyReport};
use crate::symfunc::symf::h;
use crate::symfunc::{plethysm_h, restrict_frobenius, Basis, MonExpansion, SymF, SymPoly};

fn sympoly_equal(a: &SymPoly, b: &SymPoly) -> Result<bool> {
    let keys: std::collections::BTreeSet<_> = a.terms().keys().chain(b.terms().keys()).collect();
    for k in keys {
        if !a.coefficient(k).equals(&b.coefficient(k))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sets `p = 1`.
fn at_p_one(f: &Poly) -> Poly {
    f.coefficients_in(Var::P).values().fold(Poly::zero(), |acc, c| &acc + c)
}

/// `prod_i h_{m_i}[sum_j Q_{(i),j} t^j]`, in the p basis.
pub fn plethystic_product(lambda: &Partition) -> Result<SymPoly> {
    let mut out = SymPoly::constant(SymF::one(Basis::P));
    for (part, mult) in lambda.multiplicities() {
        let cycle = q_lambda_poly(&Partition::from_parts([part]), Basis::P)?;
        out = out.mul(&cycle.h_plethysm(mult)?)?;
    }
    Ok(out)
}

/// Monomial expansion in `nvars` variables of the degree-`d`, `t^j` part of
/// `prod_i (1 - x_i z)^{-1} prod_{i <= l} (1 - x_i x_l t z^2)^{-1}`, by
/// listing multisets of singletons and pairs.
pub fn involution_series_monomials(d: usize, j: usize, nvars: usize) -> Result<MonExpansion> {
    let mut out = MonExpansion::new(nvars);
    if 2 * j > d {
        return Ok(out);
    }
    let pairs: Vec<(usize, usize)> = (0..nvars).flat_map(|a| (a..nvars).map(move |b| (a, b))).collect();
    let singles: Vec<usize> = (0..nvars).collect();
    let one = BigRational::one();
    for pick in multisets(pairs.len(), j) {
        let mut base = vec![0u32; nvars];
        for &i in &pick {
            base[pairs[i].0] += 1;
            base[pairs[i].1] += 1;
        }
        for rest in multisets(singles.len(), d - 2 * j) {
            let mut e = base.clone();
            for &i in &rest {
                e[singles[i]] += 1;
            }
            out.add_term(e, &one)?;
        }
    }
    Ok(out)
}

/// Weakly increasing index sequences of length `k` below `n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
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
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn no_common_parts(a: &Partition, b: &Partition) -> bool {
    a.parts().iter().all(|x| !b.parts().contains(x))
}

/// Plethysm formula, the product rule for disjoint parts, the involution
/// formulas, dimensions and restriction for `n <= n_max`.
pub fn verify_representation_structure(n_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("structure").param("n_max", n_max);
    guarded(report, |rep| {
        for n in 1..=n_max {
            for lambda in partitions(n) {
                let direct = q_lambda_poly(&lambda, Basis::P)?;
                let pleth = plethystic_product(&lambda)?;
                rep.check(sympoly_equal(&direct, &pleth)?, || format!("plethysm formula fails at {lambda}"));
            }
        }

        let maj_exc = [Stat::Maj, Stat::Exc];
        for total in 2..=n_max {
            for m in 1..total {
                let qb = q_binomial(total, m)?;
                for lambda in partitions(m) {
                    let a_l = a_poly(&maj_exc, &PermClass::CycleType(lambda.clone()))?.value;
                    for mu in partitions(total - m) {
                        if !no_common_parts(&lambda, &mu) || lambda > mu {
                            continue;
                        }
                        let a_m = a_poly(&maj_exc, &PermClass::CycleType(mu.clone()))?.value;
                        let joined = a_poly(&maj_exc, &PermClass::CycleType(lambda.concat(&mu)))?.value;
                        rep.check(joined == &(&qb * &a_l) * &a_m, || format!("product rule fails at {lambda} and {mu}"));
                    }
                }
            }
        }
        for total in 1..=n_max {
            for n in 1..=total {
                let m = total - n;
                let qb = q_binomial(total, m)?;
                for lambda in partitions(n).into_iter().filter(|l| l.multiplicity(1) == 0) {
                    for j in 0..n {
                        let left = at_p_one(&a_lambda_j(&lambda.with_ones(m), j)?);
                        let right = &qb * &at_p_one(&a_lambda_j(&lambda, j)?);
                        rep.check(left == right, || format!("fixed-point rule fails at {lambda}, m={m}, j={j}"));
                    }
                }
            }
        }

        for n in 0..=n_max {
            for j in 0..=n / 2 {
                let k = n - 2 * j;
                let lambda = Partition::from_parts(std::iter::repeat(2).take(j).chain(std::iter::repeat(1).take(k)));
                let expect = plethysm_h(j, &h(2))?.mul(&h(k))?;
                let got = if n == 0 { SymF::one(Basis::H) } else { q_lambda(&lambda, j, Basis::H)? };
                rep.check(got.equals(&expect)?, || format!("involution class {lambda}: {got} vs {expect}"));

                let mut sum = SymF::zero(Basis::M);
                for lam in partitions(n).into_iter().filter(|l| l.parts().iter().all(|&x| x <= 2)) {
                    if n > 0 {
                        sum = sum.add(&q_lambda(&lam, j, Basis::M)?)?;
                    }
                }
                if n == 0 {
                    sum = SymF::one(Basis::M);
                }
                let lhs = MonExpansion::from_symf(&sum, n)?;
                let rhs = involution_series_monomials(n, j, n)?;
                rep.check(lhs == rhs, || format!("involution series fails at degree {n}, t^{j}"));
            }
        }

        for n in 1..=n_max {
            let ones = Partition::from_parts(vec![1; n]);
            for lambda in partitions(n) {
                let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
                for p in enumerate_by_cycle_type(&lambda)? {
                    *counts.entry(p.exc()).or_default() += 1;
                }
                for j in 0..n {
                    let dim = q_lambda(&lambda, j, Basis::M)?.coefficient(&ones);
                    let count = counts.get(&j).copied().unwrap_or(0);
                    rep.check(dim == BigRational::from_integer(count.into()), || {
                        format!("dimension at {lambda}, j={j}: {dim} vs {count}")
                    });
                }
            }
            let eulerian = eulerian_poly(n - 1)?;
            let cycle = Partition::from_parts([n]);
            for j in 1..n {
                let dim = q_lambda(&cycle, j, Basis::M)?.coefficient(&ones);
                let a: BigInt = eulerian.coeff_of(Var::T, j as i32 - 1).eval_ones();
                rep.check(dim == BigRational::from_integer(a.clone()), || format!("cycle dimension n={n} j={j}: {dim} vs {a}"));
            }
        }

        for n in 2..=n_max {
            let cycle = Partition::from_parts([n]);
            for j in 0..n {
                let restricted = restrict_frobenius(&q_lambda(&cycle, j, Basis::M)?, n)?;
                let expect = if j == 0 { SymF::zero(Basis::M) } else { q_nj(n - 1, j - 1, Basis::M)? };
                rep.check(restricted.equals(&expect)?, || format!("restriction n={n} j={j}: {restricted} vs {expect}"));
            }
        }
        Ok(())
    })
}
