//! t-symmetry and t-unimodality of the Eulerian families, the reversal
//! involution on cycle types, and the positivity statements confirmed in
//! range.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::qfun::{a_poly, q_fun, q_lambda, q_nj, q_njk, twist_t, PermClass, Selector, Stat};
use crate::combinatorics::{partitions, Partition};
use crate::error::Result;
use crate::polyalg::{poly, Poly, Var};
use crate::report::{guarded, CheckKind, VerifyReport};
use crate::symfunc::{sym, Basis, SymF};

/// Outcome of testing a coefficient sequence `f_0, f_1, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub symmetric: bool,
    pub unimodal: bool,
    /// Twice the center of symmetry (`r + s` for support `[r, s]`).
    pub center2: usize,
}

/// Symmetry and unimodality of a sequence under a partial order given by
/// `le(a, b)`. Zero sequences are reported as symmetric and unimodal with
/// center 0.
pub fn shape<T>(
    coeffs: &[T],
    is_zero: impl Fn(&T) -> bool,
    eq: impl Fn(&T, &T) -> Result<bool>,
    le: impl Fn(&T, &T) -> Result<bool>,
) -> Result<Shape> {
    let support: Vec<usize> = (0..coeffs.len()).filter(|&i| !is_zero(&coeffs[i])).collect();
    let (Some(&r), Some(&s)) = (support.first(), support.last()) else {
        return Ok(Shape { symmetric: true, unimodal: true, center2: 0 });
    };
    let mut symmetric = true;
    for i in 0..=(s - r) / 2 {
        symmetric &= eq(&coeffs[r + i], &coeffs[s - i])?;
    }
    let mut unimodal = true;
    for i in r..(r + s) / 2 {
        unimodal &= le(&coeffs[i], &coeffs[i + 1])?;
    }
    for i in (r + s + 1) / 2..s {
        unimodal &= le(&coeffs[i + 1], &coeffs[i])?;
    }
    Ok(Shape { symmetric, unimodal, center2: r + s })
}

/// Shape in the partial order induced by `basis`-positivity.
pub fn sym_shape(coeffs: &[SymF], basis: Basis) -> Result<Shape> {
    shape(coeffs, SymF::is_zero, |a, b| a.equals(b), |a, b| Ok(b.sub(a)?.convert(basis)?.is_nonnegative()))
}

/// Shape with coefficientwise order on polynomials.
pub fn poly_shape(coeffs: &[Poly]) -> Result<Shape> {
    shape(coeffs, Poly::is_zero, |a, b| Ok(a == b), |a, b| Ok((b - a).has_nonnegative_coefficients()))
}

/// `[t^0], [t^1], ...` of a polynomial with nonnegative powers of `t`.
pub fn t_coefficients(p: &Poly) -> Vec<Poly> {
    let by_t = p.coefficients_in(Var::T);
    let top = by_t.keys().next_back().copied().unwrap_or(0).max(0) as usize;
    (0..=top).map(|j| by_t.get(&(j as i32)).cloned().unwrap_or_else(Poly::zero)).collect()
}

fn q_lambda_coeffs(lambda: &Partition, basis: Basis) -> Result<Vec<SymF>> {
    (0..lambda.size().max(1)).map(|j| q_lambda(lambda, j, basis)).collect()
}

fn ones(lambda: &Partition) -> usize {
    lambda.multiplicity(1)
}

fn all_partitions(n_min: usize, n_max: usize) -> impl Iterator<Item = Partition> {
    (n_min..=n_max).flat_map(partitions)
}

/// The symmetric-function statements: symmetry of every `Q_{lambda,j}`,
/// the two `t`-reversal symmetries, h-positivity and h-unimodality.
pub fn q_symmetry_report(n_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("q-symmetry").param("n_max", n_max);
    guarded(report, |rep| {
        for n in 1..=n_max {
            for j in 0..n {
                let (a, b) = (q_nj(n, j, Basis::H)?, q_nj(n, n - 1 - j, Basis::H)?);
                rep.check(a == b, || format!("Q[{n},{j}] != Q[{n},{}]", n - 1 - j));
            }
            let qs: Vec<SymF> = (0..n).map(|j| q_nj(n, j, Basis::H)).collect::<Result<_>>()?;
            let sh = sym_shape(&qs, Basis::H)?;
            rep.check(sh.symmetric && sh.unimodal && sh.center2 == n - 1, || format!("sum_j Q[{n},j] t^j: {sh:?}"));
            rep.check(qs.iter().all(SymF::is_nonnegative), || format!("Q[{n},j] not h-positive"));
            for k in 0..=n {
                let qk: Vec<SymF> = (0..n).map(|j| q_njk(n, j, k, Basis::H)).collect::<Result<_>>()?;
                rep.check(qk.iter().all(SymF::is_nonnegative), || format!("Q[{n},j,{k}] not h-positive"));
                let sh = sym_shape(&qk, Basis::H)?;
                let zero = qk.iter().all(SymF::is_zero);
                rep.check(zero || (sh.symmetric && sh.unimodal && sh.center2 == n - k), || format!("sum_j Q[{n},j,{k}] t^j: {sh:?}"));
            }
        }
        for lambda in all_partitions(1, n_max) {
            let n = lambda.size();
            let k = ones(&lambda);
            for j in 0..n {
                let q = q_fun(&Selector::LambdaJ { lambda: lambda.clone(), j })?;
                rep.check(q.value.is_symmetric_function(), || format!("QL{lambda};{j} is not symmetric"));
            }
            for j in 0..=n - k {
                let (a, b) = (q_lambda(&lambda, j, Basis::M)?, q_lambda(&lambda, n - k - j, Basis::M)?);
                rep.check(a == b, || format!("QL{lambda};{j} != QL{lambda};{}", n - k - j));
            }
        }
        Ok(())
    })
}

/// Specializations to the enumerators: t-symmetry of `A_{n,k}` and `A_lambda`
/// after `t -> t/q`, unimodality where proved, and the reversal involution
/// on cycle types.
pub fn a_symmetry_report(n_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("a-symmetry").param("n_max", n_max);
    guarded(report, |rep| {
        let mdx = [Stat::Maj, Stat::Des, Stat::Exc];
        for n in 1..=n_max {
            for k in 0..=n {
                let a = twist_t(&a_poly(&mdx, &PermClass::FixedPoints(n, k))?.value);
                if a.is_zero() {
                    continue;
                }
                let sh = poly_shape(&t_coefficients(&a))?;
                rep.check(sh.symmetric && sh.center2 == n - k, || format!("A[{n},{k}](q,p,t/q): {sh:?}"));
                if k == 0 {
                    rep.check(sh.unimodal, || format!("A[{n},0](q,p,t/q) not unimodal"));
                }
                let at_p1 = a.substitute(&BTreeMap::from([(Var::P, Poly::one())]))?;
                let sh = poly_shape(&t_coefficients(&at_p1))?;
                rep.check(sh.symmetric && sh.unimodal && sh.center2 == n - k, || format!("A[{n},{k}](q,1,t/q): {sh:?}"));
            }
            let all = twist_t(&a_poly(&[Stat::Maj, Stat::Exc], &PermClass::All(n))?.value);
            let sh = poly_shape(&t_coefficients(&all))?;
            rep.check(sh.symmetric && sh.unimodal && sh.center2 == n - 1, || format!("A[{n}](q,1,t/q): {sh:?}"));
        }
        for lambda in all_partitions(1, n_max) {
            let n = lambda.size();
            let k = ones(&lambda);
            let a = a_poly(&mdx, &PermClass::CycleType(lambda.clone()))?.value;
            let sh = poly_shape(&t_coefficients(&twist_t(&a)))?;
            rep.check(sh.symmetric && sh.center2 == n - k, || format!("A{lambda}(q,p,t/q): {sh:?}"));

            let q_inv = BTreeMap::from([(Var::Q, Poly::var_pow(Var::Q, -1)), (Var::P, Poly::term(1, &[(Var::Q, n as i32), (Var::P, 1)]))]);
            let by_j = t_coefficients(&a);
            let coeff = |j: usize| by_j.get(j).cloned().unwrap_or_else(Poly::zero);
            for j in 0..n {
                let reflected = if j <= n - k { coeff(n - k - j).substitute(&q_inv)? } else { Poly::zero() };
                rep.check(coeff(j) == reflected, || format!("reversal {lambda} j={j}"));
                let own = coeff(j).substitute(&q_inv)?;
                let shifted = own.shift(&q_exp(2 * j as i32 + k as i32 - n as i32));
                rep.check(coeff(j) == shifted, || format!("q-symmetry {lambda} j={j}"));
            }
        }
        Ok(())
    })
}

fn q_exp(e: i32) -> crate::polyalg::Exponents {
    let mut x = [0; crate::polyalg::poly::NVARS];
    x[Var::Q.index()] = e;
    x
}

/// The `t^1, t^2` coefficients of `A_4^{maj,des,exc}(q,p,t/q)` and the
/// failure of t-symmetry they witness.
pub fn a4_counterexample() -> VerifyReport {
    let report = VerifyReport::new("a4-not-t-symmetric", CheckKind::Counterexample).param("n", 4);
    guarded(report, |rep| {
        let a = twist_t(&a_poly(&[Stat::Maj, Stat::Des, Stat::Exc], &PermClass::All(4))?.value);
        let c = t_coefficients(&a);
        let printed = [
            poly("1"),
            poly("3*p + 2*p*q + p*q^2 + 2*p^2*q^2 + 2*p^2*q^3 + p^2*q^4"),
            poly("3*p + p*q + p^2*q + 3*p^2*q^2 + 2*p^2*q^3 + p^3*q^4"),
            poly("p"),
        ];
        rep.check(c.len() == printed.len(), || format!("{} t-coefficients", c.len()));
        for (j, (x, y)) in c.iter().zip(&printed).enumerate() {
            rep.check(x == y, || format!("t^{j}: {x}"));
        }
        let sh = poly_shape(&c)?;
        rep.check(!sh.symmetric, || "A_4(q,p,t/q) came out t-symmetric".into());
        Ok(())
    })
}

/// The displayed cycle-type counterexample to h-positivity and its Schur
/// expansion.
pub fn q6_3_fixture() -> VerifyReport {
    let report = VerifyReport::theorem("q6-3-fixture");
    guarded(report, |rep| {
        let lambda = Partition::from_parts([6]);
        let h = q_lambda(&lambda, 3, Basis::H)?;
        let expect_h = sym("2*h[4,2] - h[4,1,1] + h[3,2,1] + h[5,1]");
        rep.check(h == expect_h, || format!("h-expansion {h}"));
        rep.check(!h.is_nonnegative(), || "QL[6;3] came out h-positive".into());
        let s = h.convert(Basis::S)?;
        let expect_s = sym("3*s[6] + 3*s[5,1] + 3*s[4,2] + s[3,3] + s[3,2,1]");
        rep.check(s == expect_s, || format!("Schur expansion {s}"));
        Ok(())
    })
}

/// `Q_{5,1}^2 - Q_{5,2} Q_{5,0}`: the displayed h-expansion (its doubled
/// plus sign read as a single one) is not h-positive but is Schur-positive.
pub fn q5_log_concavity_fixture() -> VerifyReport {
    let report = VerifyReport::theorem("q5-log-concavity-fixture");
    guarded(report, |rep| {
        let a = q_nj(5, 1, Basis::H)?;
        let d = a.mul(&a)?.sub(&q_nj(5, 2, Basis::H)?.mul(&q_nj(5, 0, Basis::H)?)?)?;
        let expect = sym("h[5,4,1] - h[5,2,2,1] + h[5,3,2] + 4*h[4,3,2,1] + h[4,4,1,1] + 4*h[3,3,2,2]");
        rep.check(d == expect, || format!("h-expansion {d}"));
        rep.check(!d.is_nonnegative(), || "came out h-positive".into());
        rep.check(d.convert(Basis::S)?.is_nonnegative(), || "not Schur-positive".into());
        Ok(())
    })
}

fn log_concave_sym(coeffs: &[SymF]) -> Result<Option<usize>> {
    for j in 1..coeffs.len().saturating_sub(1) {
        let d = coeffs[j].mul(&coeffs[j])?.sub(&coeffs[j + 1].mul(&coeffs[j - 1])?)?;
        if !d.convert(Basis::S)?.is_nonnegative() {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

fn log_concave_poly(coeffs: &[Poly]) -> Option<usize> {
    (1..coeffs.len().saturating_sub(1))
        .find(|&j| !(&(&coeffs[j] * &coeffs[j]) - &(&coeffs[j + 1] * &coeffs[j - 1])).has_nonnegative_coefficients())
}

/// Coefficients of a polynomial in `q` alone, lowest power first.
fn q_sequence(p: &Poly) -> Vec<BigInt> {
    let by_q = p.coefficients_in(Var::Q);
    let (Some(&lo), Some(&hi)) = (by_q.keys().next(), by_q.keys().next_back()) else {
        return Vec::new();
    };
    (lo..=hi).map(|e| by_q.get(&e).map(|c| c.eval_ones()).unwrap_or_default()).collect()
}

fn is_unimodal_ints<T: Ord>(c: &[T]) -> bool {
    let Some(peak) = (0..c.len()).max_by_key(|&i| (&c[i], std::cmp::Reverse(i))) else {
        return true;
    };
    c[..=peak].windows(2).all(|w| w[0] <= w[1]) && c[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// Schur positivity and Schur unimodality of `Q_{lambda,j}`.
pub fn schur_positivity_confirmation(n_max: usize) -> VerifyReport {
    let report = VerifyReport::confirmation("schur-positivity").param("n_max", n_max);
    guarded(report, |rep| {
        for lambda in all_partitions(1, n_max) {
            let k = ones(&lambda);
            let n = lambda.size();
            let qs = q_lambda_coeffs(&lambda, Basis::S)?;
            for (j, q) in qs.iter().enumerate() {
                rep.check(q.is_nonnegative(), || format!("QL{lambda};{j} = {q}"));
            }
            for j in 1..=(n - k) / 2 {
                let d = qs[j].sub(&qs[j - 1])?;
                rep.check(d.is_nonnegative(), || format!("QL{lambda};{j} - QL{lambda};{} = {d}", j - 1));
            }
        }
        Ok(())
    })
}

/// Cycle types whose `Q_{lambda,j}` sequence is not Schur log-concave,
/// with the failing `j`. Below size 9 only `(4,4)` fails: its one-row
/// Schur coefficients at `j = 2, 3, 4` are `1, 1, 2`.
pub const LAMBDA_LOG_CONCAVITY_EXCEPTIONS: &[(&[usize], &[usize])] = &[(&[4, 4], &[3, 5])];

fn is_exception(lambda: &Partition) -> bool {
    LAMBDA_LOG_CONCAVITY_EXCEPTIONS.iter().any(|(parts, _)| lambda.parts() == *parts)
}

/// Schur log-concavity of `Q_{n,j}`, `Q_{n,j,k}` and of `Q_{lambda,j}` for
/// every cycle type outside [`LAMBDA_LOG_CONCAVITY_EXCEPTIONS`].
pub fn log_concavity_confirmation(n_max: usize) -> VerifyReport {
    let mut report = VerifyReport::confirmation("log-concavity").param("n_max", n_max);
    if n_max >= 8 {
        report = report.with_note("cycle type [4,4] excluded; see lambda-log-concavity-fails");
    }
    guarded(report, |rep| {
        for n in 1..=n_max {
            let qs: Vec<SymF> = (0..n).map(|j| q_nj(n, j, Basis::H)).collect::<Result<_>>()?;
            let bad = log_concave_sym(&qs)?;
            rep.check(bad.is_none(), || format!("Q[{n},j] at j={}", bad.unwrap_or(0)));
            for k in 0..=n {
                let qk: Vec<SymF> = (0..n).map(|j| q_njk(n, j, k, Basis::H)).collect::<Result<_>>()?;
                let bad = log_concave_sym(&qk)?;
                rep.check(bad.is_none(), || format!("Q[{n},j,{k}] at j={}", bad.unwrap_or(0)));
            }
        }
        for lambda in all_partitions(1, n_max).filter(|l| !is_exception(l)) {
            let qs = q_lambda_coeffs(&lambda, Basis::H)?;
            let bad = log_concave_sym(&qs)?;
            rep.check(bad.is_none(), || format!("QL{lambda} at j={}", bad.unwrap_or(0)));
        }
        Ok(())
    })
}

/// Number of permutations of cycle type `lambda` with `j` excedances and
/// empty excedance-descent set, for each `j`. This is the coefficient of the
/// one-row Schur function in `Q_{lambda,j}`.
pub fn one_row_counts(lambda: &Partition) -> Result<Vec<BigInt>> {
    let n = lambda.size();
    let mut counts = vec![BigInt::from(0); n.max(1)];
    for p in crate::combinatorics::enumerate_permutations(n)? {
        if p.cycle_type() == *lambda && p.exd_set().is_empty() {
            counts[p.exc()] += 1;
        }
    }
    Ok(counts)
}

/// Each pinned exception fails at exactly its listed `j`, checked on the
/// Schur expansion of the difference and, independently, on the one-row
/// coefficients counted from permutations.
pub fn lambda_log_concavity_counterexample() -> VerifyReport {
    let report = VerifyReport::new("lambda-log-concavity-fails", CheckKind::Counterexample);
    guarded(report, |rep| {
        for (parts, js) in LAMBDA_LOG_CONCAVITY_EXCEPTIONS {
            let lambda = Partition::from_parts(parts.iter().copied());
            let n = lambda.size();
            let row = Partition::from_parts([2 * n]);
            let qs = q_lambda_coeffs(&lambda, Basis::H)?;
            let counts = one_row_counts(&lambda)?;
            for j in 1..qs.len().saturating_sub(1) {
                let d = qs[j].mul(&qs[j])?.sub(&qs[j + 1].mul(&qs[j - 1])?)?.convert(Basis::S)?;
                let expect_fail = js.contains(&j);
                rep.check(d.is_nonnegative() != expect_fail, || format!("QL{lambda} at j={j}"));
                let by_count = &counts[j] * &counts[j] - &counts[j + 1] * &counts[j - 1];
                let by_schur = d.coefficient(&row);
                rep.check(by_schur == num_rational::BigRational::from_integer(by_count.clone()), || {
                    format!("QL{lambda} j={j}: one-row coefficient {by_schur} vs count {by_count}")
                });
            }
        }
        Ok(())
    })
}

/// t-unimodality of `A_lambda(q,p,t/q)` and `A_{n,k}(q,p,t/q)`, their
/// log-concavity (and that of `A_n(q,1,t/q)`), and q-unimodality of each
/// `[p^d t^j] A_lambda(q,p,t)`.
pub fn a_unimodality_confirmation(n_max: usize) -> VerifyReport {
    let report = VerifyReport::confirmation("a-unimodality").param("n_max", n_max);
    guarded(report, |rep| {
        let mdx = [Stat::Maj, Stat::Des, Stat::Exc];
        for lambda in all_partitions(1, n_max) {
            let a = a_poly(&mdx, &PermClass::CycleType(lambda.clone()))?.value;
            let c = t_coefficients(&twist_t(&a));
            rep.check(poly_shape(&c)?.unimodal, || format!("A{lambda}(q,p,t/q) not t-unimodal"));
            for (j, cj) in t_coefficients(&a).iter().enumerate() {
                for (d, cd) in cj.coefficients_in(Var::P) {
                    let seq = q_sequence(&cd);
                    rep.check(is_unimodal_ints(&seq), || format!("[p^{d} t^{j}] A{lambda} not q-unimodal: {seq:?}"));
                }
            }
        }
        for n in 1..=n_max {
            for k in 0..=n {
                let a = twist_t(&a_poly(&mdx, &PermClass::FixedPoints(n, k))?.value);
                let c = t_coefficients(&a);
                rep.check(poly_shape(&c)?.unimodal, || format!("A[{n},{k}](q,p,t/q) not t-unimodal"));
                rep.check(log_concave_poly(&c).is_none(), || format!("A[{n},{k}](q,p,t/q) not log-concave"));
            }
            let a = twist_t(&a_poly(&[Stat::Maj, Stat::Exc], &PermClass::All(n))?.value);
            rep.check(log_concave_poly(&t_coefficients(&a)).is_none(), || format!("A[{n}](q,1,t/q) not log-concave"));
        }
        Ok(())
    })
}

/// The proved symmetry statements plus the expected counterexample.
pub fn symmetry_unimodality_suite(n_max: usize) -> Vec<VerifyReport> {
    vec![q_symmetry_report(n_max), a_symmetry_report(n_max), a4_counterexample()]
}

/// Fixture computations and the confirmations in range.
pub fn conjecture_suite(n_max: usize) -> Vec<VerifyReport> {
    let mut out = vec![
        q6_3_fixture(),
        q5_log_concavity_fixture(),
        schur_positivity_confirmation(n_max),
        log_concavity_confirmation(n_max),
        a_unimodality_confirmation(n_max),
    ];
    if n_max >= 8 {
        out.push(lambda_log_concavity_counterexample());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Poly> {
        v.iter().map(|&c| Poly::constant(c)).collect()
    }

    #[test]
    fn shapes() {
        let s = poly_shape(&ints(&[0, 1, 3, 3, 1])).unwrap();
        assert_eq!(s, Shape { symmetric: true, unimodal: true, center2: 5 });
        let s = poly_shape(&ints(&[1, 0, 1])).unwrap();
        assert!(s.symmetric && !s.unimodal);
        let s = poly_shape(&ints(&[1, 2])).unwrap();
        assert!(!s.symmetric && s.unimodal);
        assert!(is_unimodal_ints(&[1, 3, 3, 2]));
        assert!(!is_unimodal_ints(&[2, 1, 2]));
    }

    #[test]
    fn suites_pass_small() {
        for r in symmetry_unimodality_suite(5).into_iter().chain(conjecture_suite(5)) {
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    /// A sequence that is h-unimodal must also be Schur-unimodal.
    #[test]
    fn h_order_refines_schur_order() {
        let qs: Vec<SymF> = (0..5).map(|j| q_nj(5, j, Basis::H).unwrap()).collect();
        assert!(sym_shape(&qs, Basis::H).unwrap().unimodal);
        assert!(sym_shape(&qs, Basis::S).unwrap().unimodal);
    }
}
