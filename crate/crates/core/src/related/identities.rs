//! Checks of the enumerators against `Q_{n,j}`, `Q_{n,j,0}` and against
//! their generating functions in cleared-denominator form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::derangements::d_graded;
use super::words::{u_graded, u_tilde_graded, y_graded};
use super::{grade, Graded};
use crate::bijections::banners;
use crate::combinatorics::enumerate_permutations;
use crate::error::Result;
use crate::eulerian::{q_nj, q_njk};
use crate::polyalg::{geometric, Poly, Var};
use crate::report::{guarded, VerifyReport};
use crate::symfunc::qsym::mask_of;
use crate::symfunc::symf::{e, h};
use crate::symfunc::{Basis, MonExpansion, QSymF, SymF, SymPoly};

fn t() -> Poly {
    Poly::var(Var::T)
}

fn all_ones(n: usize) -> Vec<u32> {
    vec![1; n]
}

fn classical_derangements(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(0));
    if n == 0 {
        return a;
    }
    for m in 2..=n {
        let c = BigInt::from(m - 1) * (&a + &b);
        a = b;
        b = c;
    }
    b
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Sum over grades of the coefficient of `x_1 x_2 ... x_n`.
fn squarefree_total(g: &Graded, n: usize) -> BigRational {
    g.iter().fold(BigRational::zero(), |acc, m| acc + m.coefficient(&all_ones(n)))
}

fn mono(f: &SymF, nvars: usize) -> Result<MonExpansion> {
    MonExpansion::from_symf(f, nvars)
}

/// Graded enumerator as a symmetric function with coefficients in `t`;
/// exact when `nvars` is at least the degree.
fn as_series(g: &Graded) -> Result<SymPoly> {
    let coeffs = g.iter().map(|m| m.to_symf()?.convert(Basis::H)).collect::<Result<Vec<_>>>()?;
    SymPoly::from_graded(Var::T, &coeffs, Basis::H)
}

fn at_t_one(g: &Graded) -> Result<SymF> {
    g.iter().try_fold(SymF::zero(Basis::H), |acc, m| acc.add(&m.to_symf()?))
}

fn times(poly: &Poly, f: &SymF, g: &SymPoly) -> Result<SymPoly> {
    SymPoly::constant(f.clone()).mul(g)?.mul_poly(poly)
}

fn same(a: &SymPoly, b: &SymPoly) -> Result<bool> {
    Ok(a.convert(Basis::M)? == b.convert(Basis::M)?)
}

/// `sum_{sigma in D_{n,j}} F_{[n-1] \ Exd(sigma), n}`.
fn complemented_exd_sum(n: usize, j: usize) -> Result<QSymF> {
    let mut f = QSymF::zero();
    let full = if n == 0 { 0 } else { (1u32 << (n - 1)) - 1 };
    for p in enumerate_permutations(n)? {
        if p.fix() == 0 && p.exc() == j {
            f.add_fundamental(n, full & !mask_of(&p.exd_set()), 1);
        }
    }
    Ok(f)
}

/// Multiset derangement enumerators against `omega Q_{n,j,0}` and the
/// complemented-Exd fundamental expansion, their symmetry, and the
/// classical derangement numbers on square-free top rows.
pub fn verify_multiset_derangements(n_max: usize, nvars: usize) -> VerifyReport {
    let report = VerifyReport::theorem("multiset-derangements").param("n_max", n_max).param("nvars", nvars);
    guarded(report, |rep| {
        for n in 0..=n_max {
            let d = d_graded(n, nvars)?;
            rep.check(d.len() <= n.max(1), || format!("n={n}: excedance grade {} too large", d.len()));
            for j in 0..n.max(1) {
                let dj = grade(&d, j, nvars);
                rep.check(dj.is_symmetric(), || format!("d_{{{n},{j}}} is not symmetric in {nvars} variables"));
                let via_q = mono(&q_njk(n, j, 0, Basis::H)?.omega()?, nvars)?;
                rep.check(dj == via_q, || format!("d_{{{n},{j}}} differs from omega Q_{{{n},{j},0}}"));
                let via_f = complemented_exd_sum(n, j)?.to_monomial(nvars)?;
                rep.check(dj == via_f, || format!("d_{{{n},{j}}} differs from its fundamental expansion"));
            }
            let square_free = squarefree_total(&d_graded(n, n)?, n);
            let expect = BigRational::from_integer(classical_derangements(n));
            rep.check(square_free == expect, || format!("n={n}: {square_free} square-free arrays, expected {expect}"));
        }
        Ok(())
    })
}

/// `(sum d_{n,j} t^j z^n) (1 - sum_{i>=2} t [i-1]_t e_i z^i) = 1` through
/// `z^z_max`, enumerated in `z_max` variables.
pub fn verify_askey_ismail(z_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("askey-ismail").param("z_max", z_max);
    guarded(report, |rep| {
        let ds = (0..=z_max).map(|n| as_series(&d_graded(n, z_max)?)).collect::<Result<Vec<_>>>()?;
        for n in 0..=z_max {
            let mut lhs = ds[n].clone();
            for i in 2..=n {
                let w = -&(&t() * &geometric(&t(), i - 1));
                lhs = lhs.add(&times(&w, &e(i), &ds[n - i])?)?;
            }
            let rhs = if n == 0 { SymPoly::constant(SymF::one(Basis::H)) } else { SymPoly::zero(Basis::H) };
            rep.check(same(&lhs, &rhs)?, || format!("z^{n}: {lhs}"));
        }
        Ok(())
    })
}

/// `Y_{n,j} = omega Q_{n,j}`, symmetry, and `Y_{n,j} = omega sum wt(B)`
/// over banners of length `n` with `j` bars when `nvars >= n`.
pub fn verify_no_adjacent_repeats(n_max: usize, nvars: usize) -> VerifyReport {
    let report = VerifyReport::theorem("no-adjacent-repeats").param("n_max", n_max).param("nvars", nvars);
    guarded(report, |rep| {
        for n in 0..=n_max {
            let y = y_graded(n, nvars)?;
            rep.check(y.len() <= n.max(1), || format!("n={n}: descent grade {} too large", y.len()));
            let by_bars = if nvars >= n { Some(banner_sums(n, nvars)?) } else { None };
            for j in 0..n.max(1) {
                let yj = grade(&y, j, nvars);
                rep.check(yj.is_symmetric(), || format!("Y_{{{n},{j}}} is not symmetric in {nvars} variables"));
                let via_q = mono(&q_nj(n, j, Basis::H)?.omega()?, nvars)?;
                rep.check(yj == via_q, || format!("Y_{{{n},{j}}} differs from omega Q_{{{n},{j}}}"));
                if let Some(b) = &by_bars {
                    let via_b = mono(&grade(b, j, nvars).to_symf()?.omega()?, nvars)?;
                    rep.check(yj == via_b, || format!("Y_{{{n},{j}}} differs from omega of the banner sum"));
                }
            }
        }
        Ok(())
    })
}

/// Banner weights of length `n`, graded by the number of bars.
fn banner_sums(n: usize, nvars: usize) -> Result<Graded> {
    let mut out = vec![MonExpansion::new(nvars); n.max(1)];
    let one = BigRational::from_integer(1.into());
    for b in banners(n, nvars as u32) {
        let exps = b.weight(nvars).expect("values within the cap");
        out[b.bars()].add_term(exps, &one)?;
    }
    Ok(out)
}

/// `(sum Y_{n,j} t^j z^n)(E(zt) - t E(z)) = (1-t) E(z)` and its `t = 1`
/// case `(sum Y_n z^n)(1 - sum_{i>=2} (i-1) e_i z^i) = E(z)`, through
/// `z^z_max` in `z_max` variables.
pub fn verify_stanley_words(z_max: usize) -> VerifyReport {
    let report = VerifyReport::theorem("stanley-words").param("z_max", z_max);
    guarded(report, |rep| {
        let graded = (0..=z_max).map(|n| y_graded(n, z_max)).collect::<Result<Vec<_>>>()?;
        let ys = graded.iter().map(as_series).collect::<Result<Vec<_>>>()?;
        let ones = graded.iter().map(at_t_one).collect::<Result<Vec<_>>>()?;
        for n in 0..=z_max {
            let mut lhs = SymPoly::zero(Basis::H);
            for k in 0..=n {
                let w = &t().pow(k as u32) - &t();
                lhs = lhs.add(&times(&w, &e(k), &ys[n - k])?)?;
            }
            let mut rhs = SymPoly::zero(Basis::H);
            rhs.add_poly_times(&(&Poly::one() - &t()), &e(n))?;
            rep.check(same(&lhs, &rhs)?, || format!("z^{n}: {lhs} vs {rhs}"));

            let mut at_one = ones[n].clone();
            for i in 2..=n {
                let c = BigRational::from_integer(BigInt::from(i - 1));
                at_one = at_one.sub(&e(i).mul(&ones[n - i])?.scale(&c))?;
            }
            rep.check(at_one.equals(&e(n))?, || format!("t=1, z^{n}: {at_one}"));
        }
        Ok(())
    })
}

/// Words with no double descents against `sum_j Q_{n,j} t^j`, and those
/// also avoiding an initial descent against `sum_j Q_{n,j,0} t^j`; the
/// cleared generating functions when `nvars >= n`; the square-free
/// coefficients against `n!` and the derangement numbers.
pub fn gessel_identities(n_max: usize, nvars: usize) -> VerifyReport {
    let report = VerifyReport::theorem("gessel").param("n_max", n_max).param("nvars", nvars);
    guarded(report, |rep| {
        let mut us = Vec::new();
        let mut uts = Vec::new();
        for n in 0..=n_max {
            let u = u_graded(n, nvars)?;
            let ut = u_tilde_graded(n, nvars)?;
            for j in 0..=n {
                let (q, q0) = if j < n.max(1) {
                    (q_nj(n, j, Basis::H)?, q_njk(n, j, 0, Basis::H)?)
                } else {
                    (SymF::zero(Basis::H), SymF::zero(Basis::H))
                };
                let uj = grade(&u, j, nvars);
                rep.check(uj == mono(&q, nvars)?, || format!("U_{n} at t^{j} differs from Q_{{{n},{j}}}"));
                let utj = grade(&ut, j, nvars);
                rep.check(utj == mono(&q0, nvars)?, || format!("tilde U_{n} at t^{j} differs from Q_{{{n},{j},0}}"));
            }
            let u_full = u_graded(n, n)?;
            let perms = squarefree_total(&u_full, n);
            let expect = BigRational::from_integer(factorial(n));
            rep.check(perms == expect, || format!("n={n}: square-free total {perms}, expected {expect}"));
            let der = squarefree_total(&u_tilde_graded(n, n)?, n);
            let expect = BigRational::from_integer(classical_derangements(n));
            rep.check(der == expect, || format!("n={n}: square-free tilde total {der}, expected {expect}"));
            if nvars >= n_max {
                us.push(as_series(&u)?);
                uts.push(as_series(&ut)?);
            }
        }
        if nvars >= n_max {
            for n in 0..=n_max {
                let (mut lhs, mut lhs_tilde) = (SymPoly::zero(Basis::H), SymPoly::zero(Basis::H));
                for k in 0..=n {
                    let w = &t().pow(k as u32) - &t();
                    lhs = lhs.add(&times(&w, &h(k), &us[n - k])?)?;
                    lhs_tilde = lhs_tilde.add(&times(&w, &h(k), &uts[n - k])?)?;
                }
                let mut rhs = SymPoly::zero(Basis::H);
                rhs.add_poly_times(&(&Poly::one() - &t()), &h(n))?;
                rep.check(same(&lhs, &rhs)?, || format!("U series, z^{n}: {lhs}"));
                let rhs_tilde = if n == 0 {
                    SymPoly::constant(SymF::one(Basis::H)).mul_poly(&(&Poly::one() - &t()))?
                } else {
                    SymPoly::zero(Basis::H)
                };
                rep.check(same(&lhs_tilde, &rhs_tilde)?, || format!("tilde U series, z^{n}: {lhs_tilde}"));
            }
        }
        Ok(())
    })
}
