//! q-integers, q-factorials, Gaussian binomials, q-multinomials and
//! q-shifted factorials.

use super::poly::{Poly, Var};
use crate::error::{invalid, Result};

/// `1 + b + b^2 + ... + b^(n-1)`; zero for `n = 0`.
pub fn geometric(base: &Poly, n: usize) -> Poly {
    let mut acc = Poly::zero();
    let mut pw = Poly::one();
    for _ in 0..n {
        acc = &acc + &pw;
        pw = &pw * base;
    }
    acc
}

/// `[n]_v = 1 + v + ... + v^(n-1)`.
pub fn var_int(v: Var, n: usize) -> Poly {
    geometric(&Poly::var(v), n)
}

pub fn q_int(n: usize) -> Poly {
    var_int(Var::Q, n)
}

pub fn q_factorial(n: usize) -> Poly {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial via the Pascal-type recurrence
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial(n: usize, k: usize) -> Result<Poly> {
    if k > n {
        return invalid(format!("q-binomial with k = {k} > n = {n}"));
    }
    let mut row = vec![Poly::one()];
    for m in 1..=n {
        let mut next = vec![Poly::one(); m + 1];
        for j in 1..m {
            next[j] = &row[j - 1] + &row[j].shift(&q_exp(j as i32));
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

pub fn q_multinomial(n: usize, parts: &[usize]) -> Result<Poly> {
    if parts.iter().sum::<usize>() != n {
        return invalid(format!("q-multinomial parts {parts:?} do not sum to {n}"));
    }
    let mut acc = Poly::one();
    let mut rest = n;
    for &k in parts {
        acc = &acc * &q_binomial(rest, k)?;
        rest -= k;
    }
    Ok(acc)
}

/// `(a;q)_n = (1-a)(1-aq)...(1-aq^(n-1))`.
pub fn pochhammer(a: &Poly, n: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 0..n {
        let factor = &Poly::one() - &a.shift(&q_exp(i as i32));
        acc = &acc * &factor;
    }
    acc
}

fn q_exp(e: i32) -> [i32; super::poly::NVARS] {
    let mut x = [0; super::poly::NVARS];
    x[Var::Q.index()] = e;
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly::poly;

    #[test]
    fn small_values() {
        assert_eq!(q_int(0), Poly::zero());
        assert_eq!(q_factorial(0), Poly::one());
        assert_eq!(q_int(3), poly("1 + q + q^2"));
        assert_eq!(q_binomial(4, 2).unwrap(), poly("1 + q + 2*q^2 + q^3 + q^4"));
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        for n in 0..8 {
            for k in 0..=n {
                let lhs = &q_binomial(n, k).unwrap() * &(&q_factorial(k) * &q_factorial(n - k));
                assert_eq!(lhs, q_factorial(n));
            }
        }
    }

    #[test]
    fn multinomial_is_factorial_quotient() {
        let m = q_multinomial(5, &[2, 1, 2]).unwrap();
        let den = &(&q_factorial(2) * &q_factorial(1)) * &q_factorial(2);
        assert_eq!(q_factorial(5).div_exact(&den), Some(m));
    }

    #[test]
    fn pochhammer_of_q() {
        assert_eq!(pochhammer(&poly("q"), 2), poly("1 - q - q^2 + q^3"));
        assert_eq!(pochhammer(&poly("z"), 0), Poly::one());
    }
}
