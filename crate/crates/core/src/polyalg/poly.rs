//! Sparse multivariate polynomials over the integers in the fixed variable
//! set `q, p, t, r` plus the series variable `z`.
//!
//! Exponents are signed so the same type carries Laurent polynomials; the
//! operations that need ordinary polynomials (`div_exact`) check for it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const NVARS: usize = 5;

/// Exponent vector indexed by [`Var::index`].
pub type Exponents = [i32; NVARS];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    P,
    T,
    R,
    Z,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::P, Var::T, Var::R, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::P => "p",
            Var::T => "t",
            Var::R => "r",
            Var::Z => "z",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Poly {
        Poly::monomial([0; NVARS], c)
    }

    pub fn var(v: Var) -> Poly {
        Poly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Poly {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Poly::monomial(exps, 1)
    }

    pub fn monomial(exps: Exponents, c: impl Into<BigInt>) -> Poly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { terms }
    }

    /// Builds `c * v1^e1 * v2^e2 ...`.
    pub fn term(c: impl Into<BigInt>, powers: &[(Var, i32)]) -> Poly {
        let mut exps = [0; NVARS];
        for &(v, e) in powers {
            exps[v.index()] += e;
        }
        Poly::monomial(exps, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; NVARS]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial with exponent vector `shift`.
    pub fn shift(&self, shift: &Exponents) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exps(e, shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of all coefficients (evaluation at every variable equal to 1).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).min()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, e: i32) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (exps, c) in &self.terms {
            if exps[i] == e {
                let mut x = *exps;
                x[i] = 0;
                out.terms.insert(x, c.clone());
            }
        }
        out
    }

    /// Splits into coefficients of `v^lo ..= v^hi`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, Poly> {
        let i = v.index();
        let mut out: BTreeMap<i32, Poly> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let mut x = *exps;
            x[i] = 0;
            out.entry(exps[i]).or_default().terms.insert(x, c.clone());
        }
        out
    }

    /// Drops every term whose `v`-exponent exceeds `max`.
    pub fn truncate(&self, v: Var, max: i32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v.index()] <= max)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Inverse of a unit: `±` a single monomial.
    pub fn unit_inverse(&self) -> Option<Poly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.abs().is_one() {
            Some(Poly::monomial(e.map(|x| -x), c.clone()))
        } else {
            None
        }
    }

    /// Replaces variables by Laurent polynomials; negative powers require
    /// the image to be a unit.
    pub fn substitute(&self, rules: &BTreeMap<Var, Poly>) -> Result<Poly> {
        let mut powers: BTreeMap<(Var, i32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (exps, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for v in Var::ALL {
                let e = exps[v.index()];
                if e == 0 {
                    continue;
                }
                let factor = match rules.get(&v) {
                    None => Poly::var_pow(v, e),
                    Some(img) => {
                        if let Some(p) = powers.get(&(v, e)) {
                            p.clone()
                        } else {
                            let base = if e < 0 {
                                img.unit_inverse().ok_or_else(|| {
                                    Error::NotInvertible(format!("{} -> {}", v.name(), img))
                                })?
                            } else {
                                img.clone()
                            };
                            let p = base.pow(e.unsigned_abs());
                            powers.insert((v, e), p.clone());
                            p
                        }
                    }
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Exact quotient `self / d` when it exists in the ordinary polynomial
    /// ring; `None` otherwise.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if !self.is_polynomial() || !d.is_polynomial() {
            return None;
        }
        let (ld, cd) = d.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((lr, cr)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let m = sub_exps(&lr, &ld);
            if m.iter().any(|&x| x < 0) {
                return None;
            }
            let (qc, rc) = cr.div_rem(&cd);
            if !rc.is_zero() {
                return None;
            }
            let t = Poly::monomial(m, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Total degree of the exponent vector, used for the canonical ordering.
    fn order_key(e: &Exponents) -> (i64, Exponents) {
        (e.iter().map(|&x| x as i64).sum(), *e)
    }
}

pub(crate) fn add_exps(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = *a;
    for i in 0..NVARS {
        out[i] += b[i];
    }
    out
}

fn sub_exps(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = *a;
    for i in 0..NVARS {
        out[i] -= b[i];
    }
    out
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *out.entry(add_exps(ea, eb)).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Poly { terms: out }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::constant(c)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Renders terms in graded-lex order, e.g. `1 + 3*p + 2*p*q^2 - q^-1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by_key(|e| Poly::order_key(e));
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            // Variables are printed in the conventional reading order q, p, t, r, z.
            for v in Var::ALL {
                let x = e[v.index()];
                match x {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    _ => factors.push(format!("{}^{}", v.name(), x)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the format produced by `Display` (whitespace-insensitive).
    fn from_str(s: &str) -> Result<Poly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Poly::zero();
        let bytes: Vec<char> = compact.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && !((bytes[i] == '+' || bytes[i] == '-') && bytes[i - 1] != '^') {
                i += 1;
            }
            let term: String = bytes[start..i].iter().collect();
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let mut coeff = sign;
            let mut exps = [0; NVARS];
            for factor in term.split('*') {
                if let Some(v) = factor.chars().next().and_then(|c| Var::from_name(&c.to_string())) {
                    let e = match factor.split_once('^') {
                        None if factor.len() == 1 => 1,
                        Some((_, pow)) => pow
                            .parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                        None => return Err(Error::Parse(format!("bad factor {factor:?}"))),
                    };
                    exps[v.index()] += e;
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
                    coeff *= c;
                }
            }
            out.add_term(exps, &coeff);
        }
        Ok(out)
    }
}

/// Convenience for tests and fixtures.
pub fn poly(s: &str) -> Poly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

/// `i64` view of a coefficient, when it fits.
pub fn small(c: &BigInt) -> Option<i64> {
    c.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "-1 + q", "3*p + 2*p*q + p*q^2", "q^-2 - 5*t*r^3", "z^4 + 2*q*z"] {
            let p = poly(s);
            assert_eq!(poly(&p.to_string()), p, "{s}");
        }
        assert_eq!(poly("q*p*3").to_string(), "3*q*p");
    }

    #[test]
    fn arithmetic_basics() {
        let a = poly("1 + q");
        let b = poly("1 - q");
        assert_eq!(&a * &b, poly("1 - q^2"));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.pow(3), poly("1 + 3*q + 3*q^2 + q^3"));
        assert_eq!(poly("2*q^2*t").coeff_of(Var::Q, 2), poly("2*t"));
    }

    #[test]
    fn exact_division() {
        let a = poly("1 - q^3");
        assert_eq!(a.div_exact(&poly("1 - q")), Some(poly("1 + q + q^2")));
        assert_eq!(a.div_exact(&poly("1 + q")), None);
        let d = poly("1 - t*q").pow(3);
        assert_eq!(d.div_exact(&poly("1 - t*q")), Some(poly("1 - t*q").pow(2)));
        assert_eq!(poly("2*q").div_exact(&poly("4")), None);
    }

    #[test]
    fn substitution() {
        let mut rules = BTreeMap::new();
        rules.insert(Var::Q, poly("q^-1"));
        assert_eq!(poly("q^2").substitute(&rules).unwrap(), poly("q^-2"));
        rules.insert(Var::Q, poly("1 + q"));
        assert!(poly("q^-1").substitute(&rules).is_err());
        assert_eq!(poly("t + q").substitute(&BTreeMap::new()).unwrap(), poly("t + q"));
    }
}
