//! Truncated power series in one distinguished variable, and series in the
//! q-exponential normalization `sum c_n z^n / [n]_q!`.

use std::fmt;

use super::fraction::PolyFraction;
use super::poly::{Poly, Var};
use super::qanalog::q_binomial;
use crate::error::{Error, Result};

/// Coefficient ring of a truncated series.
pub trait Coeff: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn try_inverse(&self) -> Option<Self>;
}

impl Coeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn try_inverse(&self) -> Option<Self> {
        self.unit_inverse()
    }
}

impl Coeff for PolyFraction {
    fn zero() -> Self {
        PolyFraction::zero()
    }
    fn one() -> Self {
        PolyFraction::one()
    }
    fn is_zero(&self) -> bool {
        PolyFraction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        PolyFraction::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        PolyFraction::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        PolyFraction::mul(self, o)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C: Coeff> {
    var: Var,
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncSeries<C> {
    /// The zero series `O(v^(order+1))`.
    pub fn zero(var: Var, order: usize) -> Self {
        TruncSeries { var, coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = C::one();
        s
    }

    /// Coefficients beyond `order` are discarded; missing ones are zero.
    pub fn from_coeffs(var: Var, order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient_of(&self, d: usize) -> Result<&C> {
        self.coeffs.get(d).ok_or(Error::OrderMismatch(d, self.order()))
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set(&mut self, d: usize, c: C) {
        if d <= self.order() {
            self.coeffs[d] = c;
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch(self.order(), o.order()));
        }
        if self.var != o.var {
            return Err(Error::InvalidInput(format!(
                "series variables differ: {} vs {}",
                self.var.name(),
                o.var.name()
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(TruncSeries { var: self.var, coeffs })
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries { var: self.var, coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for d in 1..=n {
            let mut acc = C::zero();
            for k in 1..=d {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[d - k]));
                }
            }
            out.push(C::zero().sub(&acc.mul(&inv0)));
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }
}

impl TruncSeries<Poly> {
    /// Collects the powers of `var` in a polynomial, truncating at `order`.
    pub fn from_poly(p: &Poly, var: Var, order: usize) -> Result<Self> {
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (e, c) in p.coefficients_in(var) {
            if e < 0 {
                return Err(Error::InvalidInput(format!("negative power of {}", var.name())));
            }
            if (e as usize) <= order {
                coeffs[e as usize] = c;
            }
        }
        Ok(TruncSeries { var, coeffs })
    }

    pub fn to_fractions(&self) -> TruncSeries<PolyFraction> {
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().cloned().map(PolyFraction::from_poly).collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.var.name())?,
                _ => write!(f, "({c})*{}^{d}", self.var.name())?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var.name(), self.order() + 1)
    }
}

/// `sum_n c_n z^n / [n]_q!`, truncated at `z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct QExpSeries {
    coeffs: Vec<Poly>,
}

impl QExpSeries {
    pub fn new(coeffs: Vec<Poly>) -> Result<QExpSeries> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("empty q-exponential series".into()));
        }
        Ok(QExpSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Poly) -> QExpSeries {
        QExpSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn add(&self, o: &QExpSeries) -> Result<QExpSeries> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch(self.order(), o.order()));
        }
        Ok(QExpSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &QExpSeries) -> Result<QExpSeries> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch(self.order(), o.order()));
        }
        Ok(QExpSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() })
    }

    /// `(A*B)_n = sum_k [n choose k]_q a_k b_(n-k)`.
    pub fn mul(&self, o: &QExpSeries) -> Result<QExpSeries> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch(self.order(), o.order()));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for n in 0..=self.order() {
            let mut acc = Poly::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || o.coeffs[n - k].is_zero() {
                    continue;
                }
                let term = &(&q_binomial(n, k)? * &self.coeffs[k]) * &o.coeffs[n - k];
                acc = &acc + &term;
            }
            coeffs.push(acc);
        }
        Ok(QExpSeries { coeffs })
    }

    /// `exp_q(a z)`: coefficient `a^n`.
    pub fn exp_q(a: &Poly, order: usize) -> QExpSeries {
        QExpSeries::from_fn(order, |n| a.pow(n as u32))
    }

    /// `Exp_q(a z)`: coefficient `q^C(n,2) a^n`.
    pub fn big_exp_q(a: &Poly, order: usize) -> QExpSeries {
        QExpSeries::from_fn(order, |n| {
            a.pow(n as u32).shift(&{
                let mut e = [0; super::poly::NVARS];
                e[Var::Q.index()] = (n * n.saturating_sub(1) / 2) as i32;
                e
            })
        })
    }

    /// Ordinary series in `z` with fraction coefficients `c_n / [n]_q!`.
    pub fn to_trunc_series(&self) -> TruncSeries<PolyFraction> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                PolyFraction::new(c.clone(), super::qanalog::q_factorial(n))
                    .expect("q-factorial is nonzero")
            })
            .collect();
        TruncSeries::from_coeffs(Var::Z, self.order(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly::poly;
    use crate::polyalg::qanalog::{pochhammer, q_binomial};

    #[test]
    fn geometric_inverse() {
        let s = TruncSeries::from_poly(&poly("1 - z"), Var::Z, 3).unwrap();
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[Poly::one(), Poly::one(), Poly::one(), Poly::one()]);
        let one = TruncSeries::<Poly>::one(Var::Z, 3);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inverse_of_pochhammer_multiplies_back() {
        let s = TruncSeries::from_poly(&pochhammer(&poly("z"), 2), Var::Z, 2).unwrap();
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coefficient_of(2).unwrap(), &poly("1 + q + q^2"));
        assert_eq!(s.mul(&inv).unwrap(), TruncSeries::one(Var::Z, 2));
    }

    #[test]
    fn non_unit_constant_needs_fractions() {
        let s = TruncSeries::from_poly(&poly("1 - t*q + z"), Var::Z, 2).unwrap();
        assert!(s.inverse().is_err());
        let f = s.to_fractions();
        let inv = f.inverse().unwrap();
        assert_eq!(f.mul(&inv).unwrap(), TruncSeries::one(Var::Z, 2));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = TruncSeries::<Poly>::one(Var::Z, 2);
        let b = TruncSeries::<Poly>::one(Var::Z, 3);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch(2, 3)));
        let c = QExpSeries::from_fn(2, |_| Poly::one());
        let d = QExpSeries::from_fn(3, |_| Poly::one());
        assert!(c.mul(&d).is_err());
    }

    #[test]
    fn qexp_products() {
        let ones = QExpSeries::from_fn(2, |_| Poly::one());
        assert_eq!(ones.mul(&ones).unwrap().coeff(2), &poly("3 + q"));
        let zero = QExpSeries::from_fn(2, |_| Poly::zero());
        assert_eq!(ones.mul(&zero).unwrap(), zero);
        let e = QExpSeries::exp_q(&Poly::one(), 2);
        let er = QExpSeries::exp_q(&poly("r"), 2);
        assert_eq!(e.mul(&er).unwrap().coeff(2), &poly("1 + r + q*r + r^2"));
    }

    #[test]
    fn qexp_agrees_with_fraction_series() {
        for order in 0..=6 {
            let a = QExpSeries::from_fn(order, |n| poly("1 + t").pow(n as u32));
            let b = QExpSeries::from_fn(order, |n| poly("r - q").pow((n % 3) as u32));
            let via_qexp = a.mul(&b).unwrap().to_trunc_series();
            let via_series = a.to_trunc_series().mul(&b.to_trunc_series()).unwrap();
            assert_eq!(via_qexp, via_series);
        }
    }

    #[test]
    fn pochhammer_clears_binomial_series() {
        for n in 0..5 {
            let order = 7;
            let poch = TruncSeries::from_poly(
                &pochhammer(&poly("p"), n + 1).substitute(&Default::default()).unwrap(),
                Var::P,
                order,
            )
            .unwrap();
            let coeffs = (0..=order).map(|m| q_binomial(m + n, n).unwrap()).collect();
            let expansion = TruncSeries::from_coeffs(Var::P, order, coeffs);
            assert_eq!(poch.mul(&expansion).unwrap(), TruncSeries::one(Var::P, order));
        }
    }
}
