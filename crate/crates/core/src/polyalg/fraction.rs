//! Quotients of polynomials. Equality is decided by cross-multiplication;
//! no gcd is ever taken, but exact divisibility between denominators is
//! exploited to keep sums from compounding.

use std::fmt;

use num_bigint::BigInt;

use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct PolyFraction {
    num: Poly,
    den: Poly,
}

impl PolyFraction {
    pub fn new(num: Poly, den: Poly) -> Result<PolyFraction> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(PolyFraction { num, den })
    }

    pub fn from_poly(num: Poly) -> PolyFraction {
        PolyFraction { num, den: Poly::one() }
    }

    pub fn zero() -> PolyFraction {
        PolyFraction::from_poly(Poly::zero())
    }

    pub fn one() -> PolyFraction {
        PolyFraction::from_poly(Poly::one())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the polynomial value when the denominator divides exactly.
    pub fn to_poly(&self) -> Option<Poly> {
        self.num.div_exact(&self.den)
    }

    pub fn add(&self, o: &PolyFraction) -> PolyFraction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return PolyFraction { num: &self.num + &o.num, den: self.den.clone() };
        }
        if let Some(k) = o.den.div_exact(&self.den) {
            return PolyFraction { num: &(&self.num * &k) + &o.num, den: o.den.clone() };
        }
        if let Some(k) = self.den.div_exact(&o.den) {
            return PolyFraction { num: &self.num + &(&o.num * &k), den: self.den.clone() };
        }
        PolyFraction {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }

    pub fn neg(&self) -> PolyFraction {
        PolyFraction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &PolyFraction) -> PolyFraction {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &PolyFraction) -> PolyFraction {
        if self.is_zero() || o.is_zero() {
            return PolyFraction::zero();
        }
        PolyFraction { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn mul_poly(&self, p: &Poly) -> PolyFraction {
        PolyFraction { num: &self.num * p, den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> PolyFraction {
        PolyFraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Result<PolyFraction> {
        if self.is_zero() {
            return Err(Error::NotInvertible("0".into()));
        }
        Ok(PolyFraction { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, o: &PolyFraction) -> Result<PolyFraction> {
        Ok(self.mul(&o.inverse()?))
    }
}

impl PartialEq for PolyFraction {
    fn eq(&self, o: &PolyFraction) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Display for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyFraction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly::poly;

    #[test]
    fn cross_multiplied_equality() {
        let a = PolyFraction::new(poly("1 - q^2"), poly("1 - q")).unwrap();
        assert_eq!(a, PolyFraction::from_poly(poly("1 + q")));
        assert_eq!(a.to_poly(), Some(poly("1 + q")));
        assert!(PolyFraction::new(poly("1"), Poly::zero()).is_err());
    }

    #[test]
    fn sums_keep_power_denominators() {
        let c = poly("1 - t*q");
        let a = PolyFraction::new(poly("1"), c.clone()).unwrap();
        let b = PolyFraction::new(poly("q"), c.pow(2)).unwrap();
        let s = a.add(&b);
        assert_eq!(s.denominator(), &c.pow(2));
        assert_eq!(s, PolyFraction::new(&c + &poly("q"), c.pow(2)).unwrap());
    }
}
