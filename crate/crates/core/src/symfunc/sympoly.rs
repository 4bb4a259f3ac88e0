//! Symmetric functions with polynomial coefficients in the grading variables
//! (`t`, `r`, ...), and the plethysms `p_n[.]` and `h_m[.]` on them.
//!
//! The grading variables are treated as extra letters of the alphabet, so
//! `p_n` raises each of them to the `n`-th power.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::symf::{Basis, SymF};
use crate::combinatorics::partitions;
use crate::error::Result;
use crate::polyalg::poly::NVARS;
use crate::polyalg::{Exponents, Poly, Var};

#[derive(Clone, PartialEq)]
pub struct SymPoly {
    basis: Basis,
    terms: BTreeMap<Exponents, SymF>,
}

fn var_exps(v: Var, e: i32) -> Exponents {
    let mut x = [0; NVARS];
    x[v.index()] = e;
    x
}

impl SymPoly {
    pub fn zero(basis: Basis) -> SymPoly {
        SymPoly { basis, terms: BTreeMap::new() }
    }

    pub fn constant(f: SymF) -> SymPoly {
        let mut out = SymPoly::zero(f.basis());
        out.add_term([0; NVARS], f).expect("same basis");
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, SymF> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `f * x^exps`.
    pub fn add_term(&mut self, exps: Exponents, f: SymF) -> Result<()> {
        let f = f.convert(self.basis)?;
        let sum = match self.terms.remove(&exps) {
            Some(g) => g.add(&f)?,
            None => f,
        };
        if !sum.is_zero() {
            self.terms.insert(exps, sum);
        }
        Ok(())
    }

    /// Adds `f * v^e`.
    pub fn add_var_term(&mut self, v: Var, e: i32, f: SymF) -> Result<()> {
        self.add_term(var_exps(v, e), f)
    }

    /// Adds `poly * f`, distributing over the monomials of `poly`.
    pub fn add_poly_times(&mut self, poly: &Poly, f: &SymF) -> Result<()> {
        for (k, c) in poly.terms() {
            self.add_term(*k, f.scale(&BigRational::from_integer(c.clone())))?;
        }
        Ok(())
    }

    /// Multiplies every coefficient by the polynomial `poly`.
    pub fn mul_poly(&self, poly: &Poly) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.basis);
        for (k, f) in &self.terms {
            out.add_poly_times(&poly.shift(k), f)?;
        }
        Ok(out)
    }

    /// Coefficients of the powers of `v`, other variables kept in the key.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, SymPoly> {
        let mut out: BTreeMap<i32, SymPoly> = BTreeMap::new();
        for (k, f) in &self.terms {
            let mut rest = *k;
            rest[v.index()] = 0;
            out.entry(k[v.index()])
                .or_insert_with(|| SymPoly::zero(self.basis))
                .terms
                .insert(rest, f.clone());
        }
        out
    }

    /// `sum_j coeffs[j] v^j`.
    pub fn from_graded(v: Var, coeffs: &[SymF], basis: Basis) -> Result<SymPoly> {
        let mut out = SymPoly::zero(basis);
        for (j, f) in coeffs.iter().enumerate() {
            out.add_var_term(v, j as i32, f.clone())?;
        }
        Ok(out)
    }

    pub fn coefficient(&self, exps: &Exponents) -> SymF {
        self.terms.get(exps).cloned().unwrap_or_else(|| SymF::zero(self.basis))
    }

    /// Coefficient of `v^e` when `v` is the only grading variable present.
    pub fn coefficient_of(&self, v: Var, e: i32) -> SymF {
        self.coefficient(&var_exps(v, e))
    }

    pub fn convert(&self, to: Basis) -> Result<SymPoly> {
        let mut out = SymPoly::zero(to);
        for (k, f) in &self.terms {
            out.add_term(*k, f.clone())?;
        }
        Ok(out)
    }

    pub fn add(&self, o: &SymPoly) -> Result<SymPoly> {
        let mut out = self.clone();
        for (k, f) in &o.terms {
            out.add_term(*k, f.clone())?;
        }
        Ok(out)
    }

    pub fn mul(&self, o: &SymPoly) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.basis);
        for (ka, fa) in &self.terms {
            for (kb, fb) in &o.terms {
                let mut k = *ka;
                for i in 0..NVARS {
                    k[i] += kb[i];
                }
                out.add_term(k, fa.mul(fb)?)?;
            }
        }
        Ok(out)
    }

    /// `p_n[self]`, returned in the p basis.
    pub fn power_plethysm(&self, n: usize) -> Result<SymPoly> {
        let mut out = SymPoly::zero(Basis::P);
        for (k, f) in &self.terms {
            let p = f.convert(Basis::P)?;
            let scaled = SymF::from_terms(Basis::P, p.terms().iter().map(|(l, c)| (l.scale(n), c.clone())));
            out.add_term(k.map(|e| e * n as i32), scaled)?;
        }
        Ok(out)
    }

    /// `h_m[self] = sum_{lambda |- m} p_lambda[self] / z_lambda`, in the p basis.
    pub fn h_plethysm(&self, m: usize) -> Result<SymPoly> {
        let mut powers: BTreeMap<usize, SymPoly> = BTreeMap::new();
        let mut out = SymPoly::zero(Basis::P);
        for lambda in partitions(m) {
            let mut prod = SymPoly::constant(SymF::one(Basis::P));
            for &k in lambda.parts() {
                if !powers.contains_key(&k) {
                    powers.insert(k, self.power_plethysm(k)?);
                }
                prod = prod.mul(&powers[&k])?;
            }
            let w = BigRational::new(One::one(), lambda.z());
            for (k, f) in prod.terms {
                out.add_term(k, f.scale(&w))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, g)| {
                let mono: Vec<String> = Var::ALL
                    .iter()
                    .filter(|v| k[v.index()] != 0)
                    .map(|v| match k[v.index()] {
                        1 => v.name().to_string(),
                        e => format!("{}^{}", v.name(), e),
                    })
                    .collect();
                if mono.is_empty() {
                    format!("({g})")
                } else {
                    format!("({g})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly({self})")
    }
}

/// `h_m[f]`, returned in the basis of `f`.
pub fn plethysm_h(m: usize, f: &SymF) -> Result<SymF> {
    SymPoly::constant(f.clone()).h_plethysm(m)?.coefficient(&[0; NVARS]).convert(f.basis())
}

/// `p_n[f]`, returned in the basis of `f`.
pub fn plethysm_p(n: usize, f: &SymF) -> Result<SymF> {
    SymPoly::constant(f.clone()).power_plethysm(n)?.coefficient(&[0; NVARS]).convert(f.basis())
}
