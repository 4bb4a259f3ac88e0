//! Symmetric functions in one of the bases m, h, e, p, s with exact
//! rational coefficients. Every conversion routes through the power sums.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::characters::mn_character;
use super::transition::tables;
use crate::combinatorics::{partitions, Partition};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    H,
    E,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::H, Basis::E, Basis::P, Basis::S];

    pub fn prefix(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Basis> {
        Basis::ALL
            .into_iter()
            .find(|b| b.prefix() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?} (expected m, h, e, p or s)")))
    }
}

pub type Terms = BTreeMap<Partition, BigRational>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymF {
    basis: Basis,
    terms: Terms,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn add_into(terms: &mut Terms, key: Partition, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    let e = terms.entry(key.clone()).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        terms.remove(&key);
    }
}

/// Product of two power-sum expansions (multiplication concatenates parts).
fn p_product(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            add_into(&mut out, la.concat(lb), &(ca * cb));
        }
    }
    out
}

fn h_in_p(n: usize) -> Terms {
    partitions(n).into_iter().map(|mu| {
        let z = mu.z();
        (mu, BigRational::new(BigInt::one(), z))
    }).collect()
}

fn e_in_p(n: usize) -> Terms {
    partitions(n).into_iter().map(|mu| {
        let z = mu.z();
        let s = mu.sign();
        (mu, BigRational::new(BigInt::from(s), z))
    }).collect()
}

fn s_in_p(lambda: &Partition) -> Result<Terms> {
    let mut out = Terms::new();
    for mu in partitions(lambda.size()) {
        let chi = mn_character(lambda, &mu)?;
        if chi != 0 {
            let z = mu.z();
            out.insert(mu, BigRational::new(BigInt::from(chi), z));
        }
    }
    Ok(out)
}

fn m_in_p(lambda: &Partition) -> Result<Terms> {
    let t = tables(lambda.size())?;
    let i = t.index[lambda];
    Ok(t.parts
        .iter()
        .zip(&t.m_to_p[i])
        .filter(|(_, c)| !c.is_zero())
        .map(|(mu, c)| (mu.clone(), c.clone()))
        .collect())
}

fn multiplicative_in_p(lambda: &Partition, single: fn(usize) -> Terms) -> Terms {
    let mut acc: Terms = [(Partition::empty(), BigRational::one())].into_iter().collect();
    for &k in lambda.parts() {
        acc = p_product(&acc, &single(k));
    }
    acc
}

impl SymF {
    pub fn zero(basis: Basis) -> SymF {
        SymF { basis, terms: Terms::new() }
    }

    pub fn one(basis: Basis) -> SymF {
        SymF::basis_element(basis, Partition::empty())
    }

    pub fn scalar(basis: Basis, c: BigRational) -> SymF {
        let mut f = SymF::zero(basis);
        add_into(&mut f.terms, Partition::empty(), &c);
        f
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> SymF {
        SymF { basis, terms: [(lambda, BigRational::one())].into_iter().collect() }
    }

    /// `b_lambda` from a list of parts in any order.
    pub fn elem(basis: Basis, parts: &[usize]) -> SymF {
        SymF::basis_element(basis, Partition::from_parts(parts.iter().copied()))
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, BigRational)>) -> SymF {
        let mut f = SymF::zero(basis);
        for (l, c) in terms {
            add_into(&mut f.terms, l, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|l| l.size() == n)
    }

    pub fn homogeneous_part(&self, n: usize) -> SymF {
        SymF {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymF {
        SymF::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    pub fn neg(&self) -> SymF {
        self.scale(&-BigRational::one())
    }

    /// Every coefficient in the current basis is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Partitions carrying negative coefficients.
    pub fn negative_terms(&self) -> Vec<(Partition, BigRational)> {
        self.terms.iter().filter(|(_, c)| c.is_negative()).map(|(l, c)| (l.clone(), c.clone())).collect()
    }

    pub fn add(&self, o: &SymF) -> Result<SymF> {
        let o = o.convert(self.basis)?;
        let mut terms = self.terms.clone();
        for (l, c) in &o.terms {
            add_into(&mut terms, l.clone(), c);
        }
        Ok(SymF { basis: self.basis, terms })
    }

    pub fn sub(&self, o: &SymF) -> Result<SymF> {
        self.add(&o.neg())
    }

    /// Product, computed by concatenation in h, e or p and via p otherwise;
    /// the result is in the basis of `self`.
    pub fn mul(&self, o: &SymF) -> Result<SymF> {
        if matches!(self.basis, Basis::H | Basis::E | Basis::P) && o.basis == self.basis {
            return Ok(SymF { basis: self.basis, terms: p_product(&self.terms, &o.terms) });
        }
        let prod = p_product(&self.to_p()?.terms, &o.to_p()?.terms);
        SymF { basis: Basis::P, terms: prod }.convert(self.basis)
    }

    pub fn pow(&self, k: u32) -> Result<SymF> {
        let mut acc = SymF::one(self.basis);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Structural equality after converting `o` into this basis.
    pub fn equals(&self, o: &SymF) -> Result<bool> {
        Ok(self.terms == o.convert(self.basis)?.terms)
    }

    pub fn to_p(&self) -> Result<SymF> {
        if self.basis == Basis::P {
            return Ok(self.clone());
        }
        let mut out = Terms::new();
        for (lambda, c) in &self.terms {
            let image = match self.basis {
                Basis::H => multiplicative_in_p(lambda, h_in_p),
                Basis::E => multiplicative_in_p(lambda, e_in_p),
                Basis::S => s_in_p(lambda)?,
                Basis::M => m_in_p(lambda)?,
                Basis::P => unreachable!(),
            };
            for (mu, x) in image {
                add_into(&mut out, mu, &(c * x));
            }
        }
        Ok(SymF { basis: Basis::P, terms: out })
    }

    fn from_p(p: &SymF, to: Basis) -> Result<SymF> {
        debug_assert_eq!(p.basis, Basis::P);
        if to == Basis::P {
            return Ok(p.clone());
        }
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
        for (mu, c) in &p.terms {
            by_degree.entry(mu.size()).or_default().push((mu, c));
        }
        let mut out = Terms::new();
        for (n, support) in by_degree {
            match to {
                Basis::S => {
                    for lambda in partitions(n) {
                        let mut acc = BigRational::zero();
                        for (mu, c) in &support {
                            let chi = mn_character(&lambda, mu)?;
                            if chi != 0 {
                                acc += *c * rat(chi);
                            }
                        }
                        add_into(&mut out, lambda, &acc);
                    }
                }
                Basis::M | Basis::H | Basis::E => {
                    let t = tables(n)?;
                    for (li, lambda) in t.parts.iter().enumerate() {
                        let mut acc = BigRational::zero();
                        for (mu, c) in &support {
                            let mi = t.index[*mu];
                            let x = match to {
                                Basis::M => BigRational::from_integer(t.p_to_m[mi][li].clone()),
                                Basis::H => &t.m_to_p[li][mi] * BigRational::from_integer(mu.z()),
                                _ => &t.m_to_p[li][mi] * BigRational::from_integer(mu.z() * mu.sign()),
                            };
                            if !x.is_zero() {
                                acc += *c * x;
                            }
                        }
                        add_into(&mut out, lambda.clone(), &acc);
                    }
                }
                Basis::P => unreachable!(),
            }
        }
        Ok(SymF { basis: to, terms: out })
    }

    pub fn convert(&self, to: Basis) -> Result<SymF> {
        if self.basis == to {
            return Ok(self.clone());
        }
        match (self.basis, to) {
            // omega-free shortcuts are not needed; everything goes through p.
            _ => SymF::from_p(&self.to_p()?, to),
        }
    }

    /// The involution sending `h_n` to `e_n`.
    pub fn omega(&self) -> Result<SymF> {
        Ok(match self.basis {
            Basis::H => SymF { basis: Basis::E, terms: self.terms.clone() }.convert(Basis::H)?,
            Basis::E => SymF { basis: Basis::H, terms: self.terms.clone() }.convert(Basis::E)?,
            Basis::P => SymF::from_terms(
                Basis::P,
                self.terms.iter().map(|(l, c)| (l.clone(), c * rat(l.sign()))),
            ),
            Basis::S => SymF::from_terms(Basis::S, self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone()))),
            Basis::M => {
                let p = self.to_p()?;
                SymF { basis: Basis::P, terms: p.terms }.omega()?.convert(Basis::M)?
            }
        })
    }

    /// Hall inner product.
    pub fn inner(&self, o: &SymF) -> Result<BigRational> {
        let a = self.to_p()?;
        let b = o.to_p()?;
        let mut acc = BigRational::zero();
        for (mu, c) in &a.terms {
            if let Some(d) = b.terms.get(mu) {
                acc += c * d * BigRational::from_integer(mu.z());
            }
        }
        Ok(acc)
    }
}

fn term_order(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}

/// Renders e.g. `3*s[6] + 3*s[5,1] - 1/2*h[2,1]`; the empty partition prints
/// as a bare scalar.
impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| term_order(a, b));
        for (i, l) in keys.into_iter().enumerate() {
            let c = &self.terms[l];
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            if l.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}{}", self.basis.prefix(), l)?;
            } else {
                write!(f, "{}*{}{}", mag, self.basis.prefix(), l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymF({self})")
    }
}

/// Parses a rendering of the form produced by `Display`. A bare scalar is
/// read in the basis `h` unless other terms fix the basis.
impl FromStr for SymF {
    type Err = Error;
    fn from_str(s: &str) -> Result<SymF> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty symmetric function".into()));
        }
        let mut basis: Option<Basis> = None;
        let mut terms: Vec<(Partition, BigRational)> = Vec::new();
        let chars: Vec<char> = compact.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigRational::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            let mut depth = 0;
            while i < chars.len() {
                match chars[i] {
                    '[' => depth += 1,
                    ']' => depth -= 1,
                    '+' | '-' if depth == 0 => break,
                    _ => {}
                }
                i += 1;
            }
            let term: String = chars[start..i].iter().collect();
            let (coef, elem) = match term.find(|c: char| c.is_ascii_alphabetic()) {
                None => (term.as_str(), None),
                Some(pos) => {
                    let c = term[..pos].trim_end_matches('*');
                    (c, Some(&term[pos..]))
                }
            };
            let c: BigRational = if coef.is_empty() {
                BigRational::one()
            } else {
                coef.parse().map_err(|_| Error::Parse(format!("bad coefficient {coef:?}")))?
            };
            let lambda = match elem {
                None => Partition::empty(),
                Some(e) => {
                    let b: Basis = e[..1].parse()?;
                    if basis.is_some_and(|x| x != b) {
                        return Err(Error::Parse(format!("mixed bases in {s:?}")));
                    }
                    basis = Some(b);
                    e[1..].parse()?
                }
            };
            terms.push((lambda, sign * c));
        }
        Ok(SymF::from_terms(basis.unwrap_or(Basis::H), terms))
    }
}

/// `h_n` as a polynomial-free shortcut.
pub fn h(n: usize) -> SymF {
    SymF::elem(Basis::H, &[n])
}

pub fn e(n: usize) -> SymF {
    SymF::elem(Basis::E, &[n])
}

/// Parses a fixture such as `2*h[4,2] - h[4,1,1]`.
pub fn sym(s: &str) -> SymF {
    s.parse().unwrap_or_else(|e| panic!("bad symmetric function literal {s:?}: {e}"))
}

pub(crate) fn check_degree(f: &SymF, n: usize) -> Result<()> {
    if !f.is_homogeneous_of(n) {
        return invalid(format!("{f} is not homogeneous of degree {n}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_conversions() {
        let h2p = h(2).convert(Basis::P).unwrap();
        assert_eq!(h2p, sym("1/2*p[1,1] + 1/2*p[2]"));
        assert_eq!(sym("s[1,1]").convert(Basis::E).unwrap(), sym("e[2]"));
        assert_eq!(sym("h[2,1]").convert(Basis::S).unwrap(), sym("s[3] + s[2,1]"));
        assert_eq!(sym("p[1,1]").convert(Basis::M).unwrap(), sym("m[2] + 2*m[1,1]"));
    }

    #[test]
    fn round_trips_through_every_pair() {
        for n in 0..=6 {
            for lambda in partitions(n) {
                for b in Basis::ALL {
                    let f = SymF::basis_element(b, lambda.clone());
                    for b2 in Basis::ALL {
                        let back = f.convert(b2).unwrap().convert(b).unwrap();
                        assert_eq!(back, f, "{b:?} -> {b2:?} on {lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_positivity() {
        for n in 0..=7 {
            for lambda in partitions(n) {
                let s = SymF::basis_element(Basis::H, lambda).convert(Basis::S).unwrap();
                assert!(s.is_nonnegative());
            }
        }
    }

    #[test]
    fn omega_is_an_involution_commuting_with_convert() {
        assert_eq!(h(3).omega().unwrap(), sym("h[1,1,1] - 2*h[2,1] + h[3]"));
        assert!(h(3).omega().unwrap().equals(&e(3)).unwrap());
        let f = sym("2*s[3,1] - 1/3*s[2,2] + s[1,1,1,1]");
        for b in Basis::ALL {
            let g = f.convert(b).unwrap();
            assert!(g.omega().unwrap().omega().unwrap().equals(&g).unwrap());
            assert!(g.omega().unwrap().equals(&f.omega().unwrap()).unwrap(), "{b:?}");
        }
        assert_eq!(sym("p[3]").omega().unwrap(), sym("p[3]"));
        assert_eq!(sym("p[2]").omega().unwrap(), sym("-p[2]"));
    }

    #[test]
    fn products() {
        let a = sym("s[1]");
        assert_eq!(a.mul(&a).unwrap(), sym("s[2] + s[1,1]"));
        assert_eq!(h(2).mul(&h(1)).unwrap(), sym("h[2,1]"));
        let m = sym("m[1]").mul(&sym("m[1]")).unwrap();
        assert_eq!(m, sym("m[2] + 2*m[1,1]"));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1", "3*s[6] + 3*s[5,1] - 1/2*s[3,2,1]", "h[2]", "-2/3*m[1,1]"] {
            let f: SymF = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("h[2] + s[2]".parse::<SymF>().is_err());
    }

    #[test]
    fn inner_product_orthonormal_schur() {
        for l in partitions(4) {
            for m in partitions(4) {
                let a = SymF::basis_element(Basis::S, l.clone());
                let b = SymF::basis_element(Basis::S, m.clone());
                let expect = if l == m { BigRational::one() } else { BigRational::zero() };
                assert_eq!(a.inner(&b).unwrap(), expect);
            }
        }
    }
}
