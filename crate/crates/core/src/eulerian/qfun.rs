//! The Eulerian quasisymmetric functions and the permutation enumerators
//! they specialize to.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use super::table::{table, ClassKey};
use crate::combinatorics::{choose2, Partition};
use crate::error::{invalid, Error, Result};
use crate::polyalg::poly::NVARS;
use crate::polyalg::{var_int, Poly, Var};
use crate::symfunc::{Basis, QSymF, SymF, SymPoly};

/// Which permutation class a `Q` sums over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Selector {
    /// `Q_{n,j}`: all of `S_n` with `j` excedances.
    NJ { n: usize, j: usize },
    /// `Q_{n,j,k}`: additionally `k` fixed points.
    NJK { n: usize, j: usize, k: usize },
    /// `Q_{lambda,j}`: cycle type `lambda` with `j` excedances.
    LambdaJ { lambda: Partition, j: usize },
}

impl Selector {
    pub fn n(&self) -> usize {
        match self {
            Selector::NJ { n, .. } | Selector::NJK { n, .. } => *n,
            Selector::LambdaJ { lambda, .. } => lambda.size(),
        }
    }

    pub fn j(&self) -> usize {
        match self {
            Selector::NJ { j, .. } | Selector::NJK { j, .. } | Selector::LambdaJ { j, .. } => *j,
        }
    }

    fn matches(&self, key: &ClassKey) -> bool {
        key.exc as usize == self.j()
            && match self {
                Selector::NJ { .. } => true,
                Selector::NJK { k, .. } => key.fix() as usize == *k,
                Selector::LambdaJ { lambda, .. } => &key.cycle_type == lambda,
            }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::NJ { n, j } => write!(f, "Q[{n},{j}]"),
            Selector::NJK { n, j, k } => write!(f, "Q[{n},{j},{k}]"),
            Selector::LambdaJ { lambda, j } => {
                let parts: Vec<String> = lambda.parts().iter().map(|x| x.to_string()).collect();
                write!(f, "QL[{};{j}]", parts.join(","))
            }
        }
    }
}

/// Parses `Q[n,j]`, `Q[n,j,k]` or `QL[l1,l2,...;j]`.
impl FromStr for Selector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Selector> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(']'));
        let num = |x: &str| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad integer {x:?} in {s:?}")));
        if let Some(b) = body("QL[") {
            let (l, j) = b.split_once(';').ok_or_else(|| Error::Parse(format!("expected ';' in {s:?}")))?;
            let parts = if l.is_empty() {
                Vec::new()
            } else {
                l.split(',').map(num).collect::<Result<Vec<_>>>()?
            };
            return Ok(Selector::LambdaJ { lambda: Partition::from_parts(parts), j: num(j)? });
        }
        if let Some(b) = body("Q[") {
            let xs = b.split(',').map(num).collect::<Result<Vec<_>>>()?;
            return match xs[..] {
                [n, j] => Ok(Selector::NJ { n, j }),
                [n, j, k] => Ok(Selector::NJK { n, j, k }),
                _ => Err(Error::Parse(format!("expected Q[n,j] or Q[n,j,k], got {s:?}"))),
            };
        }
        Err(Error::Parse(format!("unknown selector {s:?}")))
    }
}

/// A constructed `Q` together with its selector.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerianQ {
    pub selector: Selector,
    pub value: QSymF,
}

impl EulerianQ {
    /// Expansion in the monomial basis (fails if not symmetric).
    pub fn symf(&self) -> Result<SymF> {
        self.value.to_symf()
    }

    pub fn in_basis(&self, basis: Basis) -> Result<SymF> {
        self.symf()?.convert(basis)
    }
}

/// `sum F_{Exd(sigma),n}` over the selected permutations.
pub fn q_fun(selector: &Selector) -> Result<EulerianQ> {
    let n = selector.n();
    let t = table(n)?;
    let mut value = QSymF::zero();
    for (key, c) in t.rows() {
        if selector.matches(key) {
            value.add_fundamental(n, key.exd, *c as i64);
        }
    }
    Ok(EulerianQ { selector: selector.clone(), value })
}

type SymCache = RwLock<HashMap<Selector, SymF>>;

fn sym_cache() -> &'static SymCache {
    static CACHE: OnceLock<SymCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `q_fun` followed by conversion to `basis`. Monomial expansions are memoized.
pub fn q_sym(selector: &Selector, basis: Basis) -> Result<SymF> {
    if let Some(f) = sym_cache().read().unwrap().get(selector) {
        return f.convert(basis);
    }
    let f = q_fun(selector)?.symf()?;
    sym_cache().write().unwrap().insert(selector.clone(), f.clone());
    f.convert(basis)
}

pub fn q_nj(n: usize, j: usize, basis: Basis) -> Result<SymF> {
    q_sym(&Selector::NJ { n, j }, basis)
}

pub fn q_njk(n: usize, j: usize, k: usize, basis: Basis) -> Result<SymF> {
    q_sym(&Selector::NJK { n, j, k }, basis)
}

pub fn q_lambda(lambda: &Partition, j: usize, basis: Basis) -> Result<SymF> {
    q_sym(&Selector::LambdaJ { lambda: lambda.clone(), j }, basis)
}

/// `Q_n(t,r) = sum_{j,k} Q_{n,j,k} t^j r^k` from the definition.
pub fn q_poly(n: usize, basis: Basis) -> Result<SymPoly> {
    let mut out = SymPoly::zero(basis);
    for k in 0..=n {
        for j in 0..n.max(1) {
            let f = q_njk(n, j, k, basis)?;
            if !f.is_zero() {
                out.add_poly_times(&Poly::term(1, &[(Var::T, j as i32), (Var::R, k as i32)]), &f)?;
            }
        }
    }
    Ok(out)
}

/// `sum_j Q_{lambda,j} t^j` from the definition.
pub fn q_lambda_poly(lambda: &Partition, basis: Basis) -> Result<SymPoly> {
    let mut out = SymPoly::zero(basis);
    for j in 0..lambda.size().max(1) {
        let f = q_lambda(lambda, j, basis)?;
        out.add_var_term(Var::T, j as i32, f)?;
    }
    Ok(out)
}

/// `sum_j Q_{n,j} t^j` from the definition.
pub fn q_n_poly(n: usize, basis: Basis) -> Result<SymPoly> {
    let mut out = SymPoly::zero(basis);
    for j in 0..n.max(1) {
        out.add_var_term(Var::T, j as i32, q_nj(n, j, basis)?)?;
    }
    Ok(out)
}

/// Compositions of `m` with every part at least `min`.
pub(crate) fn compositions_min(m: usize, min: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in min.max(1)..=m {
        for mut rest in compositions_min(m - first, min) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `t [k-1]_t`.
pub(crate) fn t_block(k: usize) -> Poly {
    &Poly::var(Var::T) * &var_int(Var::T, k - 1)
}

/// The closed form: a sum over `k_0 >= 0` and compositions `(k_1..k_m)` of
/// `n - k_0` into parts `>= 2` of `r^{k_0} h_{k_0} prod h_{k_i} t [k_i - 1]_t`,
/// in the h basis.
pub fn q_poly_closed(n: usize) -> Result<SymPoly> {
    let mut out = SymPoly::zero(Basis::H);
    for k0 in 0..=n {
        for comp in compositions_min(n - k0, 2) {
            let mut weight = Poly::term(1, &[(Var::R, k0 as i32)]);
            for &k in &comp {
                weight = &weight * &t_block(k);
            }
            let mut parts = comp.clone();
            parts.push(k0);
            let f = SymF::basis_element(Basis::H, Partition::from_parts(parts.into_iter().filter(|&x| x > 0)));
            out.add_poly_times(&weight, &f)?;
        }
    }
    Ok(out)
}

/// Permutation statistics that can be tracked by an enumerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Maj,
    Des,
    Exc,
    Fix,
    Comaj,
}

impl Stat {
    /// The variable carrying the statistic: maj and comaj use `q`, des `p`,
    /// exc `t`, fix `r`.
    pub fn var(self) -> Var {
        match self {
            Stat::Maj | Stat::Comaj => Var::Q,
            Stat::Des => Var::P,
            Stat::Exc => Var::T,
            Stat::Fix => Var::R,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::Maj => "maj",
            Stat::Des => "des",
            Stat::Exc => "exc",
            Stat::Fix => "fix",
            Stat::Comaj => "comaj",
        }
    }

    fn value(self, key: &ClassKey, n: usize) -> u32 {
        match self {
            Stat::Maj => key.maj,
            Stat::Des => key.des,
            Stat::Exc => key.exc,
            Stat::Fix => key.fix(),
            Stat::Comaj => choose2(n) as u32 - key.maj,
        }
    }
}

impl FromStr for Stat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Stat> {
        [Stat::Maj, Stat::Des, Stat::Exc, Stat::Fix, Stat::Comaj]
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown statistic {s:?}")))
    }
}

/// Parses a comma separated signature such as `maj,des,exc`.
pub fn parse_signature(s: &str) -> Result<Vec<Stat>> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(str::parse).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermClass {
    All(usize),
    /// Permutations of `[n]` with exactly `k` fixed points.
    FixedPoints(usize, usize),
    CycleType(Partition),
}

impl PermClass {
    pub fn n(&self) -> usize {
        match self {
            PermClass::All(n) | PermClass::FixedPoints(n, _) => *n,
            PermClass::CycleType(l) => l.size(),
        }
    }

    fn contains(&self, key: &ClassKey) -> bool {
        match self {
            PermClass::All(_) => true,
            PermClass::FixedPoints(_, k) => key.fix() as usize == *k,
            PermClass::CycleType(l) => &key.cycle_type == l,
        }
    }
}

/// A brute-force enumerator `sum prod var^stat` over a permutation class.
#[derive(Clone, Debug, PartialEq)]
pub struct APoly {
    pub signature: Vec<Stat>,
    pub class: PermClass,
    pub value: Poly,
}

pub fn a_poly(signature: &[Stat], class: &PermClass) -> Result<APoly> {
    for (i, s) in signature.iter().enumerate() {
        if signature[..i].iter().any(|x| x.var() == s.var()) {
            return invalid(format!("statistics in {signature:?} share a variable"));
        }
    }
    let n = class.n();
    let t = table(n)?;
    let mut value = Poly::zero();
    for (key, c) in t.rows() {
        if class.contains(key) {
            let mut exps = [0i32; NVARS];
            for s in signature {
                exps[s.var().index()] = s.value(key, n) as i32;
            }
            value.add_term(exps, &(*c).into());
        }
    }
    Ok(APoly { signature: signature.to_vec(), class: class.clone(), value })
}

/// `A^{sig}` over all of `S_n`.
pub fn a_n(signature: &[Stat], n: usize) -> Result<Poly> {
    Ok(a_poly(signature, &PermClass::All(n))?.value)
}

/// `a_{lambda,j}(q,p) = [t^j] A_lambda^{maj,des,exc}`.
pub fn a_lambda_j(lambda: &Partition, j: usize) -> Result<Poly> {
    let a = a_poly(&[Stat::Maj, Stat::Des, Stat::Exc], &PermClass::CycleType(lambda.clone()))?;
    Ok(a.value.coeff_of(Var::T, j as i32))
}

/// `a_{n,j,k}(q,p)`.
pub fn a_njk(n: usize, j: usize, k: usize) -> Result<Poly> {
    let a = a_poly(&[Stat::Maj, Stat::Des, Stat::Exc], &PermClass::FixedPoints(n, k))?;
    Ok(a.value.coeff_of(Var::T, j as i32))
}

/// Substitutes `t -> t/q`.
pub fn twist_t(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (e, c) in p.terms() {
        let mut e2 = *e;
        e2[Var::Q.index()] -= e[Var::T.index()];
        out.add_term(e2, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::permutation::enumerate_permutations;
    use crate::polyalg::poly;
    use crate::symfunc::symf::sym;

    #[test]
    fn small_values() {
        let one = q_fun(&Selector::NJK { n: 0, j: 0, k: 0 }).unwrap();
        assert_eq!(one.value, QSymF::one());
        assert_eq!(q_nj(2, 1, Basis::H).unwrap(), sym("h[2]"));
        assert_eq!(q_nj(2, 0, Basis::H).unwrap(), sym("h[2]"));
        assert_eq!(q_nj(3, 1, Basis::H).unwrap(), sym("h[3] + h[2,1]"));
    }

    #[test]
    fn selector_text() {
        for s in ["Q[5,2]", "Q[5,2,0]", "QL[4,2;3]", "QL[;0]"] {
            assert_eq!(s.parse::<Selector>().unwrap().to_string(), s);
        }
        assert!("Q[1]".parse::<Selector>().is_err());
    }

    /// Direct definition over permutations, independent of the table.
    #[test]
    fn table_matches_direct_sum() {
        for n in 0..=5 {
            for j in 0..n.max(1) {
                let mut direct = QSymF::zero();
                for p in enumerate_permutations(n).unwrap().filter(|p| p.exc() == j) {
                    direct.add_fundamental(n, p.exd_mask(), 1);
                }
                assert_eq!(q_fun(&Selector::NJ { n, j }).unwrap().value, direct);
            }
        }
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(q_poly_closed(0).unwrap(), SymPoly::constant(SymF::one(Basis::H)));
        let mut two = SymPoly::zero(Basis::H);
        two.add_poly_times(&poly("r^2"), &sym("h[2]")).unwrap();
        two.add_poly_times(&poly("t"), &sym("h[2]")).unwrap();
        assert_eq!(q_poly_closed(2).unwrap(), two);
        let closed = q_poly_closed(5).unwrap();
        assert!(closed.coefficient(&[0, 0, 1, 0, 0]).equals(&q_njk(5, 1, 0, Basis::H).unwrap()).unwrap());
    }

    #[test]
    fn enumerators() {
        let a4 = a_n(&[Stat::Maj, Stat::Des, Stat::Exc], 4).unwrap();
        let t1 = twist_t(&a4).coeff_of(Var::T, 1);
        assert_eq!(t1, poly("3*p + 2*p*q + p*q^2 + 2*p^2*q^2 + 2*p^2*q^3 + p^2*q^4"));
        assert_eq!(a_n(&[Stat::Exc], 4).unwrap(), poly("1 + 11*t + 11*t^2 + t^3"));
        assert!(a_poly(&[Stat::Maj, Stat::Comaj], &PermClass::All(3)).is_err());
        assert_eq!(parse_signature("maj,des").unwrap(), vec![Stat::Maj, Stat::Des]);
    }
}
