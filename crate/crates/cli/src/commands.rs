//! Command bodies. Each returns both a text and a JSON rendering.

use anyhow::{bail, Result};
use eqsym::combinatorics::enumerate_permutations;
use eqsym::eulerian::{char_table, q_fun, Selector, EULERIAN_SIZE_CAP};
use eqsym::{Basis, MonExpansion, Partition, Permutation, SymF};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::expr::evaluate;

pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, ok: true }
    }
}

fn set_text(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

pub fn stats_one(word: &str) -> Result<Output> {
    let p: Permutation = word.parse()?;
    let s = p.statistics();
    let text = format!(
        "sigma = {p}\ncycles = {}\nDes = {}\nExc = {}\nExd = {}\ndes = {}\nexc = {}\nmaj = {}\ncomaj = {}\ninv = {}\nfix = {}\ncycle type = {}\n",
        p.cycle_notation(),
        set_text(&s.des_set),
        set_text(&s.exc_set),
        set_text(&s.exd_set),
        s.des,
        s.exc,
        s.maj,
        s.comaj,
        s.inv,
        s.fix,
        s.cycle_type,
    );
    let mut v = serde_json::to_value(&s)?;
    v["permutation"] = json!(p.to_string());
    v["cycles"] = json!(p.cycle_notation());
    Ok(Output::ok(text, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Column {
    Des,
    Exc,
    Maj,
    Comaj,
    Inv,
    Fix,
}

impl Column {
    pub fn parse_list(s: &str) -> Result<Vec<Column>> {
        s.split(',')
            .map(|c| {
                Ok(match c.trim() {
                    "des" => Column::Des,
                    "exc" => Column::Exc,
                    "maj" => Column::Maj,
                    "comaj" => Column::Comaj,
                    "inv" => Column::Inv,
                    "fix" => Column::Fix,
                    other => bail!("unknown statistic {other:?} (expected des, exc, maj, comaj, inv or fix)"),
                })
            })
            .collect()
    }

    fn name(self) -> &'static str {
        match self {
            Column::Des => "des",
            Column::Exc => "exc",
            Column::Maj => "maj",
            Column::Comaj => "comaj",
            Column::Inv => "inv",
            Column::Fix => "fix",
        }
    }

    fn of(self, p: &Permutation) -> usize {
        match self {
            Column::Des => p.des(),
            Column::Exc => p.exc(),
            Column::Maj => p.maj(),
            Column::Comaj => p.comaj(),
            Column::Inv => p.inv(),
            Column::Fix => p.fix(),
        }
    }

    /// Closed form for the column total over `S_n`.
    fn expected_total(self, n: usize) -> BigInt {
        let fact: BigInt = (1..=n).fold(BigInt::from(1), |a, i| a * i);
        let n_big = BigInt::from(n);
        match self {
            Column::Fix => fact,
            Column::Des | Column::Exc => fact * n.saturating_sub(1) / 2,
            Column::Maj | Column::Comaj | Column::Inv => fact * &n_big * n.saturating_sub(1) / 4,
        }
    }
}

/// One row per permutation of `[n]` with the chosen statistics, plus the
/// column totals compared against their closed forms.
pub fn stats_table(n: usize, columns: &[Column]) -> Result<Output> {
    if n > EULERIAN_SIZE_CAP {
        bail!("n = {n} exceeds the table cap {EULERIAN_SIZE_CAP}");
    }
    let mut rows = Vec::new();
    let mut totals = vec![BigInt::from(0); columns.len()];
    for p in enumerate_permutations(n)? {
        let vals: Vec<usize> = columns.iter().map(|c| c.of(&p)).collect();
        for (t, v) in totals.iter_mut().zip(&vals) {
            *t += *v;
        }
        rows.push((p.to_string(), vals));
    }
    let expected: Vec<BigInt> = columns.iter().map(|c| c.expected_total(n)).collect();
    let ok = totals == expected;

    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max("sigma".len()).max("total".len());
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| c.name().len().max(totals[i].to_string().len()))
        .collect();
    let mut text = format!("{:w0$}", "sigma");
    for (c, w) in columns.iter().zip(&widths) {
        text.push_str(&format!("  {:>w$}", c.name()));
    }
    text.push('\n');
    for (p, vals) in &rows {
        text.push_str(&format!("{p:w0$}"));
        for (v, w) in vals.iter().zip(&widths) {
            text.push_str(&format!("  {v:>w$}"));
        }
        text.push('\n');
    }
    text.push_str(&format!("{:w0$}", "total"));
    for (t, w) in totals.iter().zip(&widths) {
        text.push_str(&format!("  {t:>w$}"));
    }
    text.push_str(&format!("\n{} rows; column totals {}\n", rows.len(), if ok { "match closed forms" } else { "MISMATCH" }));

    let names: Vec<&str> = columns.iter().map(|c| c.name()).collect();
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(p, vals)| {
            let mut m = serde_json::Map::new();
            m.insert("sigma".into(), json!(p));
            for (c, v) in names.iter().zip(vals) {
                m.insert((*c).into(), json!(v));
            }
            Value::Object(m)
        })
        .collect();
    let total_map: serde_json::Map<String, Value> =
        names.iter().zip(&totals).map(|(c, t)| ((*c).to_string(), json!(t.to_string()))).collect();
    let json = json!({ "n": n, "columns": names, "rows": json_rows, "totals": total_map, "totals_match": ok });
    Ok(Output { text, json, ok })
}

/// How to render a symmetric function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Basis(Basis),
    /// Fundamental quasisymmetric expansion.
    Fundamental,
}

impl Target {
    pub fn parse(s: &str) -> Result<Target> {
        if s == "f" || s == "F" {
            return Ok(Target::Fundamental);
        }
        Ok(Target::Basis(s.parse()?))
    }
}

fn render_symf(f: &SymF, target: Target, vars: Option<usize>) -> Result<(String, Value)> {
    if let Some(nv) = vars {
        let m = MonExpansion::from_symf(f, nv)?;
        return Ok((m.to_string(), json!({ "vars": nv, "terms": m.len(), "expansion": m.to_string() })));
    }
    let s = match target {
        Target::Basis(b) => f.convert(b)?.to_string(),
        Target::Fundamental => eqsym::QSymF::from_symf(f)?.to_string(),
    };
    Ok((s.clone(), json!({ "expansion": s })))
}

pub fn selector_from_flags(n: Option<usize>, lambda: Option<&str>, j: usize, k: Option<usize>) -> Result<Selector> {
    match (n, lambda, k) {
        (Some(n), None, None) => Ok(Selector::NJ { n, j }),
        (Some(n), None, Some(k)) => Ok(Selector::NJK { n, j, k }),
        (None, Some(l), None) => Ok(Selector::LambdaJ { lambda: l.parse::<Partition>()?, j }),
        (None, Some(_), Some(_)) => bail!("--k applies to --n, not --lambda"),
        (Some(_), Some(_), _) => bail!("give either --n or --lambda, not both"),
        (None, None, _) => bail!("one of --n or --lambda is required"),
    }
}

pub fn qfun(selector: &Selector, target: Target, vars: Option<usize>, cache: Option<&Cache>) -> Result<Output> {
    if selector.n() > EULERIAN_SIZE_CAP {
        bail!("n = {} exceeds the cap {EULERIAN_SIZE_CAP}", selector.n());
    }
    let (rendered, mut v) = if target == Target::Fundamental && vars.is_none() {
        let q = q_fun(selector)?.value;
        let s = q.to_string();
        (s.clone(), json!({ "expansion": s }))
    } else {
        let f = match cache {
            Some(c) => c.q(selector, Basis::H)?,
            None => eqsym::eulerian::q_sym(selector, Basis::H)?,
        };
        render_symf(&f, target, vars)?
    };
    v["selector"] = json!(selector.to_string());
    v["basis"] = json!(target_name(target));
    Ok(Output::ok(format!("{selector} = {rendered}\n"), v))
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Basis(b) => b.prefix(),
        Target::Fundamental => "F",
    }
}

pub fn chartable(n: usize) -> Result<Output> {
    if n > EULERIAN_SIZE_CAP {
        bail!("n = {n} exceeds the cap {EULERIAN_SIZE_CAP}");
    }
    let t = char_table(n)?;
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|(mu, vals)| json!({ "class": mu.exponent_notation(), "partition": mu, "values": vals }))
        .collect();
    Ok(Output::ok(t.render(), json!({ "n": n, "columns": t.columns, "rows": rows })))
}

pub fn expand(src: &str, target: Target, vars: Option<usize>, cache: Option<&Cache>) -> Result<Output> {
    let fetch = |sel: &Selector| -> Result<SymF> {
        if sel.n() > EULERIAN_SIZE_CAP {
            bail!("{sel} exceeds the cap {EULERIAN_SIZE_CAP}");
        }
        Ok(match cache {
            Some(c) => c.q(sel, Basis::H)?,
            None => eqsym::eulerian::q_sym(sel, Basis::H)?,
        })
    };
    let f = evaluate(src, &fetch)?;
    let (rendered, mut v) = render_symf(&f, target, vars)?;
    v["input"] = json!(src);
    v["basis"] = json!(target_name(target));
    Ok(Output::ok(format!("{rendered}\n"), v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_example() {
        let out = stats_one("32541").unwrap();
        assert_eq!(out.json["maj"], json!(8));
        assert_eq!(out.json["exc"], json!(2));
        assert_eq!(out.json["des_set"], json!([1, 3, 4]));
        assert!(out.text.contains("Exc = {1,3}"));
        let empty = stats_one("()").unwrap();
        assert_eq!(empty.json["maj"], json!(0));
    }

    #[test]
    fn table_totals() {
        let out = stats_table(4, &Column::parse_list("maj,exc,des,inv,fix,comaj").unwrap()).unwrap();
        assert!(out.ok);
        assert_eq!(out.json["rows"].as_array().unwrap().len(), 24);
        assert_eq!(stats_table(0, &[Column::Maj]).unwrap().json["rows"].as_array().unwrap().len(), 1);
        assert!(Column::parse_list("maj,foo").is_err());
    }

    #[test]
    fn qfun_outputs() {
        let sel = selector_from_flags(Some(2), None, 1, None).unwrap();
        assert_eq!(qfun(&sel, Target::Basis(Basis::H), None, None).unwrap().json["expansion"], json!("h[2]"));
        let sel = selector_from_flags(Some(0), None, 0, Some(0)).unwrap();
        assert_eq!(qfun(&sel, Target::Basis(Basis::H), None, None).unwrap().json["expansion"], json!("1"));
        let sel = selector_from_flags(None, Some("6"), 3, None).unwrap();
        let s = qfun(&sel, Target::Basis(Basis::S), None, None).unwrap();
        assert_eq!(s.json["expansion"], json!("3*s[6] + 3*s[5,1] + 3*s[4,2] + s[3,3] + s[3,2,1]"));
        assert!(selector_from_flags(None, None, 0, None).is_err());
    }

    #[test]
    fn expand_monomials() {
        let out = expand("omega(Q[2,1,0])", Target::Basis(Basis::M), Some(2), None).unwrap();
        assert_eq!(out.json["expansion"], json!("x1*x2"));
    }
}
