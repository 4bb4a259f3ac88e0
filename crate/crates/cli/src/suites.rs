//! Named verification suites and the scheduler that runs them.

use eqsym::bijections::{
    bijection_fixtures, verify_banner_ornament, verify_gamma, verify_involutions, verify_phi_eta, verify_weight_sums,
};
use eqsym::eulerian::characters::{verify_char_tables, verify_character_formula, verify_power_sum_expansion};
use eqsym::eulerian::identities::{
    derangement_identities, verify_q_exponential, verify_exd_lemma, verify_foha, verify_nonstable_all, verify_recurrences,
    verify_specializations, verify_central_identity,
};
use eqsym::eulerian::symmetry::{conjecture_suite, symmetry_unimodality_suite};
use eqsym::eulerian::verify_representation_structure;
use eqsym::related::{
    gessel_identities, verify_askey_ismail, verify_multiset_derangements, verify_no_adjacent_repeats,
    verify_stanley_words,
};
use eqsym::VerifyReport;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::Mode;

/// Largest `n` any suite accepts in ci mode.
pub const CI_CAP: usize = 6;

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    /// Default size in ci and extended mode, and the hard maximum.
    pub ci: usize,
    pub extended: usize,
    pub max: usize,
    run: fn(usize) -> Vec<VerifyReport>,
}

impl Suite {
    pub fn default_n(&self, mode: Mode) -> usize {
        match mode {
            Mode::Ci => self.ci,
            Mode::Extended => self.extended,
        }
    }

    pub fn run(&self, n: usize) -> Vec<VerifyReport> {
        (self.run)(n)
    }
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "exd-lemma",
        about: "sum of Exd = maj - exc and the |Exd| formula on all of S_n",
        ci: 6,
        extended: 8,
        max: 8,
        run: |n| vec![verify_exd_lemma(n)],
    },
    Suite {
        name: "central-identity",
        about: "cleared generating function for Q_n(t,r) in the m-basis",
        ci: 6,
        extended: 7,
        max: 8,
        run: |n| vec![verify_central_identity(n)],
    },
    Suite {
        name: "recurrences",
        about: "fixed-point-free and graded recurrences, closed formula, h_k factorization",
        ci: 6,
        extended: 7,
        max: 8,
        run: |n| vec![verify_recurrences(n)],
    },
    Suite {
        name: "q-exponential",
        about: "q-exponential identity for A^{maj,exc,fix}",
        ci: 6,
        extended: 7,
        max: 8,
        run: |n| vec![verify_q_exponential(n)],
    },
    Suite {
        name: "foata-han",
        about: "(maj,des,exc,fix) series identity to z- and p-order n",
        ci: 4,
        extended: 6,
        max: 6,
        run: |n| vec![verify_foha(n, n)],
    },
    Suite {
        name: "specializations",
        about: "stable and nonstable principal specializations",
        ci: 6,
        extended: 7,
        max: 8,
        run: |n| vec![verify_specializations(n)],
    },
    Suite {
        name: "nonstable",
        about: "nonstable specialization of Q_{(lambda,1^k),j} for |lambda| + k <= n",
        ci: 5,
        extended: 6,
        max: 7,
        run: |n| vec![verify_nonstable_all(n)],
    },
    Suite {
        name: "derangements",
        about: "(maj,exc) and (comaj,exc) derangement identities",
        ci: 6,
        extended: 7,
        max: 8,
        run: |n| vec![derangement_identities(n)],
    },
    Suite {
        name: "symmetry",
        about: "symmetry and t-symmetry of Q and A, with the expected A_4 failure",
        ci: 6,
        extended: 8,
        max: 8,
        run: symmetry_unimodality_suite,
    },
    Suite {
        name: "conjectures",
        about: "printed fixtures plus Schur positivity, log-concavity and unimodality in range",
        ci: 6,
        extended: 8,
        max: 8,
        run: conjecture_suite,
    },
    Suite {
        name: "char-tables",
        about: "character tables of V_{(n),j}, the erased-term formula, power-sum expansion of sum_j Q_{n,j} t^j",
        ci: 6,
        extended: 8,
        max: 8,
        run: |n| vec![verify_char_tables(n), verify_character_formula(n), verify_power_sum_expansion(n)],
    },
    Suite {
        name: "structure",
        about: "plethysm, involution and restriction statements for V_{lambda,j}",
        ci: 6,
        extended: 7,
        max: 8,
        run: |n| vec![verify_representation_structure(n)],
    },
    Suite {
        name: "bijections",
        about: "exhaustive round trips of phi/eta, psi, gamma and the involutions",
        ci: 5,
        extended: 6,
        max: 6,
        run: |n| {
            let small = n.min(5);
            vec![
                bijection_fixtures(),
                verify_phi_eta(small),
                verify_banner_ornament(n, 3),
                verify_gamma(small, 3),
                verify_involutions(small, 3),
                verify_weight_sums(small.min(4), 3),
            ]
        },
    },
    Suite {
        name: "related",
        about: "multiset derangements, no-adjacent-repeat and no-double-descent words",
        ci: 5,
        extended: 6,
        max: 7,
        run: |n| {
            vec![
                verify_multiset_derangements(n, n),
                verify_askey_ismail(n),
                verify_no_adjacent_repeats(n, n),
                verify_stanley_words(n),
                gessel_identities(n.min(6), n.min(6)),
            ]
        },
    },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// One suite run at a resolved size.
pub struct Planned {
    pub suite: &'static Suite,
    pub n: usize,
}

/// Resolves `name` (or `all`) to suites and sizes. An explicit `n_max`
/// is clamped to each suite's maximum when running `all`, and rejected
/// when it exceeds the maximum of a single named suite.
pub fn plan(name: &str, mode: Mode, n_max: Option<usize>) -> Result<Vec<Planned>, String> {
    let chosen: Vec<&'static Suite> = if name == "all" {
        SUITES.iter().collect()
    } else {
        match find(name) {
            Some(s) => vec![s],
            None => return Err(format!("unknown suite {name:?}; expected one of all, {}", names().join(", "))),
        }
    };
    let mut out = Vec::new();
    for s in chosen {
        let n = match n_max {
            Some(n) if name != "all" && n > s.max => {
                return Err(format!("--n-max {n} exceeds the maximum {} of suite {}", s.max, s.name))
            }
            Some(n) => n.min(s.max),
            None => s.default_n(mode),
        };
        out.push(Planned { suite: s, n });
    }
    Ok(out)
}

/// Runs the planned suites on a pool of `jobs` threads. Results keep the
/// registry order regardless of scheduling.
pub fn execute(plan: &[Planned], jobs: usize) -> Result<Vec<(String, usize, Vec<VerifyReport>)>, String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| e.to_string())?;
    Ok(pool.install(|| plan.par_iter().map(|p| (p.suite.name.to_string(), p.n, p.suite.run(p.n))).collect()))
}

/// Key-sorted JSON for a finished run. Thread counts and timings are left
/// out so the output depends only on the inputs.
pub fn to_json(name: &str, mode: Mode, results: &[(String, usize, Vec<VerifyReport>)]) -> Value {
    let passed = results.iter().all(|(_, _, r)| r.iter().all(VerifyReport::passed));
    let suites: Vec<Value> = results
        .iter()
        .map(|(s, n, reports)| {
            json!({
                "suite": s,
                "n": n,
                "passed": reports.iter().all(VerifyReport::passed),
                "reports": reports.iter().map(VerifyReport::to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "request": name, "mode": mode.as_str(), "passed": passed, "suites": suites })
}

pub fn to_text(results: &[(String, usize, Vec<VerifyReport>)]) -> String {
    let mut out = String::new();
    for (s, n, reports) in results {
        out.push_str(&format!("# {s} (n = {n})\n"));
        for r in reports {
            out.push_str(&r.summary_line());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planning() {
        let p = plan("all", Mode::Ci, None).unwrap();
        assert_eq!(p.len(), SUITES.len());
        assert!(p.iter().all(|x| x.n <= CI_CAP));
        assert!(plan("char-tables", Mode::Ci, Some(9)).is_err());
        assert_eq!(plan("char-tables", Mode::Ci, Some(8)).unwrap()[0].n, 8);
        assert_eq!(plan("all", Mode::Ci, Some(8)).unwrap().iter().find(|x| x.suite.name == "foata-han").unwrap().n, 6);
        assert!(plan("nope", Mode::Ci, None).is_err());
    }

    #[test]
    fn suite_caps_are_ordered() {
        for s in SUITES {
            assert!(s.ci <= CI_CAP && s.ci <= s.extended && s.extended <= s.max, "{}", s.name);
        }
    }
}
