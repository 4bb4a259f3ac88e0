use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eqsym_cli::cache::Cache;
use eqsym_cli::commands::{self, Column, Output, Target};
use eqsym_cli::config::{cache_dir, Format, Mode};
use eqsym_cli::suites;
use serde_json::json;

/// Eulerian quasisymmetric functions: construction, expansion and
/// verification.
///
/// Exit status: 0 on success, 1 when a verification fails, 2 on a usage
/// or input error.
#[derive(Parser)]
#[command(name = "eqsym", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// Cache directory (overrides EQSYM_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Compute everything afresh without reading or writing the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of one permutation, or a table over all of S_n.
    Stats {
        /// One-line word such as 32541 (comma-separated above 9).
        perm: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated columns among des, exc, maj, comaj, inv, fix.
        #[arg(long, default_value = "des,exc,maj,comaj,inv,fix")]
        table: String,
    },
    /// Q_{n,j}, Q_{n,j,k} or Q_{lambda,j} in a chosen basis.
    Qfun {
        #[arg(long)]
        n: Option<usize>,
        /// Cycle type, e.g. 6 or 4,2.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: Option<usize>,
        /// m, h, e, p, s, or f for the fundamental quasisymmetric basis.
        #[arg(long, default_value = "h")]
        basis: String,
        /// Expand explicitly in x_1..x_N instead.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value = "ci")]
        mode: Mode,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List the verification suites with their default sizes.
    Suites,
    /// Character table of V_{(n),j} for 1 <= j <= n/2.
    Chartable { n: usize },
    /// Evaluate an expression such as "omega(Q[5,2,0])".
    Expand {
        expr: String,
        #[arg(default_value = "h")]
        basis: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Manage the on-disk cache of Q expansions.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Compute and store every Q up to n.
    Warm {
        #[arg(long, default_value_t = suites::CI_CAP)]
        n_max: usize,
    },
    Clear,
    List,
    /// Validate every entry and recompute a tenth of them.
    Check,
}

enum Failure {
    Usage(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Usage(e)
    }
}

fn emit(format: Format, out: &Output) {
    match format {
        Format::Text => print!("{}", out.text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json renders")),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cache = (!cli.no_cache).then(|| Cache::open(cache_dir(cli.cache_dir.clone())));
    let out = match cli.command {
        Command::Stats { perm, n, table } => match (perm, n) {
            (Some(p), None) => commands::stats_one(&p)?,
            (None, Some(n)) => commands::stats_table(n, &Column::parse_list(&table)?)?,
            _ => return Err(anyhow::anyhow!("give either a permutation or --n").into()),
        },
        Command::Qfun { n, lambda, j, k, basis, vars } => {
            let sel = commands::selector_from_flags(n, lambda.as_deref(), j, k)?;
            commands::qfun(&sel, Target::parse(&basis)?, vars, cache.as_ref())?
        }
        Command::Verify { suite, n_max, mode, jobs } => {
            let plan = suites::plan(&suite, mode, n_max).map_err(anyhow::Error::msg)?;
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1);
            let results = suites::execute(&plan, jobs).map_err(anyhow::Error::msg)?;
            let json = suites::to_json(&suite, mode, &results);
            let ok = json["passed"] == json!(true);
            Output { text: suites::to_text(&results), json, ok }
        }
        Command::Suites => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for s in suites::SUITES {
                text.push_str(&format!("{:16} ci={} extended={} max={}  {}\n", s.name, s.ci, s.extended, s.max, s.about));
                rows.push(json!({ "name": s.name, "ci": s.ci, "extended": s.extended, "max": s.max, "about": s.about }));
            }
            Output { text, json: json!(rows), ok: true }
        }
        Command::Chartable { n } => commands::chartable(n)?,
        Command::Expand { expr, basis, vars } => commands::expand(&expr, Target::parse(&basis)?, vars, cache.as_ref())?,
        Command::Cache { action } => {
            let cache = Cache::open(cache_dir(cli.cache_dir.clone()));
            cache_command(&cache, action)?
        }
    };
    emit(cli.format, &out);
    if out.ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cache_command(cache: &Cache, action: CacheAction) -> anyhow::Result<Output> {
    let dir = cache.dir().display().to_string();
    Ok(match action {
        CacheAction::Warm { n_max } => {
            anyhow::ensure!(n_max <= eqsym::eulerian::EULERIAN_SIZE_CAP, "--n-max {n_max} exceeds the cap");
            let written = cache.warm(n_max)?;
            Output {
                text: format!("wrote {written} entries to {dir}\n"),
                json: json!({ "dir": dir, "written": written, "n_max": n_max }),
                ok: true,
            }
        }
        CacheAction::Clear => {
            let removed = cache.clear()?;
            Output { text: format!("removed {removed} entries from {dir}\n"), json: json!({ "dir": dir, "removed": removed }), ok: true }
        }
        CacheAction::List => {
            let entries = cache.list()?;
            let text: String = entries
                .iter()
                .map(|(k, e)| match e {
                    Ok(_) => format!("{k}\n"),
                    Err(why) => format!("{k}  CORRUPT: {why}\n"),
                })
                .collect();
            let rows: Vec<_> =
                entries.iter().map(|(k, e)| json!({ "key": k, "valid": e.is_ok() })).collect();
            Output { text, json: json!({ "dir": dir, "entries": rows }), ok: true }
        }
        CacheAction::Check => {
            let s = cache.check()?;
            let text = format!(
                "{} entries, {} corrupt, {} recomputed, {} mismatched\n{}",
                s.entries,
                s.corrupt.len(),
                s.sampled,
                s.mismatched.len(),
                s.corrupt.iter().chain(&s.mismatched).map(|x| format!("  {x}\n")).collect::<String>()
            );
            let json = json!({
                "dir": dir,
                "entries": s.entries,
                "sampled": s.sampled,
                "corrupt": s.corrupt,
                "mismatched": s.mismatched,
                "ok": s.ok(),
            });
            Output { text, json, ok: s.ok() }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
