//! The `qz` command line: identity suites, zeta tables, Hall tables, oracle
//! censuses and cyclic sieving, with JSON or CSV output.

mod config;
mod output;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

pub use config::{pick, ConfigFile, KEYS};
pub use output::{emit, reports_csv, rows_csv, Format, SuiteReport};

use crate::error::{Error, Result};
use crate::exact::{rat_strings, Var};
use crate::oracle::{oracle_suite, oracle_table};
use crate::partitions::{aut_count, hall_g, partitions_in_rectangle, Partition};
use crate::qkit::{all_pairs, bailey_check, classical_suite};
use crate::report::{all_pass, CheckReport};
use crate::rrsums::{check_identity, default_instances, root_closed_form, sieve_instances, Instance, RunSettings, IDENTITIES};
use crate::zeta::{zeta_suite, NuKind, OrderId, OrderKind, ZetaTable};

const SUITES: [&str; 6] = ["classical", "rrsums", "zeta", "oracle", "sieve", "all"];

#[derive(Debug, Parser)]
#[command(name = "qz", version, about = "Exact verification of q-series identities and quadratic-order zeta functions")]
pub struct Cli {
    /// key=value file with defaults for any flag below; command-line flags override it
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads [default: all cores]
    #[arg(long, env = "QZ_THREADS", global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite; exits 0 iff every check passes
    Check(Opts),
    /// Coefficient table of a zeta function
    Zeta(Opts),
    /// Hall polynomials g^lambda_mu(q) for lambda = (m^n)
    Hall(Opts),
    /// Brute-force census of totally real and spanning submodules over F_p
    Oracle(Opts),
    /// The master polynomial at r-th roots of unity against its closed form
    Sieve(Opts),
}

#[derive(Debug, Clone, Default, Args)]
pub struct Opts {
    /// Suite for `check` [default: all]
    #[arg(long, value_parser = SUITES)]
    pub suite: Option<String>,
    /// Quadratic order for `zeta` [default: inert]
    #[arg(long, value_parser = ["ramified", "split", "inert"])]
    pub order: Option<String>,
    /// Depth m; an upper bound for `check` [defaults: check 3, zeta 1, hall 2, oracle 1, sieve 1]
    #[arg(long)]
    pub m: Option<usize>,
    /// Rank n; an upper bound for `check` [defaults: check 4 (sieve suite 6), zeta 2, hall 2, oracle 2, sieve 2]
    #[arg(long)]
    pub n: Option<i64>,
    /// Root-of-unity order for `sieve` [default: every divisor of n]
    #[arg(long)]
    pub r: Option<i64>,
    /// Series order for series-regime identities [default: 25; infinite identities use at least 40]
    #[arg(long = "Q")]
    pub q_order: Option<usize>,
    /// Seed for sampled evaluation points [default: 20240601]
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sampled points per rational-point identity [default: 5]
    #[arg(long)]
    pub points: Option<usize>,
    /// Output file [default: stdout]
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format [default: json]
    #[arg(long, value_parser = ["json", "csv"])]
    pub format: Option<String>,
    /// Function tabulated by `zeta` [default: coh]
    #[arg(long, value_parser = ["coh", "nu", "nu-tilde"])]
    pub kind: Option<String>,
    /// Highest t-degree kept for the Coh series in `zeta` [default: 8]
    #[arg(long)]
    pub deg: Option<u32>,
    /// Prime field size for `oracle` [default: 2]
    #[arg(long, value_parser = ["2", "3"])]
    pub p: Option<String>,
}

/// Flags merged with the config file and defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolved {
    pub suite: String,
    pub order: OrderKind,
    pub m: Option<usize>,
    pub n: Option<i64>,
    pub r: Option<i64>,
    pub run: RunSettings,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub kind: NuKind,
    pub deg: u32,
    pub p: u8,
}

impl Resolved {
    pub fn new(o: &Opts, file: &ConfigFile) -> Result<Self> {
        let suite: String = pick(o.suite.clone(), file, "suite", "all".into())?;
        if !SUITES.contains(&suite.as_str()) {
            return Err(Error::Config(format!("unknown suite '{}'", suite)));
        }
        let p: u8 = pick(o.p.as_deref().map(|s| s.parse().expect("validated by clap")), file, "p", 2)?;
        if p != 2 && p != 3 {
            return Err(Error::Config(format!("oracle field size must be 2 or 3, got {}", p)));
        }
        let run = RunSettings {
            order: pick(o.q_order, file, "Q", 25)?,
            seed: pick(o.seed, file, "seed", RunSettings::default().seed)?,
            points: pick(o.points, file, "points", 5)?,
        };
        if run.order < 10 {
            return Err(Error::Config(format!("Q must be at least 10, got {}", run.order)));
        }
        let r = Resolved {
            suite,
            order: pick(o.order.as_deref().map(|s| s.parse()).transpose()?, file, "order", OrderKind::Inert)?,
            m: o.m.or(file.get("m")?),
            n: o.n.or(file.get("n")?),
            r: o.r.or(file.get("r")?),
            run,
            out: o.out.clone().or(file.get::<String>("out")?.map(PathBuf::from)),
            format: pick(o.format.as_deref().map(|s| s.parse()).transpose()?, file, "format", Format::Json)?,
            kind: pick(o.kind.as_deref().map(|s| s.parse()).transpose()?, file, "kind", NuKind::Coh)?,
            deg: pick(o.deg, file, "deg", 8)?,
            p,
        };
        if r.m == Some(0) {
            return Err(Error::Config("m must be at least 1".into()));
        }
        if r.n.is_some_and(|n| n < 0) {
            return Err(Error::Config("n must be nonnegative".into()));
        }
        Ok(r)
    }

    fn settings(&self, m: usize, n: i64) -> BTreeMap<String, String> {
        BTreeMap::from([
            ("Q".into(), self.run.order.to_string()),
            ("m".into(), m.to_string()),
            ("n".into(), n.to_string()),
            ("points".into(), self.run.points.to_string()),
            ("seed".into(), self.run.seed.to_string()),
        ])
    }
}

fn within(inst: &Instance, m: Option<usize>, n: Option<i64>) -> bool {
    m.is_none_or(|m| inst.m <= m) && n.is_none_or(|n| inst.n <= n)
}

/// The registry identities at their default instances, optionally bounded in `m` and `n`.
pub fn rrsums_checks(m: Option<usize>, n: Option<i64>, run: &RunSettings) -> Result<Vec<CheckReport>> {
    let mut jobs = Vec::new();
    for (id, _, _) in IDENTITIES.iter().filter(|e| e.0 != "sieve") {
        for inst in default_instances(id)? {
            if within(&inst, m, n) {
                jobs.push((*id, inst));
            }
        }
    }
    let mut out = jobs
        .par_iter()
        .map(|(id, inst)| {
            let mut s = *run;
            if matches!(*id, "ag-infinite" | "br-infinite" | "rr-partition-count") {
                s.order = s.order.max(40);
            }
            check_identity(id, inst, &s)
        })
        .collect::<Result<Vec<_>>>()?;
    crate::report::sort_reports(&mut out);
    Ok(out)
}

pub fn sieve_checks(m_max: usize, n_max: i64, run: &RunSettings) -> Result<Vec<CheckReport>> {
    let mut out =
        sieve_instances(m_max, n_max).par_iter().map(|i| check_identity("sieve", i, run)).collect::<Result<Vec<_>>>()?;
    crate::report::sort_reports(&mut out);
    Ok(out)
}

pub fn classical_checks(run: &RunSettings) -> Vec<CheckReport> {
    let mut out = classical_suite(run.order, run.seed, run.points);
    out.extend(all_pairs().iter().map(|p| bailey_check(p, 6)));
    crate::report::sort_reports(&mut out);
    out
}

/// Runs one named suite.
pub fn run_suite(cfg: &Resolved) -> Result<Vec<CheckReport>> {
    let (m, n) = (cfg.m, cfg.n);
    Ok(match cfg.suite.as_str() {
        "classical" => classical_checks(&cfg.run),
        "rrsums" => rrsums_checks(m, n, &cfg.run)?,
        "zeta" => zeta_suite(m.unwrap_or(3), n.unwrap_or(4)),
        "oracle" => oracle_suite(),
        "sieve" => sieve_checks(m.unwrap_or(3), n.unwrap_or(6), &cfg.run)?,
        "all" => {
            let mut out = Vec::new();
            for s in ["classical", "rrsums", "zeta", "oracle", "sieve"] {
                out.extend(run_suite(&Resolved { suite: s.into(), ..cfg.clone() })?);
            }
            out
        }
        s => return Err(Error::Config(format!("unknown suite '{}'", s))),
    })
}

fn write_reports(cfg: &Resolved, suite: &str, settings: BTreeMap<String, String>, reports: &[CheckReport]) -> Result<()> {
    let text = match cfg.format {
        Format::Json => SuiteReport::new(suite, settings, reports).to_json(),
        Format::Csv => reports_csv(reports)?,
    };
    if cfg.out.is_some() {
        for r in reports {
            println!("{}", r);
        }
    }
    emit(&text, cfg.out.as_deref())?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    eprintln!("{} checks, {} not passed", reports.len(), failed);
    Ok(())
}

#[derive(Serialize)]
struct HallRow {
    lambda: String,
    mu: String,
    /// `[q_exp, num, den]` triples
    g: Vec<(i32, String, String)>,
    aut_mu: Vec<(i32, String, String)>,
}

fn coeff_triples(p: &crate::exact::LaurentPoly) -> Vec<(i32, String, String)> {
    let mut v: Vec<(i32, String, String)> = p
        .terms()
        .map(|(m, c)| {
            let (a, b) = rat_strings(c);
            (m.exp(Var::Q), a, b)
        })
        .collect();
    v.sort_by_key(|e| e.0);
    v
}

#[derive(Serialize)]
struct HallCsvRow {
    lambda: String,
    mu: String,
    poly: String,
    q_exp: i32,
    num: String,
    den: String,
}

fn hall_table(cfg: &Resolved) -> Result<String> {
    let (m, n) = (cfg.m.unwrap_or(2) as i64, cfg.n.unwrap_or(2));
    let lambda = Partition::rectangle(m, n);
    let q = crate::exact::Monomial::var(Var::Q);
    let rows: Vec<HallRow> = partitions_in_rectangle(m, n)
        .iter()
        .map(|mu| HallRow {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
            g: coeff_triples(&hall_g(&lambda, mu, q)),
            aut_mu: coeff_triples(&aut_count(mu, q)),
        })
        .collect();
    match cfg.format {
        Format::Json => Ok(serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"),
        Format::Csv => {
            let mut flat = Vec::new();
            for r in &rows {
                for (poly, v) in [("g", &r.g), ("aut_mu", &r.aut_mu)] {
                    for (e, a, b) in v {
                        flat.push(HallCsvRow {
                            lambda: r.lambda.clone(),
                            mu: r.mu.clone(),
                            poly: poly.into(),
                            q_exp: *e,
                            num: a.clone(),
                            den: b.clone(),
                        });
                    }
                }
            }
            rows_csv(&flat)
        }
    }
}

fn sieve_command(cfg: &Resolved) -> Result<Vec<CheckReport>> {
    let (m, n) = (cfg.m.unwrap_or(1), cfg.n.unwrap_or(2));
    if n < 1 {
        return Err(Error::Config("sieve needs n >= 1".into()));
    }
    let rs: Vec<i64> = match cfg.r {
        Some(r) if r < 1 || n % r != 0 => return Err(Error::Config(format!("r = {} does not divide n = {}", r, n))),
        Some(r) => vec![r],
        None => (1..=n).filter(|r| n % r == 0).collect(),
    };
    let mut out = Vec::new();
    for r in rs {
        let rep = check_identity("sieve", &Instance::new(m, n).k(r), &cfg.run)?;
        out.push(rep.note(format!("closed form: {}", root_closed_form(m, n, r)?)));
    }
    Ok(out)
}

fn thread_pool(cli_threads: Option<usize>, file: &ConfigFile) -> Result<()> {
    if let Some(t) = cli_threads.or(file.get("threads")?) {
        if t == 0 {
            return Err(Error::Config("threads must be at least 1".into()));
        }
        // a pool may already exist when embedded; keep it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    Ok(())
}

/// Executes a parsed command line; returns the process exit code.
pub fn execute(cli: Cli) -> Result<i32> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    thread_pool(cli.threads, &file)?;
    let opts = match &cli.command {
        Command::Check(o) | Command::Zeta(o) | Command::Hall(o) | Command::Oracle(o) | Command::Sieve(o) => o,
    };
    let cfg = Resolved::new(opts, &file)?;
    match cli.command {
        Command::Check(_) => {
            let reports = run_suite(&cfg)?;
            let settings = cfg.settings(cfg.m.unwrap_or(3), cfg.n.unwrap_or(if cfg.suite == "sieve" { 6 } else { 4 }));
            write_reports(&cfg, &cfg.suite, settings, &reports)?;
            Ok(if all_pass(&reports) { 0 } else { 1 })
        }
        Command::Zeta(_) => {
            let order = OrderId::new(cfg.order, cfg.m.unwrap_or(1));
            let t = ZetaTable::compute(order, cfg.n.unwrap_or(2), cfg.kind, cfg.deg)?;
            emit(&match cfg.format {
                Format::Json => t.to_json() + "\n",
                Format::Csv => t.to_csv(),
            }, cfg.out.as_deref())?;
            Ok(0)
        }
        Command::Hall(_) => {
            emit(&hall_table(&cfg)?, cfg.out.as_deref())?;
            Ok(0)
        }
        Command::Oracle(_) => {
            let rows = oracle_table(cfg.p, cfg.m.unwrap_or(1) as i64, cfg.n.unwrap_or(2))?;
            emit(&match cfg.format {
                Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
                Format::Csv => rows_csv(&rows)?,
            }, cfg.out.as_deref())?;
            // every pr1 fibre is constant and equals the formula
            let ok = rows.iter().all(|r| r.ctr_pr1_fiber.is_none_or(|c| c.to_string() == r.b_formula));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Sieve(_) => {
            let reports = sieve_command(&cfg)?;
            let settings = cfg.settings(cfg.m.unwrap_or(1), cfg.n.unwrap_or(2));
            write_reports(&cfg, "sieve", settings, &reports)?;
            Ok(if all_pass(&reports) { 0 } else { 1 })
        }
    }
}

/// Parses `args` and runs; usage errors exit through clap with code 2.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qz: {}", e);
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qz").chain(args.iter().copied())).unwrap()
    }

    fn opts(c: &Cli) -> &Opts {
        match &c.command {
            Command::Check(o) | Command::Zeta(o) | Command::Hall(o) | Command::Oracle(o) | Command::Sieve(o) => o,
        }
    }

    #[test]
    fn flags_override_file() {
        let file = ConfigFile::parse("suite = zeta\nQ = 30\nformat = csv\norder = split").unwrap();
        let c = parse(&["check", "--Q", "12", "--order", "ramified"]);
        let r = Resolved::new(opts(&c), &file).unwrap();
        assert_eq!(r.suite, "zeta");
        assert_eq!(r.run.order, 12);
        assert_eq!(r.format, Format::Csv);
        assert_eq!(r.order, OrderKind::Ramified);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(Cli::try_parse_from(["qz", "check", "--suite", "bogus"]).is_err());
        let c = parse(&["check", "--Q", "5"]);
        assert!(Resolved::new(opts(&c), &ConfigFile::default()).is_err());
        let bad = ConfigFile::parse("suite = bogus").unwrap();
        assert!(Resolved::new(opts(&parse(&["check"])), &bad).is_err());
    }

    #[test]
    fn sieve_reports() {
        let c = parse(&["sieve", "--m", "1", "--n", "2", "--r", "2"]);
        let r = Resolved::new(opts(&c), &ConfigFile::default()).unwrap();
        let reps = sieve_command(&r).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].passed());
        assert!(reps[0].notes[0].contains("closed form"));
    }
}
