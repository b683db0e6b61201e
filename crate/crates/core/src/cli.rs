//! The `cishift` command line. [`run`] takes the arguments and output
//! streams and returns the process exit code:
//! 0 success / CI / agreement, 1 not CI / disagreement / failed fixture,
//! 2 usage or parse error, 3 cost cap, factorization cap or degree bound hit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::delorme::is_complete_intersection;
use crate::error::Error;
use crate::fixtures::{compare, run_suite, SuiteConfig, DEFAULT_SEED};
use crate::seqcore::{normalize, BaseSequence, GeneratorSequence};
use crate::shiftscan::{
    converse_predicate, eventual_report_with, scan_certificates, ScanConfig, ScanRow,
    DEFAULT_SCAN_BUDGET,
};
use crate::toricoracle::{betti_profile, OracleConfig, DEFAULT_FACTORIZATION_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "cishift", version, about = "Complete intersections in shifted monomial curve families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Start of the eventual regime (default a_n^2).
    #[arg(long, global = true)]
    pub threshold: Option<u64>,

    /// Oracle degree bound (default Frobenius number + 2·max).
    #[arg(long, global = true)]
    pub bound: Option<u64>,

    /// Oracle factorization cap per degree.
    #[arg(long, global = true, default_value_t = DEFAULT_FACTORIZATION_CAP)]
    pub cap: usize,

    /// Scan work budget.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_BUDGET)]
    pub budget: u128,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one generator sequence and print its certificate.
    Analyze { seq: GeneratorSequence },
    /// List the CI shifts of a base in [j_from, j_to].
    Scan {
        base: BaseSequence,
        j_from: u64,
        j_to: u64,
    },
    /// Two periods above the threshold.
    Report { base: BaseSequence },
    /// Minimal generator counts per degree.
    Oracle { seq: GeneratorSequence },
    /// Split search against the oracle.
    Compare { seq: GeneratorSequence },
    /// Run the built-in fixture suite.
    VerifyPaper,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. }
        | Error::BoundTooSmall { .. }
        | Error::WindowTooLarge { .. }
        | Error::Overflow(_) => 3,
        Error::Parse(_) | Error::InvalidSequence(_) | Error::Precondition(_) => 2,
        _ => 1,
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn oracle_config(cli: &Cli) -> OracleConfig {
    OracleConfig {
        bound: cli.bound,
        cap: cli.cap,
        ..OracleConfig::default()
    }
}

type Outcome = Result<i32, Error>;

fn analyze(cli: &Cli, seq: &GeneratorSequence, out: &mut dyn Write) -> Outcome {
    let cert = is_complete_intersection(seq);
    match cli.format {
        Format::Json => {
            let v = json!({ "gens": seq, "ci": cert.is_some(), "certificate": cert });
            writeln!(out, "{v}").ok();
        }
        Format::Csv => {
            writeln!(out, "gens,ci,certificate").ok();
            writeln!(out, "\"{seq}\",{},\"{}\"", cert.is_some(), opt(cert.as_ref())).ok();
        }
        Format::Text => match &cert {
            Some(c) => {
                writeln!(out, "({seq}) is CI").ok();
                writeln!(out, "{c}").ok();
            }
            None => {
                writeln!(out, "({seq}) is not CI").ok();
            }
        },
    }
    Ok(if cert.is_some() { 0 } else { 1 })
}

fn scan_cmd(cli: &Cli, base: &BaseSequence, j_from: u64, j_to: u64, out: &mut dyn Write) -> Outcome {
    let config = ScanConfig { budget: cli.budget };
    let rows = scan_certificates(base, j_from, j_to, &config)?
        .iter()
        .map(|(j, c)| ScanRow::new(base, *j, c))
        .collect::<Result<Vec<_>, _>>()?;
    match cli.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&rows).expect("rows serialize")).ok();
        }
        Format::Csv | Format::Text => {
            let sep = if cli.format == Format::Csv { "," } else { "\t" };
            writeln!(out, "j{sep}m{sep}s{sep}k").ok();
            for r in &rows {
                writeln!(out, "{}{sep}{}{sep}{}{sep}{}", r.j, opt(r.m), opt(r.s), opt(r.k)).ok();
            }
        }
    }
    Ok(0)
}

fn report(cli: &Cli, base: &BaseSequence, out: &mut dyn Write) -> Outcome {
    let config = ScanConfig { budget: cli.budget };
    let r = eventual_report_with(base, cli.threshold, &config)?;
    match cli.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&r).expect("report serializes")).ok();
        }
        Format::Csv => {
            writeln!(out, "residue,period").ok();
            for res in &r.residues {
                writeln!(out, "{res},{}", r.period).ok();
            }
        }
        Format::Text => {
            let residues: Vec<String> = r.residues.iter().map(|x| format!("{x} mod {}", r.period)).collect();
            writeln!(out, "base: {}", r.base).ok();
            writeln!(out, "threshold: {}", r.threshold).ok();
            writeln!(out, "period: {}", r.period).ok();
            writeln!(out, "residues: {{{}}}", residues.join(", ")).ok();
            writeln!(out, "eventually_empty: {}", r.eventually_empty).ok();
            writeln!(out, "base_is_ci: {}", r.base_is_ci).ok();
            writeln!(out, "window_consistent: {}", r.window_consistent).ok();
            if r.base_is_ci && r.eventually_empty && base.len() >= 2 {
                writeln!(out, "note: base is CI but no shift past the threshold is").ok();
                if let Ok(p) = converse_predicate(base) {
                    writeln!(out, "converse_predicate: {p}").ok();
                }
            }
            for v in r.violations() {
                writeln!(out, "violation: {v}").ok();
            }
        }
    }
    Ok(0)
}

fn oracle(cli: &Cli, seq: &GeneratorSequence, out: &mut dyn Write) -> Outcome {
    let (d, reduced) = normalize(seq);
    if reduced.len() < 3 {
        let mu = reduced.len() as u64 - 1;
        match cli.format {
            Format::Json => writeln!(out, "{}", json!({ "gens": reduced, "mu": mu, "counts": [] })),
            Format::Csv => writeln!(out, "degree,count"),
            Format::Text => writeln!(out, "({reduced}): mu = {mu}"),
        }
        .ok();
        return Ok(0);
    }
    let profile = betti_profile(&reduced, &oracle_config(cli))?;
    match cli.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&profile).expect("profile serializes")).ok();
        }
        Format::Csv => {
            writeln!(out, "degree,count").ok();
            for c in &profile.counts {
                writeln!(out, "{},{}", c.degree, c.count).ok();
            }
        }
        Format::Text => {
            if d > 1 {
                writeln!(out, "divided by {d}").ok();
            }
            writeln!(out, "({}) bound {}: mu = {}", profile.gens, profile.bound, profile.mu).ok();
            for c in &profile.counts {
                writeln!(out, "  degree {}: {}", c.degree, c.count).ok();
            }
        }
    }
    Ok(0)
}

fn compare_cmd(cli: &Cli, seq: &GeneratorSequence, out: &mut dyn Write) -> Outcome {
    let c = compare(seq, &oracle_config(cli))?;
    match cli.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&c).expect("comparison serializes")).ok();
        }
        Format::Csv => {
            writeln!(out, "ci,mu,agree").ok();
            writeln!(out, "{},{},{}", c.ci, c.mu, c.agree).ok();
        }
        Format::Text => {
            let verdict = if c.ci { "CI" } else { "not CI" };
            let word = if c.agree { "agree" } else { "DISAGREE" };
            writeln!(out, "({seq}): {word} (split search: {verdict}, mu = {})", c.mu).ok();
        }
    }
    Ok(if c.agree { 0 } else { 1 })
}

fn verify(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let config = SuiteConfig {
        seed: cli.seed,
        ..SuiteConfig::default()
    };
    writeln!(err, "seed: {}", config.seed).ok();
    let results = run_suite(&config);
    match cli.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&results).expect("results serialize")).ok();
        }
        Format::Csv => {
            writeln!(out, "fixture,passed").ok();
            for r in &results {
                writeln!(out, "{},{}", r.name, r.passed).ok();
            }
        }
        Format::Text => {
            for r in &results {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", r.name, r.detail).ok();
            }
        }
    }
    match results.iter().find(|r| !r.passed) {
        Some(r) => {
            writeln!(err, "first failing fixture: {}", r.name).ok();
            Ok(1)
        }
        None => Ok(0),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Analyze { seq } => analyze(cli, seq, out),
        Command::Scan { base, j_from, j_to } => scan_cmd(cli, base, *j_from, *j_to, out),
        Command::Report { base } => report(cli, base, out),
        Command::Oracle { seq } => oracle(cli, seq, out),
        Command::Compare { seq } => compare_cmd(cli, seq, out),
        Command::VerifyPaper => verify(cli, out, err),
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                write!(out, "{text}").ok();
            } else {
                write!(err, "{text}").ok();
            }
            return code;
        }
    };
    let go = |out: &mut Vec<u8>, err: &mut Vec<u8>| match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            exit_code(&e)
        }
    };
    let (mut buf_out, mut buf_err) = (Vec::new(), Vec::new());
    let code = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| go(&mut buf_out, &mut buf_err)),
            Err(e) => {
                writeln!(buf_err, "error: cannot start {n} workers: {e}").ok();
                2
            }
        },
        None => go(&mut buf_out, &mut buf_err),
    };
    out.write_all(&buf_out).ok();
    err.write_all(&buf_err).ok();
    code
}
