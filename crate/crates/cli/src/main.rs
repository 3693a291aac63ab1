use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rankmac::exactnum::{ExactInt, QBase};
use rankmac::gfcodes::{brute_distribution, CodeFile, LinearCode, RankDistribution, CAP_ENV, DEFAULT_CAP};
use rankmac::macwilliams::{krawtchouk, transform, Method};
use rankmac::moments::{self, DualPair, MomentCheck};
use rankmac::mrd::{class2_distribution, is_mrd, mrd_distribution, singleton_bound};
use rankmac::suite::{self, GridConfig, SuiteReport};
use rankmac::Error;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "rankmac", version, about = "Rank-metric MacWilliams identity and moment checks in exact arithmetic")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print elapsed time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    /// Largest number of codewords enumerated.
    #[arg(long, global = true, env = CAP_ENV)]
    cap: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Rank distribution, minimum distance, diameter and MRD flag of a code.
    Weights { file: PathBuf },
    /// Rank distribution of the dual code.
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DualMethod::All)]
        method: DualMethod,
    },
    /// Run every identity check on a grid of small codes.
    Verify(VerifyArgs),
    /// A single generalized Krawtchouk value P_j(i; m, n).
    Krawtchouk {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
    },
    /// Rank distribution of an MRD code. Give --k, or --d when n > m.
    Mrd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 2)]
        q: u32,
    },
    /// Every moment identity for a code and its dual.
    Moments {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_mu: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Field characteristic; repeat for several.
    #[arg(long = "q", default_values_t = [2u32])]
    q: Vec<u32>,
    #[arg(long, default_value_t = 3)]
    max_m: usize,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random generators per (m, n, k) cell.
    #[arg(long, default_value_t = 3)]
    random: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualMethod {
    Brute,
    Functional,
    Krawtchouk,
    All,
}

#[derive(Serialize)]
struct WeightsReport {
    q: u32,
    m: usize,
    n: usize,
    k: usize,
    distribution: RankDistribution,
    min_distance: Option<usize>,
    diameter: Option<usize>,
    mrd: bool,
}

#[derive(Serialize)]
struct DualEntry {
    method: Method,
    distribution: RankDistribution,
}

#[derive(Serialize)]
struct DualReport {
    q: u32,
    m: usize,
    n: usize,
    k: usize,
    distribution: RankDistribution,
    duals: Vec<DualEntry>,
    agree: bool,
}

#[derive(Serialize)]
struct KrawtchoukReport {
    q: u32,
    j: usize,
    i: usize,
    m: usize,
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct MrdReport {
    q: u32,
    m: usize,
    n: usize,
    d: usize,
    class: &'static str,
    singleton_bound: String,
    distribution: RankDistribution,
}

#[derive(Serialize)]
struct MomentsReport {
    q: u32,
    m: usize,
    n: usize,
    k: usize,
    distribution: RankDistribution,
    dual_distribution: RankDistribution,
    held: usize,
    failed: usize,
    skipped: usize,
    checks: Vec<MomentCheck>,
}

/// A finished command: what to print and whether every identity held.
struct Output {
    text: String,
    json: String,
    ok: bool,
}

impl Output {
    fn new<T: Serialize>(report: &T, text: String, ok: bool) -> Self {
        let json = serde_json::to_string_pretty(report).expect("reports serialize");
        Output { text, json, ok }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn load_code(path: &PathBuf) -> CliResult<LinearCode> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    Ok(CodeFile::parse(&text)?.to_code()?)
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |d| d.to_string())
}

fn weights(code: &LinearCode, cap: u64) -> rankmac::Result<Output> {
    let dist = brute_distribution(code, cap)?;
    let r = WeightsReport {
        q: code.field().q(),
        m: code.field().m(),
        n: code.n(),
        k: code.k(),
        min_distance: dist.min_nonzero_weight(),
        diameter: dist.max_nonzero_weight(),
        mrd: is_mrd(code, cap)?,
        distribution: dist,
    };
    let text = format!(
        "q = {}, m = {}, n = {}, k = {}\nA = {}\nd_R = {}\ndiameter = {}\nMRD = {}",
        r.q,
        r.m,
        r.n,
        r.k,
        r.distribution,
        opt(r.min_distance),
        opt(r.diameter),
        r.mrd
    );
    Ok(Output::new(&r, text, true))
}

fn dual(code: &LinearCode, method: DualMethod, cap: u64) -> rankmac::Result<Output> {
    let f = code.field();
    let base = QBase::new(f.q())?;
    let a = brute_distribution(code, cap)?;
    let methods: &[Method] = match method {
        DualMethod::Brute => &[Method::Brute],
        DualMethod::Functional => &[Method::Functional],
        DualMethod::Krawtchouk => &[Method::Krawtchouk],
        DualMethod::All => &[Method::Brute, Method::Functional, Method::Krawtchouk],
    };
    let mut duals = Vec::new();
    for &m in methods {
        let distribution = match m {
            Method::Brute => brute_distribution(&code.dual(), cap)?,
            _ => transform(base, f.m(), &a, code.k(), m)?.output,
        };
        duals.push(DualEntry { method: m, distribution });
    }
    let agree = duals.windows(2).all(|w| w[0].distribution == w[1].distribution);
    let r = DualReport { q: f.q(), m: f.m(), n: code.n(), k: code.k(), distribution: a, duals, agree };
    let mut text = format!("q = {}, m = {}, n = {}, k = {}\nA = {}", r.q, r.m, r.n, r.k, r.distribution);
    for d in &r.duals {
        let name = serde_json::to_value(d.method).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        text.push_str(&format!("\nB ({name}) = {}", d.distribution));
    }
    if r.duals.len() > 1 {
        text.push_str(if agree { "\nall methods agree" } else { "\nFAILED: methods disagree" });
    }
    Ok(Output::new(&r, text, agree))
}

fn verify(args: &VerifyArgs, cap: u64) -> rankmac::Result<Output> {
    let cfg = GridConfig {
        q: args.q.clone(),
        max_m: args.max_m,
        max_n: args.max_n,
        cap,
        seed: args.seed,
        random_per_cell: args.random,
    };
    let r: SuiteReport = suite::run(&cfg)?;
    let mut text = format!(
        "grid: q = {:?}, m <= {}, n <= {}, cap = {}, seed = {}\ncodes checked: {}, skipped: {}",
        cfg.q,
        cfg.max_m,
        cfg.max_n,
        cfg.cap,
        cfg.seed,
        r.codes_checked,
        r.codes_skipped.len()
    );
    for (name, t) in [
        ("macwilliams", &r.macwilliams),
        ("moments", &r.moments),
        ("mrd", &r.mrd),
        ("dual vectors", &r.dual_vectors),
        ("hadamard", &r.hadamard),
        ("krawtchouk", &r.krawtchouk),
        ("scalar", &r.scalar),
    ] {
        text.push_str(&format!("\n{name:<13} held {:>6}  failed {:>4}  skipped {:>5}", t.held, t.failed, t.skipped));
    }
    for f in &r.failures {
        text.push_str(&format!("\nFAILED {} [{}] {}", f.label, f.check, f.detail));
        if let Some(code) = &f.code {
            text.push_str(&format!("\n  reproduce with: {}", serde_json::to_string(code).unwrap_or_default()));
        }
    }
    text.push_str(&format!("\n{} failures", r.failed()));
    let ok = r.ok();
    Ok(Output::new(&r, text, ok))
}

fn krawtchouk_value(q: u32, j: usize, i: usize, m: usize, n: usize) -> rankmac::Result<Output> {
    let base = QBase::new(q)?;
    if i > n {
        return Err(Error::OutOfRange(format!("need i <= n, got i = {i}, n = {n}")));
    }
    let v = krawtchouk(base, j, i, m, n);
    let r = KrawtchoukReport { q, j, i, m, n, value: v.to_string() };
    Ok(Output::new(&r, v.to_string(), true))
}

fn mrd(q: u32, m: usize, n: usize, k: Option<usize>, d: Option<usize>) -> rankmac::Result<Output> {
    let base = QBase::new(q)?;
    let (class, d, dist) = match (k, d) {
        (Some(k), None) if n <= m => {
            let dist = mrd_distribution(base, m, n, k)?;
            ("I", n - k + 1, dist)
        }
        (None, Some(d)) if n <= m => {
            if d < 1 || d > n {
                return Err(Error::OutOfRange(format!("distance {d} outside 1..={n}")));
            }
            ("I", d, mrd_distribution(base, m, n, n - d + 1)?)
        }
        (None, Some(d)) => ("II", d, class2_distribution(base, m, n, d)?),
        (Some(_), None) => {
            return Err(Error::OutOfRange(format!("n = {n} > m = {m}: give --d instead of --k")));
        }
        _ => return Err(Error::OutOfRange("give exactly one of --k and --d".into())),
    };
    let bound: ExactInt = singleton_bound(base, m, n, d)?;
    let r = MrdReport { q, m, n, d, class, singleton_bound: bound.to_string(), distribution: dist };
    let text = format!("Class-{class} MRD, q = {q}, m = {m}, n = {n}, d = {d}\nA = {}", r.distribution);
    Ok(Output::new(&r, text, true))
}

fn moments_dump(code: &LinearCode, max_mu: usize, cap: u64) -> rankmac::Result<Output> {
    let pair = DualPair::from_code(code, cap)?;
    let checks = moments::all_checks(&pair, max_mu);
    let held = checks.iter().filter(|c| c.holds()).count();
    let failed = checks.iter().filter(|c| c.failed()).count();
    let r = MomentsReport {
        q: code.field().q(),
        m: pair.m(),
        n: pair.n(),
        k: pair.k(),
        distribution: pair.code().clone(),
        dual_distribution: pair.dual().clone(),
        held,
        failed,
        skipped: checks.len() - held - failed,
        checks,
    };
    let mut text = format!("A = {}\nB = {}", r.distribution, r.dual_distribution);
    for c in &r.checks {
        let mut line = serde_json::to_string(c).unwrap_or_default();
        if c.failed() {
            line = format!("FAILED {line}");
        }
        text.push('\n');
        text.push_str(&line);
    }
    text.push_str(&format!("\nheld {}, failed {}, skipped {}", r.held, r.failed, r.skipped));
    Ok(Output::new(&r, text, failed == 0))
}

fn execute(cli: &Cli) -> CliResult<Output> {
    let cap = cli.common.cap;
    let out = match &cli.command {
        Command::Weights { file } => weights(&load_code(file)?, cap.unwrap_or(DEFAULT_CAP)),
        Command::Dual { file, method } => dual(&load_code(file)?, *method, cap.unwrap_or(DEFAULT_CAP)),
        Command::Verify(args) => verify(args, cap.unwrap_or(GridConfig::default().cap)),
        Command::Krawtchouk { j, i, m, n, q } => krawtchouk_value(*q, *j, *i, *m, *n),
        Command::Mrd { n, m, k, d, q } => mrd(*q, *m, *n, *k, *d),
        Command::Moments { file, max_mu } => moments_dump(&load_code(file)?, *max_mu, cap.unwrap_or(DEFAULT_CAP)),
    }?;
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = execute(&cli);
    if cli.common.timing {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    match result {
        Ok(out) => {
            println!("{}", if cli.common.json { &out.json } else { &out.text });
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
