mod render;
mod run;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use superschur::asymptotics::Law;
use superschur::exact_linalg::Arithmetic;

#[derive(Parser, Debug)]
#[command(name = "superschur", version, about = "Verify Schur–Weyl statements for sign-permutation actions on graded tensor powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Arithmetic: exact Gaussian rationals, two random primes, or chosen by size.
    #[arg(long, global = true, value_enum, env = "SUPERSCHUR_MODE", default_value = "auto")]
    pub mode: ModeArg,

    /// Worker threads; defaults to the number of available cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Seed for prime selection and sampling.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Report every elapsed time as 0, for reproducible output.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the checks for one statement, or every applicable one.
    Verify(VerifyArgs),
    /// Image and centralizer dimensions, by characters and by linear algebra.
    Dims(DimsArgs),
    /// Exact ratio series with optional power-law fit.
    Asymptotics(AsymptoticsArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long)]
    pub k: usize,
    /// Odd dimension; defaults to k for crossed-product and 0 otherwise.
    #[arg(long)]
    pub l: Option<usize>,
    /// Tensor degree, either `N` or an inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    pub n: (usize, usize),
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub l: usize,
    #[arg(long, value_parser = parse_range)]
    pub n: (usize, usize),
}

#[derive(Args, Debug)]
pub struct AsymptoticsArgs {
    #[arg(value_parser = parse_law)]
    pub law: Law,
    /// Required for every law except full-sym.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub nmax: u32,
    /// Fit `value ≈ C·n^e` over the window.
    #[arg(long)]
    pub fit: bool,
    /// Inclusive fit window `A..B`; defaults to the top three quarters of the range.
    #[arg(long, value_parser = parse_range)]
    pub window: Option<(usize, usize)>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    CrossedProduct,
    Hook,
    Classical,
    Pq,
    Lemma14,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Modular,
    Auto,
}

impl From<ModeArg> for Arithmetic {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => Arithmetic::Exact,
            ModeArg::Modular => Arithmetic::Modular,
            ModeArg::Auto => Arithmetic::Auto,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = |_| format!("expected N or A..B, got '{s}'");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (a.trim().parse().map_err(bad)?, b.trim().parse().map_err(bad)?)
        }
        None => {
            let v = s.trim().parse().map_err(bad)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range '{s}'"));
    }
    Ok((a, b))
}

fn parse_law(s: &str) -> Result<Law, String> {
    s.parse()
}

/// Failure classes, mapped onto the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad parameters, unmet hypotheses, resource bounds.
    Usage(String),
    /// A check failed or the two primes disagreed.
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let jobs = g.jobs.unwrap_or_else(|| {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    });
    if jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
        eprintln!("error: thread pool: {e}");
        return ExitCode::from(2);
    }
    let mut out = match open_output(&g.out) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: cannot open output: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => run::verify(a, &g, jobs, &mut out),
        Command::Dims(a) => run::dims(a, &g, jobs, &mut out),
        Command::Asymptotics(a) => run::asymptotics(a, &g, jobs, &mut out),
    };
    if let Err(e) = out.flush() {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Verification(m) => eprintln!("{m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
