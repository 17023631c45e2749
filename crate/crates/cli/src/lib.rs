//! Command-line front end for the `qbias` toolkit.
//!
//! Every subcommand produces a [`Report`](output::Report) rendered as JSON,
//! CSV or plain text. Exit codes: 0 all checks pass, 1 a violation was
//! found, 2 invalid configuration, 3 inconclusive.

mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use qbias::bias::Flavor;
use qbias::Exec;

use output::{error_kind, write_error, Format, INVALID_CONFIG};

#[derive(Debug, Parser)]
#[command(name = "qbias", version, about = "Residue-class bias partition functions: exact series, theorem sweeps and asymptotics")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, env = "QBIAS_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate p_n(a,b,m;x,y) and p_n(b,a,m;x,y).
    ComputeBias(ComputeBias),
    /// Run a theorem sweep or check suite.
    #[command(subcommand)]
    Verify(Verify),
    /// Finite-horizon threshold for d_n(a,b;m) >= d_n(b,a;m).
    ScanConjecture(ScanConjecture),
    /// Bias constants, main terms and numeric convergence.
    #[command(subcommand)]
    Asymptotics(Asymptotics),
    /// Brute-force value of p_n(a,b,m;x,y).
    Oracle(OracleArgs),
    /// Agreement matrix of the gf and dp engines and the oracle.
    CrossCheck(CrossCheck),
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub m: usize,
    /// Weight of ordinary partitions, as an integer or "p/q".
    #[arg(long, value_parser = rational)]
    pub x: BigRational,
    /// Weight of distinct partitions, as an integer or "p/q".
    #[arg(long, value_parser = rational)]
    pub y: BigRational,
}

#[derive(Debug, Args)]
pub struct ComputeBias {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long = "N")]
    pub n: usize,
    /// gf, dp or symmetric.
    #[arg(long, default_value = "gf")]
    pub method: qbias::bias::Method,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// p_n(a,b) >= p_n(b,a) for x >= 1 over all a < b <= m <= m-max.
    Thm1 {
        #[arg(long, default_value_t = 10)]
        m_max: usize,
        #[arg(long = "N", default_value_t = 300)]
        n: usize,
    },
    /// p_n(a,b;x,1) >= p_n(b,a;x,1) over triples with a witness.
    Thm2 {
        #[arg(long, default_value_t = 12)]
        m_max: usize,
        #[arg(long = "N", default_value_t = 300)]
        n: usize,
    },
    /// c_{n+m} >= c_n for every bias sequence.
    #[command(name = "lemma2-1")]
    Lemma21 {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long = "N", default_value_t = 200)]
        n: usize,
    },
    /// Randomized non-negativity suites.
    Nonneg {
        /// f_series, maino, chern_corollary or andrews; all when omitted.
        #[arg(long)]
        kind: Option<qbias::bias::NonnegKind>,
        #[arg(long, default_value_t = 50)]
        draws: usize,
        #[arg(long = "N", default_value_t = 150)]
        n: usize,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
    },
    /// Jacobi, Fine, Heine, theta reciprocal and Kronecker identities.
    Identities,
    /// Sign pattern of d_n(1,2;3) - d_n(2,1;3) by n mod 3.
    Mod3 {
        #[arg(long = "N", default_value_t = 600)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct ScanConjecture {
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long = "N", default_value_t = 500)]
    pub n: usize,
    /// Exit 3 when a violation lies in the top tenth of the horizon.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub horizon_guard: bool,
}

#[derive(Debug, Subcommand)]
pub enum Asymptotics {
    /// Bias constants c_{a,m} for 3 <= m <= m-max, a < m/2.
    Constants {
        #[arg(long, default_value_t = 12)]
        m_max: usize,
    },
    /// Tauberian main term; named profiles are compared with their closed forms.
    Predict {
        /// p, q or pbar.
        #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma", "rho"])]
        profile: Option<String>,
        #[arg(long, requires_all = ["beta", "gamma", "rho"])]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,1000000")]
        n: Vec<f64>,
    },
    /// R_n against its limit at the sample points.
    Convergence {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = flavor)]
        flavor: Flavor,
        #[arg(long, value_delimiter = ',', default_value = "500,1000,2000")]
        samples: Vec<usize>,
        #[arg(long = "N", default_value_t = 2000)]
        n: usize,
    },
    /// Generating function near q = 1, optionally twisted by a root of unity.
    Boundary {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = flavor)]
        flavor: Flavor,
        #[arg(long, value_delimiter = ',', default_value = "0.5,0.4,0.3")]
        z: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        h: usize,
        #[arg(long = "N", default_value_t = 2000)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct CrossCheck {
    #[arg(long, default_value_t = 5)]
    pub m_max: usize,
    #[arg(long = "N", default_value_t = 25)]
    pub n: usize,
    /// Weight pairs "x:y", comma separated.
    #[arg(long, value_delimiter = ',', value_parser = weight_pair, default_value = "1:0,0:1,1:1,2:1")]
    pub weights: Vec<(BigRational, BigRational)>,
}

fn rational(s: &str) -> Result<BigRational, String> {
    qbias::truncated::parse_rational(s).map_err(|e| e.to_string())
}

fn flavor(s: &str) -> Result<Flavor, String> {
    s.parse().map_err(|e: qbias::Error| e.to_string())
}

fn weight_pair(s: &str) -> Result<(BigRational, BigRational), String> {
    let (x, y) = s.split_once(':').ok_or_else(|| format!("expected x:y, got {s:?}"))?;
    Ok((rational(x)?, rational(y)?))
}

fn exec_for(threads: Option<usize>) -> Exec {
    match threads {
        Some(1) => Exec::Sequential,
        Some(_t) => {
            // a pool built earlier in the process keeps its size
            #[cfg(feature = "parallel")]
            let _ = rayon::ThreadPoolBuilder::new().num_threads(_t).build_global();
            Exec::Parallel
        }
        None => Exec::Parallel,
    }
}

/// Parses `args`, runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            if matches!(e.kind(), DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = write!(stdout, "{e}");
                return if e.kind() == DisplayHelpOnMissingArgumentOrSubcommand { INVALID_CONFIG } else { 0 };
            }
            write_error(stderr, "usage", e.to_string().trim());
            return INVALID_CONFIG;
        }
    };
    if cli.threads == Some(0) {
        write_error(stderr, "usage", "--threads must be at least 1");
        return INVALID_CONFIG;
    }
    let exec = exec_for(cli.threads);
    let report = match commands::dispatch(&cli.command, exec) {
        Ok(r) => r,
        Err(e) => {
            write_error(stderr, error_kind(&e), &e.to_string());
            return match e {
                qbias::Error::TailBound { .. } => output::Status::Inconclusive.code(),
                _ => INVALID_CONFIG,
            };
        }
    };
    let text = report.render(cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                write_error(stderr, "io", &format!("cannot write {}: {e}", path.display()));
                return INVALID_CONFIG;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    report.status.code()
}
