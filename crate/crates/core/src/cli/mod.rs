//! Flag-driven front end. [`run`] never touches the process streams so the
//! whole command surface can be driven from tests; `main` only forwards the
//! [`Outcome`].

mod format;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bound::{
    next_prime, threshold_debarre, threshold_lemma_p, torsion_bound, torsion_bound_sweep,
    BoundInput, Mode, PrimeChoice,
};
use crate::chern_segre::CompleteIntersection;
use crate::combinatorics::{w_table, z_table};
use crate::error::Error;
use crate::exact::{Integer, Rational, TruncatedSeries};
use crate::witt2::{FiniteField, WittPair};

pub use format::{csv_header, csv_row, table};

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "mmbound",
    version,
    about = "Exact torsion bounds for complete intersections in abelian varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full bound report for one prime or a sweep of primes.
    Bound(BoundArgs),
    /// Prime thresholds and the next admissible prime.
    Threshold(ThresholdArgs),
    /// Truncated power series and W/Z coefficient tables.
    Series {
        #[command(subcommand)]
        op: SeriesOp,
    },
    /// Arithmetic in W_2(F_p).
    Witt(WittArgs),
}

#[derive(Args, Debug)]
struct ExponentArgs {
    /// Common exponent e of all hypersurfaces.
    #[arg(long, conflicts_with = "e_list")]
    e: Option<u64>,
    /// Per-hypersurface exponents e_1,...,e_c.
    #[arg(long = "e-list", value_delimiter = ',')]
    e_list: Option<Vec<u64>>,
}

impl ExponentArgs {
    fn resolve(&self, c: usize) -> Result<Vec<u64>, Error> {
        match (&self.e, &self.e_list) {
            (Some(e), None) => Ok(vec![*e; c]),
            (None, Some(list)) => {
                if list.len() != c {
                    return Err(Error::ExponentCount {
                        expected: c,
                        got: list.len(),
                    });
                }
                Ok(list.clone())
            }
            _ => Err(Error::invalid("one of --e or --e-list is required")),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Paper,
    Dual,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Dual => Mode::Dual,
            ModeArg::Both => Mode::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

fn parse_integer(s: &str) -> Result<Integer, String> {
    s.trim()
        .parse::<Integer>()
        .map_err(|_| format!("not an integer: {s:?}"))
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    c: usize,
    #[command(flatten)]
    exponents: ExponentArgs,
    /// Self-intersection (L^n) of the polarization.
    #[arg(long = "degL", value_parser = parse_integer)]
    deg_l: Integer,
    /// A prime above the threshold, or `auto` for the least such prime.
    #[arg(long, default_value = "auto")]
    p: String,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Every admissible prime in FROM:TO, inclusive.
    #[arg(long = "sweep-p", value_name = "FROM:TO", conflicts_with = "p")]
    sweep_p: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ThresholdKind {
    /// (n-c)^2 deg_L(Ω_X)
    Debarre,
    /// n^2 deg(Ω)
    LemmaP,
}

#[derive(Args, Debug)]
struct ThresholdArgs {
    #[arg(long, value_enum)]
    kind: ThresholdKind,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    c: Option<usize>,
    #[command(flatten)]
    exponents: ExponentArgs,
    #[arg(long = "degL", value_parser = parse_integer)]
    deg_l: Option<Integer>,
    #[arg(long = "deg-omega", value_parser = parse_integer)]
    deg_omega: Option<Integer>,
}

#[derive(Subcommand, Debug)]
enum SeriesOp {
    /// Multiplicative inverse of a series with constant term 1.
    Invert {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<String>,
        #[arg(long)]
        order: usize,
    },
    /// Truncated product of two series.
    Mul {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b: Vec<String>,
        #[arg(long)]
        order: usize,
    },
    /// W_{0,c}, ..., W_{max_m,c}.
    Wtable {
        #[arg(long)]
        c: u64,
        #[arg(long = "max-m")]
        max_m: usize,
    },
    /// Z_{0,c,e}, ..., Z_{max_i,c,e}.
    Ztable {
        #[arg(long = "e-list", value_delimiter = ',')]
        e_list: Vec<u64>,
        #[arg(long = "max-i")]
        max_i: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WittOp {
    Add,
    Sub,
    Mul,
    Neg,
    Frob,
    Ver,
    Ghost,
}

#[derive(Args, Debug)]
struct WittArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum)]
    op: WittOp,
    /// First operand `a0,a1`.
    #[arg(long)]
    a: String,
    /// Second operand for binary operations.
    #[arg(long)]
    b: Option<String>,
}

/// Runs one command line (including the program name) to completion.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(err) => Outcome {
            code: err.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

fn execute(command: Command) -> Result<String, Error> {
    match command {
        Command::Bound(args) => cmd_bound(args),
        Command::Threshold(args) => cmd_threshold(args),
        Command::Series { op } => cmd_series(op),
        Command::Witt(args) => cmd_witt(args),
    }
}

fn parse_range(s: &str) -> Result<(Integer, Integer), Error> {
    let (from, to) = s
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("--sweep-p expects FROM:TO, got {s:?}")))?;
    let from = parse_integer(from).map_err(Error::InvalidInput)?;
    let to = parse_integer(to).map_err(Error::InvalidInput)?;
    if from > to {
        return Err(Error::invalid("--sweep-p FROM <= TO violated"));
    }
    Ok((from, to))
}

fn cmd_bound(args: BoundArgs) -> Result<String, Error> {
    let exponents = args.exponents.resolve(args.c)?;
    let variety = CompleteIntersection::new(args.n, exponents, args.deg_l)?;
    let mode = Mode::from(args.mode);

    let reports = match &args.sweep_p {
        Some(range) => {
            let (from, to) = parse_range(range)?;
            torsion_bound_sweep(&variety, mode, &from, &to)?
        }
        None => {
            let prime = if args.p.eq_ignore_ascii_case("auto") {
                PrimeChoice::Auto
            } else {
                PrimeChoice::Explicit(parse_integer(&args.p).map_err(Error::InvalidInput)?)
            };
            vec![torsion_bound(&BoundInput::new(variety, prime, mode)?)?]
        }
    };

    let mut out = String::new();
    match args.format {
        Format::Json => {
            for r in &reports {
                out.push_str(&serde_json::to_string(r).expect("report serializes"));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(&csv_header());
            out.push('\n');
            for r in &reports {
                out.push_str(&csv_row(r));
                out.push('\n');
            }
        }
        Format::Table => {
            for (k, r) in reports.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                out.push_str(&table(r));
            }
        }
    }
    Ok(out)
}

fn cmd_threshold(args: ThresholdArgs) -> Result<String, Error> {
    let threshold = match args.kind {
        ThresholdKind::Debarre => {
            let c = args
                .c
                .ok_or_else(|| Error::invalid("--c is required for --kind debarre"))?;
            let d = args
                .deg_l
                .ok_or_else(|| Error::invalid("--degL is required for --kind debarre"))?;
            let variety = CompleteIntersection::new(args.n, args.exponents.resolve(c)?, d)?;
            threshold_debarre(&variety)?
        }
        ThresholdKind::LemmaP => {
            let deg = args
                .deg_omega
                .ok_or_else(|| Error::invalid("--deg-omega is required for --kind lemma-p"))?;
            if args.n < 1 {
                return Err(Error::invalid("n >= 1 violated"));
            }
            if deg < Integer::from(1) {
                return Err(Error::invalid("deg-omega >= 1 violated"));
            }
            threshold_lemma_p(args.n, &deg)
        }
    };
    let prime = next_prime(&threshold)?;
    Ok(format!("{threshold} {prime}\n"))
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::invalid(format!("malformed coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_integer(n).map_err(|_| bad())?;
            let d = parse_integer(d).map_err(|_| bad())?;
            if d == Integer::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(parse_integer(s).map_err(|_| bad())?)),
    }
}

fn parse_series(coeffs: &[String], order: usize) -> Result<TruncatedSeries<Rational>, Error> {
    if coeffs.is_empty() {
        return Err(Error::invalid("empty coefficient list"));
    }
    let parsed = coeffs
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedSeries::new(order, parsed))
}

fn join<T: std::fmt::Display>(values: &[T]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_series(op: SeriesOp) -> Result<String, Error> {
    let line = match op {
        SeriesOp::Invert { coeffs, order } => parse_series(&coeffs, order)?.invert()?.to_string(),
        SeriesOp::Mul { a, b, order } => parse_series(&a, order)?
            .mul(&parse_series(&b, order)?)?
            .to_string(),
        SeriesOp::Wtable { c, max_m } => join(&w_table(max_m, c)?),
        SeriesOp::Ztable { e_list, max_i } => join(&z_table(max_i, e_list.len(), &e_list)?),
    };
    Ok(format!("{line}\n"))
}

fn parse_pair(field: &std::sync::Arc<FiniteField>, s: &str) -> Result<WittPair, Error> {
    let bad = || Error::invalid(format!("malformed Witt pair {s:?}; expected a0,a1"));
    let (a0, a1) = s.split_once(',').ok_or_else(bad)?;
    let a0: u64 = a0.trim().parse().map_err(|_| bad())?;
    let a1: u64 = a1.trim().parse().map_err(|_| bad())?;
    Ok(WittPair::from_residues(field, a0, a1))
}

fn cmd_witt(args: WittArgs) -> Result<String, Error> {
    let field = FiniteField::prime(args.p)?;
    let a = parse_pair(&field, &args.a)?;
    let b = || -> Result<WittPair, Error> {
        let s = args
            .b
            .as_deref()
            .ok_or_else(|| Error::invalid("--b is required for binary operations"))?;
        parse_pair(&field, s)
    };
    let line = match args.op {
        WittOp::Add => a.add(&b()?)?.to_string(),
        WittOp::Sub => a.sub(&b()?)?.to_string(),
        WittOp::Mul => a.mul(&b()?)?.to_string(),
        WittOp::Neg => a.neg().to_string(),
        WittOp::Frob => a.frobenius().to_string(),
        WittOp::Ver => a.verschiebung().to_string(),
        WittOp::Ghost => a.ghost1()?.to_string(),
    };
    Ok(format!("{line}\n"))
}
