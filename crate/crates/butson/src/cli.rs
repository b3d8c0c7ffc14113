//! Command-line front end over the library: generate, verify, reduce, and
//! inspect matrices in the text format.
//!
//! Exit codes: 0 success (or verified valid), 1 verification reported
//! invalid, 2 usage or parse error, 3 precondition error (the violated
//! condition is named on stderr). Matrix data and reports go to stdout;
//! diagnostics go to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::cyclotomic::divisors;
use crate::error::{Error, Result};
use crate::format::{matrix_to_string, read_matrix};
use crate::matrix::{fourier, kronecker, BhMatrix};
use crate::morphism::{plan_reduction, reduce_full, reduce_once};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "butson",
    version,
    about = "Construct, reduce, and exactly verify Butson-Hadamard matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a matrix.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Exactly verify that a matrix is Butson-Hadamard.
    Verify {
        /// Matrix file.
        file: PathBuf,
    },
    /// Apply the order reduction BH(n,k) -> BH(pn, k/p), once or iterated.
    Reduce(ReduceArgs),
    /// Print a matrix header and the reduction targets reachable from it.
    Info {
        /// Matrix file.
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// The Fourier matrix of a cyclic group: exponents (i*j) mod order.
    Fourier {
        /// Matrix and root order.
        #[arg(long)]
        order: u32,
        /// Output file (defaults to stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Kronecker product of two matrix files.
    Kron {
        /// Left factor.
        a: PathBuf,
        /// Right factor.
        b: PathBuf,
        /// Output file (defaults to stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["prime", "factor"]))]
struct ReduceArgs {
    /// Matrix file.
    file: PathBuf,
    /// Remove one factor of this prime from the root order.
    #[arg(long, conflicts_with = "factor")]
    prime: Option<u32>,
    /// Remove this divisor from the root order (iterated reduction).
    #[arg(long)]
    factor: Option<u32>,
    /// BH(p,p) witness file for a single step (defaults to the Fourier matrix).
    #[arg(long, requires = "prime")]
    witness: Option<PathBuf>,
    /// Exactly re-verify the output before writing it.
    #[arg(long)]
    check: bool,
    /// Output file (defaults to stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Runs the CLI against explicit argument and output streams; returns the
/// exit code. The binary is a thin wrapper around this.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code(&err)
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    }
}

fn load(path: &Path) -> Result<BhMatrix> {
    let file = File::open(path)?;
    read_matrix(BufReader::new(file))
}

/// Writes the matrix to `output`, or to stdout when no path is given. The
/// file is created only after the matrix exists, so failed commands leave
/// nothing behind.
fn emit(m: &BhMatrix, output: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let text = matrix_to_string(m);
    match output {
        Some(path) => {
            let mut file = File::create(path)?;
            file.write_all(text.as_bytes())?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen(GenCommand::Fourier { order, output }) => {
            let m = fourier(order)?;
            emit(&m, output.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Gen(GenCommand::Kron { a, b, output }) => {
            let m = kronecker(&load(&a)?, &load(&b)?)?;
            emit(&m, output.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { file } => {
            let m = load(&file)?;
            let report = m.verify()?;
            if report.valid {
                writeln!(stdout, "VALID BH({},{})", m.order(), m.root_order())?;
                Ok(EXIT_OK)
            } else {
                let w = report.witness.expect("invalid report carries a witness");
                writeln!(stdout, "INVALID witness=({},{})", w.i, w.j)?;
                Ok(EXIT_INVALID)
            }
        }
        Command::Reduce(args) => reduce(args, stdout),
        Command::Info { file } => {
            let m = load(&file)?;
            let (n, k) = (m.order(), m.root_order());
            writeln!(stdout, "BH({n},{k})")?;
            for d in divisors(k) {
                if d < 2 {
                    continue;
                }
                if let Ok(plan) = plan_reduction(k, d) {
                    writeln!(
                        stdout,
                        "m={} -> BH({},{})",
                        d,
                        n * d as usize,
                        plan.target_order()
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn reduce(args: ReduceArgs, stdout: &mut dyn Write) -> Result<i32> {
    let h = load(&args.file)?;
    let out = match (args.prime, args.factor) {
        (Some(p), None) => {
            let witness = match &args.witness {
                Some(path) => Some(load(path)?),
                None => None,
            };
            reduce_once(&h, p, witness.as_ref())?
        }
        (None, Some(m)) => reduce_full(&h, m)?,
        // clap's arg group guarantees exactly one of --prime / --factor
        _ => unreachable!("argument group enforces one reduction mode"),
    };
    if args.check {
        let report = out.verify()?;
        if !report.valid {
            let w = report.witness.expect("invalid report carries a witness");
            writeln!(stdout, "INVALID witness=({},{})", w.i, w.j)?;
            return Ok(EXIT_INVALID);
        }
    }
    emit(&out, args.output.as_deref(), stdout)?;
    Ok(EXIT_OK)
}
