//! The `lyndon` command-line tool.

pub mod bench;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::{format, gen, oracle, BuildStats};

#[derive(Parser, Debug)]
#[command(name = "lyndon", version, about = "Build and query Lyndon arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the Lyndon array (LYAR) or the parentheses tree (LBPS) of a file.
    Build {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
        /// Compare against the reference implementation (inputs up to 10^5 bytes).
        #[arg(long)]
        verify: bool,
        /// Print construction counters.
        #[arg(long)]
        stats: bool,
    },
    /// Answer one query on an LBPS file.
    Query {
        bps: PathBuf,
        #[arg(value_enum)]
        op: QueryOp,
        index: usize,
    },
    /// Write a deterministic test corpus.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the builders on input files.
    Bench {
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "plain,succinct,naive")]
        algos: Vec<bench::Algo>,
        #[arg(short, long, default_value_t = 5)]
        repetitions: usize,
        /// Also write the report as CSV to this file (`-` for standard output).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Plain,
    Succinct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QueryOp {
    Lambda,
    Nss,
    Pss,
    Parent,
    Subtree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Random,
    Fibonacci,
    ThueMorse,
    Periodic,
    Increasing,
}

/// Largest input `build --verify` accepts.
pub const VERIFY_LIMIT: usize = 100_000;

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    if let Ok(v) = std::env::var("LYNDON_THREADS") {
        if v.trim() != "1" {
            let _ = writeln!(err, "lyndon: builds are single-threaded; ignoring LYNDON_THREADS={v}");
        }
    }
    match run(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "lyndon: {e}");
            e.exit_code()
        }
    }
}

fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match command {
        Command::Build { input, output, mode, verify, stats } => {
            build(&input, &output, mode, verify, stats, out)
        }
        Command::Query { bps, op, index } => {
            let tree = format::decode_lbps(&read(&bps)?)?;
            let value = match op {
                QueryOp::Lambda => tree.lambda(index)?,
                QueryOp::Nss => tree.nss(index)?,
                QueryOp::Pss => tree.pss(index)?,
                QueryOp::Parent => tree.parent(index)?,
                QueryOp::Subtree => tree.subtree_size(index)?,
            };
            writeln!(out, "{value}")?;
            Ok(())
        }
        Command::Gen { kind, n, sigma, seed, output } => {
            let text = generate(kind, n, sigma, seed)?;
            match output {
                Some(path) => write(&path, &text),
                None => Ok(out.write_all(&text)?),
            }
        }
        Command::Bench { inputs, algos, repetitions, csv } => {
            let report = bench::run(&inputs, &algos, repetitions, err)?;
            write!(out, "{}", report.to_table())?;
            match csv.as_deref() {
                Some(p) if p == Path::new("-") => write!(out, "{}", report.to_csv())?,
                Some(p) => write(p, report.to_csv().as_bytes())?,
                None => {}
            }
            Ok(())
        }
    }
}

fn build(input: &Path, output: &Path, mode: Mode, verify: bool, stats: bool, out: &mut dyn Write) -> Result<()> {
    let text = read(input)?;
    if verify && text.len() > VERIFY_LIMIT {
        return Err(Error::usage(format!(
            "refusing to verify {} bytes; --verify is limited to {VERIFY_LIMIT} bytes",
            text.len()
        )));
    }
    let mut counters = BuildStats::default();
    match mode {
        Mode::Plain => {
            let lambda = crate::build_plain_with(&text, &mut counters);
            if verify {
                let expected = oracle::lyndon_array_bruteforce(&text);
                let got = lambda.to_vec();
                if let Some(k) = first_difference(&got, expected.as_slice()) {
                    return Err(Error::Verification(format!(
                        "λ[{}] is {} but the reference gives {}",
                        k + 1,
                        got[k],
                        expected.as_slice()[k]
                    )));
                }
            }
            write(output, &format::encode_lyar(&lambda))?;
        }
        Mode::Succinct => {
            let bps = crate::build_succinct_with(&text, &mut counters);
            if verify {
                let expected = oracle::bps_bruteforce(&text);
                let got: Vec<bool> = bps.iter().collect();
                if let Some(k) = first_difference(&got, &expected) {
                    return Err(Error::Verification(format!(
                        "parenthesis {} differs from the reference sequence",
                        k + 1
                    )));
                }
            }
            write(output, &format::encode_lbps(&bps.finalize()?))?;
        }
    }
    if verify {
        writeln!(out, "verified {} positions", text.len())?;
    }
    if stats {
        writeln!(out, "char_comparisons: {}", counters.char_comparisons)?;
        writeln!(out, "indices_skipped_run: {}", counters.indices_skipped_run)?;
        writeln!(out, "indices_skipped_lookahead: {}", counters.indices_skipped_lookahead)?;
        writeln!(out, "closes_written: {}", counters.closes_written)?;
    }
    Ok(())
}

fn generate(kind: GenKind, n: usize, sigma: usize, seed: u64) -> Result<Vec<u8>> {
    let check_sigma = || {
        if (1..=256).contains(&sigma) {
            Ok(())
        } else {
            Err(Error::usage(format!("sigma must be in [1, 256], got {sigma}")))
        }
    };
    Ok(match kind {
        GenKind::Random => {
            check_sigma()?;
            gen::random(n, sigma, seed)
        }
        GenKind::Periodic => {
            check_sigma()?;
            gen::periodic(n, sigma)
        }
        GenKind::Fibonacci => gen::fibonacci(n),
        GenKind::ThueMorse => gen::thue_morse(n),
        GenKind::Increasing => {
            if n > 256 {
                return Err(Error::usage(format!("an increasing text has at most 256 symbols, got {n}")));
            }
            gen::increasing(n)
        }
    })
}

fn first_difference<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y).or((a.len() != b.len()).then(|| a.len().min(b.len())))
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}
