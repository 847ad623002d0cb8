//! Throughput measurements for the `bench` subcommand.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::ValueEnum;

use crate::error::{Error, Result};
use crate::{alloc_meter, oracle};

/// Largest input the quadratic reference builder is run on.
pub const NAIVE_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Plain,
    Succinct,
    Naive,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Plain => "plain",
            Algo::Succinct => "succinct",
            Algo::Naive => "naive",
        }
    }

    /// Builds once and returns the size in bytes of what it produced.
    fn build(self, text: &[u8]) -> usize {
        match self {
            Algo::Plain => crate::build_plain(text).byte_len(),
            Algo::Succinct => crate::build_succinct(text).len().div_ceil(64) * 8,
            Algo::Naive => oracle::lyndon_array_bruteforce(text).len() * std::mem::size_of::<usize>(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub input: String,
    pub algo: Algo,
    pub bytes: usize,
    pub median_seconds: f64,
    pub mibs: f64,
    /// Peak heap use beyond the output, per input symbol. Zero unless the
    /// counting allocator is installed.
    pub extra_bytes_per_symbol: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("input,algo,bytes,median_seconds,mibs,extra_bytes_per_symbol\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{:.6},{:.3},{:.6}",
                r.input,
                r.algo.name(),
                r.bytes,
                r.median_seconds,
                r.mibs,
                r.extra_bytes_per_symbol
            );
        }
        s
    }

    pub fn to_table(&self) -> String {
        if self.rows.is_empty() {
            return String::new();
        }
        let width = self.rows.iter().map(|r| r.input.len()).max().unwrap_or(0).max(5);
        let mut s = format!(
            "{:<width$}  {:<8}  {:>10}  {:>10}  {:>10}  {:>12}\n",
            "input", "algo", "MiB", "median s", "MiB/s", "extra B/sym"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<width$}  {:<8}  {:>10.3}  {:>10.4}  {:>10.2}  {:>12.4}",
                r.input,
                r.algo.name(),
                r.bytes as f64 / MIB,
                r.median_seconds,
                r.mibs,
                r.extra_bytes_per_symbol
            );
        }
        s
    }
}

const MIB: f64 = (1 << 20) as f64;

/// Median of an odd number of samples.
pub fn median(samples: &mut [f64]) -> f64 {
    assert!(samples.len() % 2 == 1, "median needs an odd sample count");
    samples.sort_by(f64::total_cmp);
    samples[samples.len() / 2]
}

/// Times `algo` on `text` `repetitions` times.
pub fn measure(input: &str, text: &[u8], algo: Algo, repetitions: usize) -> BenchRow {
    let mut times = Vec::with_capacity(repetitions);
    let mut extra = 0usize;
    for _ in 0..repetitions {
        let start = Instant::now();
        let (output, peak) = alloc_meter::measure(|| algo.build(text));
        times.push(start.elapsed().as_secs_f64());
        extra = extra.max(peak.saturating_sub(output));
    }
    let median_seconds = median(&mut times);
    let n = text.len();
    BenchRow {
        input: input.to_string(),
        algo,
        bytes: n,
        median_seconds,
        mibs: if n == 0 { 0.0 } else { n as f64 / MIB / median_seconds },
        extra_bytes_per_symbol: if n == 0 { 0.0 } else { extra as f64 / n as f64 },
    }
}

/// Benchmarks every input with every algorithm. Inputs too large for the
/// reference builder skip it with a note on `log`.
pub fn run(inputs: &[PathBuf], algos: &[Algo], repetitions: usize, log: &mut dyn Write) -> Result<BenchReport> {
    if repetitions % 2 == 0 {
        return Err(Error::usage(format!("repetitions must be odd, got {repetitions}")));
    }
    let mut report = BenchReport::default();
    for path in inputs {
        let text = std::fs::read(path)
            .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
        let name = path.display().to_string();
        for &algo in algos {
            if algo == Algo::Naive && text.len() > NAIVE_LIMIT {
                let _ = writeln!(log, "lyndon: skipping naive on {name}: more than {NAIVE_LIMIT} bytes");
                continue;
            }
            report.rows.push(measure(&name, &text, algo, repetitions));
        }
    }
    Ok(report)
}
