//! `dedekind`: exact Dedekind sums, large-value scans, candidate sets and
//! exhaustive checks from the command line.
//!
//! Exit codes: 0 success, 1 a verification found violations, 2 usage error.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dedekind_core::extremal::{
    candidate_set, deviation_cap, level, ordinary_bound, scan_top, skn_bounds,
    theorem1_sufficient_threshold, theorem2_thresholds, verify_theorem1, verify_theorem2,
    VerifyReport,
};
use dedekind_core::{dedekind_fast, dedekind_naive, Rational, SumQuery};

use output::{Emitter, Format, Kind, OutputRecord};

#[derive(Parser, Debug)]
#[command(name = "dedekind", version, about = "Exact Dedekind sums S(m, n) = 12 s(m, n)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "csv")]
    format: Format,
    /// Add display-only decimal approximations next to exact values.
    #[arg(long, global = true)]
    approx: bool,
    /// Worker threads for scans and verification (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate S(m, n) for one pair.
    Compute {
        #[arg(long, allow_negative_numbers = true)]
        m: i128,
        #[arg(long, allow_negative_numbers = true)]
        n: i128,
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
    },
    /// The largest values S(m, n) over all m coprime to n.
    Scan {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Arguments m = (nc + q)/d that can reach S(k, n).
    Candidates {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Exhaustive checks over a range of n.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Explicit bounds attached to (k, n).
    Bounds {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// The k = 2 cut-offs, and optionally a sufficient n for a given k.
    Thresholds {
        #[arg(long)]
        k: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// {m : S(m, n) >= S(k, n)} lies inside the candidate set.
    T1 {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        range: RangeArg,
    },
    /// S(2, n) > S(m, n) for odd n and m outside {1, 2, (n+1)/2}.
    T2 {
        #[command(flatten)]
        range: RangeArg,
    },
}

#[derive(Args, Debug)]
struct RangeArg {
    /// Inclusive range `A..B`.
    #[arg(long = "n-range", value_parser = parse_range)]
    n_range: (u64, u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Fast,
    Naive,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Naive => "naive",
            Method::Both => "both",
        }
    }
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// Exit status produced by a successful run.
enum Status {
    Ok,
    Violations,
}

fn run<W: Write>(cli: Cli, out: &mut Emitter<W>) -> Result<Status, Failure> {
    match cli.command {
        Command::Compute { m, n, method } => {
            let query = SumQuery::normalize(m, n).map_err(usage)?;
            let row = |method: Method, value: Rational, matched: Option<bool>| {
                let rec = OutputRecord::new(Kind::Sum)
                    .with("n", query.n())
                    .with("m", query.m())
                    .with("method", method.name())
                    .with("S", value);
                match matched {
                    Some(b) => rec.with("match", b),
                    None => rec,
                }
            };
            match method {
                Method::Fast => out.emit(&row(method, dedekind_fast(&query), None))?,
                Method::Naive => out.emit(&row(method, dedekind_naive(&query), None))?,
                Method::Both => {
                    let fast = dedekind_fast(&query);
                    let naive = dedekind_naive(&query);
                    let matched = fast == naive;
                    out.emit(&row(Method::Fast, fast, Some(matched)))?;
                    out.emit(&row(Method::Naive, naive, Some(matched)))?;
                }
            }
        }
        Command::Scan { n, top } => {
            let rows = scan_top(n, top, cli.threads).map_err(usage)?;
            for (m, value) in rows {
                out.emit(&OutputRecord::new(Kind::ScanRow).with("n", n).with("m", m).with("S", value))?;
            }
        }
        Command::Candidates { k, n } => {
            if k == 0 || n <= k {
                return Err(usage(format!("candidates needs n > k >= 1, got k = {k}, n = {n}")));
            }
            for group in candidate_set(k, n) {
                let origins = group
                    .origins
                    .iter()
                    .map(|o| format!("{}:{}:{}", o.d, o.c, o.q))
                    .collect::<Vec<_>>()
                    .join(";");
                let value = dedekind_fast(&SumQuery::normalize(group.m as i128, n as i128).map_err(usage)?);
                out.emit(
                    &OutputRecord::new(Kind::Candidate)
                        .with("k", k)
                        .with("n", n)
                        .with("m", group.m)
                        .with("origins", origins)
                        .with("S", value),
                )?;
            }
        }
        Command::Verify { which } => {
            let report = match which {
                VerifyCommand::T1 { k, range } => {
                    if k == 0 {
                        return Err(usage("k must be positive"));
                    }
                    verify_theorem1(k, range.n_range.0, range.n_range.1, cli.threads)
                }
                VerifyCommand::T2 { range } => verify_theorem2(range.n_range.0, range.n_range.1, cli.threads),
            };
            emit_report(out, &report)?;
            if !report.holds() {
                return Ok(Status::Violations);
            }
        }
        Command::Bounds { k, n } => {
            let (lower, upper) = skn_bounds(k, n).map_err(usage)?;
            let ordinary = ordinary_bound(k, n).map_err(usage)?;
            let value = dedekind_fast(&SumQuery::normalize(k as i128, n as i128).map_err(usage)?);
            let rows = [
                ("S_k", value),
                ("skn_lower", lower),
                ("skn_upper", upper),
                ("ordinary_bound", ordinary),
                ("level", Rational::from_integer(level(k))),
                ("deviation_cap", Rational::from_integer(deviation_cap(k))),
            ];
            for (name, value) in rows {
                out.emit(&OutputRecord::new(Kind::Bound).with("k", k).with("n", n).with("name", name).with("value", value))?;
            }
        }
        Command::Thresholds { k } => {
            let (ordinary, other) = theorem2_thresholds();
            let two = |name: &'static str, v: u64| {
                OutputRecord::new(Kind::Bound)
                    .with("k", 2)
                    .with("name", name)
                    .with("value", Rational::from_integer(v))
            };
            out.emit(&two("t2_ordinary_threshold", ordinary))?;
            out.emit(&two("t2_nonordinary_threshold", other))?;
            if let Some(k) = k {
                let n = theorem1_sufficient_threshold(k).map_err(usage)?;
                out.emit(
                    &OutputRecord::new(Kind::Bound)
                        .with("k", k)
                        .with("name", "t1_sufficient_threshold")
                        .with("value", Rational::from_integer(n)),
                )?;
            }
        }
    }
    Ok(Status::Ok)
}

fn emit_report<W: Write>(out: &mut Emitter<W>, report: &VerifyReport) -> io::Result<()> {
    let theorem = report.theorem.to_string();
    for v in &report.violations {
        out.emit(
            &OutputRecord::new(Kind::ReportRow)
                .with("theorem", theorem.clone())
                .with("status", "violation")
                .with("n", v.n)
                .with("m", v.m)
                .with("S", v.value.clone())
                .with("reference", v.reference.clone()),
        )?;
    }
    out.emit(
        &OutputRecord::new(Kind::ReportRow)
            .with("theorem", theorem)
            .with("status", "summary")
            .with("n_from", report.n_from)
            .with("n_to", report.n_to)
            .with("checked_count", report.checked_count)
            .with("violation_count", report.violations.len() as u64),
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut emitter = Emitter::new(cli.format, cli.approx, stdout.lock());
    let result = run(cli, &mut emitter);
    let flushed = emitter.finish();
    match (result, flushed) {
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Io(e)), _) | (_, Err(e)) => {
            // closed pipe or similar; nothing more can be written
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Ok(Status::Violations), Ok(())) => ExitCode::from(1),
        (Ok(Status::Ok), Ok(())) => ExitCode::SUCCESS,
    }
}
