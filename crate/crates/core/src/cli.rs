//! Command-line front end.
//!
//! Exit codes: 0 success or verified, 1 an honest negative answer (`check`
//! found no chain, `verify` found a counterexample), 2 usage or input error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::composition::Composition;
use crate::diagram::Diagram;
use crate::error::Error;
use crate::filling::{enumerate_fillings, enumerate_sorted_fillings, optimize, Filling};
use crate::kappa::{leq_kappa, Reachable};
use crate::polynomial::key_polynomial;
use crate::verify::{verify, Suite, VerifyOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest `--n` accepted by `verify` without `--force`.
pub const N_MAX_UNFORCED: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "keypoly", version, about = "Key polynomials, flagged fillings and the order ≤_κ")]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,

    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print κ_α as JSON.
    Key { alpha: CompositionArg },
    /// Print the exponent vectors of κ_α, lexicographically decreasing.
    Exponents { alpha: CompositionArg },
    /// Print every β ≤_κ α in breadth-first order.
    Closure { alpha: CompositionArg },
    /// Decide β ≤_κ α and print a witnessing move chain.
    Check { beta: CompositionArg, alpha: CompositionArg },
    /// List the column-strict flagged fillings of D(α).
    Fillings(FillingsArgs),
    /// Optimize a filling read as JSON from a file, or stdin when omitted or "-".
    Opt { path: Option<PathBuf> },
    /// Run the batch cross-checks and write report.json.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone)]
struct CompositionArg(Composition);

impl std::str::FromStr for CompositionArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.parse().map(CompositionArg)
    }
}

#[derive(Debug, Args)]
struct FillingsArgs {
    alpha: CompositionArg,
    /// Only fillings whose columns increase downward.
    #[arg(long)]
    sorted: bool,
    /// Print the distinct weights instead of the fillings.
    #[arg(long)]
    weights: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Largest composition length.
    #[arg(long = "n", default_value_t = 3)]
    n_max: usize,
    /// Largest part.
    #[arg(long = "parts", default_value_t = 3)]
    part_max: u32,
    /// Suite to run; repeatable. One of kk, ccc, lattice, aa, rado, bruhat,
    /// lemma, witness, all.
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<String>,
    /// Include S_5 in the bruhat suite.
    #[arg(long)]
    slow: bool,
    /// Allow --n above 5.
    #[arg(long)]
    force: bool,
    /// Zero all timings so reports are byte-stable.
    #[arg(long)]
    no_timing: bool,
    /// Report path; defaults to $REPORT_DIR/report.json (or ./report.json).
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Output<'a, W: Write> {
    out: &'a mut W,
    pretty: bool,
}

impl<W: Write> Output<'_, W> {
    fn json<T: Serialize>(&mut self, value: &T) -> std::io::Result<()> {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        }
        .expect("serializable");
        writeln!(self.out, "{text}")
    }
}

#[derive(Serialize)]
struct SuiteSummary {
    suite: Suite,
    pass: bool,
    cases: usize,
    failures: usize,
}

#[derive(Serialize)]
struct VerifySummary {
    pass: bool,
    report: String,
    suites: Vec<SuiteSummary>,
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, Error> {
    let mut suites = Vec::new();
    for name in names {
        for part in name.split(',') {
            if part == "all" {
                suites.extend(Suite::ALL);
            } else {
                suites.push(part.parse()?);
            }
        }
    }
    Ok(suites)
}

fn report_path(explicit: Option<PathBuf>) -> PathBuf {
    explicit.unwrap_or_else(|| {
        let dir = std::env::var_os("REPORT_DIR").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
        dir.join("report.json")
    })
}

/// Runs the CLI on `args` (including the program name). `read_stdin`
/// supplies standard input on demand.
pub fn run<W: Write>(
    args: Vec<String>,
    out: &mut W,
    read_stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut output = Output { out, pretty: cli.pretty };
    match execute(cli.command, &mut output, read_stdin) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute<W: Write>(
    command: Command,
    out: &mut Output<'_, W>,
    read_stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> Result<u8, String> {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Key { alpha } => {
            out.json(&*key_polynomial(&alpha.0)).map_err(io)?;
        }
        Command::Exponents { alpha } => {
            let exps: Vec<Composition> = key_polynomial(&alpha.0).exponent_vectors().into_iter().rev().collect();
            out.json(&exps).map_err(io)?;
        }
        Command::Closure { alpha } => {
            out.json(&Reachable::from_root(&alpha.0).vectors()).map_err(io)?;
        }
        Command::Check { beta, alpha } => match leq_kappa(&beta.0, &alpha.0).map_err(|e| e.to_string())? {
            Some(chain) => out.json(&chain).map_err(io)?,
            None => {
                writeln!(out.out, "not ≤_κ").map_err(io)?;
                return Ok(EXIT_NEGATIVE);
            }
        },
        Command::Fillings(args) => {
            let d = Diagram::skyline(&args.alpha.0).map_err(|e| format!("{e}; append zeros to alpha"))?;
            let fillings: Vec<Filling> = if args.sorted {
                enumerate_sorted_fillings(&d).collect()
            } else {
                enumerate_fillings(&d).collect()
            };
            if args.weights {
                let weights: std::collections::BTreeSet<_> = fillings.iter().map(crate::filling::weight).collect();
                out.json(&weights).map_err(io)?;
            } else {
                out.json(&fillings).map_err(io)?;
            }
        }
        Command::Opt { path } => {
            let text = match path {
                Some(p) if p.as_os_str() != "-" => {
                    std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?
                }
                _ => read_stdin().map_err(io)?,
            };
            let f: Filling = serde_json::from_str(&text).map_err(|e| format!("bad filling: {e}"))?;
            if !f.is_valid() {
                return Err("filling is not column-strict and flagged".into());
            }
            out.json(&optimize(&f)).map_err(io)?;
        }
        Command::Verify(args) => {
            if args.n_max > N_MAX_UNFORCED && !args.force {
                return Err(format!("--n {} exceeds {N_MAX_UNFORCED}; pass --force to run anyway", args.n_max));
            }
            let mut opts = VerifyOptions::new(args.n_max, args.part_max);
            opts.suites = parse_suites(&args.suites).map_err(|e| e.to_string())?;
            opts.slow = args.slow;
            opts.timing = !args.no_timing;
            let report = verify(&opts);
            let path = report_path(args.out);
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            }
            let body = serde_json::to_string_pretty(&report).expect("serializable");
            std::fs::write(&path, body + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            out.json(&VerifySummary {
                pass: report.pass,
                report: path.display().to_string(),
                suites: report
                    .suites
                    .iter()
                    .map(|s| SuiteSummary { suite: s.suite, pass: s.pass, cases: s.cases, failures: s.failures })
                    .collect(),
            })
            .map_err(io)?;
            return Ok(if report.pass { EXIT_OK } else { EXIT_NEGATIVE });
        }
    }
    Ok(EXIT_OK)
}
