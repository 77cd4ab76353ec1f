//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
//! 3 counterexample found (or a verifier suite failed).

pub mod format;
pub mod report;
pub mod svg;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::generators::{
    chung_yao_lattice, counterexample_search, counterexample_search_with_jobs,
    general_position_lines, principal_lattice, random_berzolari_radon, random_points, Family,
    SearchConfig,
};
use crate::geometry::NodeSet;
use crate::poly::dimension;
use crate::rng::SplitMix64;
use crate::verifiers::{run_suite, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

pub const FAMILIES: [&str; 4] = ["chung-yao", "principal", "berzolari-radon", "random"];

#[derive(Parser, Debug)]
#[command(
    name = "gcinterp",
    version,
    about = "Exact bivariate interpolation and GC_n node-set analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze a node-set file: poisedness, fundamental polynomials, GC
    /// witnesses, line and usage censuses, maximal-line verdict (JSON).
    Analyze {
        /// Node-set file; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Emit a node-set file for a known family.
    Generate {
        /// chung-yao, principal, berzolari-radon or random.
        #[arg(long)]
        family: String,
        /// Polynomial degree n.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Seed for the random families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on coordinate numerators and denominators.
        #[arg(long, default_value_t = 10)]
        bound: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run a seeded verifier suite: bezout, cayley-bacharach, lemmas or invariants.
    Verify {
        suite: String,
        /// Base seed; instance k uses a sub-seed derived from (seed, k).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of instances (lemmas/invariants: seeded degree-4 natural lattices).
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Restrict the bezout suite to one degree.
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Randomized search for a GC set without n + 1 collinear nodes.
    Search {
        /// Number of candidate sets.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Base seed; trial k uses a sub-seed derived from (seed, k).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Polynomial degree n.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Cap on coordinate numerators and denominators.
        #[arg(long, default_value_t = 10)]
        bound: u32,
        /// `mix` (equal weights), one family name, or weights such as
        /// `random=1,perturbed-lattice=2,line-arrangement=1`.
        #[arg(long, default_value = "mix")]
        family: String,
        /// Worker threads; the report does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Render a node set as SVG.
    Render {
        /// Node-set file; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args, Debug)]
pub struct OutArg {
    /// Write output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedRational(_) | Error::DivisionByZero | Error::InvalidConfig(_) => {
                EXIT_USAGE
            }
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output of a successful (or counterexample-reporting) command.
struct Output {
    text: String,
    code: i32,
}

/// Parses `args` (program name first) and runs the command against the given
/// streams. Returns the process exit code.
pub fn run(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    let out_path = match &cli.command {
        Command::Analyze { out, .. }
        | Command::Generate { out, .. }
        | Command::Verify { out, .. }
        | Command::Search { out, .. }
        | Command::Render { out, .. } => out.out.clone(),
    };
    match execute(cli.command, stdin) {
        Ok(output) => {
            let written = match out_path {
                Some(path) => fs::write(&path, &output.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(output.text.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            if let Err(msg) = written {
                let _ = writeln!(stderr, "error: {msg}");
                return EXIT_USAGE;
            }
            if output.code == EXIT_COUNTEREXAMPLE {
                let _ = writeln!(stderr, "counterexample found");
            }
            output.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match command {
        Command::Analyze { input, .. } => {
            let nodes = read_nodes(input, stdin)?;
            let report = report::analyze(&nodes)?;
            let code = if report.counterexample {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            };
            Ok(Output {
                text: report::to_json(&report),
                code,
            })
        }
        Command::Generate {
            family,
            degree,
            seed,
            bound,
            ..
        } => {
            let nodes = generate(&family, degree, seed, bound)?;
            Ok(Output {
                text: format::write_node_set(&nodes),
                code: EXIT_OK,
            })
        }
        Command::Verify {
            suite,
            seed,
            count,
            degree,
            ..
        } => {
            if count == 0 {
                return Err(Failure::usage("--count must be at least 1"));
            }
            if degree == Some(0) {
                return Err(Failure::usage("--degree must be at least 1"));
            }
            let summary = run_suite(&suite, seed, count, degree).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown suite {suite:?}; expected one of {}",
                    SUITES.join(", ")
                ))
            })?;
            let mut text = format!("{summary}\n");
            for f in &summary.failures {
                text.push_str(&format!("  failure: {f}\n"));
            }
            let code = if summary.all_passed() {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            Ok(Output { text, code })
        }
        Command::Search {
            trials,
            seed,
            degree,
            bound,
            family,
            jobs,
            timing,
            ..
        } => {
            let config = SearchConfig {
                seed,
                trials,
                degree,
                coordinate_bound: bound,
                family_mix: parse_mix(&family)?,
            };
            let report = match jobs {
                Some(0) => return Err(Failure::usage("--jobs must be at least 1")),
                Some(j) => counterexample_search_with_jobs(&config, j)?,
                None => counterexample_search(&config)?,
            };
            let code = if report.totals.counterexamples == 0 {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            Ok(Output {
                text: report::to_json(&report::search_json(&report, timing)),
                code,
            })
        }
        Command::Render { input, .. } => {
            let nodes = read_nodes(input, stdin)?;
            Ok(Output {
                text: svg::render(&nodes),
                code: EXIT_OK,
            })
        }
    }
}

fn read_nodes(input: Option<PathBuf>, stdin: &mut dyn Read) -> Result<NodeSet, Failure> {
    let (name, text) = match input {
        Some(path) if path.as_os_str() != "-" => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            (path.display().to_string(), text)
        }
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
            ("<stdin>".to_string(), text)
        }
    };
    format::parse_node_set(&text).map_err(|e| Failure::usage(format!("parse error in {name}: {e}")))
}

/// Builds a member of a named family.
pub fn generate(family: &str, degree: usize, seed: u64, bound: u32) -> Result<NodeSet, Failure> {
    if bound == 0 {
        return Err(Failure::usage("--bound must be at least 1"));
    }
    let mut rng = SplitMix64::new(seed);
    match family {
        "principal" => Ok(principal_lattice(degree)),
        "chung-yao" => Ok(chung_yao_lattice(&general_position_lines(
            &mut rng,
            degree + 2,
            bound,
        ))?),
        "berzolari-radon" => Ok(random_berzolari_radon(&mut rng, degree, bound)),
        "random" => loop {
            if let Ok(nodes) =
                NodeSet::new(random_points(&mut rng, dimension(degree), bound), degree)
            {
                return Ok(nodes);
            }
        },
        other => Err(Failure::usage(format!(
            "unknown family {other:?}; expected one of {}",
            FAMILIES.join(", ")
        ))),
    }
}

/// `mix`, a single family name, or `name=weight` pairs separated by commas.
pub fn parse_mix(text: &str) -> Result<[u32; 3], Failure> {
    if text == "mix" {
        return Ok([1, 1, 1]);
    }
    let mut weights = [0u32; 3];
    for part in text.split(',') {
        let (name, weight) = match part.split_once('=') {
            Some((n, w)) => {
                let w = w
                    .trim()
                    .parse()
                    .map_err(|_| Failure::usage(format!("bad weight in {part:?}")))?;
                (n.trim(), w)
            }
            None => (part.trim(), 1),
        };
        let family = Family::from_name(name).ok_or_else(|| {
            Failure::usage(format!(
                "unknown search family {name:?}; expected random, perturbed-lattice or line-arrangement"
            ))
        })?;
        let slot = Family::ALL
            .iter()
            .position(|&f| f == family)
            .expect("listed");
        weights[slot] = weights[slot].saturating_add(weight);
    }
    Ok(weights)
}
