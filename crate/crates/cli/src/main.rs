//! `knotsurf` command-line front end. Every command prints JSON.
//!
//! Exit codes: 0 success, 1 property or expectation failure, 2 usage or
//! parse error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use knotsurf::corpus::run_corpus;
use knotsurf::diagram::MapDocument;
use knotsurf::{generate, lift_to_torus, parse_pd, verify, CombinatorialMap, Error, InvariantReport, Kind, Suite};

#[derive(Parser)]
#[command(name = "knotsurf", version, about = "Checkerboard-surface invariants of knot diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one diagram.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Include the Seifert-matrix oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Lift an almost alternating diagram to the torus at a dealternator.
    Lift {
        #[arg(long)]
        pd: String,
        /// 1-based crossing id of the dealternator.
        #[arg(long)]
        crossing: usize,
    },
    /// Seeded random planar diagram, as map JSON.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "random")]
        kind: Kind,
    },
    /// Check one identity over generated diagrams.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        max_crossings: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Analyze a CSV of PD codes into line-delimited JSON reports.
    Corpus {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Treat skipped rows as failures.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// PD code text.
    #[arg(long)]
    pd: Option<String>,
    /// File holding a PD code or a map JSON document.
    #[arg(long)]
    file: Option<PathBuf>,
}

/// Failure of a checked property, as opposed to bad input.
#[derive(Debug)]
struct PropertyFailure;

impl std::fmt::Display for PropertyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("property failure")
    }
}

impl std::error::Error for PropertyFailure {}

fn read_diagram(text: &str) -> Result<CombinatorialMap> {
    let text = text.trim();
    if text.starts_with('{') {
        let doc: MapDocument = serde_json::from_str(text).context("invalid map JSON")?;
        Ok(CombinatorialMap::try_from(&doc)?)
    } else {
        Ok(parse_pd(text)?)
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze { input, oracle } => {
            let map = match (input.pd, input.file) {
                (Some(pd), _) => read_diagram(&pd)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("cannot read {}", path.display()))?;
                    read_diagram(&text)?
                }
                (None, None) => bail!("one of --pd or --file is required"),
            };
            print_json(&InvariantReport::compute(&map, oracle)?)
        }
        Command::Lift { pd, crossing } => {
            let map = parse_pd(&pd)?;
            if crossing == 0 {
                bail!("crossing ids are 1-based");
            }
            let lift = lift_to_torus(&map, crossing - 1).map_err(|e| match e {
                Error::NotDealternator(_) => anyhow!("crossing {crossing} is not a dealternator"),
                Error::NugatoryDealternator(_) => anyhow!("crossing {crossing} is nugatory"),
                Error::UnknownCrossing(_) => anyhow!("no crossing {crossing}"),
                e => e.into(),
            })?;
            let report = InvariantReport::compute(&lift, false)?;
            print_json(&serde_json::json!({ "map": MapDocument::from(&lift), "report": report }))
        }
        Command::Generate { n, seed, kind } => print_json(&MapDocument::from(&generate(n, seed, kind)?)),
        Command::Verify { suite, count, max_crossings, seed } => {
            if max_crossings == 0 {
                bail!("--max-crossings must be positive");
            }
            let summary = verify(suite, count, max_crossings, seed);
            print_json(&summary)?;
            if !summary.passed() {
                return Err(PropertyFailure.into());
            }
            Ok(())
        }
        Command::Corpus { csv, out, strict } => {
            let input = File::open(&csv).with_context(|| format!("cannot read {}", csv.display()))?;
            let file = File::create(&out).with_context(|| format!("cannot write {}", out.display()))?;
            let mut writer = BufWriter::new(file);
            let summary = run_corpus(input, &mut writer, |w| eprintln!("warning: {w}"))?;
            writer.flush()?;
            print_json(&summary)?;
            if summary.mismatches > 0 || (strict && summary.skipped > 0) {
                return Err(PropertyFailure.into());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<PropertyFailure>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
