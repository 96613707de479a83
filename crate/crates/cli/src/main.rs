//! `wiener`: distance-based graph indices from the command line.

mod compute;
mod error;
mod gen;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use wiener_core::enumerate::{all_free_trees, canonical_form};

use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "wiener", version, about = "Wiener-type indices of graphs and trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Leave out the elapsed_ms field so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute an index of a graph read as an edge list.
    Compute(compute::ComputeArgs),
    /// Write a member of a named graph family and its predicted index values.
    Gen(gen::GenArgs),
    /// Check a closed formula or an algorithm against brute force.
    Verify(verify::VerifyArgs),
    /// List the non-isomorphic trees of a given order.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Include every tree, not only the count.
    #[arg(long)]
    list: bool,
}

fn enumerate(args: &EnumerateArgs) -> CliResult<Map<String, Value>> {
    let trees = all_free_trees(args.n)?;
    let mut out = Map::new();
    out.insert("n".into(), args.n.into());
    out.insert("count".into(), trees.len().into());
    if args.list {
        let listed: Vec<Value> = trees
            .map(|t| {
                json!({
                    "canonical": canonical_form(&t).expect("generated tree"),
                    "degree_sequence": t.degree_sequence(),
                    "edges": t.edges(),
                })
            })
            .collect();
        out.insert("trees".into(), listed.into());
    }
    Ok(out)
}

fn emit(value: Map<String, Value>, pretty: bool) -> CliResult<()> {
    let text = output::render(&Value::Object(value), pretty);
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    let timing = !cli.no_timing;
    let start = Instant::now();
    match &cli.command {
        Command::Compute(args) => {
            let mut out = compute::run(args)?;
            output::stamp(&mut out, start, timing);
            emit(out, cli.pretty)?;
        }
        Command::Gen(args) => {
            let g = gen::run(args)?;
            let summary = output::render(&Value::Object(g.summary), cli.pretty);
            match &g.out {
                Some(path) => {
                    std::fs::write(path, &g.edge_list).map_err(|e| {
                        CliError::Input(format!("cannot write {}: {e}", path.display()))
                    })?;
                    std::io::stdout().write_all(summary.as_bytes())?;
                }
                None => {
                    std::io::stdout().write_all(g.edge_list.as_bytes())?;
                    std::io::stderr().write_all(summary.as_bytes())?;
                }
            }
        }
        Command::Verify(args) => {
            let verdict = verify::run(args)?;
            let mut report = verdict.report;
            output::stamp(&mut report, start, timing);
            emit(report, cli.pretty)?;
            if !verdict.pass {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Enumerate(args) => emit(enumerate(args)?, cli.pretty)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("wiener: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
