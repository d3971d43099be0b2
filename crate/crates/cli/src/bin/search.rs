use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinquandle::search::search_core_vs_twisted;

#[derive(Parser)]
#[command(about = "Search finite groups for core quandles isomorphic to twisted conjugation quandles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// For each catalog group G, compare Core(G) with TwistedConj(H, psi) for all |H| = |G|.
    CoreVsTwisted {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        /// Write the full JSON report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Disable invariant-based pruning in the isomorphism search.
        #[arg(long)]
        no_pruning: bool,
    },
}

fn main() -> ExitCode {
    let Command::CoreVsTwisted { max_order, report, no_pruning } = Cli::parse().command;
    let result = search_core_vs_twisted(max_order, !no_pruning).map_err(anyhow::Error::from).and_then(|r| {
        println!("{:<12}  {:>5}  {:>10}  {:>7}  verdict", "group", "order", "candidates", "matches");
        for v in &r.verdicts {
            let verdict = if v.matches > 0 {
                "isomorphic to some TwistedConj(H, psi)"
            } else if v.exhausted {
                "no match (exhausted)"
            } else {
                "undecided"
            };
            println!("{:<12}  {:>5}  {:>10}  {:>7}  {verdict}", v.group, v.order, v.candidates, v.matches);
        }
        if let Some(path) = report {
            spinquandle_cli::write_report(&path, &r.to_json())?;
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
