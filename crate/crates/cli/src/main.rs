mod commands;
mod config;
mod grid;
mod output;

use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use commands::{ProbeArgs, Status};
use config::{read_graph, Cli, Command, RunConfig};
use output::{write_json, Format};

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::EdCurve { graph, phi, common } => {
            let cfg = RunConfig::resolve(&common, &phi, Format::Csv)?;
            let (table, status) = commands::ed_curve(&cfg, &read_graph(&graph)?)?;
            table.write(cfg.format, cfg.out.as_deref())?;
            Ok(status)
        }
        Command::Correlators {
            graph,
            single,
            phi,
            common,
        } => {
            let cfg = RunConfig::resolve(&common, &phi, Format::Csv)?;
            let lg = read_graph(&graph)?;
            let (table, status) = if single {
                commands::single_site(&cfg, &lg)?
            } else {
                commands::correlators(&cfg, &lg)?
            };
            table.write(cfg.format, cfg.out.as_deref())?;
            Ok(status)
        }
        Command::Probe {
            graph,
            actual,
            phi,
            jitter,
            epsilon,
            seed,
            common,
        } => {
            let cfg = RunConfig::resolve(&common, &phi, Format::Json)?;
            let args = ProbeArgs {
                hypothesis: &graph,
                actual: actual.as_deref(),
                jitter,
                epsilon,
                seed,
            };
            let (report, status) = commands::probe(&cfg, &args)?;
            write_json(&report, cfg.out.as_deref())?;
            if status != Status::Pass {
                eprintln!(
                    "verification failed at vertices [{}]",
                    report.failing_labels.join(", ")
                );
            }
            Ok(status)
        }
        Command::Compliance {
            graph,
            random,
            seed,
            common,
        } => {
            let cfg = RunConfig::resolve(&common, "pi", Format::Csv)?;
            let (table, status) = commands::compliance(&cfg, &graph, random, seed)?;
            table.write(cfg.format, cfg.out.as_deref())?;
            Ok(status)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => {
            if status == Status::Mismatch {
                eprintln!("analytic and statevector results disagree beyond tolerance");
            }
            ExitCode::from(status.code())
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
