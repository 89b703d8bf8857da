use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use gslab_core::exact::{DEFAULT_CAP, HARD_CAP};
use gslab_core::graph::io::LabeledGraph;

use crate::grid::parse_grid;
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "gslab",
    version,
    about = "Pseudo graph state correlators, sweeps and probing"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entanglement distance and entropy of every vertex over a φ grid.
    EdCurve {
        /// Graph file (JSON or edge list).
        #[arg(long)]
        graph: PathBuf,
        /// φ grid: comma list or start:end:count; values in radians or with a "pi" suffix.
        #[arg(long, default_value = "0:2pi:101")]
        phi: String,
        #[command(flatten)]
        common: Common,
    },
    /// Two-point correlator table at φ = π, or single-site expectations at any φ.
    Correlators {
        #[arg(long)]
        graph: PathBuf,
        /// Single-site expectations instead of the pairwise table.
        #[arg(long)]
        single: bool,
        #[arg(long, default_value = "pi")]
        phi: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a hypothesised graph by sampled measurements.
    Probe {
        /// Hypothesis graph.
        #[arg(long)]
        graph: PathBuf,
        /// Graph the probed state is built from; defaults to the hypothesis.
        #[arg(long)]
        actual: Option<PathBuf>,
        #[arg(long, default_value = "pi")]
        phi: String,
        /// Per-edge φ jitter, uniform in [-jitter, jitter].
        #[arg(long, default_value_t = 0.0)]
        jitter: f64,
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Sign audit of the full-support correlators over a graph corpus.
    Compliance {
        /// Extra graphs appended to the built-in corpus.
        #[arg(long)]
        graph: Vec<PathBuf>,
        /// Number of random graphs in the built-in corpus.
        #[arg(long, default_value_t = 20)]
        random: usize,
        /// Seed of the random part of the corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Largest qubit count simulated by the statevector engine.
    #[arg(long, env = "GSLAB_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Settings shared by every command after validation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub phi: Vec<f64>,
    pub cap: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(common: &Common, phi: &str, default_format: Format) -> Result<Self> {
        if common.cap == 0 || common.cap > HARD_CAP {
            bail!("--cap must lie in 1..={HARD_CAP}, got {}", common.cap);
        }
        Ok(Self {
            phi: parse_grid(phi)?,
            cap: common.cap,
            format: common.format.unwrap_or(default_format),
            out: common.out.clone(),
        })
    }

    pub fn oracle_enabled(&self, n: usize) -> bool {
        n <= self.cap
    }

    pub fn single_phi(&self) -> Result<f64> {
        match self.phi.as_slice() {
            [phi] => Ok(*phi),
            _ => bail!("expected a single φ value, got {} points", self.phi.len()),
        }
    }
}

pub fn read_graph(path: &Path) -> Result<LabeledGraph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    LabeledGraph::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
}
