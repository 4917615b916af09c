//! Command-line experiment runner for idealarith.
//!
//! Every subcommand produces a [`Report`]: a list of experiments, each with a
//! pass flag, a flat summary and a JSON detail carrying the certificates.

pub mod commands;
pub mod config;
pub mod properties;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

pub use config::{resolve, RunConfig};
pub use report::{Experiment, Format, Report};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "idealarith",
    version,
    about = "Factorization experiments in monoids of ideals"
)]
pub struct Cli {
    /// JSON config file with optional `caps`, `seed`, `format` and `out` keys.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Cap on generator degrees before Gröbner computations.
    #[arg(long, global = true)]
    pub caps_degree: Option<usize>,
    /// Pattern budget of the atom certifier.
    #[arg(long, global = true)]
    pub pattern_budget: Option<usize>,
    /// Seed for randomized checks; recorded in the report.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Set of lengths of one element: `plane (3,3)`, `power {0,1,2,3}`,
    /// `zerosum:C3 [1^3,2^3]`, `staircase <X^3; Y^3>`, `ideals a[5]`.
    Lengths { monoid: String, element: String },
    /// Atoms in the standard window of a monoid.
    Atoms {
        monoid: String,
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Union of the sets of lengths containing `k`, over a window.
    Unions {
        monoid: String,
        #[arg(long, default_value = "2")]
        k: String,
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Atom certificates for family literals or ideal literals.
    CertifyAtom {
        #[arg(required = true)]
        ideals: Vec<String>,
    },
    /// The family identity suite with negative controls.
    VerifyIdentities {
        #[arg(long, default_value_t = 8)]
        max: u32,
    },
    /// Certified sets of lengths of `<X1,X2>^k`.
    #[command(name = "theorem51")]
    #[serde(rename = "theorem51")]
    MaxIdealLengths {
        #[arg(long, default_value = "2..8")]
        k: String,
    },
    /// Not-transfer-Krull, non-finite-factorization and union witnesses.
    Witnesses {
        /// Largest `i` for the union witnesses.
        #[arg(long, default_value_t = 3)]
        max: u32,
        /// Nonzero rationals for the non-finite-factorization family.
        #[arg(long, default_value = "1,2,3,4,5,-1,1/2")]
        alphas: String,
    },
    /// Elasticity constructions `L = [s, r]` for targets `r/s`.
    Elastic {
        #[arg(long, default_value = "3/2,5/3,7/4,9/5")]
        q: String,
        /// `ideals` or `power`.
        #[arg(long, default_value = "ideals")]
        monoid: String,
    },
    /// Power monoid checks: interval lengths and the embedding into monomial ideals.
    PowermonoidIso {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Zero-sum sequences: lengths of a sequence, or realization of a target set over Z.
    Zerosum {
        #[arg(long, default_value = "C3")]
        group: String,
        /// Sequence literal such as `[1^3, 2^3]`.
        sequence: Option<String>,
        /// Target set such as `{2,3}` to realize over Z.
        #[arg(long)]
        realize: Option<String>,
    },
    /// Seeded randomized property suites.
    Properties {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// Window scans on the exemplar monoids.
    Exemplars {
        #[arg(long, default_value_t = 10)]
        max: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Lengths { .. } => "lengths",
            Command::Atoms { .. } => "atoms",
            Command::Unions { .. } => "unions",
            Command::CertifyAtom { .. } => "certify-atom",
            Command::VerifyIdentities { .. } => "verify-identities",
            Command::MaxIdealLengths { .. } => "theorem51",
            Command::Witnesses { .. } => "witnesses",
            Command::Elastic { .. } => "elastic",
            Command::PowermonoidIso { .. } => "powermonoid-iso",
            Command::Zerosum { .. } => "zerosum",
            Command::Properties { .. } => "properties",
            Command::Exemplars { .. } => "exemplars",
        }
    }
}

/// Runs a parsed command line with an already-resolved configuration.
pub fn run(command: &Command, cfg: &RunConfig) -> idealarith::Result<Report> {
    let experiments = commands::dispatch(command, cfg)?;
    let arguments = serde_json::to_value(command).expect("arguments serialize");
    Ok(Report::new(
        command.name(),
        arguments,
        cfg.seed,
        cfg.caps,
        experiments,
    ))
}
