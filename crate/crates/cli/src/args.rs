use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genusdist::combinatorics::Partition;
use genusdist::genus::Family;

pub const DEFAULT_N_CAP: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "genusdist",
    version,
    about = "Exact genus distributions of Eulerian digraphs and one-face constellations"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for oracles and sweeps (default: all cores).
    #[arg(long, global = true, env = "GENUSDIST_THREADS")]
    pub threads: Option<usize>,
    /// Largest n accepted by formula commands.
    #[arg(long, global = true, default_value_t = DEFAULT_N_CAP)]
    pub n_cap: usize,
    /// Largest oracle search space, in visited objects.
    #[arg(long, global = true, default_value_t = genusdist::oracle::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Acknowledge raising --n-cap or --budget above their defaults.
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Constellation,
    Digraph,
    Bouquet,
    Dipole,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Constellation => Family::Constellation,
            FamilyArg::Digraph => Family::Digraph,
            FamilyArg::Bouquet => Family::Bouquet,
            FamilyArg::Dipole => Family::Dipole,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    Bouquet,
    Dipole,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus polynomial of one object.
    Genus {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Number of factors after the n-cycle (constellations only).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Partition such as 3,2,1 (constellation and digraph families).
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Genus polynomials for n = 1..=max_n.
    Table {
        #[arg(value_enum)]
        family: TableFamily,
        #[arg(long)]
        max_n: usize,
    },
    /// Compare brute-force oracles with the closed formulas.
    Verify {
        #[command(subcommand)]
        mode: VerifyMode,
    },
    /// Real-rootedness, root sign and log-concavity certificates.
    Check {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        lambdas: LambdaSel,
    },
    /// Exact genus moments and asymptotic normal parameters.
    Moments {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Partition,
        /// Decimal places for the asymptotic parameters.
        #[arg(long, default_value_t = genusdist::analysis::DEFAULT_DIGITS)]
        precision: u32,
    },
    /// Genus polynomial of an Eulerian fan read from JSON.
    Fan {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        handle: usize,
    },
    /// Irreducible character value chi^theta at cycle type mu.
    Char {
        #[arg(long)]
        theta: Partition,
        #[arg(long)]
        mu: Partition,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct LambdaSel {
    #[arg(long)]
    pub lambda: Option<Partition>,
    /// Sweep every partition of n.
    #[arg(long)]
    pub all_lambda: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyMode {
    /// Factorization oracle against the constellation formula.
    Factorizations {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        lambdas: LambdaSel,
    },
    /// Embedding oracle against the digraph or fan formula.
    Embeddings {
        /// Digraph JSON file; its fan formula is used.
        #[arg(long, conflicts_with_all = ["n", "lambda", "all_lambda"])]
        input: Option<PathBuf>,
        /// Fan handle for --input (default: first vertex that works).
        #[arg(long, requires = "input")]
        handle: Option<usize>,
        #[arg(long, required_unless_present = "input")]
        n: Option<usize>,
        #[arg(long, conflicts_with = "all_lambda")]
        lambda: Option<Partition>,
        #[arg(long)]
        all_lambda: bool,
    },
    /// Frobenius character sums against exhaustive k-tuple counts.
    Frobenius {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Four-permutation rotation systems against three-factor constellations.
    Bieulerian {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        lambdas: LambdaSel,
    },
}
