use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Default tolerance for bound and identity checks.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "resreg", version, about = "Resistance distance, resistance regularity and resistance spectra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resistance profile, spectrum and bounds of one graph
    Analyze(CommonArgs),
    /// Resistance regularity label of one graph
    Classify(CommonArgs),
    /// Build a family member or product and print it
    Construct {
        #[command(flatten)]
        common: CommonArgs,
        /// Encoding of the emitted graph
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Closed-form spectra, Q-polynomial and energy identities of one graph
    Verify(CommonArgs),
    /// Check every graph of a graph6 file
    Scan(CommonArgs),
    /// Compare the spanning-forest oracle with the exact resistance matrix
    OracleCheck(CommonArgs),
}

impl Command {
    pub fn common(&self) -> &CommonArgs {
        match self {
            Command::Analyze(c)
            | Command::Classify(c)
            | Command::Verify(c)
            | Command::Scan(c)
            | Command::OracleCheck(c)
            | Command::Construct { common: c, .. } => c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Product {
    Double,
    LexicoK2,
    CartesianK2,
}

#[derive(Clone, Debug, Args)]
pub struct CommonArgs {
    /// Graph file to read
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
    /// Named family, e.g. complete:4, cycle:5, path:3, cocktail:3, bipartite:2,3, multipartite:1,2,2
    #[arg(long)]
    pub family: Option<String>,
    /// Format of --input
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
    /// Line of a graph6 file to use for single-graph commands (1-based)
    #[arg(long)]
    pub line: Option<usize>,
    /// Apply a product with K2 to the input graph
    #[arg(long, value_enum)]
    pub product: Option<Product>,
    /// Tolerance for floating-point checks
    #[arg(long, env = "RESIST_TOL", default_value_t = DEFAULT_TOL, allow_negative_numbers = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Worker threads for scan and oracle-check
    #[arg(long)]
    pub workers: Option<usize>,
    /// Write the report here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}
