use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "cusp", version, about = "Existence of (self-dual) cuspidal and depth-zero supercuspidal representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide one group, given as a JSON spec or inline flags.
    Analyze(AnalyzeArgs),
    /// Verdict table over simply connected types and field sizes.
    Table(TableArgs),
    /// Smallest prime ℓ with ord_ℓ(q) = h.
    Zsygmondy { q: u64, h: u64 },
    /// Re-verify the certificates stored in a JSON report.
    Check { report: PathBuf },
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// JSON group spec (finite: {q, factors}; p-adic: {p, q, factors}).
    pub spec: Option<PathBuf>,
    /// Type letter with an optional twist prefix, e.g. `A`, `2A`, `3D`.
    #[arg(long = "type", value_name = "TYPE")]
    pub family: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long)]
    pub q: Option<u64>,
    /// `sc` or `ad`.
    #[arg(long, default_value = "sc")]
    pub isogeny: String,
    /// Degree of the restriction of scalars.
    #[arg(long, default_value_t = 1)]
    pub scalars_degree: u32,
    /// Settle every verdict by exhaustive character search.
    #[arg(long)]
    pub force_oracle: bool,
    /// Decide over a p-adic field instead of a finite field.
    #[arg(long)]
    pub padic: bool,
    #[arg(long)]
    pub p: Option<u64>,
    /// p-adic factor, e.g. `2A4:unramified` or `A2:inner:anisotropic:ad:f=2`.
    #[arg(long = "factor", value_name = "FACTOR")]
    pub factors: Vec<String>,
    /// Write the JSON report to PATH (`-` for stdout, replacing the text report).
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Record wall-clock timings in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 2)]
    pub rank_max: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    pub q_list: Vec<u64>,
    /// Include the twisted types 2A_n, 2D4, 3D4.
    #[arg(long)]
    pub twisted: bool,
    #[arg(long)]
    pub csv: bool,
    /// Rules only, without the character-level oracle.
    #[arg(long)]
    pub no_oracle: bool,
}
