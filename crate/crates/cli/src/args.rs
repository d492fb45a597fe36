use clap::{Args, Parser, Subcommand, ValueEnum};
use gl3cg::agkz::Normalization;

#[derive(Parser, Debug)]
#[command(name = "gl3cg", version, about = "Exact gl(3) 3j-symbols and Clebsch-Gordan coefficients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One coefficient.
    Threej(ThreejArgs),
    /// Every pattern triple for the given weights.
    Table(TableArgs),
    /// Property suites and the formula-vs-oracle comparison.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    #[default]
    Unit,
    SummedInfinite,
    SummedTruncated,
}

impl NormArg {
    pub fn mode(self) -> Normalization {
        match self {
            NormArg::Unit => Normalization::Unit,
            NormArg::SummedInfinite => Normalization::SummedInfinite,
            NormArg::SummedTruncated => Normalization::SummedTruncated,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormArg::Unit => "unit",
            NormArg::SummedInfinite => "summed-infinite",
            NormArg::SummedTruncated => "summed-truncated",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, value_enum, default_value_t = NormArg::Unit)]
    pub normalization: NormArg,
    /// Diagnostics and timings on stderr (JSON output also gains `timings`).
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ThreejArgs {
    /// Highest weight of the first slot, e.g. `2,1,0`.
    #[arg(long)]
    pub v: Option<String>,
    #[arg(long)]
    pub w: Option<String>,
    #[arg(long)]
    pub u: Option<String>,
    /// Pattern as `k1,k2,σ`; the top row comes from the weight.
    #[arg(long)]
    pub pv: Option<String>,
    #[arg(long)]
    pub pw: Option<String>,
    #[arg(long)]
    pub pu: Option<String>,
    /// Eight exponents `α,β,γ,δ,ω,φ,ψ,θ`.
    #[arg(long, conflicts_with = "label_index")]
    pub label: Option<String>,
    /// Position in the descending multiplicity basis.
    #[arg(long)]
    pub label_index: Option<usize>,
    /// Query document as inline JSON, `@path`, or `-` for stdin.
    #[arg(long, conflicts_with_all = ["v", "w", "u", "pv", "pw", "pu", "label", "label_index"])]
    pub query: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    #[arg(long)]
    pub v: String,
    #[arg(long)]
    pub w: String,
    #[arg(long)]
    pub u: String,
    /// Restrict to one label (default: the whole multiplicity basis).
    #[arg(long, conflicts_with = "label_index")]
    pub label: Option<String>,
    #[arg(long)]
    pub label_index: Option<usize>,
    #[arg(long)]
    pub nonzero_only: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    All,
    Lattice,
    Annihilation,
    Gkz,
    Contravariance,
    Triangularity,
    Invariance,
    Multiplicity,
    Oracle,
    Selection,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Largest `m1` of the input weights `V`, `W`.
    #[arg(long, default_value_t = 2)]
    pub max_weight: i64,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Per-suite timings on stderr.
    #[arg(long)]
    pub verbose: bool,
}
