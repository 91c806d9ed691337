use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Latin hypercuboids: construct, check, solve, search and sample.
///
/// Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 unknown (budget),
/// 64 usage error, 65 data error.
#[derive(Debug, Parser)]
#[command(name = "lhc", version, about, long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an explicit object and write it as JSON.
    Construct(ConstructArgs),
    /// Validate a JSON file, or report its delta-regularity.
    Check(CheckArgs),
    /// Run a solver on a JSON file.
    Solve(SolveArgs),
    /// Search all small hypercuboids for a noncompletable or nonextendible one.
    Search(SearchArgs),
    /// Draw seeded random objects.
    ///
    /// Squares come from a Jacobson-Matthews walk. Cuboids with d >= 3 and
    /// arrays are grown by randomized search and are not uniformly distributed.
    Sample(SampleArgs),
    /// Slow independent oracles (requires --slow).
    Verify(VerifyArgs),
    /// Print a JSON file as a text grid (dimension at most 3).
    Show {
        input: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write JSON here instead of standard output.
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Stop after this many search nodes and report unknown.
    #[arg(long, value_name = "N")]
    pub budget_nodes: Option<u64>,
    /// Stop after this many seconds and report unknown.
    #[arg(long, value_name = "SECS")]
    pub budget_secs: Option<f64>,
    /// Serial search in canonical order (the default).
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Cyclic,
    Pebody,
    Nonlayerable,
    Lift,
    Develop,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: ConstructKind,
    /// Dimension (cyclic), or target dimension (lift).
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    /// Source file for lift (hypercuboid) and develop (layer).
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Keep only the first K layers of a hypercuboid result.
    #[arg(long, value_name = "K")]
    pub prefix: Option<usize>,
    /// Replace a hypercuboid result by its array of unused symbols.
    #[arg(long)]
    pub unused: bool,
    /// Replace an array result by its cellwise complement.
    #[arg(long)]
    pub complement: bool,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Hypercuboid,
    Array,
    Layer,
    Delta,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub kind: CheckKind,
    pub input: PathBuf,
    /// For `layer`: also check that the layer fits this array file.
    #[arg(long, value_name = "FILE")]
    pub of: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    Layer,
    Decompose,
    Extend,
    Complete,
    Avoid,
    Rectangle,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub kind: SolveKind,
    pub input: PathBuf,
    /// Pin a cell of the layer, one-based: "(1,1)=5". Repeatable; `layer` only.
    #[arg(long, value_name = "CELL=SYMBOL")]
    pub forced: Vec<String>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchKind {
    Noncompletable,
    Nonextendible,
    Threshold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    #[value(name = "NC", alias = "nc")]
    Nc,
    #[value(name = "NE", alias = "ne")]
    Ne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    pub kind: SearchKind,
    /// Property sought by `threshold`.
    #[arg(long = "kind", value_name = "NC|NE")]
    pub property: Option<PropertyArg>,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub kmax: Option<usize>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: ModeArg,
    /// First seed for random mode.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for exhaustive mode; node counts then vary between runs.
    #[arg(long, value_name = "N", conflicts_with = "deterministic")]
    pub parallel: Option<usize>,
    /// Search depths 1, n-1 and d <= 2 instead of settling them by known facts.
    #[arg(long)]
    pub no_shortcuts: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleKind {
    Square,
    Cuboid,
    Array,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    pub kind: SampleKind,
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Depth of a cuboid, or set size of an array.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of samples, from consecutive seeds. With more than one sample,
    /// `-o` names a directory.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Count all Latin squares of order n.
    Enumerate,
    /// Print one representative per isotopy class of order n.
    Isotopy,
    /// Compare the naive and the optimized layer search on a file.
    Layer,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub kind: OracleKind,
    /// Acknowledge that the oracles are slow.
    #[arg(long)]
    pub slow: bool,
    #[arg(long)]
    pub n: Option<usize>,
    /// Input file for `layer`.
    pub input: Option<PathBuf>,
    #[arg(long, value_name = "CELL=SYMBOL")]
    pub forced: Vec<String>,
}
