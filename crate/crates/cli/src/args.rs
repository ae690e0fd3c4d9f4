use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sumdiam_core::search::{Conjecture, Invariant, TableName};
use sumdiam_core::Labeling;

#[derive(Debug, Parser)]
#[command(name = "sumdiam", version, about = "Sum graph labelings, constructions and exact range searches")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the graph (or k-uniform hypergraph) a label set induces.
    Induce(InduceArgs),
    /// Check that a label set induces the target plus isolates.
    Verify(VerifyArgs),
    /// Build a labeling from a closed-form or general construction.
    Construct(ConstructArgs),
    /// Find a minimum-range labeling by exhaustive search.
    Search(SearchArgs),
    /// Recompute a table of search values.
    Table(TableArgs),
    /// Lower bounds and recorded values for a target.
    Bounds(BoundsArgs),
    /// Apply a labeling combinator.
    Combine(CombineArgs),
    /// Compare a conjectured value against search.
    CheckConjecture(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    /// Family spec such as `cycle:9` or `complete-bipartite:3`.
    #[arg(long)]
    pub target: Option<String>,
    /// JSON file holding a graph or a hypergraph.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InduceArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub labels: Labeling,
    /// Uniformity; 3 or more induces a hypergraph.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub labels: Labeling,
    #[command(flatten)]
    pub target: TargetArgs,
    /// Require exactly this many isolated labels.
    #[arg(long)]
    pub isolates: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// spum-path-even, sd-path, spum-cycle4, ispum-cycle-odd, spum-matching,
    /// ispum-matching, sd-general or hyper-general.
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub target: TargetArgs,
    /// Re-check the output independently of the construction's own check.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub invariant: Invariant,
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long)]
    pub sigma: Option<usize>,
    #[arg(long)]
    pub zeta: Option<usize>,
    #[arg(long)]
    pub isolates: Option<usize>,
    #[arg(long)]
    pub max_range: Option<i64>,
    /// Skip ranges below this one.
    #[arg(long)]
    pub start_range: Option<i64>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Require the doubling interval in the core at the equality range.
    #[arg(long)]
    pub doubling_prune: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// spum-paths or ispum-cycles.
    #[arg(value_name = "NAME", conflicts_with = "name")]
    pub positional: Option<TableName>,
    #[arg(long)]
    pub name: Option<TableName>,
    #[arg(long)]
    pub to: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Translate,
    UnionScaled,
    UnionTranslated,
    AddIsolated,
    AddVertex,
    Join,
    DeleteVertex,
    InducedSubgraph,
    DeleteEdge,
    ContractEdge,
    AddEdge,
}

#[derive(Debug, Args)]
pub struct CombineArgs {
    #[arg(long, value_enum)]
    pub op: Op,
    #[arg(long, allow_hyphen_values = true)]
    pub labels: Labeling,
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub labels2: Option<Labeling>,
    #[arg(long)]
    pub target2: Option<String>,
    #[arg(long)]
    pub graph2: Option<PathBuf>,
    /// Shift for translate.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<i64>,
    /// Isolate count for add-isolated.
    #[arg(long)]
    pub k: Option<usize>,
    /// Vertex ids: neighbors of the new vertex, kept vertices, or an edge's endpoints.
    #[arg(long, alias = "vertices", value_delimiter = ',')]
    pub neighbors: Vec<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    /// spum-paths or sd-paths.
    #[arg(long)]
    pub name: Conjecture,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}
