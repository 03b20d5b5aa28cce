use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 2718;
pub const DEFAULT_MAX_ENUM: u128 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "affsch", version, about = "Exact checks on affine Schubert varieties and nilpotent orbit closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Cap on enumeration sizes.
    #[arg(long, global = true, env = "AFFSCH_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM)]
    pub max_enum: u128,
}

#[derive(Args, Debug, Clone)]
pub struct AmbientArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub s: usize,
}

#[derive(Args, Debug, Clone)]
pub struct ChainArgs {
    #[command(flatten)]
    pub ambient: AmbientArgs,
    /// Position of the chain element, 1 for the top cell.
    #[arg(long, default_value_t = 1)]
    pub tau: usize,
}

#[derive(Args, Debug, Clone)]
pub struct TupleArgs {
    #[command(flatten)]
    pub ambient: AmbientArgs,
    /// Comma-separated increasing row indices, e.g. `3,4`.
    #[arg(long)]
    pub tuple: String,
}

#[derive(Args, Debug, Clone)]
pub struct MuArgs {
    /// Partition as comma-separated parts, e.g. `2,1`.
    #[arg(long)]
    pub mu: String,
    /// Optional size check on the partition.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RectangleConvention {
    Rows,
    Cols,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KostkaIndexing {
    /// `r_{μ,λ} = K̃_{λ,μ'}`.
    Conjugate,
    /// `r_{μ,λ} = K̃_{λ,μ}`.
    Direct,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Admissible tuples of a chain element.
    Admissible(ChainArgs),
    /// The reduced chain of Schubert varieties.
    Chain(AmbientArgs),
    /// A shuffle relation and its values on the top cell.
    Shuffle {
        #[command(flatten)]
        args: TupleArgs,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Expands a Plücker coordinate in admissible ones.
    Straighten(TupleArgs),
    /// Degree-one ideal generators of a chain element.
    IdealGens {
        #[command(flatten)]
        args: ChainArgs,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Independence and spanning certificates for a chain element.
    BasisCheck(ChainArgs),
    /// Admissible counts against the closed forms.
    Counts(AmbientArgs),
    /// Closure membership of a point of one orbit in another orbit closure.
    OrbitMember {
        #[command(flatten)]
        args: MuArgs,
        /// Jordan type of the sampled point.
        #[arg(long)]
        lambda: String,
    },
    /// The stacked-powers embedding of a random orbit point.
    Lusztig(MuArgs),
    /// Dimensions of the minor filtration.
    Filtration {
        #[command(flatten)]
        args: MuArgs,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Filtration dimension against the rectangle prediction.
    Conjecture {
        #[command(flatten)]
        args: MuArgs,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, value_enum, default_value_t = RectangleConvention::Rows)]
        convention: RectangleConvention,
    },
    /// Equations of an orbit closure.
    OrbitEquations(MuArgs),
    /// Vanishing and separation of the orbit equations.
    Cutout {
        #[command(flatten)]
        args: MuArgs,
        #[arg(long, default_value_t = 30)]
        samples: usize,
    },
    /// A Kostka–Foulkes polynomial, with its quotient-algebra cross-check.
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = KostkaIndexing::Conjugate)]
        indexing: KostkaIndexing,
    },
    /// Graded character of the quotient by the subset elementary symmetric functions.
    BmuCharacter {
        #[command(flatten)]
        args: MuArgs,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
    },
    /// Graded dimensions of the first filtration piece against level-one weights.
    LevelOne {
        #[command(flatten)]
        args: MuArgs,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Runs the full verification grid.
    VerifyAll {
        /// Recorded in the report; the grid itself is fixed.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
    },
}
