use clap::{Args, Parser, Subcommand, ValueEnum};
use mathieu_core::experiments::DEFAULT_SEED;
use mathieu_core::scan::DEFAULT_MAX_SCAN;

#[derive(Parser, Debug)]
#[command(
    name = "mathieu-kit",
    version,
    about = "Exact computations with Mathieu subspaces of finite-dimensional algebras"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on field-vector evaluations in one scan.
    #[arg(long, global = true, env = "MATHIEU_KIT_MAX_SCAN", default_value_t = DEFAULT_MAX_SCAN)]
    pub max_scan: u64,

    /// Worker threads for parallel scans (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Group,
}

#[derive(Subcommand, Debug)]
pub enum Group {
    /// Check or describe an algebra.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Element-level structure.
    #[command(subcommand)]
    Elem(ElemCmd),
    /// Subspaces: Mathieu checks, radicals, ideals.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Matrix algebras: hyperplanes, lines, trace duals.
    #[command(subcommand)]
    Mat(MatCmd),
    /// Algebra-level classification.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Scripted verification suites.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

/// `mat:n:p`, `polyq:p:c0,c1,...,1`, `dsum:spec+spec`, `opp:spec`, inline
/// JSON or `@file`.
#[derive(Args, Debug)]
pub struct AlgebraArg {
    #[arg(long)]
    pub algebra: String,
}

#[derive(Args, Debug)]
pub struct ElemArgs {
    #[command(flatten)]
    pub algebra: AlgebraArg,
    /// Coordinates as a JSON array, a comma-separated list or `@file`.
    #[arg(long)]
    pub elem: String,
}

#[derive(Args, Debug)]
pub struct SpaceArgs {
    #[command(flatten)]
    pub algebra: AlgebraArg,
    /// Spanning rows as JSON (a subspace document or an array of rows) or
    /// `@file`.
    #[arg(long)]
    pub basis: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Theta {
    Left,
    Right,
    PreTwoSided,
    TwoSided,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Verify the algebra axioms and print the full document.
    Validate(AlgebraArg),
    /// Dimension, field, commutativity and matrix order.
    Info(AlgebraArg),
}

#[derive(Subcommand, Debug)]
pub enum ElemCmd {
    /// Minimal polynomial `t^k h`.
    Minpoly(ElemArgs),
    /// Nilpotent, invertible, idempotent, quasi-idempotent.
    Classify(ElemArgs),
    /// The idempotent p(a) of an element neither nilpotent nor invertible.
    Pofa(ElemArgs),
    /// Preperiod and period of the powers (finite fields).
    Cycle(ElemArgs),
}

#[derive(Subcommand, Debug)]
pub enum SpaceCmd {
    /// Decide the Mathieu condition.
    Check {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum)]
        theta: Theta,
        /// Check the definition element by element instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Whether an element lies in the radical of the subspace.
    RadicalMember {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        elem: String,
    },
    /// Every element of the radical (finite fields).
    RadicalEnum {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// The least N with (a^N) inside a Mathieu subspace.
    Certify {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        elem: String,
        #[arg(long, value_enum)]
        theta: Theta,
    },
    /// The largest θ-ideal inside the subspace.
    MaxIdeal {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum)]
        theta: Theta,
    },
    /// The θ-ideal generated by an element.
    ThetaIdeal {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long, value_enum)]
        theta: Theta,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Strategy {
    Auto,
    Exhaustive,
    Witness,
}

#[derive(Subcommand, Debug)]
pub enum MatCmd {
    /// Classify every hyperplane H_X of M_n(F_q).
    Codim1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: Strategy,
    },
    /// Classify every line of M_n(F_q).
    Lines {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// The X with V = H_X, for a hyperplane V.
    Dual(SpaceArgs),
    /// Idempotents refuting the Mathieu condition on H_X.
    Witness {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        x: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgCmd {
    /// Every subspace avoiding 1 is Mathieu.
    QuasiStable(AlgebraArg),
    /// Every subspace avoiding 1 is an ideal.
    Stable(AlgebraArg),
    /// The first Mathieu subspace other than 0 and A.
    FindMs(AlgebraArg),
    /// Every Mathieu subspace, with the maximal and minimal ones.
    Lattice {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum)]
        theta: Theta,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuiteCmd {
    /// Run one suite; the exit code is 1 when any check fails.
    Run {
        name: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}
