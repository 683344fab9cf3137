use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Exact invariants of arithmetic hyperbolic orbifold groups.
///
/// Every subcommand prints one JSON document on stdout. Validation errors exit
/// with status 2 and internal errors with status 3, with `{error, detail}` on
/// stderr.
#[derive(Debug, Parser)]
#[command(name = "orbinv", version)]
pub struct Cli {
    /// Also write the JSON document to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class numbers, fundamental unit and restricted 2-class number.
    FieldInvariants(FieldArgs),
    /// Spinor norm of an exact isometry of a diagonal form.
    SpinorNorm(IsometryArgs),
    /// Cartan–Dieudonné reflection decomposition of an exact isometry.
    Decompose(DecomposeArgs),
    /// Normalizer index check for the standard Lorentzian form of dimension n + 1.
    CheckNormalizer(NormalizerArgs),
    /// Euler characteristic lower bound, or its growth certificate.
    GrowthBound(GrowthArgs),
    /// Field invariants for every squarefree d in a range, with the analytic oracle.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// `Q` or `Q(sqrt D)` with D squarefree.
    #[arg(long)]
    pub field: String,

    /// Real place playing the role of Id; place 0 sends sqrt(D) to the positive root.
    #[arg(long, default_value_t = 0)]
    pub id_place: usize,
}

#[derive(Debug, Args)]
pub struct IsometryArgs {
    #[command(flatten)]
    pub field: FieldArgs,

    /// Diagonal coefficients, comma separated, e.g. `1,-1,-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub form: String,

    /// JSON array of rows of field elements, e.g. `[["1","0"],["0","1"]]`.
    #[arg(long)]
    pub matrix: String,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub isometry: IsometryArgs,

    /// Pivot order as a comma separated permutation of 0..dim; defaults to index order.
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Args)]
pub struct NormalizerArgs {
    #[command(flatten)]
    pub field: FieldArgs,

    /// Hyperbolic dimension, even and at least 4.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    #[arg(long, required_unless_present = "certify", conflicts_with = "certify")]
    pub r: Option<u64>,

    /// Degree of the field of definition.
    #[arg(long, default_value_t = 1, conflicts_with = "certify")]
    pub degree: u64,

    /// Print the ratio table for r = 1..=R_MAX.
    #[arg(long, value_name = "R_MAX")]
    pub certify: Option<u64>,

    /// Binary precision of the float values.
    #[arg(long, env = "ORBINV_PRECISION_BITS", default_value_t = 128)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    pub dmin: u64,

    #[arg(long)]
    pub dmax: u64,
}
