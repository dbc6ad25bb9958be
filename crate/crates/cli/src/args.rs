use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use segre_core::exactmath::{parse_rational, parse_root_of_unity};
use segre_core::{CycNum, Rational};

#[derive(Debug, Parser)]
#[command(name = "segre", version, about = "Exact invariants of subsystem structures on twisted state spaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Run every case of a golden-test corpus file instead of a subcommand.
    #[arg(long, value_name = "FILE")]
    pub corpus: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, codimension, degree and Hilbert polynomial of every rank locus.
    Filtration(FiltrationArgs),
    /// Decide whether a splitting type on the projective line is a tensor sumset.
    Splitting(SplittingArgs),
    /// Loop monodromy of a symbol algebra and its stabilizer membership.
    Monodromy(MonodromyArgs),
    /// Torsion, curve-degree and moduli predicates.
    Obstruction(ObstructionArgs),
    /// Ground states of the four-site chain before and after gluing.
    Spinchain(SpinchainArgs),
    /// Re-run the catalog of reducibility examples.
    Catalog,
}

#[derive(Debug, Args)]
pub struct FiltrationArgs {
    #[arg(long)]
    pub da: u32,
    #[arg(long)]
    pub db: u32,
    /// Also list Hilbert series coefficients up to this degree.
    #[arg(long)]
    pub t_max: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SplittingArgs {
    /// Twist degrees, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub degrees: Vec<i64>,
    /// Subsystem type, comma separated.
    #[arg(long = "type", value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// One symbol `(u, v)_m` on `ℂ^m`.
    Kummer,
    /// `(u, a)_p ⊗ (v, b)_p` on `ℂ^p ⊗ ℂ^p`.
    Tensor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LoopArg {
    U,
    V,
}

#[derive(Debug, Args)]
pub struct MonodromyArgs {
    #[arg(long, value_enum, default_value_t = Model::Kummer)]
    pub model: Model,
    /// Symbol degree for the kummer model.
    #[arg(long, default_value_t = 4)]
    pub m: u32,
    /// Prime degree for the tensor model.
    #[arg(long)]
    pub p: Option<u32>,
    /// Subsystem type, comma separated; its product must be the state dimension.
    #[arg(long = "type", value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
    #[arg(long = "loop", value_enum)]
    pub lp: LoopArg,
    /// Zero-based factor indices on the first side of the cut used for the witness.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub cut: Vec<usize>,
    /// Branch of u^(1/m), e.g. "zeta(8)^1".
    #[arg(long, value_parser = root_of_unity, default_value = "1")]
    pub u_branch: CycNum,
    #[arg(long, value_parser = root_of_unity, default_value = "1")]
    pub v_branch: CycNum,
    /// Branch of a^(1/p) (tensor model).
    #[arg(long, value_parser = root_of_unity, default_value = "1")]
    pub a_branch: CycNum,
    /// Branch of b^(1/p) (tensor model).
    #[arg(long, value_parser = root_of_unity, default_value = "1")]
    pub b_branch: CycNum,
}

#[derive(Debug, Args)]
pub struct ObstructionArgs {
    /// Subsystem type, comma separated.
    #[arg(long = "type", value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Declared period of the Brauer class.
    #[arg(long, conflicts_with_all = ["symbol", "tensor_p"])]
    pub period: Option<u64>,
    /// Generic symbol of this degree (period equal to the degree).
    #[arg(long, conflicts_with = "tensor_p")]
    pub symbol: Option<u64>,
    /// Tensor of two symbols of this prime degree.
    #[arg(long)]
    pub tensor_p: Option<u64>,
    /// Degree of a projective bundle on a curve (needs a two-factor type).
    #[arg(long, allow_hyphen_values = true)]
    pub curve_degree: Option<i64>,
    /// Rank of the bundles parametrized by the moduli space.
    #[arg(long, requires = "moduli_degree")]
    pub moduli_rank: Option<u64>,
    #[arg(long, requires = "moduli_rank", allow_hyphen_values = true)]
    pub moduli_degree: Option<i64>,
}

#[derive(Debug, Args)]
pub struct SpinchainArgs {
    /// Hopping strength, e.g. "1" or "1/2".
    #[arg(long, value_parser = rational, default_value = "1")]
    pub j: Rational,
    /// On-site magnon cost; must exceed J.
    #[arg(long, value_parser = rational, default_value = "2")]
    pub delta: Rational,
    /// Branch of u^(1/4), e.g. "zeta(8)^1".
    #[arg(long, value_parser = root_of_unity, default_value = "1")]
    pub branch: CycNum,
}

fn root_of_unity(s: &str) -> Result<CycNum, String> {
    if s.trim() == "1" {
        return Ok(CycNum::one());
    }
    parse_root_of_unity(s).map_err(|e| e.to_string())
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}
