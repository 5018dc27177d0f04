use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use mubose::BoseOrder;

#[derive(Debug, Parser)]
#[command(name = "mubose", version, about = "Deformed calculus and mu-Bose gas thermodynamics")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Deformation parameter, 0 <= mu < 1.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    /// Absolute/relative tolerance for series summation.
    #[arg(long, global = true, env = "MU_THERMO_TOL", default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the table here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// mu-bracket, shifted product and mu-factorial of n.
    Bracket {
        #[arg(long)]
        n: u64,
    },
    /// Deformed Bose function g_l(z).
    Polylog {
        /// Order: integer or half-integer, e.g. 3/2 or 2.5.
        #[arg(long, short, default_value = "3/2")]
        l: BoseOrder,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
    /// Deformed derivatives of a polynomial, or of a built-in function at a point.
    Deriv(DerivArgs),
    /// Virial coefficients from the closed forms and from series reversion.
    Virial {
        /// Truncation order of the reverted series.
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Equation of state at (T, v), exact and from the virial expansion.
    Eos(StateArgs),
    /// Critical temperature and its ratio to the undeformed value.
    Tc {
        /// Specific volume.
        #[arg(long, short, default_value_t = 1.0, allow_negative_numbers = true)]
        v: f64,
        /// Use the rounded constant 2.61 for zeta(3/2) in the ratio.
        #[arg(long)]
        rounded_zeta: bool,
    },
    /// Full thermodynamic state at (T, v).
    Thermo(StateArgs),
    /// Data behind one of the six standard plots.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Temperature in reduced units.
    #[arg(long = "temperature", short = 'T', visible_alias = "T", allow_negative_numbers = true)]
    pub temperature: f64,
    /// Specific volume V/N.
    #[arg(long, short, allow_negative_numbers = true)]
    pub v: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    Mu,
    Jackson,
    Pq,
    Ordinary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Cube,
    Log1p,
    Exp,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["coeffs", "function"])))]
pub struct DerivArgs {
    /// Polynomial coefficients in ascending powers, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub coeffs: Option<Vec<f64>>,
    /// Built-in function, differentiated numerically at --x.
    #[arg(long, value_enum, requires = "x")]
    pub function: Option<Function>,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long, value_enum, default_value_t = Operator::Mu)]
    pub operator: Operator,
    /// q parameter of the Jackson and p,q operators.
    #[arg(long)]
    pub q: Option<f64>,
    /// p parameter of the p,q operator.
    #[arg(long)]
    pub p: Option<f64>,
    /// Number of applications of the mu-derivative.
    #[arg(long, default_value_t = 1)]
    pub times: usize,
    /// Gauss-Legendre nodes for the numeric derivative.
    #[arg(long, default_value_t = 64)]
    pub nodes: usize,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    pub id: u8,
    /// Lower end of the abscissa (x, z or mu).
    #[arg(long = "x-min", visible_aliases = ["z-min", "mu-min"], allow_negative_numbers = true)]
    pub min: Option<f64>,
    /// Upper end of the abscissa.
    #[arg(long = "x-max", visible_aliases = ["z-max", "mu-max"], allow_negative_numbers = true)]
    pub max: Option<f64>,
    /// Number of grid intervals.
    #[arg(long)]
    pub steps: Option<usize>,
    /// Deformations for figures 2 and 3, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub mu_list: Option<Vec<f64>>,
    /// Use the rounded constant 2.61 for zeta(3/2) in figure 5.
    #[arg(long)]
    pub rounded_zeta: bool,
}
