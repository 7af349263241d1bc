use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "invsq",
    version,
    about = "Bound states of the cutoff-regularized -alpha/x^2 potential",
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analytic and matrix spectra side by side, swept over rho0^2
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sweep: StrengthSweep,
    },
    /// Wavefunctions of the lowest states from both methods
    Wavefunction {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Kind::Amplitude)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Axis::XOverEps)]
        axis: Axis,
    },
    /// Ground-state densities eps|psi|^2 against x/eps for several eps/a
    Scaling {
        #[command(flatten)]
        common: Common,
        /// comma-separated eps/a values
        #[arg(long, value_delimiter = ',')]
        eps_list: Option<Vec<f64>>,
        /// comma-separated rho0^2 values
        #[arg(long, value_delimiter = ',')]
        rho0_sq_list: Option<Vec<f64>>,
    },
    /// Exact levels against the small-rho_eps estimate and geometric ladder
    Ladder {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sweep: StrengthSweep,
    },
    /// Matrix levels as the basis size grows
    Converge {
        #[command(flatten)]
        common: Common,
        /// comma-separated basis sizes
        #[arg(long, value_delimiter = ',', required = true)]
        n_max_list: Vec<usize>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long)]
    pub rho0_sq: Option<f64>,
    #[arg(long)]
    pub eps_over_a: Option<f64>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub n_states: Option<usize>,
    #[arg(long)]
    pub grid_points: Option<usize>,
    /// upper end of the x/eps grid
    #[arg(long)]
    pub grid_max: Option<f64>,
    #[arg(long, value_parser = ["csv", "json"])]
    pub format: Option<String>,
    /// key=value settings file; flags take precedence
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// output file (default standard output)
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct StrengthSweep {
    /// lo:hi:step, inclusive of hi
    #[arg(long, value_name = "LO:HI:STEP")]
    pub rho0_sq_range: Option<String>,
    /// comma-separated rho0^2 values
    #[arg(long, value_delimiter = ',')]
    pub rho0_sq_list: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Amplitude,
    Density,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    XOverEps,
    XOverA,
}
