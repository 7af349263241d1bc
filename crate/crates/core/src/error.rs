use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("{what} did not converge (previous estimate {previous:e}, last estimate {last:e})")]
    Convergence {
        what: &'static str,
        previous: f64,
        last: f64,
    },

    #[error("strength rho0^2 = {rho0_sq} is below critical strength 1/4; no bound states")]
    BelowThreshold { rho0_sq: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigensolver failed after {iterations} iterations: {detail}")]
    EigenSolver { iterations: usize, detail: String },

    #[error("state n = {n} underflows (rho_eps^2 = {rho_eps_sq:e} below {floor:e})")]
    Underflow {
        n: usize,
        rho_eps_sq: f64,
        floor: f64,
    },

    #[error(
        "ground state at eps/a = {eps_over_a} feels the well wall \
         (edge amplitude ratio {edge_ratio:e}); use a smaller eps/a or a larger n_max"
    )]
    WallContaminated { eps_over_a: f64, edge_ratio: f64 },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
