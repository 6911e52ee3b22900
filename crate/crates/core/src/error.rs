use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coupling g must be positive, got {0}")]
    NonPositiveCoupling(f64),

    #[error("spatial dimension must be at least 1, got {0}")]
    InvalidDimension(u32),

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("r0^2 must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("alpha = {0} has no (r0, mu, eta) form; it requires alpha > 0")]
    NoJackiwForm(f64),

    #[error("eta = {0} lies outside (0, 1)")]
    EtaOutOfRange(f64),

    #[error("lambda = {0} must be positive to fix alpha from alpha^2 = 4 lambda beta")]
    NonPositiveLambda(f64),

    #[error("beta = {0} must be positive")]
    NonPositiveBeta(f64),

    #[error("no root in (0, 1): {0}")]
    NoRoot(String),

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("at least {min} subdivisions required, got {got}")]
    TooFewSubdivisions { min: usize, got: usize },

    #[error("parameters violate the zero-mode constraints (m residual {m_residual:e}, E0 residual {energy_residual:e})")]
    ConstraintViolated {
        m_residual: f64,
        energy_residual: f64,
    },

    #[error("radius must be strictly positive, got {0}")]
    NonPositiveRadiusArgument(f64),

    #[error("trial function with a = {0} is not normalizable")]
    NonNormalizable(f64),

    #[error("grid needs at least {min} points, got {got}")]
    GridTooSmall { min: usize, got: usize },

    #[error("domain extent r_max must be positive and finite, got {0}")]
    InvalidExtent(f64),

    #[error("domain too short: V(r_max) = {potential} is below 10 |E| = {bound}")]
    DomainTooShort { potential: f64, bound: f64 },

    #[error("inverse iteration did not converge in {0} iterations")]
    InverseIterationStagnated(usize),

    #[error("grid too coarse: raw eigenvalues {coarse} and {fine} differ by more than 10% of scale {scale}")]
    GridTooCoarse { coarse: f64, fine: f64, scale: f64 },
}
