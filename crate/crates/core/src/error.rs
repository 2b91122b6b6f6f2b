use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HardyError {
    #[error("argument x = {x} outside the open interval (0, 1)")]
    OutOfDomain { x: f64 },

    #[error("coefficient index k = {k} must be at least {min}")]
    IndexTooSmall { k: usize, min: usize },

    #[error("lattice point n = {n} must be at least {min}")]
    LatticePoint { n: usize, min: usize },

    #[error("lattice function must vanish at the origin, got u(0) = {value}")]
    BoundaryValue { value: f64 },

    #[error("degenerate supersolution: phi({n}) = {value} is not positive")]
    DegenerateSupersolution { n: usize, value: f64 },

    #[error("supersolution criterion violated at n = {n} (margin {margin})")]
    CriterionViolated { n: usize, margin: f64 },

    #[error(
        "exponent beta = {beta} violates summability 2*beta + alpha - 2 < -1 for alpha = {alpha}"
    )]
    NotSummable { alpha: f64, beta: f64 },

    #[error("inertia bracket failure at lambda = {lambda}: {count} negative pivots")]
    BracketFailure { lambda: f64, count: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, HardyError>;
