//! Error types shared across the evaluation, zero-finding and verification layers.

use thiserror::Error;

/// Errors raised by the function evaluators.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum EvalError {
    #[error("zeta has a pole at s = 1")]
    PoleAtOne,

    #[error("digamma has a pole at the nonpositive integer {0}")]
    PoleAtNonpositiveInteger(i64),

    #[error("budget infeasible: {reason} (achieved bound {achieved:e}, target {target:e})")]
    BudgetInfeasible {
        reason: &'static str,
        achieved: f64,
        target: f64,
    },

    #[error("denominator too close to a zero of zeta: |zeta(s)| = {magnitude:e} <= 10*target")]
    NearZeroDenominator { magnitude: f64 },

    #[error("argument outside the supported domain: {0}")]
    Domain(&'static str),
}

/// Errors raised while locating or certifying zeros.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ZeroError {
    #[error(
        "certification mismatch in [{t_min}, {t_max}]: {found} sign changes vs {expected} from the argument principle"
    )]
    CertificationMismatch {
        t_min: f64,
        t_max: f64,
        found: usize,
        expected: usize,
    },

    #[error("contour passes too close to a zero ordinate near t = {t}")]
    OrdinateCollision { t: f64 },

    #[error("winding number unstable over [{sigma_min},{sigma_max}]x[{t_min},{t_max}]: {detail}")]
    WindingInstability {
        sigma_min: f64,
        sigma_max: f64,
        t_min: f64,
        t_max: f64,
        detail: &'static str,
    },

    #[error("Newton iterate escaped rectangle {rect_id}")]
    NewtonEscape { rect_id: String },

    #[error("boundary evaluation fell below the near-zero threshold at ({sigma}, {t})")]
    BoundaryNearZero { sigma: f64, t: f64 },

    #[error("certified coverage does not contain [{lo}, {hi}]")]
    InsufficientCoverage { lo: f64, hi: f64 },

    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Errors raised by the verification checks.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum VerifyError {
    #[error("certified coverage does not contain [{lo}, {hi}]")]
    InsufficientCoverage { lo: f64, hi: f64 },

    #[error("zero #{index} is a suspected multiple zero; check requires a simple zero")]
    SimplicityFlag { index: u64 },

    #[error("gamma' collides with a zeta ordinate (distance {distance:e})")]
    OrdinateCollision { distance: f64 },

    #[error("beta' = 1/2 to working precision; statistic undefined")]
    DegenerateBeta,

    #[error("no zeta' zeros available in (0, {t}]")]
    EmptyPopulation { t: f64 },

    #[error("parameter a must be positive, got {0}")]
    NonpositiveA(f64),

    #[error(transparent)]
    Eval(#[from] EvalError),
}
