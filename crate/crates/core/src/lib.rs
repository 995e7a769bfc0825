//! Desk-scale laboratory for the Riemann zeta function: extended-precision
//! evaluation of zeta, its derivative and the associated special functions,
//! location and certification of zeros of zeta (critical line) and zeta'
//! (rectangles in the strip), pairing of the two populations, and a catalogue
//! of verification statistics with recorded empirical constants.
//!
//! Everything is deterministic: evaluators are pure functions of the point and
//! the [`budget::PrecisionBudget`], backed by correctly rounded MPFR
//! arithmetic, so identical inputs reproduce identical bits regardless of
//! thread count.

pub mod bernoulli;
pub mod budget;
pub mod complex;
pub mod error;
pub mod gamma;
pub mod theta;
pub mod verify;
pub mod zeros;
pub mod zeta;

mod jet;

pub use budget::{with_escalation, EvalResult, PrecisionBudget};
pub use complex::Complex;
pub use error::{EvalError, VerifyError, ZeroError};
pub use gamma::{eval_digamma, log_gamma};
pub use theta::{hardy_z, riemann_siegel_theta};
pub use zeros::{
    count_zeros_n, find_zeta_prime_zeros, nearest_ordinate, scan_critical_zeros, DerivSet,
    DerivZero, SearchRect, ZeroPairing, ZeroSet, ZetaZero,
};
pub use zeta::{eval_zeta, eval_zeta_log_deriv, eval_zeta_pair, eval_zeta_prime};
