//! The Riemann-Siegel theta function and the Hardy Z-function.
//!
//! `theta(t) = Im lnGamma(1/4 + it/2) - (t/2) ln pi` on the continuous branch
//! anchored by `theta(0) = 0` (automatic: `lnGamma` is the analytic branch and
//! `Gamma(1/4)` is real). `Z(t) = e^(i theta(t)) zeta(1/2 + it)` is real for
//! real `t`; its sign changes mark the critical-line zeros.

use crate::budget::{EvalResult, PrecisionBudget};
use crate::complex::{self, Complex};
use crate::error::EvalError;
use crate::gamma::log_gamma;
use crate::zeta::eval_zeta;
use rug::Float;

/// Tightened inner budget so that error propagation through products still
/// meets the caller's target.
fn inner_budget(budget: &PrecisionBudget, divisor: f64) -> Result<PrecisionBudget, EvalError> {
    let floor = 2f64.powi((8i64 - i64::from(budget.mantissa_bits())).max(-1000) as i32);
    let t = (budget.target_abs_error() / divisor).max(floor);
    PrecisionBudget::new(budget.mantissa_bits(), t, budget.escalation_factor())
}

/// `theta(t)` for `t >= 0`, with the branch fixed by `theta(0) = 0`.
pub fn riemann_siegel_theta(t: &Float, budget: &PrecisionBudget) -> Result<EvalResult, EvalError> {
    if !(t.to_f64() >= 0.0) {
        return Err(EvalError::Domain("theta requires t >= 0"));
    }
    let wp = budget.working_prec();
    let half_t = Float::with_val(wp, t) / 2u32;
    let s = Complex::new(Float::with_val(wp, 0.25), half_t.clone());
    let lg = log_gamma(&s, &inner_budget(budget, 8.0)?)?;
    let ln_pi = complex::pi(wp).ln();
    let theta = Float::with_val(wp, lg.value.im() - half_t * ln_pi);
    let bound = lg.abs_error_bound + 2f64.powi(-(wp as i32) + 3) * (theta.to_f64().abs() + 1.0);
    if !(bound <= budget.target_abs_error()) {
        return Err(EvalError::BudgetInfeasible {
            reason: "theta cannot reach the target",
            achieved: bound,
            target: budget.target_abs_error(),
        });
    }
    Ok(EvalResult::new(
        Complex::new(Float::with_val(budget.mantissa_bits(), theta), Float::new(budget.mantissa_bits())),
        bound,
        true,
    ))
}

/// Hardy's function `Z(t) = e^(i theta(t)) zeta(1/2 + it)`, real-valued.
///
/// The imaginary residual of the rotation is folded into the error bound; the
/// returned value is the real part.
pub fn hardy_z(t: &Float, budget: &PrecisionBudget) -> Result<EvalResult, EvalError> {
    if !(t.to_f64() >= 0.0) {
        return Err(EvalError::Domain("hardy_z requires t >= 0"));
    }
    let wp = budget.working_prec();
    let inner = inner_budget(budget, 32.0)?;
    let theta = riemann_siegel_theta(t, &inner)?;
    let s = Complex::new(Float::with_val(wp, 0.5), Float::with_val(wp, t));
    let zeta = eval_zeta(&s, &inner)?;

    let th = Float::with_val(wp, theta.value.re());
    let (sin_t, cos_t) = th.sin_cos(Float::new(wp));
    let rot = Complex::new(cos_t, sin_t);
    let z = rot.mul(&zeta.value.with_prec(wp));

    let zeta_norm = zeta.value.norm_f64();
    let im_residual = z.im().to_f64().abs();
    let bound = zeta.abs_error_bound
        + zeta_norm * theta.abs_error_bound
        + im_residual
        + 2f64.powi(-(wp as i32) + 3) * (zeta_norm + 1.0);
    if !(bound <= budget.target_abs_error()) {
        return Err(EvalError::BudgetInfeasible {
            reason: "hardy z cannot reach the target",
            achieved: bound,
            target: budget.target_abs_error(),
        });
    }
    Ok(EvalResult::new(
        Complex::new(
            Float::with_val(budget.mantissa_bits(), z.re()),
            Float::new(budget.mantissa_bits()),
        ),
        bound,
        true,
    ))
}
