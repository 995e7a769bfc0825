//! Exact zero counting by argument variation.
//!
//! `N(T)` is computed from the continuous argument of zeta along the segments
//! `2 -> 2+iT -> 1/2+iT` (which gives `S(T) = arg/pi`), combined with
//! `N(T) = theta(T)/pi + 1 + S(T)`. The result must land on an integer; a
//! large residual means the contour grazed a zero.

use super::sweep::arg_variation;
use crate::budget::PrecisionBudget;
use crate::complex::Complex;
use crate::error::ZeroError;
use crate::theta::riemann_siegel_theta;
use crate::zeta::eval_zeta;
use rug::Float;

/// Number of zeta zeros with `0 < gamma <= T`, together with `S(T)`.
///
/// Requires `T >= 2` and `T` not an ordinate to working precision.
pub fn count_zeros_n(t: f64, budget: &PrecisionBudget) -> Result<(u64, f64), ZeroError> {
    if !(2.0..=crate::zeta::T_CAP).contains(&t) {
        return Err(ZeroError::Eval(crate::error::EvalError::Domain(
            "count requires 2 <= T <= desk-scale cap",
        )));
    }
    let wp = budget.working_prec();
    let near_zero = 10.0 * budget.target_abs_error();

    // Endpoint guard: the left end of the horizontal leg is the delicate one.
    let end = Complex::new(Float::with_val(wp, 0.5), Float::with_val(wp, t));
    let v_end = eval_zeta(&end, budget)?;
    if v_end.value.norm_f64() <= near_zero {
        return Err(ZeroError::OrdinateCollision { t });
    }

    let a = Complex::from_f64(wp, 2.0, 0.0);
    let b = Complex::new(Float::with_val(wp, 2.0), Float::with_val(wp, t));
    // ~0.6 rad of phase per unit t on sigma = 2; quarter-unit chunks keep the
    // initial refinement shallow.
    let vertical_chunks = ((t * 0.4).ceil() as usize).max(4);
    let leg1 = arg_variation(&eval_zeta, &a, &b, budget, near_zero, vertical_chunks)
        .map_err(|e| collision_on_boundary(e, t))?;
    let leg2 = arg_variation(&eval_zeta, &b, &end, budget, near_zero, 6)
        .map_err(|e| collision_on_boundary(e, t))?;

    let s_measured = (leg1 + leg2) / std::f64::consts::PI;
    let theta = riemann_siegel_theta(&Float::with_val(wp, t), budget)?;
    let smooth = theta.value.re().to_f64() / std::f64::consts::PI + 1.0;
    let n_float = smooth + s_measured;
    let n = n_float.round();
    if (n_float - n).abs() > 0.25 || n < 0.0 {
        return Err(ZeroError::OrdinateCollision { t });
    }
    let s_t = n - smooth;
    Ok((n as u64, s_t))
}

fn collision_on_boundary(e: ZeroError, t: f64) -> ZeroError {
    match e {
        ZeroError::BoundaryNearZero { .. } => ZeroError::OrdinateCollision { t },
        other => other,
    }
}
