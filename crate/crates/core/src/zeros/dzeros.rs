//! Zeros of `zeta'` in rectangles: adaptive winding numbers on the boundary,
//! recursive quartering until each cell holds at most one zero, then Newton
//! iteration from the cell center (using the analytic `zeta''`).

use super::sweep::arg_variation;
use super::{DerivZero, SearchRect};
use crate::budget::{EvalResult, PrecisionBudget};
use crate::complex::Complex;
use crate::error::{EvalError, ZeroError};
use crate::zeta::{eval_zeta, eval_zeta_prime, zeta_prime_with_derivative, T_CAP};
use rug::Float;

const MAX_SUBDIVISION_DEPTH: u32 = 48;
const MIDLINE_ATTEMPTS: usize = 8;

/// Counterclockwise winding number of `f` around the rectangle boundary.
///
/// The boundary must be zero-free; a sample below `10 * target_abs_error`
/// aborts with [`ZeroError::BoundaryNearZero`].
pub fn winding_number<F>(
    f: &F,
    rect: &SearchRect,
    budget: &PrecisionBudget,
) -> Result<u32, ZeroError>
where
    F: Fn(&Complex, &PrecisionBudget) -> Result<EvalResult, EvalError>,
{
    let wp = budget.working_prec();
    let near_zero = 10.0 * budget.target_abs_error();
    let corner = |sig: f64, t: f64| Complex::from_f64(wp, sig, t);
    let corners = [
        corner(rect.sigma_min, rect.t_min),
        corner(rect.sigma_max, rect.t_min),
        corner(rect.sigma_max, rect.t_max),
        corner(rect.sigma_min, rect.t_max),
    ];
    let mut delta = 0.0f64;
    for i in 0..4 {
        let a = &corners[i];
        let b = &corners[(i + 1) % 4];
        let len = (a.re().to_f64() - b.re().to_f64()).abs() + (a.im().to_f64() - b.im().to_f64()).abs();
        let chunks = ((len * 3.0).ceil() as usize).max(4);
        delta += arg_variation(f, a, b, budget, near_zero, chunks)?;
    }
    let w = delta / std::f64::consts::TAU;
    let rounded = w.round();
    if (w - rounded).abs() > 0.2 || rounded < -0.2 {
        return Err(ZeroError::WindingInstability {
            sigma_min: rect.sigma_min,
            sigma_max: rect.sigma_max,
            t_min: rect.t_min,
            t_max: rect.t_max,
            detail: "total argument change did not land on a nonnegative integer",
        });
    }
    Ok(rounded as u32)
}

/// Winding number of `zeta'` around the rectangle.
pub fn winding_zeta_prime(rect: &SearchRect, budget: &PrecisionBudget) -> Result<u32, ZeroError> {
    winding_number(&eval_zeta_prime, rect, budget)
}

/// Winding number of `zeta` around the rectangle (used for the off-line
/// zero check and as an independent count oracle).
pub fn winding_zeta(rect: &SearchRect, budget: &PrecisionBudget) -> Result<u32, ZeroError> {
    winding_number(&eval_zeta, rect, budget)
}

/// Finds every zero of `zeta'` inside the rectangle.
///
/// The rectangle must lie in `0 <= sigma <= 3`, `2 <= t <= 10^4`, and its
/// boundary must be zero-free; when a boundary sample trips the near-zero
/// threshold the edges are nudged outward by `3 * sqrt(target_abs_error)` and
/// the computation restarts. The returned list carries exactly `winding` zeros
/// sorted by ordinate.
pub fn find_zeta_prime_zeros(
    rect: &SearchRect,
    budget: &PrecisionBudget,
) -> Result<Vec<DerivZero>, ZeroError> {
    find_zeta_prime_zeros_tagged(rect, budget, "R")
}

/// Same as [`find_zeta_prime_zeros`] with a caller-chosen rectangle id prefix
/// (provenance for the produced zeros).
pub fn find_zeta_prime_zeros_tagged(
    rect: &SearchRect,
    budget: &PrecisionBudget,
    id: &str,
) -> Result<Vec<DerivZero>, ZeroError> {
    if !(0.0 <= rect.sigma_min && rect.sigma_max <= 3.0 && 2.0 <= rect.t_min && rect.t_max <= T_CAP)
    {
        return Err(ZeroError::Eval(EvalError::Domain(
            "zeta' search rectangles must lie in [0,3] x [2, desk-scale cap]",
        )));
    }
    let delta = 3.0 * budget.target_abs_error().sqrt();
    let mut work = rect.clone();
    let mut budget_now = budget.clone();
    let mut last_err = None;
    for attempt in 0..8u32 {
        match winding_number(&eval_zeta_prime, &work, &budget_now) {
            Ok(w) => {
                let mut out = Vec::with_capacity(w as usize);
                solve_rect(&work, w, id, 0, &budget_now, &mut out)?;
                if out.len() != w as usize {
                    return Err(ZeroError::WindingInstability {
                        sigma_min: work.sigma_min,
                        sigma_max: work.sigma_max,
                        t_min: work.t_min,
                        t_max: work.t_max,
                        detail: "recovered zeros do not match the top-level winding",
                    });
                }
                out.sort_by(|a, b| {
                    (a.gamma_f64(), a.beta_f64())
                        .partial_cmp(&(b.gamma_f64(), b.beta_f64()))
                        .unwrap()
                });
                return Ok(out);
            }
            // A zero on (or effectively on) the boundary shows up either as a
            // near-zero sample or as refinement blowing its depth budget.
            // Grow the rectangle outward, geometrically, staying in the strip;
            // halfway through, escalate precision as well.
            Err(
                e @ (ZeroError::BoundaryNearZero { .. } | ZeroError::WindingInstability { .. }),
            ) => {
                let d = delta * 4f64.powi(attempt as i32);
                work = SearchRect::new(
                    (work.sigma_min - d).max(0.0),
                    (work.sigma_max + d).min(3.0),
                    (work.t_min - d).max(2.0),
                    (work.t_max + d).min(T_CAP),
                );
                if attempt == 4 {
                    budget_now = budget_now.escalate();
                }
                last_err = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap())
}

fn solve_rect(
    rect: &SearchRect,
    w: u32,
    id: &str,
    depth: u32,
    budget: &PrecisionBudget,
    out: &mut Vec<DerivZero>,
) -> Result<(), ZeroError> {
    if w == 0 {
        return Ok(());
    }
    if depth >= MAX_SUBDIVISION_DEPTH {
        return Err(ZeroError::NewtonEscape {
            rect_id: id.to_string(),
        });
    }
    if w == 1 {
        if let Some(zero) = newton_refine(rect, budget, id)? {
            out.push(zero);
            return Ok(());
        }
        // Fall through: shrink the cell around the zero and retry.
    }

    let (children, windings) = quarter(rect, w, budget)?;
    for (k, (child, cw)) in children.iter().zip(windings.iter()).enumerate() {
        let child_id = format!("{id}.{k}");
        solve_rect(child, *cw, &child_id, depth + 1, budget, out)?;
    }
    Ok(())
}

/// Splits the rectangle at (possibly nudged) midlines and returns the four
/// children with their windings, which are guaranteed to sum to `w`.
fn quarter(
    rect: &SearchRect,
    w: u32,
    budget: &PrecisionBudget,
) -> Result<([SearchRect; 4], [u32; 4]), ZeroError> {
    let delta_s = 3.0 * budget.target_abs_error().sqrt() * (rect.sigma_max - rect.sigma_min).max(1.0);
    let delta_t = 3.0 * budget.target_abs_error().sqrt() * (rect.t_max - rect.t_min).max(1.0);
    let mut last = None;
    for attempt in 0..MIDLINE_ATTEMPTS {
        let grow = 4f64.powi(attempt as i32) - 1.0;
        let mid_s = 0.5 * (rect.sigma_min + rect.sigma_max) + grow * delta_s;
        let mid_t = 0.5 * (rect.t_min + rect.t_max) + grow * delta_t;
        if mid_s >= rect.sigma_max || mid_t >= rect.t_max {
            break;
        }
        let children = [
            SearchRect::new(rect.sigma_min, mid_s, rect.t_min, mid_t),
            SearchRect::new(mid_s, rect.sigma_max, rect.t_min, mid_t),
            SearchRect::new(rect.sigma_min, mid_s, mid_t, rect.t_max),
            SearchRect::new(mid_s, rect.sigma_max, mid_t, rect.t_max),
        ];
        let mut windings = [0u32; 4];
        let mut failed = None;
        for (i, child) in children.iter().enumerate() {
            match winding_number(&eval_zeta_prime, child, budget) {
                Ok(cw) => windings[i] = cw,
                Err(e @ (ZeroError::BoundaryNearZero { .. } | ZeroError::WindingInstability { .. })) => {
                    failed = Some(e);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if let Some(e) = failed {
            last = Some(e);
            continue;
        }
        let total: u32 = windings.iter().sum();
        if total != w {
            return Err(ZeroError::WindingInstability {
                sigma_min: rect.sigma_min,
                sigma_max: rect.sigma_max,
                t_min: rect.t_min,
                t_max: rect.t_max,
                detail: "child windings do not sum to the parent count",
            });
        }
        return Ok((children, windings));
    }
    Err(last.unwrap_or(ZeroError::WindingInstability {
        sigma_min: rect.sigma_min,
        sigma_max: rect.sigma_max,
        t_min: rect.t_min,
        t_max: rect.t_max,
        detail: "no zero-free midline found",
    }))
}

/// Newton iteration on `zeta'` from the rectangle center. Returns `None` when
/// the iterate escapes the (inflated) rectangle or fails to converge, in which
/// case the caller subdivides further.
fn newton_refine(
    rect: &SearchRect,
    budget: &PrecisionBudget,
    id: &str,
) -> Result<Option<DerivZero>, ZeroError> {
    let wp = budget.working_prec();
    let target = budget.target_abs_error();
    let guard = rect.inflate(0.15);
    let mut s = Complex::from_f64(
        wp,
        0.5 * (rect.sigma_min + rect.sigma_max),
        0.5 * (rect.t_min + rect.t_max),
    );
    for _ in 0..60 {
        let (fp, fpp) = zeta_prime_with_derivative(&s, budget)?;
        let residual = fp.value.norm_f64();
        if residual <= 50.0 * target {
            let (sig, t) = s.to_f64_pair();
            if !rect.contains(sig, t) {
                return Ok(None);
            }
            let bits = budget.mantissa_bits();
            return Ok(Some(DerivZero {
                beta: Float::with_val(bits, s.re()),
                gamma: Float::with_val(bits, s.im()),
                residual,
                rect_id: id.to_string(),
            }));
        }
        if fpp.value.norm_f64() < 1e3 * target {
            // zeta'' nearly vanishing: step undefined, let subdivision decide.
            return Ok(None);
        }
        let step = fp.value.div(&fpp.value);
        s = s.sub(&step);
        let (sig, t) = s.to_f64_pair();
        if !guard.contains(sig, t) {
            return Ok(None);
        }
    }
    Ok(None)
}
