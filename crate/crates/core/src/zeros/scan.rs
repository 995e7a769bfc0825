//! Critical-line zero scan: sign changes of Hardy's Z on a mean-gap-aware
//! grid, refined by bisection-then-secant, certified against the
//! argument-principle count for the window.

use super::count::count_zeros_n;
use super::ZetaZero;
use crate::budget::PrecisionBudget;
use crate::error::{EvalError, ZeroError};
use crate::theta::hardy_z;
use crate::zeta::T_CAP;
use rug::Float;

/// Initial grid step near `t`: an eighth of the mean zero gap.
fn grid_step(t: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    tau / (8.0 * (t / tau).ln().max(0.5))
}

/// Scans `[t_min, t_max]` and certifies the result against
/// `count_zeros_N(t_max) - count_zeros_N(t_min)`.
pub fn scan_critical_zeros(
    t_min: f64,
    t_max: f64,
    budget: &PrecisionBudget,
) -> Result<Vec<ZetaZero>, ZeroError> {
    let c_lo = count_with_nudge(t_min, budget)?;
    let c_hi = count_with_nudge(t_max, budget)?;
    scan_critical_zeros_with_counts(t_min, t_max, budget, c_lo, c_hi)
}

/// Same as [`scan_critical_zeros`] with the window counts supplied by the
/// caller (so a pipeline can share counts between adjacent windows).
pub fn scan_critical_zeros_with_counts(
    t_min: f64,
    t_max: f64,
    budget: &PrecisionBudget,
    count_lo: u64,
    count_hi: u64,
) -> Result<Vec<ZetaZero>, ZeroError> {
    if !(2.0 <= t_min && t_min < t_max && t_max <= T_CAP) {
        return Err(ZeroError::Eval(EvalError::Domain(
            "scan window must satisfy 2 <= t_min < t_max <= desk-scale cap",
        )));
    }
    let expected = (count_hi - count_lo) as usize;

    let mut active = budget.clone();
    for escalation in 0..2 {
        for halving in 0..=6u32 {
            let brackets = bracket_sign_changes(t_min, t_max, &active, halving)?;
            if brackets.len() == expected {
                let mut out = Vec::with_capacity(expected);
                for (i, (a, b)) in brackets.into_iter().enumerate() {
                    let (ordinate, residual) = refine_zero(a, b, &active)?;
                    out.push(ZetaZero {
                        index: count_lo + 1 + i as u64,
                        ordinate,
                        residual,
                        certified: true,
                        suspect_multiple: false,
                    });
                }
                flag_suspect_multiples(&mut out, active.target_abs_error());
                return Ok(out);
            }
            // On overshoot a denser grid cannot help; re-bracket only makes
            // sense for undercounts.
            if brackets.len() > expected {
                break;
            }
        }
        if escalation == 0 {
            active = active.escalate();
        }
    }

    let brackets = bracket_sign_changes(t_min, t_max, &active, 6)?;
    Err(ZeroError::CertificationMismatch {
        t_min,
        t_max,
        found: brackets.len(),
        expected,
    })
}

/// Retries the count at deterministically nudged ordinate offsets when the
/// contour grazes a zero.
fn count_with_nudge(t: f64, budget: &PrecisionBudget) -> Result<u64, ZeroError> {
    let mut last = None;
    for k in 0..5 {
        let t_k = t + k as f64 * 1e-3;
        match count_zeros_n(t_k, budget) {
            Ok((n, _)) => return Ok(n),
            Err(e @ ZeroError::OrdinateCollision { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap())
}

/// Walks the grid and returns the sign-change brackets of Z.
fn bracket_sign_changes(
    t_min: f64,
    t_max: f64,
    budget: &PrecisionBudget,
    halvings: u32,
) -> Result<Vec<(f64, f64)>, ZeroError> {
    let shrink = 2f64.powi(halvings as i32);
    let mut brackets = Vec::new();
    let mut t = t_min;
    let mut z_prev = z_at_grid_point(t, budget, grid_step(t) / shrink)?;
    while t < t_max {
        let h = grid_step(t) / shrink;
        let t_next = (t + h).min(t_max);
        let z_next = z_at_grid_point(t_next, budget, h)?;
        if z_prev.is_sign_negative() != z_next.is_sign_negative() {
            brackets.push((t, t_next));
        }
        t = t_next;
        z_prev = z_next;
    }
    Ok(brackets)
}

/// Z at a grid point, deterministically perturbed when the sample lands too
/// close to a zero to carry a trustworthy sign.
fn z_at_grid_point(t: f64, budget: &PrecisionBudget, h: f64) -> Result<Float, ZeroError> {
    let wp = budget.working_prec();
    let near = 10.0 * budget.target_abs_error();
    let mut t_try = t;
    for _ in 0..5 {
        let z = hardy_z(&Float::with_val(wp, t_try), budget)?;
        let v = z.real();
        if v.clone().abs().to_f64() > near {
            return Ok(v);
        }
        t_try += 0.1371 * h;
    }
    Err(ZeroError::OrdinateCollision { t })
}

/// Bisection to a narrow bracket, then bracket-guarded secant on Z down to
/// `|Z| <= 50 * target_abs_error`.
fn refine_zero(a0: f64, b0: f64, budget: &PrecisionBudget) -> Result<(Float, f64), ZeroError> {
    let wp = budget.working_prec();
    let target = budget.target_abs_error();
    let zf = |t: &Float| -> Result<Float, ZeroError> { Ok(hardy_z(t, budget)?.real()) };

    let mut a = Float::with_val(wp, a0);
    let mut b = Float::with_val(wp, b0);
    let fa = zf(&a)?;
    let fb = zf(&b)?;
    let sign_a = fa.is_sign_negative();
    debug_assert!(sign_a != fb.is_sign_negative());

    // Narrow the bracket before letting the secant loose.
    let mut fa_cur = fa;
    let mut fb_cur = fb;
    while Float::with_val(wp, &b - &a).to_f64() > 1e-3 {
        let mid = Float::with_val(wp, &a + &b) / 2u32;
        let fm = zf(&mid)?;
        if fm.is_sign_negative() == sign_a {
            a = mid;
            fa_cur = fm;
        } else {
            b = mid;
            fb_cur = fm;
        }
    }

    let (mut x0, mut f0) = (a.clone(), fa_cur);
    let (mut x1, mut f1) = (b.clone(), fb_cur);
    for _ in 0..120 {
        if f1.clone().abs().to_f64() <= 50.0 * target {
            return Ok((
                Float::with_val(budget.mantissa_bits(), &x1),
                f1.abs().to_f64(),
            ));
        }
        let denom = Float::with_val(wp, &f1 - &f0);
        let mut x2 = if denom.is_zero() {
            Float::with_val(wp, &a + &b) / 2u32
        } else {
            let step = Float::with_val(wp, &x1 - &x0) * &f1 / denom;
            Float::with_val(wp, &x1 - step)
        };
        if !(x2 > a && x2 < b) {
            x2 = Float::with_val(wp, &a + &b) / 2u32;
        }
        let f2 = zf(&x2)?;
        if f2.is_sign_negative() == sign_a {
            a = x2.clone();
        } else {
            b = x2.clone();
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    Err(ZeroError::Eval(EvalError::BudgetInfeasible {
        reason: "zero refinement stalled before reaching the residual target",
        achieved: f1.abs().to_f64(),
        target: 50.0 * target,
    }))
}

/// Ordinates closer than `1e3 * target` are flagged as suspected multiples.
fn flag_suspect_multiples(zeros: &mut [ZetaZero], target: f64) {
    let threshold = 1e3 * target;
    for i in 1..zeros.len() {
        let gap = Float::with_val(
            zeros[i].ordinate.prec(),
            &zeros[i].ordinate - &zeros[i - 1].ordinate,
        )
        .to_f64();
        if gap < threshold {
            zeros[i].suspect_multiple = true;
            zeros[i - 1].suspect_multiple = true;
        }
    }
}
