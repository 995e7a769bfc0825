//! Complex log-Gamma and digamma via recurrence shifts into the Stirling zone.
//!
//! `lnGamma` is the analytic branch on the right half-plane (real on the
//! positive axis), obtained from the Stirling series at `z = s + m` and
//! `lnGamma(s) = lnGamma(s+m) - sum_k Log(s+k)` with principal logs; for
//! `Re s > 0` every factor stays in the right half-plane, so the recurrence
//! reproduces the analytic branch exactly.
//!
//! Remainders of the asymptotic series are bounded by the first omitted term
//! inflated by `sec(arg(z)/2)^(2J+4)` (Binet-type bound); per the error-bound
//! policy these asymptotic bounds are reported with `heuristic = true`.

use crate::bernoulli;
use crate::budget::{EvalResult, PrecisionBudget};
use crate::complex::{self, Complex};
use crate::error::EvalError;
use rug::Float;

/// The Stirling series reaches `~2^-wp` only once `|z|` exceeds roughly
/// `wp * ln 2 / (2 pi)`; add margin for the secant inflation.
fn stirling_radius(wp: u32) -> f64 {
    (0.13 * wp as f64).max(10.0)
}

fn check_pole(s: &Complex) -> Result<(), EvalError> {
    if s.im().is_zero() && (s.re().is_zero() || (*s.re() < 0.0 && s.re().is_integer())) {
        return Err(EvalError::PoleAtNonpositiveInteger(s.re().to_f64() as i64));
    }
    Ok(())
}

/// Principal-branch `lnGamma(s)` for `Re s > 0`.
pub fn log_gamma(s: &Complex, budget: &PrecisionBudget) -> Result<EvalResult, EvalError> {
    if !(s.re().to_f64() > 0.0) {
        return Err(EvalError::Domain("log_gamma requires Re s > 0"));
    }
    let wp = budget.working_prec();
    let target = budget.target_abs_error();
    let sw = s.with_prec(wp);
    let radius = stirling_radius(wp);

    // Shift until |s + m| is inside the Stirling zone.
    let (sig, t) = sw.to_f64_pair();
    let mut m = 0u32;
    while ((sig + m as f64).powi(2) + t * t).sqrt() < radius {
        m += 1;
    }
    let z = sw.add_real(&Float::with_val(wp, m));

    let (value, tail, terms) = stirling_log_gamma(&z, wp, target)?;
    let mut acc = value;
    let mut shift_mag = 0f64;
    for k in 0..m {
        let lg = sw.add_real(&Float::with_val(wp, k)).ln();
        shift_mag += lg.norm_f64();
        acc = acc.sub(&lg);
    }

    let eps_wp = 2f64.powi(-(wp as i32) + 2);
    let rounding = (terms as f64 + m as f64 + 8.0) * eps_wp * (acc.norm_f64() + shift_mag + 1.0);
    let bound = tail + rounding;
    if !(bound <= target) {
        return Err(EvalError::BudgetInfeasible {
            reason: "log-gamma asymptotic series cannot reach the target",
            achieved: bound,
            target,
        });
    }
    Ok(EvalResult::new(
        acc.with_prec(budget.mantissa_bits()),
        bound,
        true,
    ))
}

/// Stirling series at `z` (already inside the zone). Returns the value, the
/// remainder bound, and the number of series terms used.
fn stirling_log_gamma(z: &Complex, wp: u32, target: f64) -> Result<(Complex, f64, usize), EvalError> {
    let ln_z = z.ln();
    let half = Float::with_val(wp, 0.5);
    let mut acc = z.add_real(&(-half.clone())).mul(&ln_z).sub(z);
    acc = acc.add_real(&(complex::ln_two_pi(wp) >> 1u32)); // + ln(2 pi)/2

    let phi_half = z.arg().to_f64().abs() / 2.0;
    let ln_sec = -(phi_half.cos().ln());
    let zinv = z.recip();
    let zinv2 = zinv.mul(&zinv);
    let mut zpow = zinv; // z^(1-2j) at j = 1
    let mut j = 1u32;
    let tail;
    loop {
        let coeff = bernoulli::stirling_coeff(j, wp);
        acc = acc.add(&zpow.scale(&coeff));
        zpow = zpow.mul(&zinv2);
        // First omitted term, inflated by sec(phi/2)^(2j+4).
        let next = bernoulli::stirling_coeff(j + 1, wp).to_f64().abs() * zpow.norm_f64();
        let inflate = ((2.0 * j as f64 + 4.0) * ln_sec).exp();
        let b = next * inflate;
        if b <= target / 4.0 {
            tail = b;
            break;
        }
        j += 1;
        if j > 300 {
            return Err(EvalError::BudgetInfeasible {
                reason: "Stirling series for log-gamma diverges before the target",
                achieved: b,
                target,
            });
        }
    }
    Ok((acc, tail, j as usize))
}

/// `Gamma'(s)/Gamma(s)` via recurrence shift plus the asymptotic expansion.
pub fn eval_digamma(s: &Complex, budget: &PrecisionBudget) -> Result<EvalResult, EvalError> {
    check_pole(s)?;
    let wp = budget.working_prec();
    let target = budget.target_abs_error();
    let sw = s.with_prec(wp);

    if sw.re().to_f64() < 0.5 {
        // Reflection: psi(s) = psi(1-s) - pi cot(pi s).
        let one_minus = Complex::real(wp, 1.0).sub(&sw);
        let inner = eval_digamma(&one_minus, budget)?;
        let pi = complex::pi(wp);
        let ps = sw.scale(&pi);
        let cot = ps.cos().div(&ps.sin());
        let value = inner.value.with_prec(wp).sub(&cot.scale(&pi));
        let bound = inner.abs_error_bound
            + 2f64.powi(-(wp as i32) + 4) * (cot.norm_f64() + 1.0) * pi.to_f64();
        if !(bound <= target) {
            return Err(EvalError::BudgetInfeasible {
                reason: "digamma reflection cannot reach the target",
                achieved: bound,
                target,
            });
        }
        return Ok(EvalResult::new(
            value.with_prec(budget.mantissa_bits()),
            bound,
            true,
        ));
    }

    let radius = stirling_radius(wp);
    let (sig, t) = sw.to_f64_pair();
    let mut m = 0u32;
    while ((sig + m as f64).powi(2) + t * t).sqrt() < radius {
        m += 1;
    }
    let z = sw.add_real(&Float::with_val(wp, m));

    // psi(z) = Log z - 1/(2z) - sum_j B_2j/(2j) z^-2j + R
    let mut acc = z.ln();
    let zinv = z.recip();
    acc = acc.sub(&zinv.scale_f64(0.5));
    let zinv2 = zinv.mul(&zinv);
    let phi_half = z.arg().to_f64().abs() / 2.0;
    let ln_sec = -(phi_half.cos().ln());
    let mut zpow = zinv2.clone(); // z^-2j at j = 1
    let mut j = 1u32;
    let tail;
    loop {
        let coeff = bernoulli::digamma_coeff(j, wp);
        acc = acc.sub(&zpow.scale(&coeff));
        zpow = zpow.mul(&zinv2);
        let next = bernoulli::digamma_coeff(j + 1, wp).to_f64().abs() * zpow.norm_f64();
        let inflate = ((2.0 * j as f64 + 4.0) * ln_sec).exp();
        let b = next * inflate;
        if b <= target / 4.0 {
            tail = b;
            break;
        }
        j += 1;
        if j > 300 {
            return Err(EvalError::BudgetInfeasible {
                reason: "digamma asymptotic series diverges before the target",
                achieved: b,
                target,
            });
        }
    }

    // Undo the shift: psi(s) = psi(z) - sum_{k=0}^{m-1} 1/(s+k).
    let mut shift_mag = 0f64;
    for k in 0..m {
        let r = sw.add_real(&Float::with_val(wp, k)).recip();
        shift_mag += r.norm_f64();
        acc = acc.sub(&r);
    }

    let eps_wp = 2f64.powi(-(wp as i32) + 2);
    let rounding = (j as f64 + m as f64 + 8.0) * eps_wp * (acc.norm_f64() + shift_mag + 1.0);
    let bound = tail + rounding;
    if !(bound <= target) {
        return Err(EvalError::BudgetInfeasible {
            reason: "digamma cannot reach the target at this precision",
            achieved: bound,
            target,
        });
    }
    Ok(EvalResult::new(
        acc.with_prec(budget.mantissa_bits()),
        bound,
        true,
    ))
}
