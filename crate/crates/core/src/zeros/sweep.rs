//! Adaptive tracking of the continuous argument of an analytic function along
//! a segment. Consecutive samples are refined until the phase step stays below
//! pi/2 and the magnitude ratio stays moderate, which keeps the branch
//! unambiguous without derivative bounds.

use crate::budget::{EvalResult, PrecisionBudget};
use crate::complex::Complex;
use crate::error::{EvalError, ZeroError};
use rug::Float;

const MAX_DEPTH: u32 = 48;

/// Change of argument of `f` along the straight segment from `a` to `b`,
/// in radians.
///
/// `near_zero` is the modulus threshold below which a sample is treated as a
/// boundary-zero hit (the argument principle needs a zero-free path).
pub(crate) fn arg_variation<F>(
    f: &F,
    a: &Complex,
    b: &Complex,
    budget: &PrecisionBudget,
    near_zero: f64,
    initial_chunks: usize,
) -> Result<f64, ZeroError>
where
    F: Fn(&Complex, &PrecisionBudget) -> Result<EvalResult, EvalError>,
{
    let chunks = initial_chunks.max(1);
    let mut delta = 0.0f64;

    let mut prev_pt = a.clone();
    let mut prev_val = sample(f, &prev_pt, budget, near_zero)?;
    for i in 1..=chunks {
        let pt = lerp(a, b, i as f64 / chunks as f64);
        let val = sample(f, &pt, budget, near_zero)?;
        delta += refine(f, &prev_pt, &prev_val, &pt, &val, budget, near_zero, 0)?;
        prev_pt = pt;
        prev_val = val;
    }
    Ok(delta)
}

fn lerp(a: &Complex, b: &Complex, u: f64) -> Complex {
    let p = a.prec();
    let uf = Float::with_val(p, u);
    let one_minus = Float::with_val(p, 1.0 - u);
    Complex::new(
        Float::with_val(p, a.re() * &one_minus) + Float::with_val(p, b.re() * &uf),
        Float::with_val(p, a.im() * &one_minus) + Float::with_val(p, b.im() * &uf),
    )
}

fn sample<F>(
    f: &F,
    pt: &Complex,
    budget: &PrecisionBudget,
    near_zero: f64,
) -> Result<(f64, f64), ZeroError>
where
    F: Fn(&Complex, &PrecisionBudget) -> Result<EvalResult, EvalError>,
{
    let v = f(pt, budget)?;
    let (re, im) = v.value.to_f64_pair();
    let mag = re.hypot(im);
    if !(mag > near_zero) {
        return Err(ZeroError::BoundaryNearZero {
            sigma: pt.re().to_f64(),
            t: pt.im().to_f64(),
        });
    }
    Ok((re, im))
}

#[allow(clippy::too_many_arguments)]
fn refine<F>(
    f: &F,
    a: &Complex,
    va: &(f64, f64),
    b: &Complex,
    vb: &(f64, f64),
    budget: &PrecisionBudget,
    near_zero: f64,
    depth: u32,
) -> Result<f64, ZeroError>
where
    F: Fn(&Complex, &PrecisionBudget) -> Result<EvalResult, EvalError>,
{
    let dphi = wrapped_phase_step(va, vb);
    let mag_a = va.0.hypot(va.1);
    let mag_b = vb.0.hypot(vb.1);
    let ratio = mag_b / mag_a;
    if dphi.abs() < std::f64::consts::FRAC_PI_2 && (0.25..=4.0).contains(&ratio) {
        return Ok(dphi);
    }
    if depth >= MAX_DEPTH {
        return Err(ZeroError::WindingInstability {
            sigma_min: a.re().to_f64(),
            sigma_max: b.re().to_f64(),
            t_min: a.im().to_f64(),
            t_max: b.im().to_f64(),
            detail: "argument step stayed >= pi/2 after maximum refinement",
        });
    }
    let mid = lerp(a, b, 0.5);
    let vm = sample(f, &mid, budget, near_zero)?;
    Ok(refine(f, a, va, &mid, &vm, budget, near_zero, depth + 1)?
        + refine(f, &mid, &vm, b, vb, budget, near_zero, depth + 1)?)
}

/// Principal value of `arg(vb) - arg(va)`, wrapped into `(-pi, pi]`.
fn wrapped_phase_step(va: &(f64, f64), vb: &(f64, f64)) -> f64 {
    // arg(vb/va) without the division: cross/dot.
    let dot = va.0 * vb.0 + va.1 * vb.1;
    let cross = va.0 * vb.1 - va.1 * vb.0;
    cross.atan2(dot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::EvalResult;

    fn ident(pt: &Complex, _b: &PrecisionBudget) -> Result<EvalResult, EvalError> {
        Ok(EvalResult::new(pt.clone(), 0.0, false))
    }

    #[test]
    fn quarter_turn_of_identity() {
        // f(z) = z from 1 to i sweeps pi/2.
        let b = PrecisionBudget::standard(64);
        let a = Complex::from_f64(96, 1.0, 0.0);
        let c = Complex::from_f64(96, 0.0, 1.0);
        let delta = arg_variation(&ident, &a, &c, &b, 1e-12, 4).unwrap();
        assert!((delta - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
    }

    #[test]
    fn near_zero_sample_is_an_error() {
        let b = PrecisionBudget::standard(64);
        let a = Complex::from_f64(96, 1.0, 0.0);
        let c = Complex::from_f64(96, -1.0, 1e-15);
        // The segment passes through ~0 where |z| < near_zero.
        let r = arg_variation(&ident, &a, &c, &b, 1e-6, 8);
        assert!(matches!(r, Err(ZeroError::BoundaryNearZero { .. })));
    }

    #[test]
    fn phase_wrap_is_principal() {
        assert!((wrapped_phase_step(&(1.0, -0.1), &(1.0, 0.1)) - 0.1994).abs() < 1e-3);
        // Crossing the branch cut yields the principal representative.
        assert!((wrapped_phase_step(&(-1.0, -0.1), &(-1.0, 0.1)) + 0.1994).abs() < 1e-3);
    }
}
