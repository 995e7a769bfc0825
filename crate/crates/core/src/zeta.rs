//! Euler-Maclaurin evaluation of `zeta(s)`, `zeta'(s)` and `zeta''(s)` with
//! certified absolute-error bounds.
//!
//! The formula used is
//!
//! ```text
//! zeta(s) = sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
//!         + sum_{j=1..M} B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j) + R_M
//! ```
//!
//! evaluated in second-order jets, so the derivatives are analytic term-by-term
//! differentiations of the same truncation (no finite differences). The cutoff
//! is `N = max(ceil(|t|/2), 10) + ceil(bits/4)` and `M` grows until the
//! remainder bound falls below the budget target.
//!
//! The remainder after `M` correction terms has the integral representation
//! `R_M = -P(s)/(2M+1)! * int_N^inf  Btilde_{2M+1}(x) x^(-s-2M-1) dx` with
//! `P(s) = s(s+1)...(s+2M)`, and `|Btilde_m(x)|/m! <= 4/(2pi)^m`. Bounding the
//! integrals of `x^(-sigma-2M-1)`, `ln x * x^(-sigma-2M-1)` and
//! `ln^2 x * x^(-sigma-2M-1)` in closed form gives rigorous remainder bounds
//! for the value and both derivatives; accumulated rounding is costed
//! separately from the term-magnitude sums.

use crate::budget::{EvalResult, PrecisionBudget};
use crate::complex::Complex;
use crate::error::EvalError;
use crate::jet::Jet;
use crate::{bernoulli, complex};
use once_cell::sync::Lazy;
use rug::Float;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Desk-scale ordinate cap; far above this the main sum becomes impractical.
pub const T_CAP: f64 = 1.2e4;

static LN_TABLE: Lazy<Mutex<HashMap<u32, Arc<Vec<Float>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Natural logs of `1..=n` at precision `prec`, shared and extended on demand.
fn ln_table(prec: u32, n: usize) -> Arc<Vec<Float>> {
    let mut map = LN_TABLE.lock().unwrap();
    let entry = map.entry(prec).or_insert_with(|| Arc::new(Vec::new()));
    if entry.len() < n {
        let mut v: Vec<Float> = entry.as_ref().clone();
        for k in v.len() + 1..=n {
            v.push(Float::with_val(prec, k).ln());
        }
        *entry = Arc::new(v);
    }
    Arc::clone(entry)
}

pub(crate) struct ZetaJet {
    pub z: Complex,
    pub dz: Complex,
    pub d2z: Complex,
    /// Absolute-error bounds for `z`, `dz`, `d2z`.
    pub bounds: [f64; 3],
}

/// Euler-Maclaurin cutoff for the main sum.
fn cutoff(t_abs: f64, bits: u32) -> usize {
    let base = (t_abs / 2.0).ceil().max(10.0) as usize;
    base + (bits as usize + 3) / 4
}

/// Core jet evaluation. `order` in `0..=2` selects how many derivatives must
/// meet the budget (all three are always computed; higher ones cost little).
pub(crate) fn zeta_em_jet(
    s: &Complex,
    budget: &PrecisionBudget,
    order: u8,
) -> Result<ZetaJet, EvalError> {
    debug_assert!(order <= 2);
    let sigma = s.re().to_f64();
    let t = s.im().to_f64();
    if s.im().is_zero() && *s.re() == 1 {
        return Err(EvalError::PoleAtOne);
    }
    if t.abs() > T_CAP {
        return Err(EvalError::Domain("|Im s| beyond the desk-scale cap"));
    }
    if sigma < -6.0 {
        return Err(EvalError::Domain("Re s below the supported range"));
    }

    let wp = budget.working_prec();
    let target = budget.target_abs_error();
    let sw = s.with_prec(wp);
    let n = cutoff(t.abs(), budget.mantissa_bits());
    let lns = ln_table(wp, n);

    // Main sum: k^-s = exp(-sigma ln k) * (cos(-t ln k) + i sin(-t ln k)).
    // Only the requested derivative orders are accumulated here; the k-loop
    // dominates the cost of every evaluation.
    let mut acc = Jet::zero(wp);
    // Term-magnitude sums per order, for the rounding cost.
    let mut mag = [Float::new(wp), Float::new(wp), Float::new(wp)];
    acc.f = acc.f.add_f64(1.0); // k = 1
    mag[0] += 1u32;
    for k in 2..n {
        let lk = &lns[k - 1];
        let x = Float::with_val(wp, s.re() * lk);
        let m = (-x).exp();
        let y = -Float::with_val(wp, s.im() * lk);
        let (sy, cy) = y.sin_cos(Float::new(wp));
        let term = Complex::new(Float::with_val(wp, &m * &cy), Float::with_val(wp, &m * &sy));
        acc.f = acc.f.add(&term);
        mag[0] += &m;
        if order >= 1 {
            let l1 = Float::with_val(wp, &m * lk);
            let d1t = term.scale(lk).neg();
            acc.d1 = acc.d1.add(&d1t);
            mag[1] += &l1;
            if order >= 2 {
                let d2t = d1t.scale(lk).neg();
                acc.d2 = acc.d2.add(&d2t);
                mag[2] += Float::with_val(wp, &l1 * lk);
            }
        }
    }

    let ln_n = lns[n - 1].clone();
    let nf = Float::with_val(wp, n as u32);

    // N^(1-s)/(s-1)
    let n1s = {
        // exp((1-s) ln N)
        let e = Complex::new(
            Float::with_val(wp, 1 - s.re().clone()) * &ln_n,
            -Float::with_val(wp, s.im() * &ln_n),
        );
        e.exp()
    };
    let q = Complex::new(
        Float::with_val(wp, s.re() - 1u32),
        Float::with_val(wp, s.im()),
    )
    .recip();
    let int_jet = Jet::power_decay(n1s.clone(), &ln_n).mul(&Jet::recip_linear(q.clone()));
    acc.add_assign(&int_jet);
    let qn = q.norm_f64();
    let n1s_norm = n1s.norm_f64();
    mag[0] += Float::with_val(wp, n1s_norm * qn);
    mag[1] += Float::with_val(wp, n1s_norm * qn * (ln_n.to_f64() + qn));
    mag[2] += Float::with_val(wp, n1s_norm * qn * (ln_n.to_f64() + qn).powi(2) * 2.0);

    // N^-s / 2
    let n_s_half = n1s.scale(&Float::with_val(wp, 2 * n as u32).recip());
    let half_jet = Jet::power_decay(n_s_half.clone(), &ln_n);
    acc.add_assign(&half_jet);
    let hn = n_s_half.norm_f64();
    mag[0] += Float::with_val(wp, hn);
    mag[1] += Float::with_val(wp, hn * ln_n.to_f64());
    mag[2] += Float::with_val(wp, hn * ln_n.to_f64().powi(2));

    // Correction terms with the product jet P_j = s(s+1)...(s+2j-2).
    let mut p = Jet {
        f: sw.clone(),
        d1: Complex::real(wp, 1.0),
        d2: Complex::zero(wp),
    };
    // npow = N^(1-s-2j), starting at j = 1.
    let mut npow = n1s.scale(&Float::with_val(wp, &nf * &nf).recip());
    let mut m_terms = 0usize;
    let mut prev_term_norm = f64::INFINITY;
    let rem = loop {
        let j = m_terms as u32 + 1;
        let coeff = bernoulli::zeta_em_coeff(j, wp);
        let term = Jet::power_decay(npow.clone(), &ln_n).mul(&p).scale(&coeff);
        acc.add_assign(&term);
        let tn = term.max_norm();
        mag[0] += Float::with_val(wp, term.f.norm_f64());
        mag[1] += Float::with_val(wp, term.d1.norm_f64());
        mag[2] += Float::with_val(wp, term.d2.norm_f64());
        m_terms += 1;

        // Advance P to P_{j+1} = P_j (s+2j-1)(s+2j); this is also the product
        // entering the remainder bound for M = j.
        p = p.mul(&Jet::linear(&sw, 2 * j - 1)).mul(&Jet::linear(&sw, 2 * j));
        npow = npow.scale(&Float::with_val(wp, &nf * &nf).recip());

        let r = remainder_bounds(&p, sigma, m_terms, ln_n.to_f64());
        let worst = r[..=order as usize].iter().fold(0f64, |a, b| a.max(*b));
        if worst <= target * 0.5 {
            break r;
        }
        if m_terms >= 400 || (tn > prev_term_norm * 4.0 && tn > target) {
            return Err(EvalError::BudgetInfeasible {
                reason: "Euler-Maclaurin corrections diverge before reaching the target",
                achieved: worst,
                target,
            });
        }
        prev_term_norm = tn;
    };

    // Rounding cost: ops-count * 2^-(wp-2) * accumulated magnitude.
    let ops = (n + 3 * m_terms + 24) as f64;
    let eps_wp = 2f64.powi(-(wp as i32) + 2);
    let out_round = 2f64.powi(1 - budget.mantissa_bits() as i32);
    let mut bounds = [f64::INFINITY; 3];
    let vals = [acc.f.norm_f64(), acc.d1.norm_f64(), acc.d2.norm_f64()];
    for q in 0..=order as usize {
        bounds[q] = rem[q]
            + ops * eps_wp * (mag[q].to_f64() + vals[q] + 1.0)
            + out_round * vals[q];
        if !(bounds[q] <= target) {
            return Err(EvalError::BudgetInfeasible {
                reason: "rounding floor exceeds the target at this precision",
                achieved: bounds[q],
                target,
            });
        }
    }

    let bits = budget.mantissa_bits();
    Ok(ZetaJet {
        z: acc.f.with_prec(bits),
        dz: acc.d1.with_prec(bits),
        d2z: acc.d2.with_prec(bits),
        bounds,
    })
}

/// Rigorous remainder bounds for value and derivatives after `M` correction
/// terms, from the integral form described in the module docs. `p` must hold
/// the jet of `P(s) = s(s+1)...(s+2M)`.
fn remainder_bounds(p: &Jet, sigma: f64, m: usize, ln_n: f64) -> [f64; 3] {
    let two_pi = std::f64::consts::TAU;
    let d = sigma + 2.0 * m as f64;
    // base = 4/(2pi)^(2M+1) * N^-d, computed in logs to dodge underflow.
    let log_base = 4f64.ln() - (2.0 * m as f64 + 1.0) * two_pi.ln() - d * ln_n;
    let base = if log_base < -700.0 { 1e-304 } else { log_base.exp() };
    let i0 = base / d;
    let i1 = base * (ln_n / d + 1.0 / (d * d));
    let i2 = base * (ln_n * ln_n / d + 2.0 * ln_n / (d * d) + 2.0 / (d * d * d));
    let (p0, p1, p2) = (p.f.norm_f64(), p.d1.norm_f64(), p.d2.norm_f64());
    [
        p0 * i0,
        p1 * i0 + p0 * i1,
        p2 * i0 + 2.0 * p1 * i1 + p0 * i2,
    ]
}

/// `zeta(s)` with a certified absolute-error bound.
pub fn eval_zeta(s: &Complex, budget: &PrecisionBudget) -> Result<EvalResult, EvalError> {
    let j = zeta_em_jet(s, budget, 0)?;
    Ok(EvalResult::new(j.z, j.bounds[0], false))
}

/// `zeta'(s)` by analytic differentiation of the Euler-Maclaurin truncation.
pub fn eval_zeta_prime(s: &Complex, budget: &PrecisionBudget) -> Result<EvalResult, EvalError> {
    let j = zeta_em_jet(s, budget, 1)?;
    Ok(EvalResult::new(j.dz, j.bounds[1], false))
}

/// `zeta(s)` and `zeta'(s)` from one truncation (shared work).
pub fn eval_zeta_pair(
    s: &Complex,
    budget: &PrecisionBudget,
) -> Result<(EvalResult, EvalResult), EvalError> {
    let j = zeta_em_jet(s, budget, 1)?;
    Ok((
        EvalResult::new(j.z, j.bounds[0], false),
        EvalResult::new(j.dz, j.bounds[1], false),
    ))
}

/// `zeta'/zeta(s)` with the propagated quotient bound.
///
/// Refuses when `|zeta(s)| <= 10 * target_abs_error`: so close to a zero of
/// zeta the quotient error is no longer controllable.
pub fn eval_zeta_log_deriv(s: &Complex, budget: &PrecisionBudget) -> Result<EvalResult, EvalError> {
    let j = zeta_em_jet(s, budget, 1)?;
    let zn = j.z.norm_f64();
    if zn <= 10.0 * budget.target_abs_error() || zn <= j.bounds[0] {
        return Err(EvalError::NearZeroDenominator { magnitude: zn });
    }
    let q = j.dz.div(&j.z);
    let bound = (j.bounds[1] + q.norm_f64() * j.bounds[0]) / (zn - j.bounds[0]);
    Ok(EvalResult::new(q, bound, false))
}

/// `(zeta'(s), zeta''(s))` for Newton refinement of zeros of `zeta'`.
pub(crate) fn zeta_prime_with_derivative(
    s: &Complex,
    budget: &PrecisionBudget,
) -> Result<(EvalResult, EvalResult), EvalError> {
    let j = zeta_em_jet(s, budget, 2)?;
    Ok((
        EvalResult::new(j.dz, j.bounds[1], false),
        EvalResult::new(j.d2z, j.bounds[2], false),
    ))
}

/// `pi^2/6` at the given precision (test helper for the classical value).
pub fn pi_squared_over_six(prec: u32) -> Float {
    let p = complex::pi(prec);
    Float::with_val(prec, &p * &p) / 6u32
}
