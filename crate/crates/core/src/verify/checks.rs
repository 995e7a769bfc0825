//! The individual verification operations. Each one computes both sides of an
//! identity/inequality over the cached populations and returns the residual or
//! ratio as a [`CheckRecord`]; the baseline comparison happens at the caller.

use super::{BoundStatus, CheckName, CheckRecord, STAT_PREC};
use crate::budget::PrecisionBudget;
use crate::complex::Complex;
use crate::error::VerifyError;
use crate::verify::ConjectureAStat;
use crate::zeros::{DerivSet, DerivZero, ZeroPairing, ZeroSet, ZetaZero};
use crate::zeta::eval_zeta_log_deriv;
use rug::Float;

fn stat_float(x: f64) -> Float {
    Float::with_val(STAT_PREC, x)
}

fn dz_subject(dzero: &DerivZero) -> String {
    format!(
        "rho'={:.6}+{:.6}i",
        dzero.beta_f64(),
        dzero.gamma_f64()
    )
}

/// Truncated version of the sum `sum_{beta'>1/2} (beta'-1/2) /
/// ((beta'-1/2)^2 + (gamma-gamma')^2) = (1/2) log gamma + O(1)`.
///
/// The window `[gamma - half_width, gamma + half_width]` covers negative
/// ordinates through the conjugate reflection `gamma' -> -gamma'` of the
/// cached upper-half-plane zeros; a density-based estimate of the truncated
/// tail is attached to the record.
pub fn lemma1_sum(
    zero: &ZetaZero,
    dzeros: &DerivSet,
    half_width: f64,
) -> Result<CheckRecord, VerifyError> {
    if zero.suspect_multiple {
        return Err(VerifyError::SimplicityFlag { index: zero.index });
    }
    let gamma = zero.ordinate.to_f64();
    assert!(gamma > 10.0, "lemma 1 checks require gamma > 10");
    assert!(half_width >= 50.0, "half_width must be at least 50");
    if !dzeros.covers(0.0, gamma + half_width) {
        return Err(VerifyError::InsufficientCoverage {
            lo: (gamma - half_width).max(0.0),
            hi: gamma + half_width,
        });
    }

    let g = Float::with_val(STAT_PREC, &zero.ordinate);
    let half = stat_float(0.5);
    let mut lhs = Float::new(STAT_PREC);
    let mut in_window = 0usize;
    let mut offset_sum = 0f64;
    for dz in dzeros.dzeros() {
        let off = Float::with_val(STAT_PREC, &dz.beta - &half);
        if !(off.to_f64() > 0.0) {
            continue;
        }
        for signed in [dz.gamma_f64(), -dz.gamma_f64()] {
            if (signed - gamma).abs() <= half_width {
                let d = Float::with_val(STAT_PREC, &g - &stat_float(signed));
                let denom = Float::with_val(STAT_PREC, off.clone().square() + d.square());
                lhs += Float::with_val(STAT_PREC, &off / &denom);
                in_window += 1;
                offset_sum += off.to_f64();
            }
        }
    }
    let rhs = Float::with_val(STAT_PREC, g.ln() / 2u32);
    let statistic = Float::with_val(STAT_PREC, &lhs - &rhs);
    let mut rec = CheckRecord::new(
        CheckName::Lemma1Sum,
        format!("n={};gamma={:.6}", zero.index, gamma),
        lhs,
        rhs,
        statistic,
    );
    // Tail heuristic: window density times mean offset, decaying like 1/u^2
    // beyond the window.
    rec.tail_estimate = if in_window > 0 {
        let mean_offset = offset_sum / in_window as f64;
        Some(in_window as f64 * mean_offset / (half_width * half_width))
    } else {
        Some(0.0)
    };
    if dzeros.is_empty() {
        rec.bound_status = BoundStatus::NotApplicable;
    }
    Ok(rec)
}

/// Functional-equation identity at a zeta' zero:
/// `Re zeta'/zeta(beta'+i gamma') - Re zeta'/zeta(1-beta'+i gamma')
///  = log gamma' + O(1)`.
pub fn fe_identity_check(
    dzero: &DerivZero,
    budget: &PrecisionBudget,
) -> Result<CheckRecord, VerifyError> {
    let prec = budget.working_prec();
    let beta = Float::with_val(prec, &dzero.beta);
    if Float::with_val(prec, &beta - &Float::with_val(prec, 0.5)).is_zero() {
        return Err(VerifyError::DegenerateBeta);
    }
    let gamma = Float::with_val(prec, &dzero.gamma);
    let s1 = Complex::new(beta.clone(), gamma.clone());
    let s2 = Complex::new(Float::with_val(prec, 1 - beta), gamma.clone());
    let q1 = eval_zeta_log_deriv(&s1, budget)?;
    let q2 = eval_zeta_log_deriv(&s2, budget)?;
    let lhs = Float::with_val(STAT_PREC, q1.value.re() - q2.value.re());
    let rhs = Float::with_val(STAT_PREC, gamma.ln());
    let statistic = Float::with_val(STAT_PREC, &lhs - &rhs);
    Ok(CheckRecord::new(
        CheckName::FeIdentity,
        dz_subject(dzero),
        lhs,
        rhs,
        statistic,
    ))
}

/// Zero-density tail bound for ordinates beyond `w` of `t`, integrating the
/// per-unit density `ln(T/2pi)/(2pi) + 1/2` against `1/u^2`.
fn ordinate_tail_bound(t: f64, w: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let upper = (((t + w) / two_pi).ln() / w + ((t + w) / w).ln() / t) / two_pi + 0.5 / w;
    let density_here = (t / two_pi).ln() / two_pi + 0.5;
    let lower = density_here * (1.0 / w + 1.0 / t);
    upper + lower
}

/// The unconditional lower bound `2|beta'-1/2| sum_n (gamma'-gamma_n)^-2
/// >= log gamma' + O(1)`, with the truncated sum completed by an analytic
/// density tail.
pub fn ready_inequality(
    dzero: &DerivZero,
    zeros: &ZeroSet,
    window: f64,
) -> Result<CheckRecord, VerifyError> {
    let gp = dzero.gamma_f64();
    if !zeros.covers(gp - window, gp + window) {
        return Err(VerifyError::InsufficientCoverage {
            lo: (gp - window).max(0.0),
            hi: gp + window,
        });
    }
    let gamma = Float::with_val(STAT_PREC, &dzero.gamma);
    let mut sum = Float::new(STAT_PREC);
    for z in zeros.zeros() {
        if (z.ordinate.to_f64() - gp).abs() > window {
            continue;
        }
        let d = Float::with_val(STAT_PREC, &gamma - &z.ordinate);
        if d.clone().abs().to_f64() < 1e-15 {
            return Err(VerifyError::OrdinateCollision {
                distance: d.abs().to_f64(),
            });
        }
        sum += d.square().recip();
    }
    let tail = ordinate_tail_bound(gp, window);
    let off2 = Float::with_val(
        STAT_PREC,
        Float::with_val(STAT_PREC, &dzero.beta - &stat_float(0.5)).abs() * 2u32,
    );
    let lhs = Float::with_val(STAT_PREC, &off2 * &Float::with_val(STAT_PREC, &sum + &stat_float(tail)));
    let rhs = Float::with_val(STAT_PREC, gamma.ln());
    let statistic = Float::with_val(STAT_PREC, &lhs - &rhs);
    let mut rec = CheckRecord::new(
        CheckName::ReadyIneq,
        dz_subject(dzero),
        lhs,
        rhs,
        statistic,
    );
    rec.tail_estimate = Some(off2.to_f64() * tail);
    Ok(rec)
}

/// The two-sided minimum of Theorem-1 type:
/// `min(|gamma_c-gamma'| log gamma', (gamma_{n+2}-gamma_n) log gamma_n)`
/// against `(|beta'-1/2| log gamma')^(1/2)`; the statistic is the ratio, i.e.
/// the empirical implied constant.
pub fn theorem1_statistic(pairing: &ZeroPairing) -> Result<CheckRecord, VerifyError> {
    let ln_gp = Float::with_val(STAT_PREC, &pairing.dzero.gamma).ln();
    let gap_term = Float::with_val(STAT_PREC, &pairing.gap * &ln_gp);
    let lhs = match &pairing.straddle_term {
        Some(st) if *st < gap_term => Float::with_val(STAT_PREC, st),
        _ => gap_term,
    };
    let off = Float::with_val(STAT_PREC, &pairing.beta_offset).abs();
    if off.is_zero() {
        // beta' = 1/2 forces a multiple zero of zeta there; the bound is vacuous.
        let mut rec = CheckRecord::new(
            CheckName::Thm1Stat,
            format!("{};multiple-zero-candidate", dz_subject(&pairing.dzero)),
            lhs,
            Float::new(STAT_PREC),
            Float::new(STAT_PREC),
        );
        rec.bound_status = BoundStatus::NotApplicable;
        return Ok(rec);
    }
    let rhs = Float::with_val(STAT_PREC, &off * &ln_gp).sqrt();
    let statistic = Float::with_val(STAT_PREC, &lhs / &rhs);
    Ok(CheckRecord::new(
        CheckName::Thm1Stat,
        dz_subject(&pairing.dzero),
        lhs,
        rhs,
        statistic,
    ))
}

/// The unconditional bound `|gamma_c - gamma'| << |beta'-1/2|^(1/2)`; the
/// statistic is the ratio.
pub fn theorem2_ratio(pairing: &ZeroPairing) -> Result<CheckRecord, VerifyError> {
    let off = Float::with_val(STAT_PREC, &pairing.beta_offset).abs();
    if off.is_zero() {
        return Err(VerifyError::DegenerateBeta);
    }
    let rhs = off.sqrt();
    let lhs = Float::with_val(STAT_PREC, &pairing.gap);
    let statistic = Float::with_val(STAT_PREC, &lhs / &rhs);
    Ok(CheckRecord::new(
        CheckName::Thm2Ratio,
        dz_subject(&pairing.dzero),
        lhs,
        rhs,
        statistic,
    ))
}

/// The cumulative offset sum `sum_{0<gamma'<=T} (beta'-1/2)` against its
/// asymptotic main term `(T/2pi) log log T`; the statistic is the ratio.
pub fn lm_cumsum(t: f64, dzeros: &DerivSet) -> Result<CheckRecord, VerifyError> {
    assert!(t > 3.0, "log log T needs T > e");
    if !dzeros.covers(0.0, t) {
        return Err(VerifyError::InsufficientCoverage { lo: 0.0, hi: t });
    }
    let mut lhs = Float::new(STAT_PREC);
    for dz in dzeros.dzeros() {
        if dz.gamma_f64() <= t {
            lhs += Float::with_val(STAT_PREC, &dz.beta - &stat_float(0.5));
        }
    }
    let rhs = stat_float(t / std::f64::consts::TAU * t.ln().ln());
    let statistic = Float::with_val(STAT_PREC, &lhs / &rhs);
    Ok(CheckRecord::new(
        CheckName::LmCumsum,
        format!("T={t}"),
        lhs,
        rhs,
        statistic,
    ))
}

/// Census against the zero-counting main term:
/// `statistic = (N'(T) - (T/2pi) log(T/4pi e)) / log T`.
pub fn berndt_count_check(t: f64, dzeros: &DerivSet) -> Result<CheckRecord, VerifyError> {
    if !dzeros.covers(0.0, t) {
        return Err(VerifyError::InsufficientCoverage { lo: 0.0, hi: t });
    }
    let count = dzeros.dzeros().iter().filter(|d| d.gamma_f64() <= t).count();
    let main = berndt_main_term(t);
    let lhs = stat_float(count as f64);
    let rhs = stat_float(main);
    let statistic = stat_float((count as f64 - main) / t.ln());
    Ok(CheckRecord::new(
        CheckName::BerndtCount,
        format!("T={t}"),
        lhs,
        rhs,
        statistic,
    ))
}

/// `(T/2pi) log(T/4pi e)`, the main term of the zeta'-zero counting formula.
pub fn berndt_main_term(t: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    t / two_pi * (t / (2.0 * two_pi * std::f64::consts::E)).ln()
}

/// Residual of the truncated partial-fraction formula evaluated at rho':
/// `|1/(rho'-rho_c) + sum_{rho != rho_c, |gamma-gamma'|<=1} 1/(rho'-rho)|
///  / log gamma'` (the rho are taken as `1/2 + i gamma_n`).
pub fn trunc_logderiv_residual(
    dzero: &DerivZero,
    zeros: &ZeroSet,
    pairing: &ZeroPairing,
) -> Result<CheckRecord, VerifyError> {
    let gp = dzero.gamma_f64();
    if !zeros.covers(gp - 1.0, gp + 1.0) {
        return Err(VerifyError::InsufficientCoverage {
            lo: gp - 1.0,
            hi: gp + 1.0,
        });
    }
    if pairing.gap.to_f64() < 1e-15 {
        return Err(VerifyError::OrdinateCollision {
            distance: pairing.gap.to_f64(),
        });
    }
    let rho_prime = Complex::new(
        Float::with_val(STAT_PREC, &dzero.beta),
        Float::with_val(STAT_PREC, &dzero.gamma),
    );
    let rho_c = Complex::new(
        stat_float(0.5),
        Float::with_val(STAT_PREC, &pairing.gamma_c),
    );
    let mut acc = rho_prime.sub(&rho_c).recip();
    for z in zeros.zeros() {
        if z.index == pairing.gamma_c_index || (z.ordinate.to_f64() - gp).abs() > 1.0 {
            continue;
        }
        let rho = Complex::new(stat_float(0.5), Float::with_val(STAT_PREC, &z.ordinate));
        acc = acc.add(&rho_prime.sub(&rho).recip());
    }
    let lhs = acc.norm();
    let rhs = Float::with_val(STAT_PREC, &dzero.gamma).ln();
    let statistic = Float::with_val(STAT_PREC, &lhs / &rhs);
    Ok(CheckRecord::new(
        CheckName::TruncLogderiv,
        dz_subject(dzero),
        lhs,
        rhs,
        statistic,
    ))
}

/// Empirical `m(nu)` proxy at finite `T`.
pub fn empirical_m_nu(nu: f64, t: f64, dzeros: &DerivSet) -> Result<ConjectureAStat, VerifyError> {
    assert!(t >= 50.0, "m(nu) snapshots need T >= 50");
    if !dzeros.covers(0.0, t) {
        return Err(VerifyError::InsufficientCoverage { lo: 0.0, hi: t });
    }
    let total = dzeros.dzeros().iter().filter(|d| d.gamma_f64() <= t).count();
    if total == 0 {
        return Err(VerifyError::EmptyPopulation { t });
    }
    let threshold = 0.5 + nu / t.ln();
    let selected = dzeros
        .dzeros()
        .iter()
        .filter(|d| d.gamma_f64() <= t && d.beta_f64() <= threshold)
        .count();
    Ok(ConjectureAStat {
        nu,
        t,
        fraction: selected as f64 / total as f64,
    })
}

/// Mean-value bound `|x1/(x1^2+a) - x2/(x2^2+a)| <= |x1-x2|/a`; the statistic
/// is `lhs * a / |x1-x2|`, which must never exceed 1.
pub fn lagrange_bound_check(x1: f64, x2: f64, a: f64) -> Result<CheckRecord, VerifyError> {
    if !(a > 0.0) {
        return Err(VerifyError::NonpositiveA(a));
    }
    let subject = format!("x1={x1:.6e};x2={x2:.6e};a={a:.6e}");
    let af = stat_float(a);
    let f = |x: f64| -> Float {
        let xf = stat_float(x);
        let denom = Float::with_val(STAT_PREC, xf.clone().square() + &af);
        Float::with_val(STAT_PREC, &xf / &denom)
    };
    let lhs = Float::with_val(STAT_PREC, f(x1) - f(x2)).abs();
    if x1 == x2 {
        return Ok(CheckRecord::new(
            CheckName::LagrangeBound,
            subject,
            lhs,
            Float::new(STAT_PREC),
            Float::new(STAT_PREC),
        ));
    }
    let dx = Float::with_val(STAT_PREC, stat_float(x1) - stat_float(x2)).abs();
    let rhs = Float::with_val(STAT_PREC, &dx / &af);
    let statistic = Float::with_val(STAT_PREC, &lhs * &af) / dx;
    Ok(CheckRecord::new(
        CheckName::LagrangeBound,
        subject,
        lhs,
        rhs,
        statistic,
    ))
}

/// Wraps a measured `S(T)` value as a record (the statistic is `S(T)` itself).
pub fn s_of_t_record(t: f64, s_t: f64) -> CheckRecord {
    CheckRecord::new(
        CheckName::SOfT,
        format!("T={t}"),
        stat_float(s_t),
        Float::new(STAT_PREC),
        stat_float(s_t),
    )
}

/// Population minima that the catalogue records without asserting: the
/// statement-(iii) statistic `min gap * log gamma'` and the Theorem-3 premise
/// `min (beta'-1/2)(log gamma')(log log gamma')^2`.
pub fn population_summaries(pairings: &[ZeroPairing]) -> Vec<(String, f64)> {
    let mut iii_min = f64::INFINITY;
    let mut premise_min = f64::INFINITY;
    for p in pairings {
        let gp = p.dzero.gamma_f64();
        if gp <= std::f64::consts::E {
            continue;
        }
        let iii = p.gap.to_f64() * gp.ln();
        iii_min = iii_min.min(iii);
        let premise = p.beta_offset.to_f64() * gp.ln() * gp.ln().ln().powi(2);
        premise_min = premise_min.min(premise);
    }
    vec![
        ("statement_iii_min_gap_log".into(), iii_min),
        ("theorem3_premise_min".into(), premise_min),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::ZetaZero;

    fn dz(beta: f64, gamma: f64) -> DerivZero {
        DerivZero {
            beta: Float::with_val(128, beta),
            gamma: Float::with_val(128, gamma),
            residual: 0.0,
            rect_id: "T".into(),
        }
    }

    fn zz(index: u64, ordinate: f64) -> ZetaZero {
        ZetaZero {
            index,
            ordinate: Float::with_val(128, ordinate),
            residual: 0.0,
            certified: true,
            suspect_multiple: false,
        }
    }

    #[test]
    fn lemma1_empty_population_is_not_applicable() {
        let dset = DerivSet::new(vec![], vec![(2.0, 200.0)]);
        let rec = lemma1_sum(&zz(1, 14.13), &dset, 50.0).unwrap();
        assert!(rec.lhs.is_zero());
        assert_eq!(rec.bound_status, BoundStatus::NotApplicable);
        assert!((rec.statistic.to_f64() + 0.5 * 14.13f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn lemma1_widening_never_decreases_lhs() {
        let dset = DerivSet::new(
            vec![dz(1.2, 30.0), dz(0.9, 90.0), dz(1.5, 100.0)],
            vec![(2.0, 300.0)],
        );
        let narrow = lemma1_sum(&zz(3, 25.0), &dset, 50.0).unwrap();
        let wide = lemma1_sum(&zz(3, 25.0), &dset, 100.0).unwrap();
        assert!(wide.lhs >= narrow.lhs);
    }

    #[test]
    fn lemma1_rejects_suspect_multiples() {
        let dset = DerivSet::new(vec![dz(1.2, 30.0)], vec![(2.0, 200.0)]);
        let mut z = zz(1, 14.13);
        z.suspect_multiple = true;
        assert!(matches!(
            lemma1_sum(&z, &dset, 50.0),
            Err(VerifyError::SimplicityFlag { index: 1 })
        ));
    }

    #[test]
    fn ready_inequality_is_linear_in_offset() {
        let zs = ZeroSet::new((1..=40).map(|i| zz(i, 10.0 + 2.0 * i as f64)).collect(), vec![(2.0, 200.0)]);
        let a = ready_inequality(&dz(0.75, 51.0), &zs, 50.0).unwrap();
        let b = ready_inequality(&dz(1.0, 51.0), &zs, 50.0).unwrap();
        let ratio = b.lhs.to_f64() / a.lhs.to_f64();
        assert!((ratio - 2.0).abs() < 1e-12, "doubling |beta'-1/2| doubles lhs");
    }

    #[test]
    fn ready_inequality_detects_collision() {
        let zs = ZeroSet::new(vec![zz(1, 51.0)], vec![(2.0, 200.0)]);
        assert!(matches!(
            ready_inequality(&dz(0.75, 51.0), &zs, 50.0),
            Err(VerifyError::OrdinateCollision { .. })
        ));
    }

    #[test]
    fn theorem_statistics_degenerate_cases() {
        let pairing = ZeroPairing {
            dzero: dz(0.5, 60.0),
            gamma_c: Float::with_val(128, 60.2),
            gamma_c_index: 7,
            gap: Float::with_val(128, 0.2),
            beta_offset: Float::new(128),
            straddle_gap: None,
            straddle_term: None,
        };
        let t1 = theorem1_statistic(&pairing).unwrap();
        assert_eq!(t1.bound_status, BoundStatus::NotApplicable);
        assert!(matches!(theorem2_ratio(&pairing), Err(VerifyError::DegenerateBeta)));
    }

    #[test]
    fn theorem_statistics_zero_gap() {
        let pairing = ZeroPairing {
            dzero: dz(1.0, 60.0),
            gamma_c: Float::with_val(128, 60.0),
            gamma_c_index: 7,
            gap: Float::new(128),
            beta_offset: Float::with_val(128, 0.5),
            straddle_gap: None,
            straddle_term: None,
        };
        assert!(theorem1_statistic(&pairing).unwrap().statistic.is_zero());
        assert!(theorem2_ratio(&pairing).unwrap().statistic.is_zero());
    }

    #[test]
    fn lm_cumsum_empty_below_first_zero() {
        let dset = DerivSet::new(vec![dz(1.2, 42.0)], vec![(2.0, 100.0)]);
        let rec = lm_cumsum(30.0, &dset).unwrap();
        assert!(rec.lhs.is_zero());
        assert!(rec.statistic.is_zero());
        // Monotone when every beta' > 1/2 in range.
        let later = lm_cumsum(90.0, &dset).unwrap();
        assert!(later.lhs > rec.lhs);
    }

    #[test]
    fn berndt_below_first_zero() {
        let dset = DerivSet::new(vec![], vec![(2.0, 100.0)]);
        let rec = berndt_count_check(10.0, &dset).unwrap();
        assert_eq!(rec.lhs.to_f64(), 0.0);
        assert!((rec.statistic.to_f64() + berndt_main_term(10.0) / 10f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn trunc_logderiv_nearest_term_dominates() {
        let zeros = ZeroSet::new(
            vec![zz(1, 59.4), zz(2, 59.9), zz(3, 60.3), zz(4, 60.8)],
            vec![(2.0, 100.0)],
        );
        let d = dz(0.9, 60.0);
        let pairing = crate::zeros::nearest_ordinate(&d, &zeros).unwrap();
        assert_eq!(pairing.gamma_c_index, 2);
        let rec = trunc_logderiv_residual(&d, &zeros, &pairing).unwrap();
        // |1/(rho'-rho_c)| >= every other single term.
        let rp = Complex::new(Float::with_val(128, 0.9), Float::with_val(128, 60.0));
        let lead = rp
            .sub(&Complex::new(Float::with_val(128, 0.5), Float::with_val(128, 59.9)))
            .recip()
            .norm_f64();
        for other in [59.4, 60.3, 60.8] {
            let term = rp
                .sub(&Complex::new(Float::with_val(128, 0.5), Float::with_val(128, other)))
                .recip()
                .norm_f64();
            assert!(lead >= term);
        }
        assert!(rec.statistic.is_finite());
    }

    #[test]
    fn m_nu_limits_and_monotonicity() {
        let dset = DerivSet::new(
            vec![dz(0.8, 30.0), dz(1.2, 60.0), dz(2.4, 90.0)],
            vec![(2.0, 120.0)],
        );
        assert_eq!(empirical_m_nu(1e3, 100.0, &dset).unwrap().fraction, 1.0);
        assert_eq!(empirical_m_nu(-10.0, 100.0, &dset).unwrap().fraction, 0.0);
        let f1 = empirical_m_nu(1.0, 100.0, &dset).unwrap().fraction;
        let f2 = empirical_m_nu(2.0, 100.0, &dset).unwrap().fraction;
        assert!(f1 <= f2);
        let empty = DerivSet::new(vec![], vec![(2.0, 120.0)]);
        assert!(matches!(
            empirical_m_nu(1.0, 100.0, &empty),
            Err(VerifyError::EmptyPopulation { .. })
        ));
    }

    #[test]
    fn lagrange_bound_cases() {
        let rec = lagrange_bound_check(1.0, 0.0, 1.0).unwrap();
        assert!((rec.lhs.to_f64() - 0.5).abs() < 1e-30);
        assert!((rec.rhs.to_f64() - 1.0).abs() < 1e-30);
        assert!(rec.statistic.to_f64() <= 1.0);
        let same = lagrange_bound_check(2.0, 2.0, 5.0).unwrap();
        assert!(same.lhs.is_zero() && same.statistic.is_zero());
        assert!(matches!(
            lagrange_bound_check(1.0, 2.0, 0.0),
            Err(VerifyError::NonpositiveA(_))
        ));
    }
}
