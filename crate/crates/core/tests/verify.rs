//! Verification checks against real (small-height) populations produced by
//! the scanners, with the empirical O(1) bands recorded by assertion.

mod common;

use common::lit;
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;
use zetalab_core::budget::PrecisionBudget;
use zetalab_core::verify::{
    berndt_count_check, empirical_m_nu, fe_identity_check, lagrange_bound_check, lemma1_sum,
    lm_cumsum, population_summaries, ready_inequality, theorem1_statistic, theorem2_ratio,
    trunc_logderiv_residual,
};
use zetalab_core::{
    eval_zeta_log_deriv, find_zeta_prime_zeros, nearest_ordinate, scan_critical_zeros, Complex,
    DerivSet, DerivZero, SearchRect, ZeroSet,
};

fn budget() -> PrecisionBudget {
    PrecisionBudget::new(128, 1e-28, 32).unwrap()
}

static ZEROS_TO_255: Lazy<ZeroSet> = Lazy::new(|| {
    let b = budget();
    let zeros = scan_critical_zeros(2.0, 255.0, &b).expect("scan to 255");
    ZeroSet::new(zeros, vec![(0.0, 255.0)])
});

static DZ_TO_80: Lazy<DerivSet> = Lazy::new(|| {
    let b = budget();
    let mut all: Vec<DerivZero> = Vec::new();
    for (lo, hi) in [(2.0, 40.0), (40.0, 80.0)] {
        all.extend(find_zeta_prime_zeros(&SearchRect::new(0.0, 3.0, lo, hi), &b).unwrap());
    }
    DerivSet::new(all, vec![(2.0, 80.0)])
});

fn first_dzero() -> DerivZero {
    DerivZero {
        beta: lit(128, "2.4631618694543212858743950533063291449"),
        gamma: lit(128, "23.298320492762857902010961626597847051"),
        residual: 0.0,
        rect_id: "R".into(),
    }
}

#[test]
fn eq3_truncated_sum_residual_is_bounded() {
    // Re zeta'/zeta(1/2+it) - sum_n (sigma-beta_n)/(...) + (1/2) log t = O(1);
    // on the critical line the sum vanishes term by term (beta_n = 1/2).
    let b = budget();
    let zeros = &*ZEROS_TO_255;
    for t in [50.0, 100.0, 200.0] {
        let q = eval_zeta_log_deriv(&Complex::from_f64(160, 0.5, t), &b).unwrap();
        let mut sum = 0f64;
        for z in zeros.zeros() {
            let g = z.ordinate.to_f64();
            if (g - t).abs() <= 50.0 {
                // sigma - beta_n = 0 at desk scale; keep the oracle general.
                let num = 0.5 - 0.5;
                sum += num / (num * num + (t - g) * (t - g));
            }
        }
        let residual = q.value.re().to_f64() - sum + 0.5 * t.ln();
        println!("eq3 residual at t={t}: {residual:.6}");
        assert!(residual.abs() <= 5.0);
    }
}

#[test]
fn lemma1_at_the_first_ordinate() {
    let zeros = &*ZEROS_TO_255;
    let dz = &*DZ_TO_80;
    let z1 = zeros.zeros()[0].clone();
    let rec = lemma1_sum(&z1, dz, 50.0).unwrap();
    // The window holds few zeta' zeros at this height; the statistic sits
    // within a small O(1) band (positive sum, rhs = 0.5 ln 14.13).
    assert!(rec.lhs.to_f64() > 0.0);
    assert!(rec.statistic.to_f64().abs() <= 3.0);
    assert!(rec.tail_estimate.unwrap() >= 0.0);
    println!(
        "lemma1 n=1: lhs={:.6} rhs={:.6} stat={:.6} tail~{:.2e}",
        rec.lhs.to_f64(),
        rec.rhs.to_f64(),
        rec.statistic.to_f64(),
        rec.tail_estimate.unwrap()
    );
}

#[test]
fn fe_identity_at_the_first_dzero() {
    // At rho' itself zeta'/zeta vanishes, so lhs reduces to the mirror term;
    // the residual against log gamma' is the recorded O(1).
    let b = budget();
    let rec = fe_identity_check(&first_dzero(), &b).unwrap();
    assert!((rec.statistic.to_f64() + 1.834414739896756).abs() < 1e-9);
    assert!(rec.statistic.to_f64().abs() <= 4.0);
}

#[test]
fn fe_identity_orientation_antisymmetry() {
    // Swapping beta' -> 1 - beta' evaluates the same two points in the other
    // order: lhs flips sign exactly (up to evaluation error).
    let b = budget();
    let dz = first_dzero();
    let swapped = DerivZero {
        beta: Float::with_val(128, 1) - &dz.beta,
        gamma: dz.gamma.clone(),
        residual: 0.0,
        rect_id: "R".into(),
    };
    let r1 = fe_identity_check(&dz, &b).unwrap();
    let r2 = fe_identity_check(&swapped, &b).unwrap();
    let sum = r1.lhs.to_f64() + r2.lhs.to_f64();
    assert!(sum.abs() <= 1e-20, "orientations must cancel, got {sum:e}");
}

#[test]
fn ready_inequality_at_the_first_dzero() {
    let zeros = &*ZEROS_TO_255;
    let rec = ready_inequality(&first_dzero(), zeros, 50.0).unwrap();
    println!(
        "eq8 at rho'_1: lhs={:.6} rhs={:.6} stat={:.6}",
        rec.lhs.to_f64(),
        rec.rhs.to_f64(),
        rec.statistic.to_f64()
    );
    assert!(rec.statistic.to_f64() >= -4.0, "desk-scale band");
    assert!(rec.tail_estimate.unwrap() > 0.0);
}

#[test]
fn theorem_statistics_at_the_first_dzero() {
    let zeros = &*ZEROS_TO_255;
    let p = nearest_ordinate(&first_dzero(), zeros).unwrap();
    let t1 = theorem1_statistic(&p).unwrap();
    assert!(t1.statistic.is_finite());
    assert!((t1.statistic.to_f64() - 2.1686).abs() < 1e-3);
    let t2 = theorem2_ratio(&p).unwrap();
    assert!((t2.statistic.to_f64() - 1.2222).abs() < 1e-3);
}

#[test]
fn trunc_logderiv_at_the_first_dzero() {
    let zeros = &*ZEROS_TO_255;
    let dz = first_dzero();
    let p = nearest_ordinate(&dz, zeros).unwrap();
    let rec = trunc_logderiv_residual(&dz, zeros, &p).unwrap();
    // No other ordinate lies within 1 of gamma'_1: the statistic is exactly
    // |1/(rho'-rho_c)| / log gamma'.
    assert!((rec.statistic.to_f64() - 0.121921569242158).abs() < 1e-9);
}

#[test]
fn lm_cumsum_and_berndt_over_the_census() {
    let dz = &*DZ_TO_80;
    let rec = lm_cumsum(80.0, dz).unwrap();
    assert!(rec.lhs.to_f64() > 0.0, "observed beta' all exceed 1/2");
    println!("lm_cumsum T=80: ratio {:.4}", rec.statistic.to_f64());

    let b80 = berndt_count_check(80.0, dz).unwrap();
    assert!(b80.statistic.to_f64().abs() <= 3.0);
    let b10 = berndt_count_check(10.0, dz).unwrap();
    assert_eq!(b10.lhs.to_f64(), 0.0);
}

#[test]
fn m_nu_over_the_census() {
    let dz = &*DZ_TO_80;
    assert_eq!(empirical_m_nu(1e3, 80.0, dz).unwrap().fraction, 1.0);
    assert_eq!(empirical_m_nu(-10.0, 80.0, dz).unwrap().fraction, 0.0);
    let f1 = empirical_m_nu(1.0, 80.0, dz).unwrap().fraction;
    let f2 = empirical_m_nu(2.0, 80.0, dz).unwrap().fraction;
    assert!(f1 <= f2);
}

#[test]
fn lagrange_bound_holds_on_seeded_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1a9e);
    let mut max_stat = 0f64;
    for _ in 0..100_000 {
        let a = rng.gen_range(1e-12..1e3);
        let x1 = rng.gen_range(-1e3..1e3);
        let x2 = rng.gen_range(-1e3..1e3);
        let rec = lagrange_bound_check(x1, x2, a).unwrap();
        let s = rec.statistic.to_f64();
        assert!(s <= 1.0, "violation at x1={x1} x2={x2} a={a}: {s}");
        max_stat = max_stat.max(s);
    }
    println!("lagrange max statistic over 1e5 triples: {max_stat}");
}

#[test]
fn population_summaries_are_finite() {
    let zeros = &*ZEROS_TO_255;
    let dz = &*DZ_TO_80;
    let pairings: Vec<_> = dz
        .dzeros()
        .iter()
        .map(|d| nearest_ordinate(d, zeros).unwrap())
        .collect();
    let sums = population_summaries(&pairings);
    assert_eq!(sums.len(), 2);
    for (name, v) in &sums {
        assert!(v.is_finite(), "{name} must be finite");
        println!("{name} = {v:.6}");
    }
}
