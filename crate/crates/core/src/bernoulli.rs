//! Exact Bernoulli numbers and derived coefficient tables.
//!
//! The recurrence `B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k` is carried out in
//! exact rational arithmetic, so there is no cancellation to worry about. The
//! float tables are computed once per working precision and are read-only
//! afterwards.

use once_cell::sync::Lazy;
use rug::{Float, Integer, Rational};
use std::collections::HashMap;
use std::sync::Mutex;

static BERNOULLI: Lazy<Mutex<Vec<Rational>>> = Lazy::new(|| Mutex::new(vec![Rational::from(1)]));

/// Coefficients `B_{2j} / (2j)!` of the Euler-Maclaurin correction terms,
/// keyed by working precision.
static EM_COEFFS: Lazy<Mutex<HashMap<u32, Vec<Float>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients `B_{2j} / ((2j)(2j-1))` of the Stirling series, keyed by
/// working precision.
static STIRLING_COEFFS: Lazy<Mutex<HashMap<u32, Vec<Float>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients `B_{2j} / (2j)` of the digamma asymptotic series, keyed by
/// working precision.
static DIGAMMA_COEFFS: Lazy<Mutex<HashMap<u32, Vec<Float>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Exact `B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: u32) -> Rational {
    let mut table = BERNOULLI.lock().unwrap();
    extend_bernoulli(&mut table, n as usize);
    table[n as usize].clone()
}

fn extend_bernoulli(table: &mut Vec<Rational>, upto: usize) {
    while table.len() <= upto {
        let m = table.len(); // computing B_m
        if m % 2 == 1 && m > 1 {
            table.push(Rational::new());
            continue;
        }
        let mut acc = Rational::new();
        let mut binom = Integer::from(1); // C(m+1, k), starting at k = 0
        for (k, b) in table.iter().enumerate().take(m) {
            acc += Rational::from((binom.clone(), Integer::from(1))) * b;
            // C(m+1, k+1) = C(m+1, k) * (m+1-k) / (k+1), exact division
            binom *= (m + 1 - k) as u64;
            binom /= (k + 1) as u64;
        }
        acc /= -Rational::from((m as u64 + 1, 1u64));
        table.push(acc);
    }
}

/// `B_{2j} / (2j)!` rounded to `prec` bits, for `j >= 1`.
pub(crate) fn zeta_em_coeff(j: u32, prec: u32) -> Float {
    let mut map = EM_COEFFS.lock().unwrap();
    let tab = map.entry(prec).or_default();
    while tab.len() < j as usize {
        let jj = tab.len() as u32 + 1;
        let b = bernoulli(2 * jj);
        let fact = Integer::from(Integer::factorial(2 * jj));
        let r = b / Rational::from((fact, Integer::from(1)));
        tab.push(Float::with_val(prec, &r));
    }
    tab[j as usize - 1].clone()
}

/// `B_{2j} / ((2j)(2j-1))` rounded to `prec` bits, for `j >= 1`.
pub(crate) fn stirling_coeff(j: u32, prec: u32) -> Float {
    let mut map = STIRLING_COEFFS.lock().unwrap();
    let tab = map.entry(prec).or_default();
    while tab.len() < j as usize {
        let jj = tab.len() as u64 + 1;
        let b = bernoulli(2 * jj as u32);
        let r = b / Rational::from((2 * jj * (2 * jj - 1), 1u64));
        tab.push(Float::with_val(prec, &r));
    }
    tab[j as usize - 1].clone()
}

/// `B_{2j} / (2j)` rounded to `prec` bits, for `j >= 1`.
pub(crate) fn digamma_coeff(j: u32, prec: u32) -> Float {
    let mut map = DIGAMMA_COEFFS.lock().unwrap();
    let tab = map.entry(prec).or_default();
    while tab.len() < j as usize {
        let jj = tab.len() as u64 + 1;
        let b = bernoulli(2 * jj as u32);
        let r = b / Rational::from((2 * jj, 1u64));
        tab.push(Float::with_val(prec, &r));
    }
    tab[j as usize - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bernoulli_values() {
        assert_eq!(bernoulli(0), Rational::from(1));
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(3), Rational::new());
        assert_eq!(bernoulli(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli(6), Rational::from((1, 42)));
        assert_eq!(bernoulli(8), Rational::from((-1, 30)));
        assert_eq!(bernoulli(10), Rational::from((5, 66)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
    }

    #[test]
    fn em_coeff_matches_rational() {
        // B_2/2! = 1/12, B_4/4! = -1/720.
        assert!((zeta_em_coeff(1, 96).to_f64() - 1.0 / 12.0).abs() < 1e-20);
        assert!((zeta_em_coeff(2, 96).to_f64() + 1.0 / 720.0).abs() < 1e-20);
    }

    #[test]
    fn stirling_coeff_matches_rational() {
        // B_2/(2*1) = 1/12, B_4/(4*3) = -1/360.
        assert!((stirling_coeff(1, 96).to_f64() - 1.0 / 12.0).abs() < 1e-20);
        assert!((stirling_coeff(2, 96).to_f64() + 1.0 / 360.0).abs() < 1e-20);
    }
}
