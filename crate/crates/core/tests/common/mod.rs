//! Shared test oracles, independent of the implementation paths they check.
//!
//! The zeta oracle is the alternating (eta) series with Borwein's Chebyshev
//! acceleration: exact integer weights `d_k`, complex powers at doubled
//! precision, and `zeta = eta / (1 - 2^(1-s))`. Its derivative differentiates
//! the same accelerated sum term by term.

#![allow(dead_code)]

use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use zetalab_core::Complex;

/// Borwein weights `d_0..=d_n`, exact:
/// `d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)`.
fn borwein_weights(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut sum = Rational::new();
    for i in 0..=n {
        let num = Integer::from(Integer::factorial((n + i - 1) as u32))
            * Integer::from(Integer::from(4).pow(i as u32));
        let den = Integer::from(Integer::factorial((n - i) as u32))
            * Integer::from(Integer::factorial((2 * i) as u32));
        sum += Rational::from((num, den));
        out.push(sum.clone() * Rational::from((n as u64, 1u64)));
    }
    out
}

/// `k^-s` at precision `prec`.
fn power_neg(k: u32, s: &Complex, prec: u32) -> Complex {
    let lk = Float::with_val(prec, k).ln();
    Complex::new(
        -Float::with_val(prec, s.re() * &lk),
        -Float::with_val(prec, s.im() * &lk),
    )
    .exp()
}

/// `(eta(s), eta'(s))` via the accelerated alternating series at `prec` bits
/// with `n` acceleration terms.
fn eta_pair(s: &Complex, prec: u32, n: usize) -> (Complex, Complex) {
    let ds = borwein_weights(n);
    let dn = Float::with_val(prec, &ds[n]);
    let mut eta = Complex::zero(prec);
    let mut eta_prime = Complex::zero(prec);
    for k in 0..n {
        let w = Float::with_val(prec, Rational::from(&ds[k] - &ds[n]));
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = Float::with_val(prec, &w * sign);
        let p = power_neg(k as u32 + 1, s, prec);
        eta = eta.add(&p.scale(&coeff));
        let lk = Float::with_val(prec, k as u32 + 1).ln();
        eta_prime = eta_prime.add(&p.scale(&Float::with_val(prec, &coeff * &lk)).neg());
    }
    let inv = Float::with_val(prec, -1) / dn;
    (eta.scale(&inv), eta_prime.scale(&inv))
}

/// `1 - 2^(1-s)` and its derivative `ln 2 * 2^(1-s)`.
fn eta_factor(s: &Complex, prec: u32) -> (Complex, Complex) {
    let ln2 = Float::with_val(prec, 2).ln();
    let pow = Complex::new(
        Float::with_val(prec, 1 - s.re().clone()) * &ln2,
        -Float::with_val(prec, s.im() * &ln2),
    )
    .exp();
    let one = Complex::real(prec, 1.0);
    (one.sub(&pow), pow.scale(&ln2))
}

/// Independent oracle for `zeta(s)`: accelerated eta series at doubled
/// precision. Valid away from `s = 1`; accuracy degrades like `e^(pi |t| / 2)`
/// so keep `|t|` modest (<= ~60).
pub fn zeta_oracle(s: &Complex, bits: u32) -> Complex {
    let prec = bits * 2;
    let t = s.im().to_f64().abs();
    let n = (2 * bits as usize) / 3 + (3.0 * t) as usize + 24;
    let (eta, _) = eta_pair(s, prec, n);
    let (fac, _) = eta_factor(s, prec);
    eta.div(&fac)
}

/// Independent oracle for `zeta'(s)`: differentiated accelerated eta series.
pub fn zeta_prime_oracle(s: &Complex, bits: u32) -> Complex {
    let prec = bits * 2;
    let t = s.im().to_f64().abs();
    let n = (2 * bits as usize) / 3 + (3.0 * t) as usize + 24;
    let (eta, eta_prime) = eta_pair(s, prec, n);
    let (fac, dfac) = eta_factor(s, prec);
    let zeta = eta.div(&fac);
    eta_prime.sub(&zeta.mul(&dfac)).div(&fac)
}

/// Parses a decimal literal at `prec` bits.
pub fn lit(prec: u32, s: &str) -> Float {
    Float::with_val(prec, Float::parse(s).expect("bad literal"))
}

/// |a - b| as f64.
pub fn dist(a: &Complex, b: &Complex) -> f64 {
    a.sub(b).norm_f64()
}

/// |a - b| for floats.
pub fn fdist(a: &Float, b: &Float) -> f64 {
    Float::with_val(a.prec().max(b.prec()), a - b).abs().to_f64()
}
