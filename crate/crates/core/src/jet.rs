//! Second-order jets: a value together with its first and second derivative
//! with respect to `s`. The Euler-Maclaurin evaluator runs entirely in jets so
//! that zeta' and zeta'' come from analytic term-by-term differentiation, never
//! from finite differences.

use crate::complex::Complex;
use rug::Float;

#[derive(Debug, Clone)]
pub(crate) struct Jet {
    pub f: Complex,
    pub d1: Complex,
    pub d2: Complex,
}

impl Jet {
    pub fn zero(prec: u32) -> Self {
        Self {
            f: Complex::zero(prec),
            d1: Complex::zero(prec),
            d2: Complex::zero(prec),
        }
    }

    /// The jet of the linear factor `s + c`.
    pub fn linear(s: &Complex, c: u32) -> Self {
        let p = s.prec();
        Self {
            f: s.add_real(&Float::with_val(p, c)),
            d1: Complex::real(p, 1.0),
            d2: Complex::zero(p),
        }
    }

    /// The jet of `1/(s - 1)` given `q = 1/(s-1)`: derivatives `-q^2`, `2q^3`.
    pub fn recip_linear(q: Complex) -> Self {
        let q2 = q.mul(&q);
        let q3 = q2.mul(&q);
        Self {
            f: q,
            d1: q2.neg(),
            d2: q3.scale_f64(2.0),
        }
    }

    /// The jet of `A^(c - s)` for a positive real base, given its value `v`
    /// and `l = ln A`: derivatives `-l v`, `l^2 v`.
    pub fn power_decay(v: Complex, l: &Float) -> Self {
        let d1 = v.scale(l).neg();
        let d2 = d1.scale(l).neg();
        Self { f: v, d1, d2 }
    }

    pub fn add_assign(&mut self, o: &Self) {
        self.f = self.f.add(&o.f);
        self.d1 = self.d1.add(&o.d1);
        self.d2 = self.d2.add(&o.d2);
    }

    /// Leibniz product of two jets.
    pub fn mul(&self, o: &Self) -> Self {
        let f = self.f.mul(&o.f);
        let d1 = self.d1.mul(&o.f).add(&self.f.mul(&o.d1));
        let d2 = self
            .d2
            .mul(&o.f)
            .add(&self.d1.mul(&o.d1).scale_f64(2.0))
            .add(&self.f.mul(&o.d2));
        Self { f, d1, d2 }
    }

    pub fn scale(&self, c: &Float) -> Self {
        Self {
            f: self.f.scale(c),
            d1: self.d1.scale(c),
            d2: self.d2.scale(c),
        }
    }

    /// Largest of the three component magnitudes (used for stop criteria).
    pub fn max_norm(&self) -> f64 {
        self.f
            .norm_f64()
            .max(self.d1.norm_f64())
            .max(self.d2.norm_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_rule_matches_polynomial() {
        // (s+1)(s+3) at s = 2: value 15, d1 = 2s+4 = 8, d2 = 2.
        let s = Complex::real(96, 2.0);
        let j = Jet::linear(&s, 1).mul(&Jet::linear(&s, 3));
        assert_eq!(j.f.re().to_f64(), 15.0);
        assert_eq!(j.d1.re().to_f64(), 8.0);
        assert_eq!(j.d2.re().to_f64(), 2.0);
    }

    #[test]
    fn power_decay_derivatives() {
        // f(s) = 4^(1-s) at s = 0.5: f = 2, f' = -2 ln 4, f'' = 2 ln^2 4.
        let p = 96;
        let l = Float::with_val(p, 4).ln();
        let v = Complex::real(p, 2.0);
        let j = Jet::power_decay(v, &l);
        assert!((j.d1.re().to_f64() + 2.0 * 4f64.ln()).abs() < 1e-15);
        assert!((j.d2.re().to_f64() - 2.0 * 4f64.ln().powi(2)).abs() < 1e-14);
    }

    #[test]
    fn recip_linear_derivatives() {
        // 1/(s-1) at s = 3: 0.5, -0.25, 0.25.
        let p = 96;
        let q = Complex::real(p, 0.5);
        let j = Jet::recip_linear(q);
        assert_eq!(j.d1.re().to_f64(), -0.25);
        assert_eq!(j.d2.re().to_f64(), 0.25);
    }
}
