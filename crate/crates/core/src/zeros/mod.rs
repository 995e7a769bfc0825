//! Zero location and certification for zeta (critical line) and zeta'
//! (rectangles in the strip), plus the pairing of each zeta' zero with its
//! nearest zeta ordinate.

mod count;
mod dzeros;
mod pairing;
mod scan;
mod sweep;

pub use count::count_zeros_n;
pub use dzeros::{
    find_zeta_prime_zeros, find_zeta_prime_zeros_tagged, winding_number, winding_zeta,
    winding_zeta_prime,
};
pub use pairing::nearest_ordinate;
pub use scan::{scan_critical_zeros, scan_critical_zeros_with_counts};

use rug::Float;

/// A certified ordinate of a zeta zero on the critical line.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaZero {
    /// 1-based index in increasing ordinate order.
    pub index: u64,
    pub ordinate: Float,
    /// `|Z(ordinate)|` after refinement.
    pub residual: f64,
    /// Sign-change count matched the argument-principle count for the window
    /// this zero came from.
    pub certified: bool,
    /// Set when another refined ordinate lies within `1e3 * target_abs_error`:
    /// a suspected multiple (or near-multiple) zero, excluded from checks that
    /// require simplicity.
    pub suspect_multiple: bool,
}

/// A zero `beta' + i gamma'` of `zeta'(s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivZero {
    pub beta: Float,
    pub gamma: Float,
    /// `|zeta'(beta + i gamma)|` after refinement.
    pub residual: f64,
    /// Identifier of the search rectangle that produced it.
    pub rect_id: String,
}

impl DerivZero {
    pub fn beta_f64(&self) -> f64 {
        self.beta.to_f64()
    }

    pub fn gamma_f64(&self) -> f64 {
        self.gamma.to_f64()
    }
}

/// An axis-aligned search rectangle with its argument-principle zero count.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchRect {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    /// Zero count inside, filled in by the winding computation.
    pub winding: u32,
}

impl SearchRect {
    pub fn new(sigma_min: f64, sigma_max: f64, t_min: f64, t_max: f64) -> Self {
        assert!(sigma_min < sigma_max && t_min < t_max, "degenerate rectangle");
        Self {
            sigma_min,
            sigma_max,
            t_min,
            t_max,
            winding: 0,
        }
    }

    pub fn contains(&self, sigma: f64, t: f64) -> bool {
        sigma >= self.sigma_min && sigma <= self.sigma_max && t >= self.t_min && t <= self.t_max
    }

    fn inflate(&self, margin: f64) -> Self {
        let ds = (self.sigma_max - self.sigma_min) * margin;
        let dt = (self.t_max - self.t_min) * margin;
        Self {
            sigma_min: self.sigma_min - ds,
            sigma_max: self.sigma_max + ds,
            t_min: self.t_min - dt,
            t_max: self.t_max + dt,
            winding: self.winding,
        }
    }
}

/// A zeta' zero matched to its nearest zeta ordinate.
#[derive(Debug, Clone)]
pub struct ZeroPairing {
    pub dzero: DerivZero,
    /// Ordinate minimizing `|gamma_n - gamma'|` (ties to the smaller index).
    pub gamma_c: Float,
    pub gamma_c_index: u64,
    pub gap: Float,
    /// `beta' - 1/2`.
    pub beta_offset: Float,
    /// `min (gamma_{n+2} - gamma_n)` over `gamma' - 1 <= gamma_n <= gamma_{n+2}
    /// <= gamma' + 1`; `None` when no such pair is certified.
    pub straddle_gap: Option<Float>,
    /// `min (gamma_{n+2} - gamma_n) ln gamma_n` over the same window.
    pub straddle_term: Option<Float>,
}

/// A population of zeta' zeros with the rectangle coverage (in ordinate) that
/// produced it.
#[derive(Debug, Clone, Default)]
pub struct DerivSet {
    dzeros: Vec<DerivZero>,
    coverage: Vec<(f64, f64)>,
}

impl DerivSet {
    pub fn new(mut dzeros: Vec<DerivZero>, coverage: Vec<(f64, f64)>) -> Self {
        dzeros.sort_by(|a, b| {
            (a.gamma_f64(), a.beta_f64())
                .partial_cmp(&(b.gamma_f64(), b.beta_f64()))
                .unwrap()
        });
        Self {
            dzeros,
            coverage: merge_windows(coverage),
        }
    }

    pub fn dzeros(&self) -> &[DerivZero] {
        &self.dzeros
    }

    pub fn coverage(&self) -> &[(f64, f64)] {
        &self.coverage
    }

    /// True when one covered window contains `[lo, hi]`. `(0, 2]` holds no
    /// non-real zeros of zeta' and counts as covered.
    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        let lo = lo.max(0.0);
        self.coverage
            .iter()
            .any(|&(a, b)| (a <= lo || a <= 2.0) && b >= hi)
    }

    pub fn is_empty(&self) -> bool {
        self.dzeros.is_empty()
    }
}

fn merge_windows(coverage: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    let mut cov = coverage;
    cov.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for w in cov {
        match merged.last_mut() {
            Some(last) if w.0 <= last.1 + 1e-9 => last.1 = last.1.max(w.1),
            _ => merged.push(w),
        }
    }
    merged
}

/// A population of critical-line zeros with the certified ordinate coverage
/// that produced it. Windows are merged and sorted; zeros are sorted by
/// ordinate with consecutive global indices inside each window.
#[derive(Debug, Clone, Default)]
pub struct ZeroSet {
    zeros: Vec<ZetaZero>,
    coverage: Vec<(f64, f64)>,
}

impl ZeroSet {
    pub fn new(mut zeros: Vec<ZetaZero>, coverage: Vec<(f64, f64)>) -> Self {
        zeros.sort_by(|a, b| a.ordinate.partial_cmp(&b.ordinate).unwrap());
        Self {
            zeros,
            coverage: merge_windows(coverage),
        }
    }

    pub fn zeros(&self) -> &[ZetaZero] {
        &self.zeros
    }

    pub fn coverage(&self) -> &[(f64, f64)] {
        &self.coverage
    }

    /// True when one certified window contains `[lo, hi]`. The region below
    /// the first possible ordinate is treated as covered down to 0.
    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        let lo = lo.max(0.0);
        self.coverage
            .iter()
            .any(|&(a, b)| (a <= lo || a <= 2.0) && b >= hi)
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }
}
