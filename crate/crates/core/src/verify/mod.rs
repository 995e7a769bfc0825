//! Verification statistics over the computed zero populations: each classical
//! identity or inequality becomes one [`CheckRecord`] with an explicitly
//! recorded empirical constant instead of an unspecified O(1).

mod checks;

pub use checks::*;

use rug::Float;

/// Precision at which check statistics are carried and reported.
pub const STAT_PREC: u32 = 128;

/// The fixed catalogue of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    Lemma1Sum,
    FeIdentity,
    ReadyIneq,
    Thm1Stat,
    Thm2Ratio,
    LmCumsum,
    BerndtCount,
    TruncLogderiv,
    MNu,
    LagrangeBound,
    SOfT,
}

impl CheckName {
    pub const ALL: [CheckName; 11] = [
        CheckName::Lemma1Sum,
        CheckName::FeIdentity,
        CheckName::ReadyIneq,
        CheckName::Thm1Stat,
        CheckName::Thm2Ratio,
        CheckName::LmCumsum,
        CheckName::BerndtCount,
        CheckName::TruncLogderiv,
        CheckName::MNu,
        CheckName::LagrangeBound,
        CheckName::SOfT,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::Lemma1Sum => "lemma1_sum",
            CheckName::FeIdentity => "fe_identity",
            CheckName::ReadyIneq => "ready_ineq",
            CheckName::Thm1Stat => "thm1_stat",
            CheckName::Thm2Ratio => "thm2_ratio",
            CheckName::LmCumsum => "lm_cumsum",
            CheckName::BerndtCount => "berndt_count",
            CheckName::TruncLogderiv => "trunc_logderiv",
            CheckName::MNu => "m_nu",
            CheckName::LagrangeBound => "lagrange_bound",
            CheckName::SOfT => "s_of_t",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.as_str() == s)
    }
}

impl std::fmt::Display for CheckName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    WithinBaseline,
    NewExtreme,
    NotApplicable,
}

impl BoundStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundStatus::WithinBaseline => "within_baseline",
            BoundStatus::NewExtreme => "new_extreme",
            BoundStatus::NotApplicable => "not_applicable",
        }
    }
}

/// One verification instance. `statistic` is `lhs - rhs` or `lhs / rhs`
/// depending on the check; `bound_status` is resolved against the stored
/// regression baseline by the caller that owns the baseline table.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub check_name: CheckName,
    /// Zero index, rho' coordinates, or T — never contains commas.
    pub subject: String,
    pub lhs: Float,
    pub rhs: Float,
    pub statistic: Float,
    pub bound_status: BoundStatus,
    /// Heuristic estimate of the truncated-away tail, where applicable.
    pub tail_estimate: Option<f64>,
}

impl CheckRecord {
    pub fn new(
        check_name: CheckName,
        subject: String,
        lhs: Float,
        rhs: Float,
        statistic: Float,
    ) -> Self {
        debug_assert!(statistic.is_finite());
        debug_assert!(!subject.contains(','), "subjects must stay comma-free");
        Self {
            check_name,
            subject,
            lhs,
            rhs,
            statistic,
            bound_status: BoundStatus::WithinBaseline,
            tail_estimate: None,
        }
    }

    pub fn statistic_f64(&self) -> f64 {
        self.statistic.to_f64()
    }
}

/// Empirical finite-T proxy for the conjectured distribution function m(nu):
/// the fraction of zeta' zeros with `beta' <= 1/2 + nu/log T`, `0 <= gamma' <= T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjectureAStat {
    pub nu: f64,
    pub t: f64,
    pub fraction: f64,
}
