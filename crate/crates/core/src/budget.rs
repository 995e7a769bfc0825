//! Precision budgets: every evaluator takes one and must either meet its
//! absolute-error target or refuse with [`EvalError::BudgetInfeasible`].

use crate::complex::Complex;
use crate::error::EvalError;

/// Guard bits used internally above the requested mantissa size so that
/// accumulated rounding stays well below the truncation bounds.
pub(crate) const GUARD_BITS: u32 = 32;

/// Mantissa size and absolute-error target for a single function evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionBudget {
    mantissa_bits: u32,
    target_abs_error: f64,
    escalation_factor: u32,
}

impl PrecisionBudget {
    /// At least 64 mantissa bits, and the target must be achievable at the
    /// working precision: `target_abs_error >= 2^(8 - mantissa_bits)`.
    pub fn new(
        mantissa_bits: u32,
        target_abs_error: f64,
        escalation_factor: u32,
    ) -> Result<Self, EvalError> {
        if mantissa_bits < 64 {
            return Err(EvalError::Domain("mantissa_bits must be at least 64"));
        }
        if escalation_factor == 0 {
            return Err(EvalError::Domain("escalation_factor must be positive"));
        }
        if !(target_abs_error > 0.0) || !target_abs_error.is_finite() {
            return Err(EvalError::Domain("target_abs_error must be positive and finite"));
        }
        let floor = floor_target(mantissa_bits);
        if target_abs_error < floor {
            return Err(EvalError::BudgetInfeasible {
                reason: "target below 2^(8 - mantissa_bits)",
                achieved: floor,
                target: target_abs_error,
            });
        }
        Ok(Self {
            mantissa_bits,
            target_abs_error,
            escalation_factor,
        })
    }

    /// Budget with a target of `2^(28 - bits)`, comfortable for the given size.
    pub fn standard(mantissa_bits: u32) -> Self {
        Self::new(mantissa_bits, 2f64.powi(28 - mantissa_bits.min(1000) as i32), 32)
            .expect("standard budget is always feasible")
    }

    pub fn mantissa_bits(&self) -> u32 {
        self.mantissa_bits
    }

    pub fn target_abs_error(&self) -> f64 {
        self.target_abs_error
    }

    pub fn escalation_factor(&self) -> u32 {
        self.escalation_factor
    }

    /// Internal working precision (requested bits plus guard bits).
    pub(crate) fn working_prec(&self) -> u32 {
        self.mantissa_bits + GUARD_BITS
    }

    /// Same target, `escalation_factor` more mantissa bits.
    pub fn escalate(&self) -> Self {
        Self {
            mantissa_bits: self.mantissa_bits + self.escalation_factor,
            target_abs_error: self.target_abs_error,
            escalation_factor: self.escalation_factor,
        }
    }
}

fn floor_target(bits: u32) -> f64 {
    // 2^(8-bits), clamped so that f64 exponent range cannot underflow to 0.
    2f64.powi((8i64 - i64::from(bits)).max(-1000) as i32)
}

/// One evaluated value together with a ceiling on `|computed - true|`.
///
/// `heuristic` marks bounds that come from asymptotic expansions rather than
/// from a proven tail estimate; quotients propagate the flag.
#[derive(Debug, Clone)]
pub struct EvalResult {
    pub value: Complex,
    pub abs_error_bound: f64,
    pub heuristic: bool,
}

impl EvalResult {
    pub(crate) fn new(value: Complex, abs_error_bound: f64, heuristic: bool) -> Self {
        debug_assert!(abs_error_bound >= 0.0);
        Self {
            value,
            abs_error_bound,
            heuristic,
        }
    }

    /// Real part of the value (for the real-valued evaluators).
    pub fn real(&self) -> rug::Float {
        self.value.re().clone()
    }
}

/// Retries `f` with an escalated budget whenever it reports an infeasible
/// budget, up to `retries` times.
pub fn with_escalation<T>(
    budget: &PrecisionBudget,
    retries: u32,
    mut f: impl FnMut(&PrecisionBudget) -> Result<T, EvalError>,
) -> Result<T, EvalError> {
    let mut current = budget.clone();
    let mut last;
    match f(&current) {
        Ok(v) => return Ok(v),
        Err(e @ EvalError::BudgetInfeasible { .. }) => last = e,
        Err(e) => return Err(e),
    }
    for _ in 0..retries {
        current = current.escalate();
        match f(&current) {
            Ok(v) => return Ok(v),
            Err(e @ EvalError::BudgetInfeasible { .. }) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}
