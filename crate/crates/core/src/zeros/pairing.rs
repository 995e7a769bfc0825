//! Pairing of a zeta' zero with the nearest zeta ordinate, plus the
//! straddle-gap statistic over the unit window around gamma'.

use super::{DerivZero, ZeroPairing, ZeroSet};
use crate::error::ZeroError;
use rug::Float;

/// Matches `dzero` against the certified zero population.
///
/// `gamma_c` minimizes `|gamma_n - gamma'|` over all cached ordinates, ties
/// broken toward the smaller index. The straddle gap minimizes
/// `gamma_{n+2} - gamma_n` over `gamma' - 1 <= gamma_n <= gamma_{n+2} <=
/// gamma' + 1`. Requires certified coverage of `[gamma' - 2, gamma' + 2]`.
pub fn nearest_ordinate(dzero: &DerivZero, zeros: &ZeroSet) -> Result<ZeroPairing, ZeroError> {
    let gp = dzero.gamma_f64();
    if !zeros.covers(gp - 2.0, gp + 2.0) {
        return Err(ZeroError::InsufficientCoverage {
            lo: gp - 2.0,
            hi: gp + 2.0,
        });
    }
    let list = zeros.zeros();
    debug_assert!(!list.is_empty());
    let prec = dzero.gamma.prec().max(list[0].ordinate.prec());

    // Strictly smaller distance wins; an exact tie keeps the earlier entry,
    // which is the smaller index since ordinates are sorted.
    let mut gap = Float::with_val(prec, &list[0].ordinate - &dzero.gamma).abs();
    let mut idx = 0usize;
    for (i, z) in list.iter().enumerate().skip(1) {
        let d = Float::with_val(prec, &z.ordinate - &dzero.gamma).abs();
        if d < gap {
            gap = d;
            idx = i;
        }
    }

    let mut straddle_gap: Option<Float> = None;
    let mut straddle_term: Option<Float> = None;
    for n in 0..list.len() {
        if n + 2 >= list.len() {
            break;
        }
        let g_n = list[n].ordinate.to_f64();
        let g_n2 = list[n + 2].ordinate.to_f64();
        if g_n < gp - 1.0 {
            continue;
        }
        if g_n2 > gp + 1.0 {
            // Later n only move the window upward.
            if g_n > gp + 1.0 {
                break;
            }
            continue;
        }
        // Consecutive global indices guard against holes in the cache.
        if list[n + 1].index != list[n].index + 1 || list[n + 2].index != list[n].index + 2 {
            continue;
        }
        let bare = Float::with_val(prec, &list[n + 2].ordinate - &list[n].ordinate);
        let term = Float::with_val(prec, &bare * &Float::with_val(prec, g_n.ln()));
        if straddle_gap.as_ref().map_or(true, |cur| bare < *cur) {
            straddle_gap = Some(bare);
        }
        if straddle_term.as_ref().map_or(true, |cur| term < *cur) {
            straddle_term = Some(term);
        }
    }

    let half = Float::with_val(prec, 0.5);
    Ok(ZeroPairing {
        dzero: dzero.clone(),
        gamma_c: list[idx].ordinate.clone(),
        gamma_c_index: list[idx].index,
        gap,
        beta_offset: Float::with_val(prec, &dzero.beta - &half),
        straddle_gap,
        straddle_term,
    })
}
