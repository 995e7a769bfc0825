//! Orchestration of the full pipeline: scan zeta zeros, census of zeta'
//! zeros, pairing, the verification battery, baseline resolution, cache
//! persistence and report emission.
//!
//! Work is split over disjoint ordinate windows processed by a worker pool;
//! results are merged in window order by a single coordinator, so identical
//! configurations reproduce identical bytes regardless of worker count.

use crate::cache::{self, CacheData, CacheError};
use crate::config::{ConfigError, RunConfig};
use crate::report;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;
use zetalab_core::verify::{
    berndt_count_check, empirical_m_nu, fe_identity_check, lagrange_bound_check, lemma1_sum,
    lm_cumsum, population_summaries, ready_inequality, s_of_t_record, theorem1_statistic,
    theorem2_ratio, trunc_logderiv_residual, BoundStatus, CheckName, CheckRecord, ConjectureAStat,
};
use zetalab_core::zeros::{
    count_zeros_n, find_zeta_prime_zeros_tagged, scan_critical_zeros_with_counts, winding_zeta,
    DerivSet, DerivZero, SearchRect, ZeroPairing, ZeroSet, ZetaZero,
};
use zetalab_core::{eval_zeta_prime, Complex, ZeroError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFICATION: i32 = 2;
pub const EXIT_REGRESSION: i32 = 3;
pub const EXIT_PRECISION: i32 = 4;
pub const EXIT_IO: i32 = 5;

/// Left edge of the census strip. The spec strip is open at sigma = 0; no
/// non-real zero of zeta' exists at or left of 0, and the desk-scale Speiser
/// check covers [SIGMA_MIN, 0.49].
const SIGMA_MIN: f64 = 1e-3;

#[derive(Debug, Clone)]
pub struct RunEvent {
    pub code: i32,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Config(_) => EXIT_PRECISION,
            PipelineError::Io(_) => EXIT_IO,
        }
    }
}

#[derive(Debug, Default)]
pub struct RunArtifacts {
    pub zeros: ZeroSet,
    pub dzeros: DerivSet,
    pub pairings: Vec<ZeroPairing>,
    pub records: Vec<CheckRecord>,
    pub m_nu: Vec<ConjectureAStat>,
    pub summaries: Vec<(String, f64)>,
    pub s_values: Vec<(f64, f64)>,
    pub baselines: BTreeMap<String, f64>,
    pub events: Vec<RunEvent>,
    pub notes: Vec<String>,
    pub wall_secs: f64,
    pub loaded_from_cache: bool,
}

impl RunArtifacts {
    /// Worst event of the run (0 when clean).
    pub fn exit_code(&self) -> i32 {
        self.events.iter().map(|e| e.code).max().unwrap_or(EXIT_OK)
    }
}

fn event(code: i32, message: impl Into<String>) -> RunEvent {
    RunEvent {
        code,
        message: message.into(),
    }
}

fn zero_error_code(e: &ZeroError) -> i32 {
    match e {
        ZeroError::Eval(zetalab_core::EvalError::BudgetInfeasible { .. }) => EXIT_PRECISION,
        _ => EXIT_CERTIFICATION,
    }
}

/// `count_zeros_N` with deterministic offset retries around ordinate
/// collisions. Returns the adjusted T and its count.
fn resolve_count(t: f64, config: &RunConfig) -> Result<(f64, u64), ZeroError> {
    let budget = config.budget();
    let mut last = None;
    for k in [0.0, 1e-3, -1e-3, 2e-3, -2e-3, 4e-3, -4e-3] {
        match count_zeros_n(t + k, &budget) {
            Ok((n, _)) => return Ok((t + k, n)),
            Err(e @ ZeroError::OrdinateCollision { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap())
}

/// Window boundaries for the critical-line scan: 2, then every 20 units.
fn scan_boundaries(t_max: f64) -> Vec<f64> {
    let mut bs = vec![2.0];
    let mut t = 20.0;
    while t < t_max {
        bs.push(t);
        t += 20.0;
    }
    bs.push(t_max);
    bs
}

/// Scans the full range in parallel windows and merges in order.
fn compute_zeros(config: &RunConfig, events: &mut Vec<RunEvent>) -> (Vec<ZetaZero>, Vec<(f64, f64)>) {
    let budget = config.budget();
    let bounds = scan_boundaries(config.t_max);
    let counted: Vec<Result<(f64, u64), ZeroError>> = bounds
        .par_iter()
        .map(|&t| resolve_count(t, config))
        .collect();
    let mut anchors = Vec::with_capacity(bounds.len());
    for r in counted {
        match r {
            Ok(a) => anchors.push(a),
            Err(e) => {
                events.push(event(zero_error_code(&e), format!("zero count failed: {e}")));
                return (Vec::new(), Vec::new());
            }
        }
    }

    let windows: Vec<((f64, u64), (f64, u64))> =
        anchors.windows(2).map(|w| (w[0], w[1])).collect();
    let scanned: Vec<Result<Vec<ZetaZero>, ZeroError>> = windows
        .par_iter()
        .map(|((lo, c_lo), (hi, c_hi))| {
            scan_critical_zeros_with_counts(*lo, *hi, &budget, *c_lo, *c_hi)
        })
        .collect();

    let mut zeros = Vec::new();
    let mut coverage = Vec::new();
    for (w, r) in windows.iter().zip(scanned) {
        match r {
            Ok(mut zs) => {
                zeros.append(&mut zs);
                coverage.push((w.0 .0, w.1 .0));
            }
            Err(e) => events.push(event(
                zero_error_code(&e),
                format!("scan window [{}, {}] failed: {e}", w.0 .0, w.1 .0),
            )),
        }
    }
    (zeros, coverage)
}

/// Strip boundaries for the zeta' census: 2, then every 10 units.
fn census_boundaries(t_max: f64) -> Vec<f64> {
    let mut bs = vec![2.0];
    let mut t = 10.0;
    while t < t_max {
        bs.push(t);
        t += 10.0;
    }
    bs.push(t_max);
    bs
}

/// Shifts a strip boundary until zeta' is comfortably nonzero along it, so
/// that adjacent strips share an exact, zero-free edge.
fn vet_census_boundary(t: f64, config: &RunConfig) -> Result<f64, ZeroError> {
    let budget = config.budget();
    let wp = budget.mantissa_bits() + 32;
    let near = 10.0 * budget.target_abs_error();
    let mut t_cur = t;
    for _ in 0..6 {
        let mut ok = true;
        for i in 0..=32 {
            let sigma = SIGMA_MIN + (config.rect_sigma_max - SIGMA_MIN) * i as f64 / 32.0;
            let v = eval_zeta_prime(&Complex::from_f64(wp, sigma, t_cur), &budget)?;
            if v.value.norm_f64() <= near {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(t_cur);
        }
        t_cur += 1e-4;
    }
    Err(ZeroError::BoundaryNearZero {
        sigma: SIGMA_MIN,
        t: t_cur,
    })
}

fn compute_dzeros(
    config: &RunConfig,
    events: &mut Vec<RunEvent>,
) -> (Vec<DerivZero>, Vec<(f64, f64)>) {
    let budget = config.budget();
    let raw = census_boundaries(config.t_max);
    let vetted: Vec<Result<f64, ZeroError>> = raw
        .par_iter()
        .map(|&t| vet_census_boundary(t, config))
        .collect();
    let mut bounds = Vec::with_capacity(raw.len());
    for r in vetted {
        match r {
            Ok(t) => bounds.push(t),
            Err(e) => {
                events.push(event(
                    zero_error_code(&e),
                    format!("census boundary vetting failed: {e}"),
                ));
                return (Vec::new(), Vec::new());
            }
        }
    }

    let strips: Vec<(usize, f64, f64)> = bounds
        .windows(2)
        .enumerate()
        .map(|(i, w)| (i, w[0], w[1]))
        .collect();
    let found: Vec<Result<Vec<DerivZero>, ZeroError>> = strips
        .par_iter()
        .map(|(i, lo, hi)| {
            let rect = SearchRect::new(SIGMA_MIN, config.rect_sigma_max, *lo, *hi);
            find_zeta_prime_zeros_tagged(&rect, &budget, &format!("S{i}"))
        })
        .collect();

    // Desk-scale Speiser check: no zeros of zeta itself left of the critical
    // line (reported, never assumed).
    let offline: Vec<Result<u32, ZeroError>> = strips
        .par_iter()
        .map(|(_, lo, hi)| {
            let rect = SearchRect::new(SIGMA_MIN, 0.49, *lo, *hi);
            winding_zeta(&rect, &budget)
        })
        .collect();

    let mut dzeros = Vec::new();
    let mut coverage = Vec::new();
    for ((i, lo, hi), r) in strips.iter().zip(found) {
        match r {
            Ok(mut zs) => {
                dzeros.append(&mut zs);
                coverage.push((*lo, *hi));
            }
            Err(e) => events.push(event(
                zero_error_code(&e),
                format!("zeta' strip {i} [{lo}, {hi}] failed: {e}"),
            )),
        }
    }
    for ((i, lo, hi), r) in strips.iter().zip(offline) {
        match r {
            Ok(0) => {}
            Ok(w) => events.push(event(
                EXIT_CERTIFICATION,
                format!("off-line winding over [{SIGMA_MIN}, 0.49]x[{lo}, {hi}] returned {w}"),
            )),
            Err(e) => events.push(event(
                zero_error_code(&e),
                format!("off-line check for strip {i} failed: {e}"),
            )),
        }
    }
    (dzeros, coverage)
}

/// The verification battery over the populations. Pure given its inputs.
#[allow(clippy::type_complexity)]
fn run_checks(
    config: &RunConfig,
    zeros: &ZeroSet,
    dzeros: &DerivSet,
    pairings: &[ZeroPairing],
    events: &mut Vec<RunEvent>,
    notes: &mut Vec<String>,
) -> (
    Vec<CheckRecord>,
    Vec<ConjectureAStat>,
    Vec<(String, f64)>,
    Vec<(f64, f64)>,
) {
    let budget = config.budget();
    let mut records = Vec::new();

    // Lemma 1 over the first 20 simple zeros with gamma >= 20 that the
    // census coverage supports.
    let hw = config.lemma1_half_width;
    let eligible: Vec<&ZetaZero> = zeros
        .zeros()
        .iter()
        .filter(|z| {
            let g = z.ordinate.to_f64();
            g >= 20.0 && !z.suspect_multiple && dzeros.covers(0.0, g + hw)
        })
        .take(20)
        .collect();
    for z in eligible {
        match lemma1_sum(z, dzeros, hw) {
            Ok(r) => records.push(r),
            Err(e) => notes.push(format!("lemma1_sum skipped: {e}")),
        }
    }

    // Identity and inequality checks over the zeta' population.
    let fe_cap = config.t_max.min(200.0);
    for dz in dzeros.dzeros() {
        let gp = dz.gamma_f64();
        if gp <= fe_cap {
            match fe_identity_check(dz, &budget) {
                Ok(r) => records.push(r),
                Err(e) => notes.push(format!("fe_identity skipped: {e}")),
            }
        }
        if gp >= 50.0 && gp <= fe_cap && zeros.covers(gp - 50.0, gp + 50.0) {
            match ready_inequality(dz, zeros, 50.0) {
                Ok(r) => records.push(r),
                Err(e) => notes.push(format!("ready_ineq skipped: {e}")),
            }
        }
    }

    for p in pairings {
        match theorem1_statistic(p) {
            Ok(r) => records.push(r),
            Err(e) => notes.push(format!("thm1_stat skipped: {e}")),
        }
        match theorem2_ratio(p) {
            Ok(r) => records.push(r),
            Err(e) => notes.push(format!("thm2_ratio skipped: {e}")),
        }
        let gp = p.dzero.gamma_f64();
        if gp <= fe_cap && zeros.covers(gp - 1.0, gp + 1.0) {
            match trunc_logderiv_residual(&p.dzero, zeros, p) {
                Ok(r) => records.push(r),
                Err(e) => notes.push(format!("trunc_logderiv skipped: {e}")),
            }
        }
    }

    // Census statistics on a 50-unit grid.
    let mut t_grid = Vec::new();
    let mut t = 50.0;
    while t <= config.t_max {
        t_grid.push(t);
        t += 50.0;
    }
    for &t in &t_grid {
        if dzeros.covers(0.0, t) {
            match lm_cumsum(t, dzeros) {
                Ok(r) => records.push(r),
                Err(e) => notes.push(format!("lm_cumsum skipped: {e}")),
            }
            match berndt_count_check(t, dzeros) {
                Ok(r) => records.push(r),
                Err(e) => notes.push(format!("berndt_count skipped: {e}")),
            }
        }
    }

    // S(T) on the same grid.
    let s_values: Vec<(f64, f64)> = t_grid
        .par_iter()
        .filter_map(|&t| {
            let mut res = None;
            for k in [0.0, 1e-3, -1e-3, 2e-3] {
                if let Ok((_, s)) = count_zeros_n(t + k, &budget) {
                    res = Some((t, s));
                    break;
                }
            }
            res
        })
        .collect();
    for (t, s) in &s_values {
        records.push(s_of_t_record(*t, *s));
    }

    // Empirical m(nu) snapshots.
    let mut m_nu = Vec::new();
    let nus = [-2.0, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0];
    let mut t_snaps = vec![config.t_max];
    if config.t_max / 2.0 >= 50.0 {
        t_snaps.push(config.t_max / 2.0);
    }
    for &t in &t_snaps {
        if !dzeros.covers(0.0, t) {
            continue;
        }
        for &nu in &nus {
            match empirical_m_nu(nu, t, dzeros) {
                Ok(s) => {
                    m_nu.push(s);
                    records.push(CheckRecord::new(
                        CheckName::MNu,
                        format!("nu={nu};T={t}"),
                        rug::Float::with_val(zetalab_core::verify::STAT_PREC, s.fraction),
                        rug::Float::with_val(zetalab_core::verify::STAT_PREC, 1),
                        rug::Float::with_val(zetalab_core::verify::STAT_PREC, s.fraction),
                    ));
                }
                Err(e) => notes.push(format!("m_nu skipped: {e}")),
            }
        }
    }

    // The mean-value bound on seeded random triples: one summary row.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut max_stat = rug::Float::new(zetalab_core::verify::STAT_PREC);
    let mut violations = 0usize;
    const TRIPLES: usize = 100_000;
    for _ in 0..TRIPLES {
        let a = rng.gen_range(1e-12..1e3);
        let x1 = rng.gen_range(-1e3..1e3);
        let x2 = rng.gen_range(-1e3..1e3);
        match lagrange_bound_check(x1, x2, a) {
            Ok(r) => {
                if r.statistic.to_f64() > 1.0 {
                    violations += 1;
                }
                if r.statistic > max_stat {
                    max_stat = r.statistic;
                }
            }
            Err(e) => notes.push(format!("lagrange_bound skipped: {e}")),
        }
    }
    if violations > 0 {
        events.push(event(
            EXIT_REGRESSION,
            format!("lagrange bound violated on {violations} triples"),
        ));
    }
    records.push(CheckRecord::new(
        CheckName::LagrangeBound,
        format!("triples={TRIPLES};seed={}", config.seed),
        max_stat.clone(),
        rug::Float::with_val(zetalab_core::verify::STAT_PREC, 1),
        max_stat,
    ));

    let summaries = population_summaries(pairings);
    (records, m_nu, summaries, s_values)
}

/// Applies the stored baselines: first certified run locks them, re-runs are
/// compared. `new_extreme` rows escalate to a regression event.
fn resolve_baselines(
    records: &mut [CheckRecord],
    baselines: &mut BTreeMap<String, f64>,
    events: &mut Vec<RunEvent>,
) {
    let mut groups: BTreeMap<&'static str, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        if r.bound_status != BoundStatus::NotApplicable {
            groups.entry(r.check_name.as_str()).or_default().push(i);
        }
    }
    for (name, idxs) in groups {
        let observed_max = idxs
            .iter()
            .map(|&i| records[i].statistic.to_f64().abs())
            .fold(0f64, f64::max);
        match baselines.get(name) {
            Some(&stored) => {
                let mut extremes = 0usize;
                for &i in &idxs {
                    if records[i].statistic.to_f64().abs() > stored {
                        records[i].bound_status = BoundStatus::NewExtreme;
                        extremes += 1;
                    } else {
                        records[i].bound_status = BoundStatus::WithinBaseline;
                    }
                }
                if extremes > 0 {
                    events.push(event(
                        EXIT_REGRESSION,
                        format!("{name}: {extremes} statistic(s) exceed the stored baseline {stored}"),
                    ));
                }
            }
            None => {
                baselines.insert(name.to_string(), observed_max);
                for &i in &idxs {
                    records[i].bound_status = BoundStatus::WithinBaseline;
                }
            }
        }
    }
}

fn try_load_cache(config: &RunConfig, notes: &mut Vec<String>) -> Option<CacheData> {
    if !config.cache_path.exists() {
        return None;
    }
    match cache::load(&config.cache_path, &config.fingerprint()) {
        Ok(data) => Some(data),
        Err(CacheError::FingerprintMismatch { .. }) => {
            notes.push("cache fingerprint mismatch: recomputing populations".into());
            None
        }
        Err(e) => {
            notes.push(format!("cache unusable ({e}): recomputing populations"));
            None
        }
    }
}

fn pool(config: &RunConfig) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .expect("worker pool")
}

/// Full pipeline: scan -> census -> pair -> verify -> report.
pub fn run_all(config: &RunConfig) -> Result<RunArtifacts, PipelineError> {
    config.validate()?;
    let started = Instant::now();
    let mut art = RunArtifacts::default();

    let cached = try_load_cache(config, &mut art.notes);
    let (zeros, zcov, dzeros, dcov, mut baselines) = match cached {
        Some(data) => {
            art.loaded_from_cache = true;
            (
                data.zeros,
                data.zero_coverage,
                data.dzeros,
                data.dz_coverage,
                data.baselines,
            )
        }
        None => {
            let (zeros, zcov, dzeros, dcov) = pool(config).install(|| {
                let mut events = Vec::new();
                let (zeros, zcov) = compute_zeros(config, &mut events);
                let (dzeros, dcov) = compute_dzeros(config, &mut events);
                art.events = events;
                (zeros, zcov, dzeros, dcov)
            });
            (zeros, zcov, dzeros, dcov, BTreeMap::new())
        }
    };

    art.zeros = ZeroSet::new(zeros, zcov);
    art.dzeros = DerivSet::new(dzeros, dcov);

    art.pairings = art
        .dzeros
        .dzeros()
        .iter()
        .filter(|d| {
            let g = d.gamma_f64();
            art.zeros.covers(g - 2.0, g + 2.0)
        })
        .filter_map(|d| zetalab_core::nearest_ordinate(d, &art.zeros).ok())
        .collect();

    let (mut records, m_nu, summaries, s_values) = pool(config).install(|| {
        let mut events = std::mem::take(&mut art.events);
        let mut notes = std::mem::take(&mut art.notes);
        let out = run_checks(
            config,
            &art.zeros,
            &art.dzeros,
            &art.pairings,
            &mut events,
            &mut notes,
        );
        art.events = events;
        art.notes = notes;
        out
    });
    resolve_baselines(&mut records, &mut baselines, &mut art.events);
    art.records = records;
    art.m_nu = m_nu;
    art.summaries = summaries;
    art.s_values = s_values;
    art.baselines = baselines;

    write_cache(config, &art)?;
    write_reports(config, &art)?;
    art.wall_secs = started.elapsed().as_secs_f64();
    write_meta(config, &art)?;
    Ok(art)
}

/// Scan stage only: zeros plus cache plus zeros.csv.
pub fn run_scan(config: &RunConfig) -> Result<RunArtifacts, PipelineError> {
    config.validate()?;
    let started = Instant::now();
    let mut art = RunArtifacts::default();
    let existing = try_load_cache(config, &mut art.notes);

    let (zeros, zcov) = pool(config).install(|| {
        let mut events = Vec::new();
        let out = compute_zeros(config, &mut events);
        art.events = events;
        out
    });
    art.zeros = ZeroSet::new(zeros, zcov);
    if let Some(data) = existing {
        art.dzeros = DerivSet::new(data.dzeros, data.dz_coverage);
        art.baselines = data.baselines;
    }
    write_cache(config, &art)?;
    std::fs::create_dir_all(&config.report_dir)?;
    report::write_zeros_csv(&config.report_dir.join("zeros.csv"), art.zeros.zeros())?;
    art.wall_secs = started.elapsed().as_secs_f64();
    write_meta(config, &art)?;
    Ok(art)
}

/// Census stage only: zeta' zeros plus cache plus dzeros.csv.
pub fn run_dzeros(config: &RunConfig) -> Result<RunArtifacts, PipelineError> {
    config.validate()?;
    let started = Instant::now();
    let mut art = RunArtifacts::default();
    let existing = try_load_cache(config, &mut art.notes);

    let (dzeros, dcov) = pool(config).install(|| {
        let mut events = Vec::new();
        let out = compute_dzeros(config, &mut events);
        art.events = events;
        out
    });
    art.dzeros = DerivSet::new(dzeros, dcov);
    if let Some(data) = existing {
        art.zeros = ZeroSet::new(data.zeros, data.zero_coverage);
        art.baselines = data.baselines;
    }
    write_cache(config, &art)?;
    std::fs::create_dir_all(&config.report_dir)?;
    report::write_dzeros_csv(&config.report_dir.join("dzeros.csv"), art.dzeros.dzeros())?;
    art.wall_secs = started.elapsed().as_secs_f64();
    write_meta(config, &art)?;
    Ok(art)
}

/// Verify stage: checks over the cached populations.
pub fn run_verify(
    config: &RunConfig,
    filter: Option<&[CheckName]>,
) -> Result<RunArtifacts, PipelineError> {
    config.validate()?;
    let started = Instant::now();
    let mut art = RunArtifacts::default();
    let Some(data) = try_load_cache(config, &mut art.notes) else {
        art.events.push(event(
            EXIT_CERTIFICATION,
            "no usable cache: run `scan` and `dzeros` (or `all`) first",
        ));
        return Ok(art);
    };
    art.loaded_from_cache = true;
    art.zeros = ZeroSet::new(data.zeros, data.zero_coverage);
    art.dzeros = DerivSet::new(data.dzeros, data.dz_coverage);
    let mut baselines = data.baselines;

    art.pairings = art
        .dzeros
        .dzeros()
        .iter()
        .filter(|d| {
            let g = d.gamma_f64();
            art.zeros.covers(g - 2.0, g + 2.0)
        })
        .filter_map(|d| zetalab_core::nearest_ordinate(d, &art.zeros).ok())
        .collect();

    let (mut records, m_nu, summaries, s_values) = pool(config).install(|| {
        let mut events = std::mem::take(&mut art.events);
        let mut notes = std::mem::take(&mut art.notes);
        let out = run_checks(
            config,
            &art.zeros,
            &art.dzeros,
            &art.pairings,
            &mut events,
            &mut notes,
        );
        art.events = events;
        art.notes = notes;
        out
    });
    if let Some(names) = filter {
        records.retain(|r| names.contains(&r.check_name));
    }
    resolve_baselines(&mut records, &mut baselines, &mut art.events);
    art.records = records;
    art.m_nu = m_nu;
    art.summaries = summaries;
    art.s_values = s_values;
    art.baselines = baselines;

    write_cache(config, &art)?;
    write_reports(config, &art)?;
    art.wall_secs = started.elapsed().as_secs_f64();
    write_meta(config, &art)?;
    Ok(art)
}

/// Report stage: regenerates every report file from the cache.
pub fn run_report(config: &RunConfig) -> Result<RunArtifacts, PipelineError> {
    run_verify(config, None)
}

fn write_cache(config: &RunConfig, art: &RunArtifacts) -> Result<(), PipelineError> {
    let data = CacheData {
        bits: config.mantissa_bits,
        eps: config.target_abs_error,
        zeros: art.zeros.zeros().to_vec(),
        zero_coverage: art.zeros.coverage().to_vec(),
        dzeros: art.dzeros.dzeros().to_vec(),
        dz_coverage: art.dzeros.coverage().to_vec(),
        baselines: art.baselines.clone(),
    };
    cache::store(&config.cache_path, &config.fingerprint(), &data).map_err(|e| match e {
        CacheError::Io(io) => PipelineError::Io(io),
        other => PipelineError::Io(std::io::Error::other(other.to_string())),
    })
}

fn write_reports(config: &RunConfig, art: &RunArtifacts) -> Result<(), PipelineError> {
    let dir = &config.report_dir;
    std::fs::create_dir_all(dir)?;
    report::write_zeros_csv(&dir.join("zeros.csv"), art.zeros.zeros())?;
    report::write_dzeros_csv(&dir.join("dzeros.csv"), art.dzeros.dzeros())?;
    report::write_pairings_csv(&dir.join("pairings.csv"), &art.pairings)?;
    report::write_checks_csv(&dir.join("checks.csv"), &art.records)?;
    report::write_checks_json(
        &dir.join("checks.json"),
        &config.serialize(),
        &config.fingerprint(),
        &art.records,
        &art.m_nu,
        &art.summaries,
        &art.baselines,
        &[
            ("zeros", art.zeros.zeros().len()),
            ("dzeros", art.dzeros.dzeros().len()),
            ("pairings", art.pairings.len()),
        ],
    )?;
    report::write_plotdata(dir, &art.records, &art.m_nu, &art.s_values)?;
    std::fs::write(dir.join("run_config.txt"), config.serialize())?;
    Ok(())
}

/// Wall clock and event log; kept out of the deterministic report set.
fn write_meta(config: &RunConfig, art: &RunArtifacts) -> Result<(), PipelineError> {
    std::fs::create_dir_all(&config.report_dir)?;
    let mut meta = format!(
        "wall_secs={}\nexit_code={}\nfrom_cache={}\n",
        art.wall_secs,
        art.exit_code(),
        art.loaded_from_cache
    );
    for e in &art.events {
        meta.push_str(&format!("event code={} {}\n", e.code, e.message));
    }
    for n in &art.notes {
        meta.push_str(&format!("note {n}\n"));
    }
    std::fs::write(config.report_dir.join("run_meta.txt"), meta)?;
    Ok(())
}
