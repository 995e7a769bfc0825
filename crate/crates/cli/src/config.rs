//! Run configuration: a flat key=value file representation, validation, and
//! the semantic fingerprint that keys the cache and its baselines.

use sha2::{Digest, Sha256};
use std::path::PathBuf;
use thiserror::Error;
use zetalab_core::budget::PrecisionBudget;

pub const T_MAX_CAP: f64 = 1e4;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ConfigError {
    #[error("t_max {0} exceeds the desk-scale cap 1e4")]
    DeskScaleCap(f64),
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("malformed config line: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub t_max: f64,
    pub mantissa_bits: u32,
    pub target_abs_error: f64,
    pub rect_sigma_max: f64,
    pub lemma1_half_width: f64,
    pub workers: usize,
    pub cache_path: PathBuf,
    pub report_dir: PathBuf,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            t_max: 100.0,
            mantissa_bits: 128,
            target_abs_error: 1e-28,
            rect_sigma_max: 3.0,
            lemma1_half_width: 50.0,
            workers: 2,
            cache_path: PathBuf::from("zetalab.cache"),
            report_dir: PathBuf::from("reports"),
            seed: 42,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.t_max > T_MAX_CAP {
            return Err(ConfigError::DeskScaleCap(self.t_max));
        }
        if !(self.t_max >= 30.0) {
            return Err(ConfigError::Invalid("t_max must be at least 30".into()));
        }
        if !(self.rect_sigma_max > 0.5 && self.rect_sigma_max <= 3.0) {
            return Err(ConfigError::Invalid(
                "rect_sigma_max must lie in (0.5, 3]".into(),
            ));
        }
        if !(self.lemma1_half_width >= 50.0) {
            return Err(ConfigError::Invalid(
                "lemma1_half_width must be at least 50".into(),
            ));
        }
        if self.workers == 0 {
            return Err(ConfigError::Invalid("workers must be positive".into()));
        }
        PrecisionBudget::new(self.mantissa_bits, self.target_abs_error, 32)
            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
        Ok(())
    }

    pub fn budget(&self) -> PrecisionBudget {
        PrecisionBudget::new(self.mantissa_bits, self.target_abs_error, 32)
            .expect("validated config")
    }

    /// Flat key=value form; every field is written explicitly.
    pub fn serialize(&self) -> String {
        format!(
            "t_max={}\nmantissa_bits={}\ntarget_abs_error={}\nrect_sigma_max={}\n\
             lemma1_half_width={}\nworkers={}\ncache_path={}\nreport_dir={}\nseed={}\n",
            self.t_max,
            self.mantissa_bits,
            self.target_abs_error,
            self.rect_sigma_max,
            self.lemma1_half_width,
            self.workers,
            self.cache_path.display(),
            self.report_dir.display(),
            self.seed
        )
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = Self::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::Parse(line.to_string()))?;
            fn num<T: std::str::FromStr>(value: &str, line: &str) -> Result<T, ConfigError> {
                value
                    .parse()
                    .map_err(|_| ConfigError::Parse(line.to_string()))
            }
            match key {
                "t_max" => cfg.t_max = num(value, line)?,
                "mantissa_bits" => cfg.mantissa_bits = num(value, line)?,
                "target_abs_error" => cfg.target_abs_error = num(value, line)?,
                "rect_sigma_max" => cfg.rect_sigma_max = num(value, line)?,
                "lemma1_half_width" => cfg.lemma1_half_width = num(value, line)?,
                "workers" => cfg.workers = num(value, line)?,
                "cache_path" => cfg.cache_path = PathBuf::from(value),
                "report_dir" => cfg.report_dir = PathBuf::from(value),
                "seed" => cfg.seed = num(value, line)?,
                other => {
                    return Err(ConfigError::Parse(format!("unknown key '{other}'")));
                }
            }
        }
        Ok(cfg)
    }

    /// Hash of the fields that determine the computed populations and
    /// statistics. Worker count and file locations are excluded on purpose:
    /// they must not affect any result.
    pub fn fingerprint(&self) -> String {
        let semantic = format!(
            "t_max={};bits={};eps={};sigma_max={};half_width={};seed={}",
            self.t_max,
            self.mantissa_bits,
            self.target_abs_error,
            self.rect_sigma_max,
            self.lemma1_half_width,
            self.seed
        );
        let mut h = Sha256::new();
        h.update(semantic.as_bytes());
        hex_string(&h.finalize())
    }
}

pub(crate) fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_lossless() {
        let mut cfg = RunConfig::default();
        cfg.t_max = 123.456789012345;
        cfg.target_abs_error = 3.1e-31;
        cfg.seed = u64::MAX;
        cfg.cache_path = PathBuf::from("/tmp/some where/cache.txt");
        let text = cfg.serialize();
        let back = RunConfig::parse(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn desk_scale_cap_is_enforced() {
        let mut cfg = RunConfig::default();
        cfg.t_max = 1e5;
        assert!(matches!(cfg.validate(), Err(ConfigError::DeskScaleCap(_))));
    }

    #[test]
    fn fingerprint_ignores_workers_and_paths() {
        let a = RunConfig::default();
        let mut b = a.clone();
        b.workers = 7;
        b.report_dir = PathBuf::from("elsewhere");
        assert_eq!(a.fingerprint(), b.fingerprint());
        let mut c = a.clone();
        c.seed = 43;
        assert_ne!(a.fingerprint(), c.fingerprint());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(RunConfig::parse("nope=1").is_err());
    }
}
