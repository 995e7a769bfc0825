//! Persistent zero cache: a line-oriented text file carrying both zero
//! populations at full stored precision, the certified coverage windows, the
//! regression-baseline table, and a trailing checksum.
//!
//! A fingerprint mismatch on load is surfaced as its own error so the caller
//! recomputes instead of silently reusing a population produced by different
//! settings.

use crate::config::hex_string;
use rug::Float;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use thiserror::Error;
use zetalab_core::{DerivZero, ZetaZero};

const FORMAT_VERSION: &str = "zetalab-cache v1";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache file version mismatch: found '{0}'")]
    VersionMismatch(String),
    #[error("cache fingerprint mismatch (stored {stored}, expected {expected})")]
    FingerprintMismatch { stored: String, expected: String },
    #[error("cache checksum mismatch: file is corrupt or truncated")]
    Corrupt,
    #[error("malformed cache line: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Default)]
pub struct CacheData {
    pub bits: u32,
    pub eps: f64,
    pub zeros: Vec<ZetaZero>,
    pub zero_coverage: Vec<(f64, f64)>,
    pub dzeros: Vec<DerivZero>,
    pub dz_coverage: Vec<(f64, f64)>,
    pub baselines: BTreeMap<String, f64>,
}

/// Decimal digits that round-trip a binary mantissa of `bits` bits.
fn digits_for(bits: u32) -> usize {
    (bits as f64 * std::f64::consts::LOG10_2).ceil() as usize + 3
}

fn fmt_full(x: &Float, digits: usize) -> String {
    format!("{:.*e}", digits - 1, x)
}

fn parse_float(bits: u32, s: &str) -> Result<Float, CacheError> {
    Float::parse(s)
        .map(|p| Float::with_val(bits, p))
        .map_err(|_| CacheError::Malformed(s.to_string()))
}

pub fn store(path: &Path, fingerprint: &str, data: &CacheData) -> Result<(), CacheError> {
    let digits = digits_for(data.bits);
    let mut body = String::new();
    body.push_str(FORMAT_VERSION);
    body.push('\n');
    body.push_str(&format!("fingerprint {fingerprint}\n"));
    body.push_str(&format!("bits {}\n", data.bits));
    body.push_str(&format!("eps {}\n", data.eps));
    body.push_str(&format!("zeros {}\n", data.zeros.len()));
    for z in &data.zeros {
        body.push_str(&format!(
            "z {} {} {} {} {}\n",
            z.index,
            fmt_full(&z.ordinate, digits),
            z.residual,
            u8::from(z.certified),
            u8::from(z.suspect_multiple)
        ));
    }
    for w in &data.zero_coverage {
        body.push_str(&format!("zcov {} {}\n", w.0, w.1));
    }
    body.push_str(&format!("dzeros {}\n", data.dzeros.len()));
    for d in &data.dzeros {
        debug_assert!(!d.rect_id.contains(' '));
        body.push_str(&format!(
            "d {} {} {} {}\n",
            fmt_full(&d.beta, digits),
            fmt_full(&d.gamma, digits),
            d.residual,
            d.rect_id
        ));
    }
    for w in &data.dz_coverage {
        body.push_str(&format!("dcov {} {}\n", w.0, w.1));
    }
    for (name, value) in &data.baselines {
        body.push_str(&format!("baseline {name} {value}\n"));
    }
    let mut h = Sha256::new();
    h.update(body.as_bytes());
    let digest = hex_string(&h.finalize());
    let full = format!("{body}checksum {digest}\n");

    let tmp = path.with_extension("tmp");
    fs::write(&tmp, full)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load(path: &Path, expected_fingerprint: &str) -> Result<CacheData, CacheError> {
    let text = fs::read_to_string(path)?;

    // Verify the checksum over everything before the checksum line.
    let Some(idx) = text.rfind("checksum ") else {
        return Err(CacheError::Corrupt);
    };
    let (body, trailer) = text.split_at(idx);
    let stored_digest = trailer
        .trim_end()
        .strip_prefix("checksum ")
        .ok_or(CacheError::Corrupt)?;
    let mut h = Sha256::new();
    h.update(body.as_bytes());
    if hex_string(&h.finalize()) != stored_digest {
        return Err(CacheError::Corrupt);
    }

    let mut lines = body.lines();
    let version = lines.next().unwrap_or_default();
    if version != FORMAT_VERSION {
        return Err(CacheError::VersionMismatch(version.to_string()));
    }

    let mut data = CacheData::default();
    let mut fingerprint = String::new();
    for line in lines {
        let mut parts = line.split(' ');
        let tag = parts.next().unwrap_or_default();
        let rest: Vec<&str> = parts.collect();
        let bad = || CacheError::Malformed(line.to_string());
        match tag {
            "fingerprint" => fingerprint = rest.first().ok_or_else(bad)?.to_string(),
            "bits" => data.bits = rest.first().ok_or_else(bad)?.parse().map_err(|_| bad())?,
            "eps" => data.eps = rest.first().ok_or_else(bad)?.parse().map_err(|_| bad())?,
            "zeros" | "dzeros" => {}
            "z" => {
                if rest.len() != 5 {
                    return Err(bad());
                }
                data.zeros.push(ZetaZero {
                    index: rest[0].parse().map_err(|_| bad())?,
                    ordinate: parse_float(data.bits, rest[1])?,
                    residual: rest[2].parse().map_err(|_| bad())?,
                    certified: rest[3] == "1",
                    suspect_multiple: rest[4] == "1",
                });
            }
            "d" => {
                if rest.len() != 4 {
                    return Err(bad());
                }
                data.dzeros.push(DerivZero {
                    beta: parse_float(data.bits, rest[0])?,
                    gamma: parse_float(data.bits, rest[1])?,
                    residual: rest[2].parse().map_err(|_| bad())?,
                    rect_id: rest[3].to_string(),
                });
            }
            "zcov" | "dcov" => {
                if rest.len() != 2 {
                    return Err(bad());
                }
                let w = (
                    rest[0].parse().map_err(|_| bad())?,
                    rest[1].parse().map_err(|_| bad())?,
                );
                if tag == "zcov" {
                    data.zero_coverage.push(w);
                } else {
                    data.dz_coverage.push(w);
                }
            }
            "baseline" => {
                if rest.len() != 2 {
                    return Err(bad());
                }
                data.baselines
                    .insert(rest[0].to_string(), rest[1].parse().map_err(|_| bad())?);
            }
            other => return Err(CacheError::Malformed(other.to_string())),
        }
    }
    if fingerprint != expected_fingerprint {
        return Err(CacheError::FingerprintMismatch {
            stored: fingerprint,
            expected: expected_fingerprint.to_string(),
        });
    }
    Ok(data)
}
