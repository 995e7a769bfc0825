//! Report emission: fixed-schema CSVs, a JSON mirror with the run metadata,
//! and plot-ready TSV files. All text is UTF-8 with LF endings; big-float
//! columns are printed round-to-nearest at 30 significant digits.

use rug::Float;
use std::fs;
use std::io;
use std::path::Path;
use zetalab_core::verify::{CheckRecord, ConjectureAStat};
use zetalab_core::zeros::{DerivZero, ZeroPairing, ZetaZero};

/// Round-to-nearest decimal at 30 significant digits.
pub fn fmt_sig30(x: &Float) -> String {
    if x.is_zero() {
        return "0".into();
    }
    format!("{:.29e}", x)
}

fn fmt_opt(x: &Option<Float>) -> String {
    match x {
        Some(v) => fmt_sig30(v),
        None => "inf".into(),
    }
}

pub fn write_zeros_csv(path: &Path, zeros: &[ZetaZero]) -> io::Result<()> {
    let mut out = String::from("index,ordinate,residual,certified\n");
    for z in zeros {
        out.push_str(&format!(
            "{},{},{},{}\n",
            z.index,
            fmt_sig30(&z.ordinate),
            z.residual,
            z.certified
        ));
    }
    fs::write(path, out)
}

pub fn write_dzeros_csv(path: &Path, dzeros: &[DerivZero]) -> io::Result<()> {
    let mut out = String::from("beta,gamma,residual,rect_id\n");
    for d in dzeros {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_sig30(&d.beta),
            fmt_sig30(&d.gamma),
            d.residual,
            d.rect_id
        ));
    }
    fs::write(path, out)
}

pub fn write_pairings_csv(path: &Path, pairings: &[ZeroPairing]) -> io::Result<()> {
    let mut out = String::from("gamma_prime,beta_offset,gamma_c,gap,straddle_gap\n");
    for p in pairings {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_sig30(&p.dzero.gamma),
            fmt_sig30(&p.beta_offset),
            fmt_sig30(&p.gamma_c),
            fmt_sig30(&p.gap),
            fmt_opt(&p.straddle_gap)
        ));
    }
    fs::write(path, out)
}

pub fn write_checks_csv(path: &Path, records: &[CheckRecord]) -> io::Result<()> {
    let mut out = String::from("check_name,subject,lhs,rhs,statistic,bound_status\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.check_name.as_str(),
            r.subject,
            fmt_sig30(&r.lhs),
            fmt_sig30(&r.rhs),
            fmt_sig30(&r.statistic),
            r.bound_status.as_str()
        ));
    }
    fs::write(path, out)
}

#[allow(clippy::too_many_arguments)]
pub fn write_checks_json(
    path: &Path,
    config_text: &str,
    fingerprint: &str,
    records: &[CheckRecord],
    m_nu: &[ConjectureAStat],
    summaries: &[(String, f64)],
    baselines: &std::collections::BTreeMap<String, f64>,
    counts: &[(&str, usize)],
) -> io::Result<()> {
    use serde_json::{json, Map, Value};
    let recs: Vec<Value> = records
        .iter()
        .map(|r| {
            json!({
                "check_name": r.check_name.as_str(),
                "subject": r.subject,
                "lhs": fmt_sig30(&r.lhs),
                "rhs": fmt_sig30(&r.rhs),
                "statistic": fmt_sig30(&r.statistic),
                "bound_status": r.bound_status.as_str(),
                "tail_estimate": r.tail_estimate,
            })
        })
        .collect();
    let mnu: Vec<Value> = m_nu
        .iter()
        .map(|s| json!({"nu": s.nu, "T": s.t, "fraction": s.fraction}))
        .collect();
    let mut summary_map = Map::new();
    for (k, v) in summaries {
        summary_map.insert(k.clone(), json!(v));
    }
    let mut count_map = Map::new();
    for (k, v) in counts {
        count_map.insert((*k).to_string(), json!(v));
    }
    let doc = json!({
        "fingerprint": fingerprint,
        "config": config_text,
        "counts": Value::Object(count_map),
        "records": recs,
        "m_nu": mnu,
        "population_summaries": Value::Object(summary_map),
        "baselines": baselines,
    });
    fs::write(path, format!("{}\n", serde_json::to_string_pretty(&doc)?))
}

/// Plot-ready TSVs under `<dir>/plotdata/`.
pub fn write_plotdata(
    dir: &Path,
    records: &[CheckRecord],
    m_nu: &[ConjectureAStat],
    s_values: &[(f64, f64)],
) -> io::Result<()> {
    use zetalab_core::verify::CheckName;
    let pd = dir.join("plotdata");
    fs::create_dir_all(&pd)?;

    let mut thm2 = String::from("gamma_prime\tratio\n");
    for r in records.iter().filter(|r| r.check_name == CheckName::Thm2Ratio) {
        let gp = r
            .subject
            .split('+')
            .nth(1)
            .and_then(|s| s.strip_suffix('i'))
            .unwrap_or("nan");
        thm2.push_str(&format!("{}\t{}\n", gp, fmt_sig30(&r.statistic)));
    }
    fs::write(pd.join("theorem2_ratio.tsv"), thm2)?;

    let mut lm = String::from("T\tlhs\trhs\tratio\n");
    for r in records.iter().filter(|r| r.check_name == CheckName::LmCumsum) {
        let t = r.subject.strip_prefix("T=").unwrap_or("nan");
        lm.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            t,
            fmt_sig30(&r.lhs),
            fmt_sig30(&r.rhs),
            fmt_sig30(&r.statistic)
        ));
    }
    fs::write(pd.join("lm_cumsum.tsv"), lm)?;

    let mut mn = String::from("nu\tT\tfraction\n");
    for s in m_nu {
        mn.push_str(&format!("{}\t{}\t{}\n", s.nu, s.t, s.fraction));
    }
    fs::write(pd.join("m_nu.tsv"), mn)?;

    let mut berndt = String::from("T\tcount\tmain_term\tstatistic\n");
    for r in records.iter().filter(|r| r.check_name == CheckName::BerndtCount) {
        let t = r.subject.strip_prefix("T=").unwrap_or("nan");
        berndt.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            t,
            fmt_sig30(&r.lhs),
            fmt_sig30(&r.rhs),
            fmt_sig30(&r.statistic)
        ));
    }
    fs::write(pd.join("berndt_count.tsv"), berndt)?;

    let mut sot = String::from("T\tS_T\n");
    for (t, s) in s_values {
        sot.push_str(&format!("{t}\t{s}\n"));
    }
    fs::write(pd.join("s_of_t.tsv"), sot)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirty_significant_digits() {
        let x = Float::with_val(192, 2).sqrt();
        let s = fmt_sig30(&x);
        assert!(s.starts_with("1.4142135623730950488016887242"));
        assert_eq!(fmt_sig30(&Float::new(128)), "0");
    }
}
