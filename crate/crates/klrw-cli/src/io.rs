//! Parsing and formatting of the wire formats: rationals as `p/q`, root
//! vectors as integer lists, pressures as rational lists, idempotents as
//! `word@red`, and the JSON schemas of the subcommand reports.

use anyhow::{anyhow, bail, Result};
use num_rational::BigRational;

use klrw::cartan::RootVec;
use klrw::combinatorics::{Idem, PLFunction, SlopeDatum};
use klrw::pressure::Pressure;

pub fn parse_rational(s: &str) -> Result<BigRational> {
    klrw::parse_rational(s).ok_or_else(|| anyhow!("malformed rational `{s}`; expected p or p/q"))
}

pub fn parse_pressure(s: &str) -> Result<Pressure> {
    let values = s
        .split(',')
        .map(|t| parse_rational(t.trim()))
        .collect::<Result<Vec<_>>>()?;
    Pressure::new(values).map_err(|e| anyhow!("invalid pressure `{s}`: {e}"))
}

pub fn parse_pressure_list(s: &str) -> Result<Vec<Pressure>> {
    s.split(';').map(|t| parse_pressure(t.trim())).collect()
}

pub fn parse_alpha(s: &str, e: usize) -> Result<RootVec> {
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| anyhow!("malformed integer `{t}`")))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != e {
        bail!("alpha has {} entries but e = {e}", coeffs.len());
    }
    if coeffs.iter().any(|&c| c < 0) {
        bail!("alpha must be nonnegative");
    }
    Ok(RootVec::new(coeffs))
}

pub fn parse_word(s: &str, e: usize) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let w = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| anyhow!("malformed label `{t}`")))
        .collect::<Result<Vec<_>>>()?;
    if w.iter().any(|&l| l >= e) {
        bail!("label out of range for e = {e}");
    }
    Ok(w)
}

/// `word@red`, e.g. `0,1,0,1@0`.
pub fn parse_idem(s: &str, e: usize) -> Result<Idem> {
    let (word, red) = match s.split_once('@') {
        Some((w, r)) => (w, r.trim().parse::<usize>().map_err(|_| anyhow!("malformed red position"))?),
        None => (s, 0),
    };
    let word = parse_word(word, e)?;
    if red > word.len() {
        bail!("red position {red} exceeds word length {}", word.len());
    }
    Ok(Idem::from_word_red(&word, red))
}

pub fn parse_idem_list(s: &str, e: usize) -> Result<Vec<Idem>> {
    s.split(';').map(|t| parse_idem(t.trim(), e)).collect()
}

pub fn format_idem(idem: &Idem) -> String {
    let (word, red) = idem.to_word_red();
    let w: Vec<String> = word.iter().map(|l| l.to_string()).collect();
    format!("{}@{}", w.join(","), red)
}

pub fn format_pressure(chi: &Pressure) -> String {
    chi.values.iter().map(klrw::format_rational).collect::<Vec<_>>().join(",")
}

pub fn rational_json(r: &BigRational) -> serde_json::Value {
    serde_json::Value::String(klrw::format_rational(r))
}

pub fn plf_json(f: &PLFunction) -> serde_json::Value {
    serde_json::json!({
        "breakpoints": f
            .breakpoints
            .iter()
            .map(|(x, y)| serde_json::json!([klrw::format_rational(x), klrw::format_rational(y)]))
            .collect::<Vec<_>>(),
        "tail_slope": klrw::format_rational(&f.tail_slope),
    })
}

pub fn rootvec_json(v: &RootVec) -> serde_json::Value {
    serde_json::json!(v.coeffs)
}

pub fn slope_datum_json(d: &SlopeDatum) -> serde_json::Value {
    serde_json::json!({
        "negative": d.neg.iter().map(rootvec_json).collect::<Vec<_>>(),
        "zero": rootvec_json(&d.zero),
        "positive": d.pos.iter().map(rootvec_json).collect::<Vec<_>>(),
    })
}

pub fn dims_json(dims: &klrw::engine::ideal::GradedDims, field: &str) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = dims
        .dims
        .iter()
        .map(|(d, n)| (d.to_string(), serde_json::json!(n)))
        .collect();
    serde_json::json!({
        "field": field,
        "dims": map,
        "total": dims.total(),
        "status": if dims.complete { "complete (heuristic)" } else { "truncated" },
        "max_degree": dims.max_degree,
        "window": dims.window,
    })
}
