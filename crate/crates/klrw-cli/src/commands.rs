//! Subcommand implementations, shared by the binary and the reproduction
//! suites.  Every function returns its artifacts as strings or JSON so
//! outputs stay byte-stable.

use std::sync::mpsc;
use std::thread;

use anyhow::{anyhow, bail, Result};

use klrw::cartan::{CartanDatum, RootVec, Weight};
use klrw::combinatorics::{
    self, enumerate_idempotents, path_function, slope_datum, Idem, RedPlacement,
};
use klrw::engine::ideal::{quotient_graded_dims, truncation_graded_dims, IdealContext};
use klrw::engine::scalar::{Field, PrimeField, Rationals};
use klrw::engine::semisimple::count_simple_factors_q_block;
use klrw::engine::Algebra;
use klrw::pressure::{chamber_signature, scopes_walls, Pressure};
use klrw::steadying::is_generator_zero;
use klrw::weyl::{act_pressure, WeylWord};

use crate::io;
use crate::svg;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coeffs {
    Q,
    Fp(u64),
}

pub fn parse_coeffs(s: &str) -> Result<Coeffs> {
    if s == "Q" {
        return Ok(Coeffs::Q);
    }
    if let Some(p) = s.strip_prefix('F') {
        let p: u64 = p.parse().map_err(|_| anyhow!("malformed coefficient field `{s}`"))?;
        if PrimeField::new(p).is_none() {
            bail!("coefficient field must be Q or F<p> with p prime");
        }
        return Ok(Coeffs::Fp(p));
    }
    bail!("coefficient field must be Q or F<p>")
}

pub fn cartan(e: usize) -> Result<CartanDatum> {
    CartanDatum::affine(e).map_err(|e| anyhow!("{e}"))
}

pub fn level_one(e: usize, lambda: usize) -> Result<Weight> {
    if lambda >= e {
        bail!("fundamental weight index out of range for e = {e}");
    }
    Ok(Weight::fundamental(e, lambda))
}

/// Survivor table of a block over a list of pressures: `table[row][col]` is
/// true when the idempotent is nonzero in the steadied quotient.
pub struct ChartResult {
    pub idems: Vec<Idem>,
    pub rows: Vec<(Pressure, Vec<bool>)>,
}

pub fn idem_chart(
    e: usize,
    lambda: usize,
    alpha: &RootVec,
    pressures: &[Pressure],
    confirm: bool,
    threads: usize,
    coeffs: Coeffs,
) -> Result<ChartResult> {
    let cd = cartan(e)?;
    let weight = level_one(e, lambda)?;
    let idems = enumerate_idempotents(&cd, &weight, alpha, RedPlacement::Anywhere)
        .map_err(|e| anyhow!("{e}"))?;
    let jobs: Vec<(usize, Pressure)> = pressures.iter().cloned().enumerate().collect();
    let workers = threads.max(1).min(jobs.len().max(1));
    let (tx, rx) = mpsc::channel();
    thread::scope(|scope| {
        for chunk in jobs.chunks(jobs.len().div_ceil(workers)) {
            let tx = tx.clone();
            let idems = &idems;
            let weight = &weight;
            scope.spawn(move || {
                for (row, chi) in chunk {
                    let result = chart_row(&cd, weight, alpha, chi, idems, confirm, coeffs);
                    tx.send((*row, chi.clone(), result)).expect("channel open");
                }
            });
        }
    });
    drop(tx);
    let mut rows: Vec<Option<(Pressure, Vec<bool>)>> = vec![None; jobs.len()];
    for (row, chi, result) in rx {
        rows[row] = Some((chi, result?));
    }
    Ok(ChartResult {
        idems,
        rows: rows.into_iter().map(|r| r.expect("all rows computed")).collect(),
    })
}

fn chart_row(
    cd: &CartanDatum,
    weight: &Weight,
    alpha: &RootVec,
    chi: &Pressure,
    idems: &[Idem],
    confirm: bool,
    coeffs: Coeffs,
) -> Result<Vec<bool>> {
    if !confirm {
        return Ok(idems.iter().map(|i| !is_generator_zero(cd, chi, i)).collect());
    }
    match coeffs {
        Coeffs::Q => {
            let alg = Algebra::new(*cd, weight, Rationals).map_err(|e| anyhow!("{e}"))?;
            let ctx =
                IdealContext::steadied(&alg, chi, weight, alpha).map_err(|e| anyhow!("{e}"))?;
            Ok(idems.iter().map(|i| !ctx.idem_in_ideal(i)).collect())
        }
        Coeffs::Fp(p) => {
            let field = PrimeField::new(p).expect("validated");
            let alg = Algebra::new(*cd, weight, field).map_err(|e| anyhow!("{e}"))?;
            let ctx =
                IdealContext::steadied(&alg, chi, weight, alpha).map_err(|e| anyhow!("{e}"))?;
            Ok(idems.iter().map(|i| !ctx.idem_in_ideal(i)).collect())
        }
    }
}

pub fn chart_tsv(chart: &ChartResult) -> String {
    let mut out = String::new();
    out.push_str("chi");
    for idem in &chart.idems {
        out.push('\t');
        out.push_str(&io::format_idem(idem));
    }
    out.push('\n');
    for (chi, row) in &chart.rows {
        out.push_str(&io::format_pressure(chi));
        for &alive in row {
            out.push('\t');
            out.push_str(if alive { "\u{2713}" } else { "0" });
        }
        out.push('\n');
    }
    out
}

pub fn chart_json(chart: &ChartResult) -> serde_json::Value {
    serde_json::json!({
        "idempotents": chart.idems.iter().map(io::format_idem).collect::<Vec<_>>(),
        "rows": chart
            .rows
            .iter()
            .map(|(chi, row)| {
                serde_json::json!({
                    "chi": io::format_pressure(chi),
                    "alive": row,
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub struct SlopeReport {
    pub json: serde_json::Value,
    pub svg: String,
}

pub fn slope(e: usize, chi: &Pressure, word: &[usize], red: usize) -> Result<SlopeReport> {
    let cd = cartan(e)?;
    if chi.e() != e {
        bail!("pressure has {} entries but e = {e}", chi.e());
    }
    if red > word.len() {
        bail!("red position {red} exceeds word length {}", word.len());
    }
    let idem = Idem::from_word_red(word, red);
    let datum = slope_datum(&cd, chi, &idem).map_err(|e| anyhow!("{e}"))?;
    let left_path = path_function(chi, &idem.left);
    let right_path = path_function(chi, &idem.right);
    let f_minus = combinatorics::lower_envelope_f(&left_path);
    let f_plus = combinatorics::upper_envelope_f(&right_path);
    let left_total = combinatorics::word_content(&cd, &idem.left);
    let right_total = combinatorics::word_content(&cd, &idem.right);
    let (_, g_minus) = combinatorics::envelopes_g(&left_path, &left_total, chi);
    let (g_plus, _) = combinatorics::envelopes_g(&right_path, &right_total, chi);
    let json = serde_json::json!({
        "chi": io::format_pressure(chi),
        "idempotent": io::format_idem(&idem),
        "slope_datum": io::slope_datum_json(&datum),
        "f_minus": io::plf_json(&f_minus),
        "f_plus": io::plf_json(&f_plus),
        "g_minus": io::plf_json(&g_minus),
        "g_plus": io::plf_json(&g_plus),
    });
    let svg = svg::render(&svg::SlopeGraph {
        left_path: &left_path,
        right_path: &right_path,
        f_minus: &f_minus,
        f_plus: &f_plus,
        g_minus: &g_minus,
        g_plus: &g_plus,
    });
    Ok(SlopeReport { json, svg })
}

pub fn quotient_dims(
    e: usize,
    lambda: usize,
    alpha: &RootVec,
    chi: &Pressure,
    coeffs: Coeffs,
    max_degree: i64,
) -> Result<serde_json::Value> {
    let cd = cartan(e)?;
    let weight = level_one(e, lambda)?;
    match coeffs {
        Coeffs::Q => {
            let alg = Algebra::new(cd, &weight, Rationals).map_err(|e| anyhow!("{e}"))?;
            let dims = quotient_graded_dims(&alg, chi, &weight, alpha, max_degree)
                .map_err(|e| anyhow!("{e}"))?;
            Ok(io::dims_json(&dims, "Q"))
        }
        Coeffs::Fp(p) => {
            let field = PrimeField::new(p).expect("validated");
            let name = field.name();
            let alg = Algebra::new(cd, &weight, field).map_err(|e| anyhow!("{e}"))?;
            let dims = quotient_graded_dims(&alg, chi, &weight, alpha, max_degree)
                .map_err(|e| anyhow!("{e}"))?;
            Ok(io::dims_json(&dims, &name))
        }
    }
}

pub fn idem_test(
    e: usize,
    lambda: usize,
    alpha: &RootVec,
    chi: &Pressure,
    idem: &Idem,
    coeffs: Coeffs,
) -> Result<serde_json::Value> {
    let cd = cartan(e)?;
    let weight = level_one(e, lambda)?;
    if idem.content(&cd) != *alpha {
        bail!("idempotent content does not match alpha");
    }
    let escape = is_generator_zero(&cd, chi, idem);
    let in_ideal = match coeffs {
        Coeffs::Q => {
            let alg = Algebra::new(cd, &weight, Rationals).map_err(|e| anyhow!("{e}"))?;
            klrw::engine::ideal::idem_in_ideal(&alg, chi, &weight, alpha, idem)
                .map_err(|e| anyhow!("{e}"))?
        }
        Coeffs::Fp(p) => {
            let alg = Algebra::new(cd, &weight, PrimeField::new(p).expect("validated"))
                .map_err(|e| anyhow!("{e}"))?;
            klrw::engine::ideal::idem_in_ideal(&alg, chi, &weight, alpha, idem)
                .map_err(|e| anyhow!("{e}"))?
        }
    };
    Ok(serde_json::json!({
        "idempotent": io::format_idem(idem),
        "escape_test_zero": escape,
        "in_ideal": in_ideal,
        "survives": !in_ideal,
    }))
}

pub fn truncate(
    e: usize,
    lambda: usize,
    alpha: &RootVec,
    chi: &Pressure,
    idems: &[Idem],
    coeffs: Coeffs,
    max_degree: i64,
) -> Result<serde_json::Value> {
    let cd = cartan(e)?;
    let weight = level_one(e, lambda)?;
    for idem in idems {
        if idem.content(&cd) != *alpha {
            bail!("idempotent content does not match alpha");
        }
    }
    let (dims, field) = match coeffs {
        Coeffs::Q => {
            let alg = Algebra::new(cd, &weight, Rationals).map_err(|e| anyhow!("{e}"))?;
            (
                truncation_graded_dims(&alg, chi, &weight, alpha, idems, max_degree)
                    .map_err(|e| anyhow!("{e}"))?,
                "Q".to_string(),
            )
        }
        Coeffs::Fp(p) => {
            let field = PrimeField::new(p).expect("validated");
            let name = field.name();
            let alg = Algebra::new(cd, &weight, field).map_err(|e| anyhow!("{e}"))?;
            (
                truncation_graded_dims(&alg, chi, &weight, alpha, idems, max_degree)
                    .map_err(|e| anyhow!("{e}"))?,
                name,
            )
        }
    };
    let mut v = io::dims_json(&dims, &field);
    v["idempotents"] =
        serde_json::json!(idems.iter().map(io::format_idem).collect::<Vec<_>>());
    Ok(v)
}

pub fn simples(e: usize, lambda: usize, alpha: &RootVec, chi: &Pressure) -> Result<serde_json::Value> {
    let cd = cartan(e)?;
    let weight = level_one(e, lambda)?;
    let alg = Algebra::new(cd, &weight, Rationals).map_err(|e| anyhow!("{e}"))?;
    let report = count_simple_factors_q_block(&alg, chi, &weight, alpha)
        .map_err(|e| anyhow!("{e}"))?;
    Ok(serde_json::json!({
        "field": "Q",
        "count": report.count,
        "split": report.split,
        "center_dim": report.center_dim,
        "radical_dim": report.radical_dim,
    }))
}

pub fn chamber(e: usize, lambda: usize, alpha: &RootVec, chi: &Pressure) -> Result<serde_json::Value> {
    let cd = cartan(e)?;
    let weight = level_one(e, lambda)?;
    let walls = scopes_walls(&cd, &weight, alpha).map_err(|e| anyhow!("{e}"))?;
    let sig = chamber_signature(&cd, chi, &weight, alpha).map_err(|e| anyhow!("{e}"))?;
    let signs: Vec<serde_json::Value> = walls
        .iter()
        .map(|w| {
            let s = sig.signs[w];
            serde_json::json!({
                "wall": w.coeffs,
                "sign": match s {
                    std::cmp::Ordering::Less => "-",
                    std::cmp::Ordering::Equal => "0",
                    std::cmp::Ordering::Greater => "+",
                },
            })
        })
        .collect();
    Ok(serde_json::json!({
        "walls": signs,
        "generic": sig.is_generic(),
    }))
}

pub fn weyl_act(e: usize, chi: &Pressure, word: &[usize]) -> Result<String> {
    let cd = cartan(e)?;
    if word.iter().any(|&i| i >= e) {
        bail!("reflection index out of range for e = {e}");
    }
    let out = act_pressure(&cd, &WeylWord::new(word.to_vec()), chi);
    Ok(io::format_pressure(&out))
}

pub struct RockCheck {
    pub json: serde_json::Value,
    pub matches: bool,
}

pub fn rock_check(e: usize, d: i64, max_degree: i64) -> Result<RockCheck> {
    let cd = cartan(e)?;
    let weight = Weight::fundamental(e, 0);
    let chi = klrw::rock::chi_rock(e, d).map_err(|e| anyhow!("{e}"))?;
    let alpha = cd.delta().scale(d);
    let idems = klrw::rock::delta_idempotents(e, d as usize);
    let alg = Algebra::new(cd, &weight, Rationals).map_err(|e| anyhow!("{e}"))?;
    let engine = truncation_graded_dims(&alg, &chi, &weight, &alpha, &idems, max_degree)
        .map_err(|e| anyhow!("{e}"))?;
    let reference =
        klrw::rock::wreath_reference_dims(e, d as usize, max_degree).map_err(|e| anyhow!("{e}"))?;
    let matches = engine.complete && engine.dims == reference;
    let reference_map: serde_json::Map<String, serde_json::Value> = reference
        .iter()
        .map(|(deg, n)| (deg.to_string(), serde_json::json!(n)))
        .collect();
    Ok(RockCheck {
        json: serde_json::json!({
            "e": e,
            "d": d,
            "chi": io::format_pressure(&chi),
            "engine": io::dims_json(&engine, "Q"),
            "reference": reference_map,
            "match": matches,
        }),
        matches,
    })
}
