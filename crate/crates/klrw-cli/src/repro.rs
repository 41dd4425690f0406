//! Bundled reproduction suites: recompute the worked examples and compare
//! byte-for-byte (TSV) or structurally (JSON) against the goldens stored in
//! the repository.

use std::fs;
use std::path::Path;

use anyhow::Result;

use crate::commands::{self, Coeffs};
use crate::io;
use klrw::cartan::{CartanDatum, RootVec};
use klrw::pressure::Pressure;
use klrw::weyl::{act_dotted, WeylWord};

const GOLD_CHART_SMALL: &str = include_str!("../goldens/chart_2a0_a1.tsv");
const GOLD_CHART_DELTA: &str = include_str!("../goldens/chart_2delta.tsv");
const GOLD_WEYL: &str = include_str!("../goldens/weyl_table.tsv");
const GOLD_DOTTED: &str = include_str!("../goldens/dotted_action.tsv");
const GOLD_SLOPES: &str = include_str!("../goldens/slope_graphs.json");
const GOLD_ROCK: &str = include_str!("../goldens/rock_e3_d1.json");
const GOLD_DELTA_DIMS: &str = include_str!("../goldens/delta_dims.json");
const GOLD_WREATH: &str = include_str!("../goldens/wreath_corner.json");

/// The nine chart pressures: words applied to the uniform pressure, in the
/// worked order.
pub fn chart_words() -> Vec<Vec<usize>> {
    vec![
        vec![],
        vec![0],
        vec![1],
        vec![1, 0],
        vec![0, 1],
        vec![0, 1, 0],
        vec![1, 0, 1],
        vec![0, 1, 0, 1],
        vec![1, 0, 1, 0],
    ]
}

pub fn chart_pressures(e: usize) -> Vec<Pressure> {
    let cd = CartanDatum::affine(e).unwrap();
    let chi0 = Pressure::uniform(e);
    chart_words()
        .into_iter()
        .map(|w| klrw::weyl::act_pressure(&cd, &WeylWord::new(w), &chi0))
        .collect()
}

pub fn compute_chart_small() -> Result<String> {
    let alpha = RootVec::new(vec![2, 1]);
    let chart = commands::idem_chart(2, 0, &alpha, &chart_pressures(2), true, 1, Coeffs::Q)?;
    Ok(commands::chart_tsv(&chart))
}

pub fn compute_chart_delta() -> Result<String> {
    let alpha = RootVec::new(vec![2, 2]);
    let chart = commands::idem_chart(2, 0, &alpha, &chart_pressures(2), true, 1, Coeffs::Q)?;
    Ok(commands::chart_tsv(&chart))
}

pub fn compute_weyl_table() -> Result<String> {
    let mut out = String::from("word\tchi\n");
    for (word, chi) in chart_words().iter().zip(chart_pressures(2)) {
        let w: Vec<String> = word.iter().map(|i| i.to_string()).collect();
        out.push_str(&format!("[{}]\t{}\n", w.join(","), io::format_pressure(&chi)));
    }
    Ok(out)
}

pub fn compute_dotted_table() -> Result<String> {
    let cd = CartanDatum::affine(2).unwrap();
    let l0 = klrw::cartan::Weight::fundamental(2, 0);
    let two_delta = RootVec::new(vec![2, 2]);
    let mut out = String::from("word\tresult\n");
    for word in [vec![0usize], vec![1], vec![1, 0]] {
        let r = act_dotted(&cd, &WeylWord::new(word.clone()), &l0, &two_delta);
        let w: Vec<String> = word.iter().map(|i| i.to_string()).collect();
        let c: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("[{}]\t{}\n", w.join(","), c.join(",")));
    }
    Ok(out)
}

/// The four worked slope graphs at chi = (-3/2, 1/2).
pub fn slope_inputs() -> Vec<(Vec<usize>, usize)> {
    vec![
        (vec![1, 1, 0, 1, 0, 0], 2),
        (vec![1, 1, 0, 1, 0, 0], 3),
        (vec![1, 0, 0, 1, 0, 1], 1),
        (vec![0, 1, 0, 1, 0, 1], 3),
    ]
}

pub fn compute_slopes() -> Result<serde_json::Value> {
    let chi = io::parse_pressure("-3/2,1/2")?;
    let mut reports = Vec::new();
    for (word, red) in slope_inputs() {
        reports.push(commands::slope(2, &chi, &word, red)?.json);
    }
    Ok(serde_json::Value::Array(reports))
}

pub fn compute_rock() -> Result<serde_json::Value> {
    Ok(commands::rock_check(3, 1, 8)?.json)
}

pub fn compute_delta_dims() -> Result<serde_json::Value> {
    let alpha = RootVec::new(vec![1, 1]);
    let chi0 = Pressure::uniform(2);
    let q = commands::quotient_dims(2, 0, &alpha, &chi0, Coeffs::Q, 12)?;
    let f2 = commands::quotient_dims(2, 0, &alpha, &chi0, Coeffs::Fp(2), 12)?;
    let f3 = commands::quotient_dims(2, 0, &alpha, &chi0, Coeffs::Fp(3), 12)?;
    Ok(serde_json::json!({ "Q": q, "F2": f2, "F3": f3 }))
}

pub fn compute_wreath_corner() -> Result<serde_json::Value> {
    let alpha = RootVec::new(vec![2, 2]);
    let chi = io::parse_pressure("1/2,-3/2")?;
    let idem = io::parse_idem("0,1,0,1@0", 2)?;
    commands::truncate(2, 0, &alpha, &chi, &[idem], Coeffs::Q, 12)
}

struct Outcome {
    failures: usize,
    checked: usize,
}

impl Outcome {
    fn tsv(&mut self, name: &str, golden: &str, computed: &str, out: Option<&Path>) {
        self.checked += 1;
        if let Some(dir) = out {
            let _ = fs::create_dir_all(dir);
            let _ = fs::write(dir.join(name), computed);
        }
        if golden == computed {
            println!("{name}: ok");
        } else {
            println!("{name}: MISMATCH");
            self.failures += 1;
        }
    }

    fn json(&mut self, name: &str, golden: &str, computed: &serde_json::Value, out: Option<&Path>) {
        self.checked += 1;
        if let Some(dir) = out {
            let _ = fs::create_dir_all(dir);
            let _ = fs::write(dir.join(name), serde_json::to_string_pretty(computed).unwrap());
        }
        match serde_json::from_str::<serde_json::Value>(golden) {
            Ok(g) if g == *computed => println!("{name}: ok"),
            _ => {
                println!("{name}: MISMATCH");
                self.failures += 1;
            }
        }
    }
}

pub fn run(suite: &str, out: Option<&Path>) -> Result<i32> {
    let mut outcome = Outcome { failures: 0, checked: 0 };
    let all = suite == "all";
    if all || suite == "charts" {
        outcome.tsv("chart_2a0_a1.tsv", GOLD_CHART_SMALL, &compute_chart_small()?, out);
        outcome.tsv("chart_2delta.tsv", GOLD_CHART_DELTA, &compute_chart_delta()?, out);
    }
    if all || suite == "weyl" {
        outcome.tsv("weyl_table.tsv", GOLD_WEYL, &compute_weyl_table()?, out);
        outcome.tsv("dotted_action.tsv", GOLD_DOTTED, &compute_dotted_table()?, out);
    }
    if all || suite == "slopes" {
        outcome.json("slope_graphs.json", GOLD_SLOPES, &compute_slopes()?, out);
    }
    if all || suite == "rock" {
        outcome.json("rock_e3_d1.json", GOLD_ROCK, &compute_rock()?, out);
    }
    if all || suite == "algebra" {
        outcome.json("delta_dims.json", GOLD_DELTA_DIMS, &compute_delta_dims()?, out);
        outcome.json("wreath_corner.json", GOLD_WREATH, &compute_wreath_corner()?, out);
    }
    if outcome.checked == 0 {
        anyhow::bail!("unknown suite `{suite}`; use charts, weyl, slopes, rock, algebra or all");
    }
    println!(
        "{} artifact(s) checked, {} mismatch(es)",
        outcome.checked, outcome.failures
    );
    Ok(if outcome.failures == 0 { 0 } else { 1 })
}
