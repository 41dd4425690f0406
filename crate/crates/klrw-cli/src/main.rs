//! Command-line front end: parse block data, dispatch to the library, and
//! emit TSV, JSON and SVG artifacts.  Exit code 0 on success, 1 on a
//! computational mismatch (rock-check, repro), 2 on usage errors.

mod commands;
mod io;
mod repro;
mod svg;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "klrw", about = "Steadied quotients of KLRW algebras in affine type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Survivor chart of straight-line idempotents over a list of pressures.
    IdemChart {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
        #[arg(long)]
        alpha: String,
        /// Semicolon-separated pressures, each a comma list of rationals.
        #[arg(long)]
        chi_list: String,
        /// Decide survivors by the escape test only, skipping the exact check.
        #[arg(long)]
        no_confirm: bool,
        #[arg(long, default_value = "Q")]
        coeffs: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Also write the structural report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Slope datum and envelope graphs of one idempotent.
    Slope {
        #[arg(long)]
        chi: String,
        /// Full black word, left to right.
        #[arg(long)]
        word: String,
        /// Red position: number of black strands left of the red.
        #[arg(long, default_value_t = 0)]
        red: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Graded dimensions of the steadied quotient of a block.
    QuotientDims {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        chi: String,
        #[arg(long, default_value = "Q")]
        coeffs: String,
        #[arg(long, default_value_t = 16)]
        max_degree: i64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Exact ideal membership of one idempotent.
    IdemTest {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        chi: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 0)]
        red: usize,
        #[arg(long, default_value = "Q")]
        coeffs: String,
    },
    /// Graded dimensions of an idempotent truncation.
    Truncate {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        chi: String,
        /// Semicolon-separated idempotents `word@red`.
        #[arg(long)]
        idems: String,
        #[arg(long, default_value = "Q")]
        coeffs: String,
        #[arg(long, default_value_t = 16)]
        max_degree: i64,
    },
    /// Simple-factor count of the block over the rationals.
    Simples {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        chi: String,
    },
    /// Scopes walls of the block and the sign pattern of a pressure.
    Chamber {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        chi: String,
    },
    /// Act on a pressure by a word in the simple reflections.
    WeylAct {
        #[arg(long)]
        chi: String,
        /// Word as a comma list, leftmost letter applied last.
        #[arg(long)]
        word: String,
    },
    /// Compare an engine truncation against the zigzag wreath reference.
    RockCheck {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 8)]
        max_degree: i64,
    },
    /// Recompute the bundled worked examples and compare against goldens.
    Repro {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the recomputed artifacts here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run() -> anyhow::Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::IdemChart { e, lambda, alpha, chi_list, no_confirm, coeffs, threads, json } => {
            let alpha = io::parse_alpha(&alpha, e)?;
            let pressures = io::parse_pressure_list(&chi_list)?;
            let coeffs = commands::parse_coeffs(&coeffs)?;
            let chart =
                commands::idem_chart(e, lambda, &alpha, &pressures, !no_confirm, threads, coeffs)?;
            print!("{}", commands::chart_tsv(&chart));
            if let Some(path) = json {
                fs::write(&path, serde_json::to_string_pretty(&commands::chart_json(&chart))?)?;
            }
            Ok(0)
        }
        Command::Slope { chi, word, red, svg, json } => {
            let chi = io::parse_pressure(&chi)?;
            let e = chi.e();
            let word = io::parse_word(&word, e)?;
            let report = commands::slope(e, &chi, &word, red)?;
            println!("{}", serde_json::to_string_pretty(&report.json)?);
            if let Some(path) = svg {
                fs::write(&path, &report.svg)?;
            }
            if let Some(path) = json {
                fs::write(&path, serde_json::to_string_pretty(&report.json)?)?;
            }
            Ok(0)
        }
        Command::QuotientDims { e, lambda, alpha, chi, coeffs, max_degree, json } => {
            let alpha = io::parse_alpha(&alpha, e)?;
            let chi = io::parse_pressure(&chi)?;
            let coeffs = commands::parse_coeffs(&coeffs)?;
            let v = commands::quotient_dims(e, lambda, &alpha, &chi, coeffs, max_degree)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            if let Some(path) = json {
                fs::write(&path, serde_json::to_string_pretty(&v)?)?;
            }
            Ok(0)
        }
        Command::IdemTest { e, lambda, alpha, chi, word, red, coeffs } => {
            let alpha = io::parse_alpha(&alpha, e)?;
            let chi = io::parse_pressure(&chi)?;
            let word = io::parse_word(&word, e)?;
            if red > word.len() {
                anyhow::bail!("red position {red} exceeds word length {}", word.len());
            }
            let idem = klrw::combinatorics::Idem::from_word_red(&word, red);
            let coeffs = commands::parse_coeffs(&coeffs)?;
            let v = commands::idem_test(e, lambda, &alpha, &chi, &idem, coeffs)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(0)
        }
        Command::Truncate { e, lambda, alpha, chi, idems, coeffs, max_degree } => {
            let alpha = io::parse_alpha(&alpha, e)?;
            let chi = io::parse_pressure(&chi)?;
            let idems = io::parse_idem_list(&idems, e)?;
            let coeffs = commands::parse_coeffs(&coeffs)?;
            let v = commands::truncate(e, lambda, &alpha, &chi, &idems, coeffs, max_degree)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(0)
        }
        Command::Simples { e, lambda, alpha, chi } => {
            let alpha = io::parse_alpha(&alpha, e)?;
            let chi = io::parse_pressure(&chi)?;
            let v = commands::simples(e, lambda, &alpha, &chi)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(0)
        }
        Command::Chamber { e, lambda, alpha, chi } => {
            let alpha = io::parse_alpha(&alpha, e)?;
            let chi = io::parse_pressure(&chi)?;
            let v = commands::chamber(e, lambda, &alpha, &chi)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(0)
        }
        Command::WeylAct { chi, word } => {
            let chi = io::parse_pressure(&chi)?;
            let e = chi.e();
            let word = io::parse_word(&word, e)?;
            println!("{}", commands::weyl_act(e, &chi, &word)?);
            Ok(0)
        }
        Command::RockCheck { e, d, max_degree } => {
            let check = commands::rock_check(e, d, max_degree)?;
            println!("{}", serde_json::to_string_pretty(&check.json)?);
            Ok(if check.matches { 0 } else { 1 })
        }
        Command::Repro { suite, out } => repro::run(&suite, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
