//! `latpolar`: polars of convex lattice sets, theorem suites, the Mahler
//! search and SVG figures.
//!
//! Exit codes: 0 success, 1 a theorem check failed, 2 usage or input error.

mod input;
mod report;
mod suites;
mod svg;

use std::collections::BTreeMap;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use latpolar::theorems::{search_min_mahler, Verdict};
use latpolar::{cross_polytope, extract_graph_hrep, polar_z};
use serde_json::{json, Value};

use input::InputDocument;
use suites::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "latpolar",
    version,
    about = "Polars of convex lattice sets via the discrete Legendre transform"
)]
struct Cli {
    /// Seed for the random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random cases per corpus.
    #[arg(long, global = true, default_value_t = 50)]
    cases: usize,
    /// Output file for `plot`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the polar pipeline on an input document ("-" reads stdin).
    Polar { input: PathBuf },
    /// Run a theorem suite over the worked examples and a seeded corpus.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Exhaustive minimum of the discrete Mahler product over origin-symmetric sets.
    Search {
        #[arg(long, short)]
        n: usize,
        #[arg(long, short, default_value_t = 2)]
        radius: i64,
    },
    /// Write a four-panel SVG of K, K_L, K_Q* and K_Z* for a planar input.
    Plot { input: PathBuf },
}

enum Outcome {
    Ok,
    Finding,
}

/// A failure attributed to one stage of a command.
struct Failure {
    stage: &'static str,
    error: anyhow::Error,
}

trait StageExt<T> {
    fn stage(self, stage: &'static str) -> std::result::Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> StageExt<T> for std::result::Result<T, E> {
    fn stage(self, stage: &'static str) -> std::result::Result<T, Failure> {
        self.map_err(|e| Failure {
            stage,
            error: e.into(),
        })
    }
}

fn print(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn polar_report(path: &Path) -> std::result::Result<Value, Failure> {
    let doc = InputDocument::load(path).stage("input")?;
    let k = doc.lattice_set().stage("input")?;
    extract_graph_hrep(&k).stage("graph_hrep")?;
    let r = polar_z(&k).map_err(|e| {
        let stage = match e {
            latpolar::Error::LambdaUndefined => "lambda",
            _ => "polar",
        };
        Failure {
            stage,
            error: e.into(),
        }
    })?;
    Ok(report::polar(&r))
}

fn cmd_polar(path: &Path) -> std::result::Result<Outcome, Failure> {
    print(&polar_report(path)?);
    Ok(Outcome::Ok)
}

fn cmd_check(suite: Suite, seed: u64, cases: usize) -> Result<Outcome> {
    let results = suites::run(suite, seed, cases);
    let mut counts: BTreeMap<&str, BTreeMap<&str, usize>> = BTreeMap::new();
    let mut failures = Vec::new();
    for c in &results {
        *counts
            .entry(c.report.name)
            .or_default()
            .entry(c.report.verdict.as_str())
            .or_default() += 1;
        if c.report.verdict == Verdict::Fails {
            failures.push(report::check(&c.label, &c.report));
        }
    }
    let human = std::env::var_os("NO_COLOR").is_none() && std::io::stderr().is_terminal();
    for (name, tally) in &counts {
        let line: Vec<String> = tally.iter().map(|(v, n)| format!("{v}={n}")).collect();
        let mark = if tally.contains_key("fails") {
            "FAIL"
        } else {
            "ok"
        };
        if human {
            let color = if mark == "ok" { "32" } else { "31" };
            eprintln!("\x1b[{color}m{mark}\x1b[0m {name}: {}", line.join(" "));
        } else {
            eprintln!("{mark} {name}: {}", line.join(" "));
        }
    }
    print(&json!({
        "suite": format!("{suite:?}"),
        "seed": seed,
        "cases": cases,
        "checks": counts,
        "failures": failures,
    }));
    Ok(if failures.is_empty() {
        Outcome::Ok
    } else {
        Outcome::Finding
    })
}

fn cmd_search(n: usize, radius: i64) -> Result<Outcome> {
    if !(2..=3).contains(&n) {
        bail!("n must be 2 or 3, got {n}");
    }
    let r = search_min_mahler(n, radius)?;
    let expected = (2 * n as u128 + 1) * 3u128.pow(n as u32);
    let cross = cross_polytope(n);
    let cross_fits = radius >= 1;
    let cross_found = r.minimizers.iter().any(|(k, _)| *k == cross);
    let agrees = r.minimum_product == expected && (!cross_fits || cross_found);
    let mut v = report::search(&r);
    v["expected_minimum"] = json!(expected.to_string());
    v["cross_polytope_is_minimizer"] = json!(cross_found);
    v["agrees"] = json!(agrees);
    print(&v);
    if !agrees {
        eprintln!(
            "minimum {} differs from (2n+1)*3^n = {expected} or the cross-polytope is not a minimizer",
            r.minimum_product
        );
    }
    Ok(if agrees {
        Outcome::Ok
    } else {
        Outcome::Finding
    })
}

fn cmd_plot(path: &Path, out: Option<&PathBuf>) -> Result<Outcome> {
    let out = out.context("plot needs --out <file>")?;
    let doc = InputDocument::load(path)?;
    if doc.dim != 2 {
        bail!("plot supports dimension 2 only, got {}", doc.dim);
    }
    let k = doc.lattice_set()?;
    let r = polar_z(&k)?;
    let svg = svg::render(&svg::pipeline_panels(&r));
    std::fs::write(out, svg).with_context(|| format!("writing {}", out.display()))?;
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Polar { input } => cmd_polar(input),
        Command::Check { suite } => cmd_check(*suite, cli.seed, cli.cases).stage("check"),
        Command::Search { n, radius } => cmd_search(*n, *radius).stage("search"),
        Command::Plot { input } => cmd_plot(input, cli.out.as_ref()).stage("plot"),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Finding) => ExitCode::from(1),
        Err(f) => {
            if matches!(cli.command, Command::Polar { .. }) {
                print(&report::error(f.stage, &f.error));
            }
            eprintln!("error ({}): {:#}", f.stage, f.error);
            ExitCode::from(2)
        }
    }
}
