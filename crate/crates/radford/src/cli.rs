//! Subcommand implementations behind the `radford` binary.
//!
//! Exit-code contract: 0 on success, 1 on a mathematical verification
//! failure (a failing axiom check, a method disagreement, an identity
//! counterexample), 2 on input or usage errors. Data output is byte
//! deterministic: identical invocations print identical stdout.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::field::PrimeModulus;
use crate::free_bialgebra;
use crate::hopf::HopfAlgebra;
use crate::indicators::{self, Method};
use crate::integrals::{self, Side};
use crate::linalg::VectorFp;
use crate::zoo;

#[derive(Parser)]
#[command(
    name = "radford",
    version,
    about = "Exact Hopf-algebra invariants over prime fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run the eight Hopf-algebra axiom checks on an algebra
    Check {
        /// Algebra selector: radford:<p>, group:c<n>:<p>, group:s3:<p>,
        /// dual:<selector>, file:<path>
        #[arg(long)]
        algebra: String,
    },
    /// Print the indicator sequence ν_1..ν_N
    Indicators {
        #[arg(long)]
        algebra: String,
        /// Number of indicators to compute
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Computation route; `both` cross-validates the two
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Print an integral-space basis vector
    Integrals {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = SpaceArg::Primal)]
        space: SpaceArg,
    },
    /// Minimal polynomial of the indicator sequence
    Minpoly {
        #[arg(long)]
        algebra: String,
    },
    /// Verify the free-bialgebra identities by exhaustive sweep
    #[command(name = "free-check")]
    FreeCheck {
        #[arg(long, default_value_t = 5)]
        prime: u64,
        #[arg(long = "max-degree", default_value_t = 6)]
        max_degree: usize,
    },
    /// Dualize an algebra and emit its canonical file
    Dual {
        #[arg(long)]
        algebra: String,
        /// Output path; stdout when absent
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the canonical file of an algebra
    Export {
        #[arg(long)]
        algebra: String,
        /// Output path; stdout when absent
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Trace,
    Integral,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Trace => Method::Trace,
            MethodArg::Integral => Method::Integral,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Primal,
    Dual,
}

/// Run one parsed invocation; returns the process exit code.
pub fn execute(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Check { algebra } => cmd_check(&algebra),
        Command::Indicators {
            algebra,
            count,
            method,
            format,
        } => cmd_indicators(&algebra, count, method.into(), format),
        Command::Integrals {
            algebra,
            side,
            space,
        } => cmd_integrals(&algebra, side.into(), space),
        Command::Minpoly { algebra } => cmd_minpoly(&algebra),
        Command::FreeCheck { prime, max_degree } => cmd_free_check(prime, max_degree),
        Command::Dual { algebra, output } => {
            let h = zoo::resolve_selector(&algebra)?.dualize()?;
            emit_algebra(&h, output.as_deref())
        }
        Command::Export { algebra, output } => {
            let h = zoo::resolve_selector(&algebra)?;
            emit_algebra(&h, output.as_deref())
        }
    }
}

fn cmd_check(selector: &str) -> Result<i32, Error> {
    let h = zoo::resolve_selector_unverified(selector)?;
    let report = h.verify_axioms();
    for check in &report.checks {
        if check.passed {
            println!("PASS {}", check.name);
        } else {
            println!(
                "FAIL {} (witness: {})",
                check.name,
                check.witness.as_deref().unwrap_or("-")
            );
        }
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

#[derive(Serialize)]
struct IndicatorReportJson<'a> {
    algebra: &'a str,
    p: u64,
    dim: usize,
    nu: Vec<u64>,
    period: Option<usize>,
    minpoly: Vec<u64>,
    method: String,
    verified_window: usize,
}

fn cmd_indicators(
    selector: &str,
    count: usize,
    method: Method,
    format: FormatArg,
) -> Result<i32, Error> {
    let h = zoo::resolve_selector(selector)?;
    let seq = indicators::indicators(&h, count, method)?;
    match format {
        FormatArg::Csv => {
            let cells: Vec<String> = seq.lifted().iter().map(u64::to_string).collect();
            println!("{}", cells.join(","));
        }
        FormatArg::Table => {
            println!("{:>4}  nu", "n");
            for (i, v) in seq.values.iter().enumerate() {
                println!("{:>4}  {}", i + 1, v);
            }
        }
        FormatArg::Json => {
            let period = indicators::detect_period(&seq.values);
            let minpoly = indicators::minimal_polynomial_of_indicators(&h)?;
            let out = IndicatorReportJson {
                algebra: &seq.algebra_id,
                p: h.modulus().get(),
                dim: h.dim(),
                nu: seq.lifted(),
                period: period.map(|r| r.period),
                minpoly: minpoly.lifted(),
                method: seq.method.to_string(),
                verified_window: minpoly.verified_window,
            };
            println!("{}", serde_json::to_string(&out)?);
        }
    }
    Ok(0)
}

fn format_dual_vector(h: &HopfAlgebra, coeffs: &VectorFp) -> String {
    let terms: Vec<String> = (0..h.dim())
        .filter(|&i| !coeffs.get(i).is_zero())
        .map(|i| format!("{}·δ({})", coeffs.get(i), h.label(i)))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn cmd_integrals(selector: &str, side: Side, space: SpaceArg) -> Result<i32, Error> {
    let h = zoo::resolve_selector(selector)?;
    match space {
        SpaceArg::Primal => {
            let s = integrals::integral_space(&h, side)?;
            println!("{}", h.format_element(s.representative()));
        }
        SpaceArg::Dual => {
            let s = integrals::dual_integral_space(&h, side)?;
            println!("{}", format_dual_vector(&h, s.representative()));
        }
    }
    Ok(0)
}

fn cmd_minpoly(selector: &str) -> Result<i32, Error> {
    let h = zoo::resolve_selector(selector)?;
    let mp = indicators::minimal_polynomial_of_indicators(&h)?;
    let cells: Vec<String> = mp.lifted().iter().map(u64::to_string).collect();
    println!("degree: {}", mp.degree());
    println!("coefficients: {}", cells.join(","));
    println!("pretty: {}", mp.pretty());
    println!("verified_window: {}", mp.verified_window);
    Ok(0)
}

fn cmd_free_check(prime: u64, max_degree: usize) -> Result<i32, Error> {
    let modulus = PrimeModulus::new(prime)?;
    let reports = free_bialgebra::run_identity_suite(modulus, max_degree);
    let mut all_passed = true;
    for r in &reports {
        println!(
            "{}: {} cases, {} counterexamples",
            r.name,
            r.cases,
            r.counterexamples.len()
        );
        for c in r.counterexamples.iter().take(10) {
            println!("  counterexample at {c}");
        }
        all_passed &= r.passed();
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn emit_algebra(h: &HopfAlgebra, output: Option<&std::path::Path>) -> Result<i32, Error> {
    let json = zoo::algebra_to_canonical_json(h);
    match output {
        Some(path) => std::fs::write(path, json)?,
        None => print!("{json}"),
    }
    Ok(0)
}
