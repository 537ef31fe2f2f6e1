//! The `segre` command line: argument parsing, text and JSON rendering.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::calculus::factor_string;
use crate::calculus::{ClosedForm, HSeries};
use crate::decompose::{decompose_fan, decompose_staircase, validate_tiling_with, CellSet, Engine, TilingOptions};
use crate::error::Error;
use crate::ideal::{minimalize, parse_ideal, MonomialIdealSpec};
use crate::oracle::{cross_check, CrossCheckOptions};
use crate::pipeline::{compute_segre, SegreOptions, SegreOutput};
use crate::polyhedron::build_polyhedron;
use crate::Rational;

const DEFAULT_SEED: u64 = 0x5e9e;

#[derive(Parser, Debug)]
#[command(name = "segre", version, about = "Segre classes of monomial subschemes from Newton regions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the class, its series and its specialization to H.
    Compute(ComputeArgs),
    /// Print the cells of a decomposition of the Newton region.
    Decompose(DecomposeArgs),
    /// Equivalence and excess numbers for hypersurfaces of given degrees.
    Excess(ExcessArgs),
    /// Run every applicable oracle and exit nonzero on any failure.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    /// Generators, e.g. "x1^2*x2^6, x1^7" or exponent rows "2 6 / 7 0".
    #[arg(long, conflicts_with = "ideal_file", required_unless_present = "ideal_file")]
    pub ideal: Option<String>,
    /// File holding the generators in the same syntax.
    #[arg(long)]
    pub ideal_file: Option<PathBuf>,
    /// Number of variables, when larger than the highest index used.
    #[arg(long)]
    pub vars: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Fan,
    Staircase,
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long, value_enum, default_value_t = EngineChoice::Fan)]
    pub engine: EngineChoice,
    /// Degrees d_i of the divisors X_i, for X_i = d_i H (default all 1).
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<BigInt>>,
    /// N for the ambient P^N (default n).
    #[arg(long)]
    pub ambient_dim: Option<usize>,
    /// Truncation degree of the series in X (default N).
    #[arg(long)]
    pub truncate: Option<u32>,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Also run the oracle checks; exit 1 if any fails.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug, Clone)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long, value_enum, default_value_t = EngineChoice::Fan)]
    pub engine: EngineChoice,
    /// Validate the tiling with this grid step, e.g. 1/4.
    #[arg(long)]
    pub grid_step: Option<Rational>,
    #[arg(long, default_value = "2")]
    pub box_margin: Rational,
}

#[derive(Args, Debug, Clone)]
pub struct ExcessArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// Degrees of the N hypersurfaces cut out in P^N.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<BigInt>,
    /// Degrees d_i of the divisors X_i (default all 1).
    #[arg(long, value_delimiter = ',')]
    pub var_degrees: Option<Vec<BigInt>>,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long, default_value = "1/4")]
    pub grid_step: Rational,
    #[arg(long, default_value = "2")]
    pub box_margin: Rational,
    /// Relative tolerance for the quadrature comparison.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Seed for randomized checks, from `SEGRE_SEED` when set.
pub fn seed_from_env() -> u64 {
    std::env::var("SEGRE_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn read_ideal(args: &IdealArgs) -> Result<MonomialIdealSpec, String> {
    let text = match (&args.ideal, &args.ideal_file) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) => std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?,
        (None, None) => return Err("no ideal given".into()),
    };
    parse_ideal(&text, args.vars).map_err(|e| e.to_string())
}

/// Rationals as JSON integers when they fit, otherwise as `"p/q"` strings.
pub fn rational_json(r: &Rational) -> Value {
    match (r.is_integer(), r.to_integer().to_i64()) {
        (true, Some(i)) => json!(i),
        _ => json!(r.to_string()),
    }
}

fn bigint_json(b: &BigInt) -> Value {
    b.to_i64().map_or_else(|| json!(b.to_string()), |i| json!(i))
}

fn generators_json(spec: &MonomialIdealSpec) -> Value {
    Value::Array(
        spec.generators()
            .iter()
            .map(|g| Value::Array(g.entries().iter().map(bigint_json).collect()))
            .collect(),
    )
}

fn closed_form_json(cf: &ClosedForm, names: &[String]) -> Value {
    json!({
        "num": cf.numerator_string(names),
        "den_factors": cf.den_factors.iter().map(|(v, k)| {
            let f = format!("({})", factor_string(v, names));
            if *k == 1 { f } else { format!("{f}^{k}") }
        }).collect::<Vec<_>>(),
        "text": cf.render(names),
    })
}

fn h_series_json(h: &HSeries) -> Value {
    json!({
        "H_coeffs": h.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        "ambient_dim": h.ambient_dim(),
        "text": h.to_string(),
        "brackets": h.bracket_string(),
    })
}

fn cells_json(cells: &CellSet) -> Value {
    Value::Array(
        cells
            .cells()
            .iter()
            .map(|c| {
                json!({
                    "simplex": c.simplex().iter().map(|v| v.iter().map(rational_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "extensions": c.extensions().iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "engine": c.engine().to_string(),
                    "node": c.node(),
                    "degenerate": c.is_degenerate(),
                })
            })
            .collect(),
    )
}

fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

fn h_names() -> Vec<String> {
    vec!["H".to_string()]
}

/// The JSON document for `segre compute`.
pub fn output_json(out: &SegreOutput) -> Value {
    let n = out.spec.n();
    let names = x_names(n);
    let specialized_terms = out.specialized_cell_terms();
    let cells: Vec<Value> = out
        .cell_breakdown
        .iter()
        .enumerate()
        .map(|(i, (cell, term))| {
            let mut v = json!({
                "cell": cell.to_string(),
                "node": cell.node(),
                "term": term.render(&names),
            });
            if let Some(ts) = &specialized_terms {
                v["specialized_term"] = json!(ts[i].render(&h_names()));
            }
            v
        })
        .collect();
    let mut doc = json!({
        "ideal": out.spec.to_ideal_string(),
        "n": n,
        "generators": generators_json(&out.spec),
        "minimal_generators": generators_json(&out.minimal),
        "engine": out.engine.to_string(),
        "class": out.class.render(&names),
        "class_closed_form": closed_form_json(&out.closed_form, &names),
        "series_X": {
            "truncation": out.series.max_degree(),
            "text": out.series.render(&names),
        },
        "cells": cells,
        "conjectural": out.conjectural,
    });
    if let Some(h) = &out.specialized {
        doc["series"] = h_series_json(h);
        doc["degrees"] = Value::Array(out.degrees.as_ref().expect("degrees with specialization").iter().map(bigint_json).collect());
    }
    if let Some(cf) = &out.specialized_closed_form {
        doc["closed_form"] = closed_form_json(cf, &h_names());
    }
    if let Some(x) = &out.excess {
        doc["excess"] = json!({
            "equivalence": rational_json(&x.equivalence),
            "bezout": bigint_json(&x.bezout),
            "excess": rational_json(&x.excess),
        });
    }
    doc
}

/// The text report for `segre compute`.
pub fn output_text(out: &SegreOutput) -> String {
    let n = out.spec.n();
    let names = x_names(n);
    let mut s = String::new();
    let _ = writeln!(s, "ideal        : {}", out.spec.to_ideal_string());
    let _ = writeln!(s, "minimal      : {}", out.minimal.to_ideal_string());
    let _ = writeln!(
        s,
        "engine       : {} ({} cells, {} effective)",
        out.engine,
        out.cells.len(),
        out.cell_breakdown.len()
    );
    let _ = writeln!(s, "class        : {}", out.class.render(&names));
    let _ = writeln!(s, "closed form  : {}", out.closed_form.render(&names));
    let _ = writeln!(s, "series (D={}) : {}", out.series.max_degree(), out.series.render(&names));
    if let Some(h) = &out.specialized {
        let d: Vec<String> = out.degrees.iter().flatten().map(|d| d.to_string()).collect();
        let _ = writeln!(s, "degrees      : {}", d.join(","));
        let _ = writeln!(s, "Segre class  : {}", h.descending_string());
        let _ = writeln!(s, "             = {h}");
        let _ = writeln!(s, "             = {}", h.bracket_string());
    }
    if let Some(cf) = &out.specialized_closed_form {
        let _ = writeln!(s, "in H         : {}", cf.render(&h_names()));
    }
    if let Some(x) = &out.excess {
        let _ = writeln!(s, "equivalence  : {}", x.equivalence);
        let _ = writeln!(s, "bezout       : {}", x.bezout);
        let _ = writeln!(s, "excess       : {}", x.excess);
    }
    let _ = writeln!(s, "cells:");
    let specialized_terms = out.specialized_cell_terms();
    for (i, (cell, term)) in out.cell_breakdown.iter().enumerate() {
        let _ = write!(s, "  {cell}  ->  {}", term.render(&names));
        if let Some(ts) = &specialized_terms {
            let _ = write!(s, "  =  {}", ts[i].render(&h_names()));
        }
        s.push('\n');
    }
    if out.conjectural {
        let _ = writeln!(s, "note         : conjectural (the integral formula is proven for n <= 2 only)");
    }
    s
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) | Error::DepthLimit(_) | Error::QuadratureBudget { .. } | Error::Overflow(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn emit(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
}

fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn run_compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = read_ideal(&a.ideal).map_err(input_error)?;
    let n = spec.n();
    let engine = match a.engine {
        EngineChoice::Staircase => Engine::Staircase,
        _ => Engine::Fan,
    };
    let opts = SegreOptions {
        engine,
        truncation: a.truncate,
        degrees: Some(a.degrees.clone().unwrap_or_else(|| vec![BigInt::from(1); n])),
        ambient_dim: Some(a.ambient_dim.unwrap_or(n)),
        excess_degrees: None,
        jobs: a.jobs,
    };
    let result = compute_segre(&spec, &opts)?;
    let mut code = 0;
    let mut extra = Vec::new();
    if a.engine == EngineChoice::Both {
        let other = compute_segre(
            &spec,
            &SegreOptions {
                engine: Engine::Staircase,
                ..opts.clone()
            },
        )?;
        let same = result.class.certify_equal(&other.class, seed_from_env())?;
        if !same {
            code = 1;
        }
        extra.push(("engines agree", same));
    }
    let report = if a.verify {
        let r = cross_check(
            &spec,
            &CrossCheckOptions {
                seed: seed_from_env(),
                ..CrossCheckOptions::default()
            },
        )?;
        if !r.passed() {
            code = 1;
        }
        Some(r)
    } else {
        None
    };
    match a.ideal.format {
        Format::Json => {
            let mut doc = output_json(&result);
            for (k, v) in &extra {
                doc[*k] = json!(v);
            }
            if let Some(r) = &report {
                doc["verify"] = serde_json::to_value(r).expect("report serializes");
            }
            emit(out, &json_string(&doc));
        }
        Format::Text => {
            let mut s = output_text(&result);
            for (k, v) in &extra {
                let _ = writeln!(s, "{k:<13}: {v}");
            }
            if let Some(r) = &report {
                let _ = write!(s, "verification :\n{r}");
            }
            emit(out, &s);
        }
    }
    Ok(code)
}

fn run_decompose(a: &DecomposeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = read_ideal(&a.ideal).map_err(input_error)?;
    let min = minimalize(&spec);
    let engines: Vec<Engine> = match a.engine {
        EngineChoice::Fan => vec![Engine::Fan],
        EngineChoice::Staircase => vec![Engine::Staircase],
        EngineChoice::Both => vec![Engine::Fan, Engine::Staircase],
    };
    if engines.contains(&Engine::Staircase) && spec.n() != 2 {
        return Err(Error::StaircaseDimension(spec.n()).into());
    }
    let poly = (!min.is_unit()).then(|| build_polyhedron(&min));
    let mut code = 0;
    let mut all_cells = Vec::new();
    let mut reports = Vec::new();
    for engine in engines {
        let cells = match (&poly, engine) {
            (None, _) => CellSet::new(spec.n(), Vec::new())?,
            (Some(p), Engine::Fan) => decompose_fan(p),
            (Some(_), Engine::Staircase) => decompose_staircase(&min)?,
        };
        if let (Some(step), Some(p)) = (&a.grid_step, &poly) {
            let r = validate_tiling_with(
                &cells,
                p,
                &TilingOptions {
                    grid_step: step.clone(),
                    box_margin: a.box_margin.clone(),
                    seed: seed_from_env(),
                    ..TilingOptions::default()
                },
            )?;
            if !r.is_ok() {
                code = 1;
            }
            reports.push((engine, r));
        }
        all_cells.push(cells);
    }
    match a.ideal.format {
        Format::Json => {
            let cells: Vec<Value> = all_cells
                .iter()
                .flat_map(|c| match cells_json(c) {
                    Value::Array(v) => v,
                    _ => unreachable!(),
                })
                .collect();
            let mut doc = json!({ "ideal": spec.to_ideal_string(), "n": spec.n(), "cells": cells });
            if !reports.is_empty() {
                doc["tiling"] = Value::Array(
                    reports
                        .iter()
                        .map(|(e, r)| {
                            json!({
                                "engine": e.to_string(),
                                "violations": r.violation_count,
                                "points_checked": r.points_checked,
                                "points_decided": r.points_decided,
                                "sampled": r.sampled,
                            })
                        })
                        .collect(),
                );
            }
            emit(out, &json_string(&doc));
        }
        Format::Text => {
            let mut s = String::new();
            for cells in &all_cells {
                for c in cells.cells() {
                    let _ = writeln!(
                        s,
                        "{:<9} {:<16} {}{}",
                        c.engine(),
                        c.node(),
                        c,
                        if c.is_degenerate() { "  (degenerate)" } else { "" }
                    );
                }
            }
            for (e, r) in &reports {
                let _ = writeln!(
                    s,
                    "tiling {e}: {} violations, {} of {} points decided{}",
                    r.violation_count,
                    r.points_decided,
                    r.points_checked,
                    if r.sampled { " (sampled)" } else { "" }
                );
            }
            emit(out, &s);
        }
    }
    Ok(code)
}

fn run_excess(a: &ExcessArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = read_ideal(&a.ideal).map_err(input_error)?;
    let opts = SegreOptions {
        degrees: a.var_degrees.clone(),
        ambient_dim: Some(a.degrees.len()),
        excess_degrees: Some(a.degrees.clone()),
        jobs: a.jobs,
        ..SegreOptions::default()
    };
    let result = compute_segre(&spec, &opts)?;
    let x = result.excess.as_ref().expect("excess requested");
    let h = result.specialized.as_ref().expect("specialization requested");
    match a.ideal.format {
        Format::Json => {
            let doc = json!({
                "ideal": spec.to_ideal_string(),
                "degrees": a.degrees.iter().map(bigint_json).collect::<Vec<_>>(),
                "series": h_series_json(h),
                "equivalence": rational_json(&x.equivalence),
                "bezout": bigint_json(&x.bezout),
                "excess": rational_json(&x.excess),
                "conjectural": result.conjectural,
            });
            emit(out, &json_string(&doc));
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "Segre class  : {h}");
            let _ = writeln!(s, "equivalence  : {}", x.equivalence);
            let _ = writeln!(s, "bezout       : {}", x.bezout);
            let _ = writeln!(s, "excess       : {}", x.excess);
            if result.conjectural {
                let _ = writeln!(s, "note         : conjectural (the integral formula is proven for n <= 2 only)");
            }
            emit(out, &s);
        }
    }
    Ok(0)
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = read_ideal(&a.ideal).map_err(input_error)?;
    let opts = CrossCheckOptions {
        seed: seed_from_env(),
        quadrature_tol: a.tol,
        tiling: TilingOptions {
            grid_step: a.grid_step.clone(),
            box_margin: a.box_margin.clone(),
            seed: seed_from_env(),
            ..TilingOptions::default()
        },
        ..CrossCheckOptions::default()
    };
    let report = match a.jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            })?
            .install(|| cross_check(&spec, &opts))?,
        _ => cross_check(&spec, &opts)?,
    };
    match a.ideal.format {
        Format::Json => emit(out, &json_string(&serde_json::to_value(&report).expect("report serializes"))),
        Format::Text => emit(out, &report.to_string()),
    }
    Ok(if report.passed() { 0 } else { 1 })
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => run_compute(a, out),
        Command::Decompose(a) => run_decompose(a, out),
        Command::Excess(a) => run_excess(a, out),
        Command::Verify(a) => run_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
