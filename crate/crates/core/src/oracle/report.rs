//! Cross-checks of one ideal against every applicable oracle.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::families::detect_family;
use super::quadrature::quadrature_cell;
use crate::calculus::{cell_integral, sum_cells, ClosedForm};
use crate::decompose::{decompose_fan, decompose_staircase, validate_tiling_with, CellSet, TilingOptions};
use crate::error::Result;
use crate::fixtures::{self, Fixture};
use crate::ideal::{minimalize, MonomialIdealSpec};
use crate::pipeline::{compute_segre, SegreOptions};
use crate::polyhedron::build_polyhedron;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The known result the check relies on.
    pub anchor: String,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    /// `"exact"` or a numeric bound.
    pub tolerance: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub checks: Vec<Check>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

const SHOWN_CHARS: usize = 72;

fn abbreviate(s: &str) -> String {
    if s.chars().count() <= SHOWN_CHARS {
        return s.to_string();
    }
    let head: String = s.chars().take(SHOWN_CHARS).collect();
    format!("{head}...")
}

/// Long values are cut short in the table; the serialized report keeps them whole.
impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(
                f,
                "{:<4}  {:<w$}  {} vs {}  [{}; {}]",
                c.status,
                c.name,
                abbreviate(&c.lhs),
                abbreviate(&c.rhs),
                c.tolerance,
                c.anchor
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheckOptions {
    pub seed: u64,
    /// Random points per cell for the quadrature comparison.
    pub quadrature_points: usize,
    /// Allowed relative error between quadrature and the exact value.
    pub quadrature_tol: f64,
    /// Largest `n` for which quadrature is attempted.
    pub quadrature_max_n: usize,
    pub tiling: TilingOptions,
}

impl Default for CrossCheckOptions {
    fn default() -> Self {
        Self {
            seed: 0x5e9e,
            quadrature_points: 5,
            quadrature_tol: 1e-6,
            quadrature_max_n: 4,
            tiling: TilingOptions::default(),
        }
    }
}

fn status(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Random point in `(0, 1/5]^n` with small denominators.
pub(crate) fn random_small_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(1..=20i64).into(), 100.into()))
        .collect()
}

fn quadrature_check(cells: &CellSet, opts: &CrossCheckOptions) -> Result<Check> {
    let n = cells.n();
    let mut check = Check {
        name: "fan cells vs quadrature".into(),
        anchor: "integral formula, one cell at a time".into(),
        status: CheckStatus::Skip,
        lhs: "-".into(),
        rhs: "-".into(),
        tolerance: format!("{:e} relative", opts.quadrature_tol),
    };
    if n > opts.quadrature_max_n {
        check.lhs = format!("n = {n}");
        check.rhs = format!("quadrature limited to n <= {}", opts.quadrature_max_n);
        return Ok(check);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut worst = 0.0f64;
    let mut evaluated = 0;
    for cell in cells.effective() {
        let term = cell_integral(cell)?;
        for _ in 0..opts.quadrature_points {
            let x = random_small_point(&mut rng, n);
            let exact = term.evaluate(&x)?.to_f64().unwrap_or(f64::NAN);
            let xf: Vec<f64> = x.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
            let numeric = quadrature_cell(cell, &xf, opts.quadrature_tol * 1e-3)?.value;
            worst = worst.max((numeric - exact).abs() / exact.abs());
            evaluated += 1;
        }
    }
    check.status = status(worst < opts.quadrature_tol);
    check.lhs = format!("max relative error {worst:.3e}");
    check.rhs = format!("{evaluated} evaluations");
    Ok(check)
}

fn matching_fixture(spec: &MonomialIdealSpec) -> Option<&'static Fixture> {
    let min = minimalize(spec);
    fixtures::ALL.into_iter().find(|f| minimalize(&f.spec()) == min)
}

fn fixture_checks(spec: &MonomialIdealSpec, fixture: &Fixture) -> Result<Vec<Check>> {
    let opts = SegreOptions {
        degrees: Some(fixture.degrees.iter().map(|&d| d.into()).collect()),
        ambient_dim: Some(fixture.ambient_dim),
        ..SegreOptions::default()
    };
    let out = compute_segre(spec, &opts)?;
    let expected: Vec<Rational> = fixture.series.iter().map(|&c| Rational::from_integer(c.into())).collect();
    let got = out.specialized.expect("specialization requested");
    let expected_series = crate::calculus::HSeries::new(expected, fixture.ambient_dim);
    let cf = out.specialized_closed_form.expect("specialization requested");
    let expected_cf = fixture_closed_form(fixture);
    Ok(vec![
        Check {
            name: format!("{} series", fixture.name),
            anchor: "reference expansion".into(),
            status: status(got == expected_series),
            lhs: got.to_string(),
            rhs: expected_series.to_string(),
            tolerance: "exact".into(),
        },
        Check {
            name: format!("{} closed form", fixture.name),
            anchor: "reference closed form".into(),
            status: status(cf == expected_cf),
            lhs: cf.to_string(),
            rhs: expected_cf.to_string(),
            tolerance: "exact".into(),
        },
    ])
}

pub(crate) fn fixture_closed_form(fixture: &Fixture) -> ClosedForm {
    let mut numerator = crate::calculus::Poly::zero(1);
    for (k, &c) in fixture.closed_numerator.iter().enumerate() {
        numerator = &numerator + &crate::calculus::Poly::monomial(1, vec![k as u32], Rational::from_integer(c.into()));
    }
    ClosedForm {
        numerator,
        den_factors: fixture
            .closed_denominator
            .iter()
            .map(|&(c, k)| (vec![Rational::from_integer(c.into())], k))
            .collect(),
    }
}

/// Run every applicable check on `spec`.
pub fn cross_check(spec: &MonomialIdealSpec, opts: &CrossCheckOptions) -> Result<OracleReport> {
    let mut checks = Vec::new();
    let min = minimalize(spec);
    if min.is_unit() {
        checks.push(Check {
            name: "unit ideal".into(),
            anchor: "empty subscheme".into(),
            status: CheckStatus::Pass,
            lhs: "0".into(),
            rhs: "0".into(),
            tolerance: "exact".into(),
        });
        return Ok(OracleReport { checks });
    }
    let poly = build_polyhedron(&min);
    let fan = decompose_fan(&poly);
    let fan_class = sum_cells(&fan)?;

    if min.n() == 2 {
        let stair = decompose_staircase(&min)?;
        let stair_class = sum_cells(&stair)?;
        let identical = fan_class.identical_to(&stair_class)?;
        let pointwise = fan_class.agrees_at_random_points(&stair_class, 20, opts.seed)?;
        checks.push(Check {
            name: "fan vs staircase".into(),
            anchor: "independence of the decomposition, proven in two variables".into(),
            status: status(identical && pointwise),
            lhs: format!("{} fan cells", fan.effective().count()),
            rhs: format!("{} staircase cells", stair.effective().count()),
            tolerance: "exact".into(),
        });
        let report = validate_tiling_with(&stair, &poly, &opts.tiling)?;
        checks.push(tiling_check("staircase tiling", &report));
    }

    checks.push(quadrature_check(&fan, opts)?);

    if let Some(family) = detect_family(&min) {
        let expected = family.class()?;
        checks.push(Check {
            name: format!("{} formula", family.name()),
            anchor: format!("closed form of the {} class", family.name()),
            status: status(fan_class.identical_to(&expected)?),
            lhs: fan_class.to_string(),
            rhs: expected.to_string(),
            tolerance: "exact".into(),
        });
    }

    if let Some(fixture) = matching_fixture(&min) {
        checks.extend(fixture_checks(&min, fixture)?);
    }

    let report = validate_tiling_with(&fan, &poly, &opts.tiling)?;
    checks.push(tiling_check("fan tiling", &report));

    let zero = crate::calculus::to_series(&fan_class, 1).constant_term().is_zero();
    checks.push(Check {
        name: "constant term".into(),
        anchor: "every cell carries at least one X_i".into(),
        status: status(zero),
        lhs: "constant term of the series".into(),
        rhs: "0".into(),
        tolerance: "exact".into(),
    });

    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(OracleReport { checks })
}

fn tiling_check(name: &str, r: &crate::decompose::TilingReport) -> Check {
    Check {
        name: name.into(),
        anchor: "cells cover the region once".into(),
        status: status(r.is_ok()),
        lhs: format!("{} violations", r.violation_count),
        rhs: format!(
            "{} of {} points decided{}",
            r.points_decided,
            r.points_checked,
            if r.sampled { " (sampled)" } else { "" }
        ),
        tolerance: format!("grid step {}", r.grid_step),
    }
}
