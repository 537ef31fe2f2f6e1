//! Grid check that a cell set tiles the Newton region.
//!
//! A grid point is decided only when it is farther than one grid step from
//! every relevant boundary: it must then lie in the interior of exactly one
//! cell if it is in `N`, and in no cell if it is in the interior of `P`.
//! Every membership test is a sign test of an integer affine functional, so
//! the check is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::CellSet;
use crate::error::{Error, Result};
use crate::linalg::inverse;
use crate::polyhedron::NewtonPolyhedron;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingOptions {
    pub grid_step: Rational,
    pub box_margin: Rational,
    /// Above this many grid points, a seeded random sample of this size is
    /// checked instead of the whole grid.
    pub max_points: usize,
    pub seed: u64,
}

impl Default for TilingOptions {
    fn default() -> Self {
        Self {
            grid_step: Rational::new(1.into(), 4.into()),
            box_margin: Rational::from_integer(2.into()),
            max_points: 20_000,
            seed: 0x5e9e,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingViolation {
    pub point: Vec<Rational>,
    /// Whether the point lies in the Newton region (otherwise in the interior of `P`).
    pub in_region: bool,
    /// Indices of cells whose interior contains the point.
    pub covering: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingReport {
    pub box_size: Rational,
    pub grid_step: Rational,
    pub points_total: u128,
    pub points_checked: usize,
    pub points_decided: usize,
    pub points_skipped: usize,
    pub sampled: bool,
    pub violation_count: usize,
    /// The first violations found, at most 64.
    pub violations: Vec<TilingViolation>,
}

impl TilingReport {
    pub fn is_ok(&self) -> bool {
        self.violation_count == 0
    }
}

const MAX_LISTED: usize = 64;

/// `g · y >= c` scaled to integers, with `‖g‖²` cached.
struct Functional {
    g: Vec<i128>,
    c: i128,
    norm2: i128,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Inside,
    Outside,
    Near,
}

impl Functional {
    fn from_rational(g: &[Rational], c: &Rational) -> Result<Self> {
        let den = g
            .iter()
            .chain(std::iter::once(c))
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scale = |x: &Rational| -> Result<i128> {
            (x.numer() * (&den / x.denom()))
                .to_i128()
                .ok_or(Error::Overflow("tiling functional"))
        };
        let g: Vec<i128> = g.iter().map(scale).collect::<Result<_>>()?;
        let c = scale(c)?;
        let norm2 = g
            .iter()
            .try_fold(0i128, |acc, &x| acc.checked_add(x.checked_mul(x)?))
            .ok_or(Error::Overflow("tiling functional"))?;
        Ok(Self { g, c, norm2 })
    }

    fn from_int(g: &[BigInt], c: &BigInt) -> Result<Self> {
        let g: Vec<Rational> = g.iter().cloned().map(Rational::from_integer).collect();
        Self::from_rational(&g, &Rational::from_integer(c.clone()))
    }

    /// Classify the grid point `y = (p/q)·z` against the half-space, with a
    /// margin of one grid step.
    fn side(&self, z: &[i64], p: i128, q: i128) -> Result<Side> {
        let ovf = || Error::Overflow("tiling evaluation");
        let mut dot = 0i128;
        for (&gi, &zi) in self.g.iter().zip(z) {
            dot = dot.checked_add(gi.checked_mul(zi as i128).ok_or_else(ovf)?).ok_or_else(ovf)?;
        }
        // q·(g·y − c) = p·(g·z) − q·c, compared with p·‖g‖
        let v = p
            .checked_mul(dot)
            .and_then(|a| a.checked_sub(q.checked_mul(self.c)?))
            .ok_or_else(ovf)?;
        let lhs = v.checked_mul(v).ok_or_else(ovf)?;
        let rhs = p.checked_mul(p).and_then(|a| a.checked_mul(self.norm2)).ok_or_else(ovf)?;
        Ok(if lhs <= rhs {
            Side::Near
        } else if v > 0 {
            Side::Inside
        } else {
            Side::Outside
        })
    }
}

/// Classify against the intersection of half-spaces.
fn classify(fs: &[Functional], z: &[i64], p: i128, q: i128) -> Result<Side> {
    let mut near = false;
    for f in fs {
        match f.side(z, p, q)? {
            Side::Outside => return Ok(Side::Outside),
            Side::Near => near = true,
            Side::Inside => {}
        }
    }
    Ok(if near { Side::Near } else { Side::Inside })
}

fn cell_functionals(cells: &CellSet) -> Result<Vec<(usize, Vec<Functional>)>> {
    let n = cells.n();
    let mut out = Vec::new();
    for (idx, cell) in cells.cells().iter().enumerate() {
        if cell.is_degenerate() {
            continue;
        }
        let v0 = &cell.simplex()[0];
        let k = cell.dim();
        // columns: edge vectors, then extension directions
        let mut cols: Vec<Vec<Rational>> = cell.simplex()[1..]
            .iter()
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        for &w in cell.extensions() {
            let mut e = vec![Rational::zero(); n];
            e[w] = Rational::one();
            cols.push(e);
        }
        let m: Vec<Vec<Rational>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let inv = inverse(&m).ok_or_else(|| Error::Internal(format!("cell {cell} is singular")))?;
        let offset = |row: &[Rational]| -> Rational { row.iter().zip(v0).map(|(a, b)| a * b).sum() };
        let mut fs = Vec::with_capacity(n + 1);
        for row in &inv {
            fs.push(Functional::from_rational(row, &offset(row))?);
        }
        if k > 0 {
            // barycentric weight of v0: 1 − Σ_{i<k} c_i >= 0
            let g: Vec<Rational> = (0..n).map(|j| -inv[..k].iter().map(|r| &r[j]).sum::<Rational>()).collect();
            let c = offset(&g) - Rational::one();
            fs.push(Functional::from_rational(&g, &c)?);
        }
        out.push((idx, fs));
    }
    Ok(out)
}

/// Validate with the default sampling budget and seed.
pub fn validate_tiling(
    cells: &CellSet,
    poly: &NewtonPolyhedron,
    grid_step: &Rational,
    box_margin: &Rational,
) -> Result<TilingReport> {
    validate_tiling_with(
        cells,
        poly,
        &TilingOptions {
            grid_step: grid_step.clone(),
            box_margin: box_margin.clone(),
            ..TilingOptions::default()
        },
    )
}

pub fn validate_tiling_with(cells: &CellSet, poly: &NewtonPolyhedron, opts: &TilingOptions) -> Result<TilingReport> {
    let n = poly.n();
    if cells.n() != n {
        return Err(Error::DimensionMismatch("cells and polyhedron differ in dimension".into()));
    }
    if !opts.grid_step.is_positive() || opts.box_margin.is_negative() {
        return Err(Error::InvalidSpec("grid step must be positive and margin nonnegative".into()));
    }
    let p = opts.grid_step.numer().to_i128().ok_or(Error::Overflow("grid step"))?;
    let q = opts.grid_step.denom().to_i128().ok_or(Error::Overflow("grid step"))?;

    let max_sum = poly
        .vertices()
        .iter()
        .map(|v| v.total())
        .max()
        .unwrap_or_else(BigInt::zero);
    let box_size = Rational::from_integer(max_sum) + &opts.box_margin;
    let steps = (&box_size / &opts.grid_step)
        .floor()
        .to_integer()
        .to_i64()
        .ok_or(Error::Overflow("grid size"))?;
    let per_axis = (steps + 1) as u128;
    let points_total = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(per_axis)).unwrap_or(u128::MAX);

    let region: Vec<Functional> = poly
        .facets()
        .iter()
        .map(|f| Functional::from_int(&f.normal, &f.offset))
        .collect::<Result<_>>()?;
    let orthant: Vec<Functional> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            Functional::from_int(&e, &BigInt::zero())
        })
        .collect::<Result<_>>()?;
    let cell_fs = cell_functionals(cells)?;

    let sampled = points_total > opts.max_points as u128;
    let points: Box<dyn Iterator<Item = Vec<i64>>> = if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        Box::new((0..opts.max_points).map(move |_| (0..n).map(|_| rng.gen_range(0..=steps)).collect()))
    } else {
        Box::new((0..points_total as usize).map(move |mut idx| {
            (0..n)
                .map(|_| {
                    let z = (idx as u128 % per_axis) as i64;
                    idx = (idx as u128 / per_axis) as usize;
                    z
                })
                .collect()
        }))
    };

    let mut report = TilingReport {
        box_size,
        grid_step: opts.grid_step.clone(),
        points_total,
        points_checked: 0,
        points_decided: 0,
        points_skipped: 0,
        sampled,
        violation_count: 0,
        violations: Vec::new(),
    };

    'points: for z in points {
        report.points_checked += 1;
        if classify(&orthant, &z, p, q)? != Side::Inside {
            report.points_skipped += 1;
            continue;
        }
        // inside P means every facet inequality holds strictly
        let in_region = match classify(&region, &z, p, q)? {
            Side::Inside => false,
            Side::Outside => true,
            Side::Near => {
                report.points_skipped += 1;
                continue;
            }
        };
        let mut covering = Vec::new();
        for (idx, fs) in &cell_fs {
            match classify(fs, &z, p, q)? {
                Side::Inside => covering.push(*idx),
                Side::Outside => {}
                Side::Near => {
                    report.points_skipped += 1;
                    continue 'points;
                }
            }
        }
        report.points_decided += 1;
        let ok = if in_region { covering.len() == 1 } else { covering.is_empty() };
        if !ok {
            report.violation_count += 1;
            if report.violations.len() < MAX_LISTED {
                let point = z
                    .iter()
                    .map(|&zi| &opts.grid_step * Rational::from_integer(zi.into()))
                    .collect();
                report.violations.push(TilingViolation {
                    point,
                    in_region,
                    covering,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{decompose_fan, decompose_staircase, CellSet};
    use crate::ideal::MonomialIdealSpec;
    use crate::polyhedron::build_polyhedron;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    fn plane() -> MonomialIdealSpec {
        MonomialIdealSpec::from_rows(&[&[2, 6], &[3, 4], &[4, 3], &[5, 1], &[7, 0]])
    }

    #[test]
    fn plane_fan_tiles() {
        let spec = plane();
        let poly = build_polyhedron(&spec);
        let r = validate_tiling(&decompose_fan(&poly), &poly, &q(1, 4), &q(13, 1)).unwrap();
        assert!(r.is_ok(), "{:?}", r.violations);
        assert!(!r.sampled);
        assert!(r.points_decided > 1000);
    }

    #[test]
    fn plane_staircase_tiles() {
        let spec = plane();
        let poly = build_polyhedron(&spec);
        let r = validate_tiling(&decompose_staircase(&spec).unwrap(), &poly, &q(1, 4), &q(13, 1)).unwrap();
        assert!(r.is_ok(), "{:?}", r.violations);
    }

    #[test]
    fn single_generator_tiles() {
        let spec = MonomialIdealSpec::from_rows(&[&[3, 4]]);
        let poly = build_polyhedron(&spec);
        let r = validate_tiling(&decompose_fan(&poly), &poly, &q(1, 4), &q(2, 1)).unwrap();
        assert!(r.is_ok());
    }

    #[test]
    fn dropped_triangle_is_reported() {
        let spec = plane();
        let poly = build_polyhedron(&spec);
        let full = decompose_fan(&poly);
        let kept = full
            .cells()
            .iter()
            .filter(|c| c.to_string() != "[(0,0), (3,4), (5,1)]")
            .cloned()
            .collect();
        let cs = CellSet::new(2, kept).unwrap();
        let r = validate_tiling(&cs, &poly, &q(1, 4), &q(13, 1)).unwrap();
        assert!(r.violation_count > 0);
        assert!(r.violations.iter().all(|v| v.in_region && v.covering.is_empty()));
    }

    #[test]
    fn doubled_cell_is_reported() {
        let spec = plane();
        let poly = build_polyhedron(&spec);
        let mut cells = decompose_fan(&poly).cells().to_vec();
        cells.push(cells.iter().find(|c| !c.is_degenerate()).unwrap().clone());
        let r = validate_tiling(&CellSet::new(2, cells).unwrap(), &poly, &q(1, 4), &q(13, 1)).unwrap();
        assert!(r.violations.iter().any(|v| v.covering.len() == 2));
    }

    #[test]
    fn large_grids_are_sampled() {
        let spec = MonomialIdealSpec::from_rows(&[&[1, 2, 0, 3], &[2, 0, 1, 1], &[0, 3, 3, 0]]);
        let poly = build_polyhedron(&spec);
        let r = validate_tiling(&decompose_fan(&poly), &poly, &q(1, 4), &q(2, 1)).unwrap();
        assert!(r.sampled);
        assert_eq!(r.points_checked, 20_000);
        assert!(r.is_ok(), "{:?}", r.violations);
    }
}
