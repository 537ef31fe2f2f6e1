//! Decompositions of the Newton region into simplicial cells extended along
//! coordinate rays, and a grid-based check that the cells tile the region.

mod fan;
mod staircase;
mod tiling;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::Rational;

pub use fan::decompose_fan;
pub use staircase::{decompose_staircase, decompose_staircase_with_limit, DEFAULT_DEPTH_LIMIT};
pub use tiling::{validate_tiling, validate_tiling_with, TilingOptions, TilingReport, TilingViolation};

/// Which decomposition produced a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Fan,
    Staircase,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Fan => "fan",
            Engine::Staircase => "staircase",
        })
    }
}

/// A simplex `T` together with extension directions `W`: the region
/// `{ a + Σ_{i∈W} λ_i e_i : a ∈ T, λ_i >= 0 }`.
///
/// With `J` the complement of `W`, the simplex has dimension `|J|`. The cell
/// is degenerate when the projection of `T` to the `J` coordinates is flat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    simplex: Vec<Vec<Rational>>,
    extensions: Vec<usize>,
    engine: Engine,
    node: String,
    projected_det: Rational,
}

impl Cell {
    pub fn new(
        simplex: Vec<Vec<Rational>>,
        extensions: Vec<usize>,
        engine: Engine,
        node: impl Into<String>,
    ) -> Result<Self> {
        let n = simplex
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::DimensionMismatch("cell has no vertices".into()))?;
        if simplex.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch("cell vertices of unequal length".into()));
        }
        let mut extensions = extensions;
        extensions.sort_unstable();
        extensions.dedup();
        if extensions.iter().any(|&i| i >= n) {
            return Err(Error::DimensionMismatch("extension direction out of range".into()));
        }
        let k = simplex.len() - 1;
        if k + extensions.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "simplex of dimension {k} with {} extension directions in R^{n}",
                extensions.len()
            )));
        }
        let projected_det = projected_det(&simplex, &extensions);
        Ok(Self {
            simplex,
            extensions,
            engine,
            node: node.into(),
            projected_det,
        })
    }

    pub fn n(&self) -> usize {
        self.simplex[0].len()
    }

    pub fn simplex(&self) -> &[Vec<Rational>] {
        &self.simplex
    }

    /// Extension directions `W` (0-based).
    pub fn extensions(&self) -> &[usize] {
        &self.extensions
    }

    /// The complementary index set `J` (0-based), of size `dim T`.
    pub fn projection_set(&self) -> Vec<usize> {
        (0..self.n()).filter(|i| !self.extensions.contains(i)).collect()
    }

    pub fn dim(&self) -> usize {
        self.simplex.len() - 1
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn node(&self) -> &str {
        &self.node
    }

    /// Signed determinant of the edge vectors projected to the `J`
    /// coordinates, i.e. `±k!·Vol(π_J(T))`.
    pub fn projected_det(&self) -> &Rational {
        &self.projected_det
    }

    pub fn is_degenerate(&self) -> bool {
        self.projected_det.is_zero()
    }

    pub fn contains_origin_vertex(&self) -> bool {
        self.simplex.iter().any(|v| v.iter().all(Zero::is_zero))
    }
}

fn projected_det(simplex: &[Vec<Rational>], extensions: &[usize]) -> Rational {
    let n = simplex[0].len();
    let j: Vec<usize> = (0..n).filter(|i| !extensions.contains(i)).collect();
    let base = &simplex[0];
    let m: Vec<Vec<Rational>> = simplex[1..]
        .iter()
        .map(|v| j.iter().map(|&c| &v[c] - &base[c]).collect())
        .collect();
    determinant(&m)
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.simplex.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (k, x) in v.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "]")?;
        if !self.extensions.is_empty() {
            let w: Vec<String> = self.extensions.iter().map(|i| format!("e{}", i + 1)).collect();
            write!(f, " + cone({})", w.join(","))?;
        }
        Ok(())
    }
}

/// The cells of one decomposition of a Newton region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSet {
    n: usize,
    cells: Vec<Cell>,
}

impl CellSet {
    pub fn new(n: usize, cells: Vec<Cell>) -> Result<Self> {
        if cells.iter().any(|c| c.n() != n) {
            return Err(Error::DimensionMismatch("cell in wrong ambient dimension".into()));
        }
        Ok(Self { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells with nonzero projected volume.
    pub fn effective(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.is_degenerate())
    }

    /// The same set without degenerate cells.
    pub fn without_degenerate(&self) -> Self {
        Self {
            n: self.n,
            cells: self.effective().cloned().collect(),
        }
    }
}

pub(crate) fn int_point(v: &[num_bigint::BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}
