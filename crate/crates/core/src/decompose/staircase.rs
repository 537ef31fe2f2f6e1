//! Staircase decomposition for two variables, following the blow-up
//! principalization of a monomial ideal in the plane.
//!
//! With `m = min_k (i_k1 + i_k2)`, the region splits into the triangle
//! `(0,0), (m,0), (0,m)` and two pieces that are the images of the Newton
//! regions of the exponent sets
//!
//! ```text
//!   S1: (i_k1, i_k1 + i_k2 - m)      mapped by (ã, e) ↦ (ã, e - ã + m)
//!   S2: (i_k1 + i_k2 - m, i_k2)      mapped by (e, ã) ↦ (e - ã + m, ã)
//! ```
//!
//! Both maps are unimodular. The recursion bottoms out at principal ideals,
//! whose region is split into two half-strips, or at unit ideals, whose region
//! is empty.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{int_point, Cell, CellSet, Engine};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, ExponentVector, MonomialIdealSpec};

pub const DEFAULT_DEPTH_LIMIT: usize = 64;

struct RawCell {
    simplex: Vec<[BigInt; 2]>,
    extensions: Vec<usize>,
    node: String,
}

fn to_cell(raw: &RawCell) -> Result<Cell> {
    let simplex = raw.simplex.iter().map(|p| int_point(p)).collect();
    Cell::new(simplex, raw.extensions.clone(), Engine::Staircase, raw.node.clone())
}

fn recurse(spec: &MonomialIdealSpec, depth: usize, limit: usize, node: &str) -> Result<Vec<RawCell>> {
    if depth > limit {
        return Err(Error::DepthLimit(limit));
    }
    let spec = minimalize(spec);
    if spec.is_unit() {
        return Ok(Vec::new());
    }
    let gens: Vec<[BigInt; 2]> = spec
        .generators()
        .iter()
        .map(|g| [g.entries()[0].clone(), g.entries()[1].clone()])
        .collect();
    let origin = [BigInt::zero(), BigInt::zero()];

    if let [g] = gens.as_slice() {
        return Ok([0usize, 1]
            .iter()
            .map(|&w| RawCell {
                simplex: vec![origin.clone(), g.clone()],
                extensions: vec![w],
                node: node.to_string(),
            })
            .collect());
    }

    let m = gens
        .iter()
        .map(|[a, b]| a + b)
        .min()
        .expect("at least two generators");
    let mut out = vec![RawCell {
        simplex: vec![origin, [m.clone(), BigInt::zero()], [BigInt::zero(), m.clone()]],
        extensions: Vec::new(),
        node: node.to_string(),
    }];

    let child = |f: &dyn Fn(&BigInt, &BigInt) -> [BigInt; 2]| -> Result<MonomialIdealSpec> {
        let g = gens
            .iter()
            .map(|[a, b]| ExponentVector::new(f(a, b).to_vec()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdealSpec::new(2, g)
    };
    let s1 = child(&|a, b| [a.clone(), a + b - &m])?;
    let s2 = child(&|a, b| [a + b - &m, b.clone()])?;

    for (branch, spec_child) in [(1usize, s1), (2usize, s2)] {
        let sub = recurse(&spec_child, depth + 1, limit, &format!("{node}/{branch}"))?;
        for raw in sub {
            let kept_dir = if branch == 1 { 1 } else { 0 };
            if raw.extensions.iter().any(|&w| w != kept_dir) {
                // extension along ã maps to a diagonal direction; only flat
                // cells can carry it
                if !to_cell(&raw)?.is_degenerate() {
                    return Err(Error::Internal(format!(
                        "non-degenerate staircase cell at {} extends along a diagonal",
                        raw.node
                    )));
                }
                continue;
            }
            let simplex = raw
                .simplex
                .iter()
                .map(|[x, y]| {
                    if branch == 1 {
                        [x.clone(), y - x + &m]
                    } else {
                        [x - y + &m, y.clone()]
                    }
                })
                .collect();
            out.push(RawCell {
                simplex,
                extensions: raw.extensions,
                node: raw.node,
            });
        }
    }
    Ok(out)
}

/// Decompose the Newton region of a two-variable ideal by the staircase
/// recursion, with the default depth limit.
pub fn decompose_staircase(spec: &MonomialIdealSpec) -> Result<CellSet> {
    decompose_staircase_with_limit(spec, DEFAULT_DEPTH_LIMIT)
}

pub fn decompose_staircase_with_limit(spec: &MonomialIdealSpec, depth_limit: usize) -> Result<CellSet> {
    if spec.n() != 2 {
        return Err(Error::StaircaseDimension(spec.n()));
    }
    let cells = recurse(spec, 0, depth_limit, "root")?
        .iter()
        .map(to_cell)
        .collect::<Result<Vec<_>>>()?;
    CellSet::new(2, cells)
}
