//! The Newton polyhedron `P = conv(∪ (I_k + R≥0^n))` in exact arithmetic.

mod dd;
mod faces;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ideal::{ExponentVector, MonomialIdealSpec};
use crate::linalg::{rank, to_rational_row};
use crate::Rational;

pub use faces::{CompactFace, Face, FaceLattice};

/// The half-space `normal · x >= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FacetInequality {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl FacetInequality {
    pub fn value(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .map(|(c, xi)| xi * c)
            .sum::<Rational>()
            - Rational::from_integer(self.offset.clone())
    }

    pub fn value_int(&self, x: &[BigInt]) -> BigInt {
        self.normal.iter().zip(x).map(|(c, xi)| c * xi).sum::<BigInt>() - &self.offset
    }

    /// Coordinates whose normal component is zero, i.e. recession directions.
    pub fn zero_components(&self) -> Vec<usize> {
        (0..self.normal.len())
            .filter(|&i| self.normal[i].is_zero())
            .collect()
    }
}

impl fmt::Display for FacetInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{c}x{}", i + 1)?;
            }
        }
        write!(f, " >= {}", self.offset)
    }
}

/// Where a point sits relative to the polyhedron and the orthant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    InteriorOfP,
    BoundaryOfP,
    InNewtonRegion,
    OutsideOrthant,
}

/// Facets and vertices of a Newton polyhedron.
///
/// Facets have nonnegative primitive normals and are sorted
/// lexicographically; vertices are a subset of the generators, also sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolyhedron {
    n: usize,
    vertices: Vec<ExponentVector>,
    facets: Vec<FacetInequality>,
}

impl NewtonPolyhedron {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetInequality] {
        &self.facets
    }

    /// Exact classification of `point`.
    pub fn contains(&self, point: &[Rational]) -> Membership {
        assert_eq!(point.len(), self.n, "point dimension");
        if point.iter().any(Signed::is_negative) {
            return Membership::OutsideOrthant;
        }
        let mut tight = false;
        for f in &self.facets {
            let v = f.value(point);
            if v.is_negative() {
                return Membership::InNewtonRegion;
            }
            tight |= v.is_zero();
        }
        if tight {
            Membership::BoundaryOfP
        } else {
            Membership::InteriorOfP
        }
    }

    /// Indices of facets tight at vertex `v`.
    pub fn facets_at(&self, v: &ExponentVector) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| self.facets[i].value_int(v.entries()).is_zero())
            .collect()
    }

    /// The full face lattice (all nonempty proper faces).
    pub fn face_lattice(&self) -> FaceLattice {
        FaceLattice::new(self)
    }

    /// Faces with trivial recession cone, with their extension sets.
    pub fn compact_faces(&self) -> Vec<CompactFace> {
        self.face_lattice().compact_faces(self)
    }
}

/// Build the Newton polyhedron of `spec`.
///
/// The facets come from the extreme rays of the dual cone
/// `{(c, β) : c·I_k + β >= 0, c >= 0}`, each ray with `c ≠ 0` giving the facet
/// `c·x >= -β`. A generator is a vertex when its tight facet normals span `R^n`.
pub fn build_polyhedron(spec: &MonomialIdealSpec) -> NewtonPolyhedron {
    let n = spec.n();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n + 1];
            r[i] = BigInt::one();
            r
        })
        .collect();
    for g in spec.generators() {
        let mut r = g.entries().to_vec();
        r.push(BigInt::one());
        rows.push(r);
    }

    let mut facets: Vec<FacetInequality> = dd::extreme_rays(&rows)
        .into_iter()
        .filter(|ray| ray[..n].iter().any(|c| !c.is_zero()))
        .map(|ray| FacetInequality {
            normal: ray[..n].to_vec(),
            offset: -ray[n].clone(),
        })
        .collect();
    facets.sort();

    let vertices = spec
        .generators()
        .iter()
        .filter(|g| {
            let normals: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.value_int(g.entries()).is_zero())
                .map(|f| to_rational_row(&f.normal))
                .collect();
            normals.len() >= n && rank(&normals) == n
        })
        .cloned()
        .collect();

    NewtonPolyhedron {
        n,
        vertices,
        facets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facet(normal: &[i64], offset: i64) -> FacetInequality {
        FacetInequality {
            normal: normal.iter().map(|&c| BigInt::from(c)).collect(),
            offset: BigInt::from(offset),
        }
    }

    fn q(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter()
            .map(|&(a, b)| Rational::new(a.into(), b.into()))
            .collect()
    }

    fn plane() -> MonomialIdealSpec {
        MonomialIdealSpec::from_rows(&[&[2, 6], &[3, 4], &[4, 3], &[5, 1], &[7, 0]])
    }

    #[test]
    fn plane_facets_and_vertices() {
        let p = build_polyhedron(&plane());
        let mut expected = vec![
            facet(&[1, 0], 2),
            facet(&[2, 1], 10),
            facet(&[3, 2], 17),
            facet(&[1, 2], 7),
            facet(&[0, 1], 0),
        ];
        expected.sort();
        assert_eq!(p.facets(), expected.as_slice());
        let verts: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(verts, ["(2,6)", "(3,4)", "(5,1)", "(7,0)"]);
    }

    #[test]
    fn single_generator() {
        let p = build_polyhedron(&MonomialIdealSpec::from_rows(&[&[3, 4]]));
        assert_eq!(p.facets(), &[facet(&[0, 1], 4), facet(&[1, 0], 3)]);
        assert_eq!(p.vertices().len(), 1);
    }

    #[test]
    fn three_lines() {
        let p = build_polyhedron(&MonomialIdealSpec::from_rows(&[
            &[0, 1, 1],
            &[1, 0, 1],
            &[1, 1, 0],
        ]));
        let mut expected = vec![
            facet(&[1, 1, 1], 2),
            facet(&[1, 1, 0], 1),
            facet(&[1, 0, 1], 1),
            facet(&[0, 1, 1], 1),
            facet(&[1, 0, 0], 0),
            facet(&[0, 1, 0], 0),
            facet(&[0, 0, 1], 0),
        ];
        expected.sort();
        assert_eq!(p.facets(), expected.as_slice());
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn membership() {
        let p = build_polyhedron(&plane());
        // (5, 3/2) dominates the generator (5,1), so it is strictly inside P
        assert_eq!(p.contains(&q(&[(5, 1), (3, 2)])), Membership::InteriorOfP);
        assert_eq!(p.contains(&q(&[(1, 1), (0, 1)])), Membership::InNewtonRegion);
        assert_eq!(p.contains(&q(&[(7, 1), (0, 1)])), Membership::BoundaryOfP);
        assert_eq!(p.contains(&q(&[(-1, 1), (9, 1)])), Membership::OutsideOrthant);
        // just below the edge 3x1 + 2x2 = 17 between (3,4) and (5,1)
        assert_eq!(p.contains(&q(&[(4, 1), (5, 2)])), Membership::BoundaryOfP);
        assert_eq!(p.contains(&q(&[(4, 1), (12, 5)])), Membership::InNewtonRegion);
    }

    #[test]
    fn generators_satisfy_all_facets() {
        let spec = MonomialIdealSpec::from_rows(&[&[4, 0, 1], &[1, 3, 2], &[0, 2, 5], &[2, 2, 2], &[3, 1, 0]]);
        let p = build_polyhedron(&spec);
        for f in p.facets() {
            assert!(f.normal.iter().all(|c| !c.is_negative()));
            for g in spec.generators() {
                assert!(!f.value_int(g.entries()).is_negative());
            }
        }
    }
}
