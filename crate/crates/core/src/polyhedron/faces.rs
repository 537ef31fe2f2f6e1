//! Face lattice of a Newton polyhedron.
//!
//! The recession cone of `P` is the orthant, so every face is
//! `conv(V) + cone(e_i : i ∈ R)` for a set `V` of vertices and a set `R` of
//! coordinate directions. Faces are produced as intersections of facets and
//! identified by the pair `(V, R)`.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::NewtonPolyhedron;
use crate::ideal::ExponentVector;
use crate::linalg::rank;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Indices into the polyhedron's vertex list, ascending.
    pub vertices: Vec<usize>,
    /// Recession directions (0-based coordinates), ascending.
    pub rec: Vec<usize>,
    pub dim: usize,
}

impl Face {
    /// `self ⊆ other` as point sets.
    pub fn is_subface_of(&self, other: &Face) -> bool {
        is_subset(&self.vertices, &other.vertices) && is_subset(&self.rec, &other.rec)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn face_dim(poly: &NewtonPolyhedron, vertices: &[usize], rec: &[usize]) -> usize {
    let n = poly.n();
    let base = poly.vertices()[vertices[0]].to_rationals();
    let mut rows: Vec<Vec<Rational>> = vertices[1..]
        .iter()
        .map(|&v| {
            poly.vertices()[v]
                .to_rationals()
                .iter()
                .zip(&base)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    for &i in rec {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        rows.push(e);
    }
    if rows.is_empty() {
        0
    } else {
        rank(&rows)
    }
}

/// All nonempty proper faces, with the facets of each face.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    /// `facet_face[i]` is the face index of the polyhedron's `i`-th facet.
    facet_face: Vec<usize>,
    /// For each face, the indices of its codimension-one subfaces.
    subfacets: Vec<Vec<usize>>,
    /// For each face, the polyhedron facets containing it.
    containing: Vec<Vec<usize>>,
}

impl FaceLattice {
    pub(crate) fn new(poly: &NewtonPolyhedron) -> Self {
        let facet_sets: Vec<(Vec<usize>, Vec<usize>)> = poly
            .facets()
            .iter()
            .map(|f| {
                let verts = (0..poly.vertices().len())
                    .filter(|&v| f.value_int(poly.vertices()[v].entries()).is_zero())
                    .collect();
                (verts, f.zero_components())
            })
            .collect();

        let mut index: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let mut faces: Vec<Face> = Vec::new();
        let mut queue = VecDeque::new();
        let mut facet_face = Vec::with_capacity(facet_sets.len());
        for (v, r) in &facet_sets {
            let key = (v.clone(), r.clone());
            let id = *index.entry(key).or_insert_with(|| {
                faces.push(Face {
                    vertices: v.clone(),
                    rec: r.clone(),
                    dim: face_dim(poly, v, r),
                });
                queue.push_back(faces.len() - 1);
                faces.len() - 1
            });
            facet_face.push(id);
        }
        while let Some(id) = queue.pop_front() {
            for (v, r) in &facet_sets {
                let nv = intersect(&faces[id].vertices, v);
                if nv.is_empty() {
                    continue;
                }
                let nr = intersect(&faces[id].rec, r);
                let key = (nv, nr);
                if index.contains_key(&key) {
                    continue;
                }
                let dim = face_dim(poly, &key.0, &key.1);
                faces.push(Face {
                    vertices: key.0.clone(),
                    rec: key.1.clone(),
                    dim,
                });
                index.insert(key, faces.len() - 1);
                queue.push_back(faces.len() - 1);
            }
        }

        // deterministic order: by dimension, then vertex set, then directions
        let mut order: Vec<usize> = (0..faces.len()).collect();
        order.sort_by(|&a, &b| {
            (faces[a].dim, &faces[a].vertices, &faces[a].rec)
                .cmp(&(faces[b].dim, &faces[b].vertices, &faces[b].rec))
        });
        let mut remap = vec![0; faces.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let faces: Vec<Face> = order.iter().map(|&i| faces[i].clone()).collect();
        let facet_face = facet_face.into_iter().map(|i| remap[i]).collect();

        let subfacets = faces
            .iter()
            .map(|g| {
                (0..faces.len())
                    .filter(|&j| faces[j].dim + 1 == g.dim && faces[j].is_subface_of(g))
                    .collect()
            })
            .collect();
        let containing = faces
            .iter()
            .map(|g| {
                (0..facet_sets.len())
                    .filter(|&i| is_subset(&g.vertices, &facet_sets[i].0) && is_subset(&g.rec, &facet_sets[i].1))
                    .collect()
            })
            .collect();

        Self {
            faces,
            facet_face,
            subfacets,
            containing,
        }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn facet_face(&self, facet: usize) -> usize {
        self.facet_face[facet]
    }

    pub fn subfacets(&self, id: usize) -> &[usize] {
        &self.subfacets[id]
    }

    pub fn containing_facets(&self, id: usize) -> &[usize] {
        &self.containing[id]
    }

    pub(crate) fn compact_faces(&self, poly: &NewtonPolyhedron) -> Vec<CompactFace> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.rec.is_empty())
            .map(|(id, f)| {
                let active = self.containing[id].clone();
                let mut ext: Vec<usize> = active
                    .iter()
                    .flat_map(|&h| poly.facets()[h].zero_components())
                    .collect();
                ext.sort_unstable();
                ext.dedup();
                CompactFace {
                    vertices: f.vertices.iter().map(|&v| poly.vertices()[v].clone()).collect(),
                    dim: f.dim,
                    active_facets: active,
                    extensions: ext,
                }
            })
            .collect()
    }
}

/// A bounded face of `P` together with its extension set `U(F)`: the
/// coordinates `i` for which some facet through `F` has a zero `i`-th normal
/// component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactFace {
    pub vertices: Vec<ExponentVector>,
    pub dim: usize,
    pub active_facets: Vec<usize>,
    /// 0-based coordinate indices.
    pub extensions: Vec<usize>,
}

impl CompactFace {
    pub fn vertex_entries(&self) -> Vec<Vec<BigInt>> {
        self.vertices.iter().map(|v| v.entries().to_vec()).collect()
    }
}
