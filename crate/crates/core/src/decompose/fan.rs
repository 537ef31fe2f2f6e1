//! Fan decomposition: cone each facet of `P` to the origin.
//!
//! For `x` in the interior of `N`, the ray from the origin through `x` enters
//! `P` through exactly one facet `G` (generically), so `N` is the union of the
//! cones `conv(0, G)` over facets with positive offset. Each facet is an
//! unbounded polyhedron `conv(V) + cone(e_R)`; a pulling triangulation from
//! its lexicographically smallest vertex `v` splits it into
//!
//! * `conv(v, H)` for every facet `H` of `G` not containing `v` (recursively
//!   triangulated), and
//! * `v + cone(e_R)` when `|R| = dim G` (otherwise this piece is flat).
//!
//! Facets through the origin (`x_i >= 0`) only produce flat cells; they are
//! kept and flagged degenerate.

use std::collections::HashMap;

use super::{int_point, Cell, CellSet, Engine};
use crate::polyhedron::{FaceLattice, NewtonPolyhedron};
use crate::Rational;

#[derive(Clone, Debug)]
struct Piece {
    vertices: Vec<usize>,
    rays: Vec<usize>,
}

fn triangulate(lat: &FaceLattice, id: usize, memo: &mut HashMap<usize, Vec<Piece>>) -> Vec<Piece> {
    if let Some(p) = memo.get(&id) {
        return p.clone();
    }
    let face = lat.face(id);
    let apex = face.vertices[0];
    let mut out = Vec::new();
    if face.dim == 0 {
        out.push(Piece {
            vertices: vec![apex],
            rays: Vec::new(),
        });
    } else {
        for &h in lat.subfacets(id) {
            if lat.face(h).vertices.contains(&apex) {
                continue;
            }
            for p in triangulate(lat, h, memo) {
                let mut vertices = vec![apex];
                vertices.extend(p.vertices);
                out.push(Piece {
                    vertices,
                    rays: p.rays,
                });
            }
        }
        if face.rec.len() == face.dim {
            out.push(Piece {
                vertices: vec![apex],
                rays: face.rec.clone(),
            });
        }
    }
    memo.insert(id, out.clone());
    out
}

/// Decompose the Newton region of `poly` into cells with the origin as a
/// vertex, in a deterministic order (facet order, then triangulation order).
pub fn decompose_fan(poly: &NewtonPolyhedron) -> CellSet {
    let n = poly.n();
    let lat = poly.face_lattice();
    let mut memo = HashMap::new();
    let origin = vec![Rational::from_integer(0.into()); n];
    let mut cells = Vec::new();
    for fi in 0..poly.facets().len() {
        for (pi, piece) in triangulate(&lat, lat.facet_face(fi), &mut memo)
            .into_iter()
            .enumerate()
        {
            let mut simplex = vec![origin.clone()];
            simplex.extend(
                piece
                    .vertices
                    .iter()
                    .map(|&v| int_point(poly.vertices()[v].entries())),
            );
            let cell = Cell::new(simplex, piece.rays, Engine::Fan, format!("facet{fi}.{pi}"))
                .expect("pulling triangulation yields full-dimensional cells");
            cells.push(cell);
        }
    }
    CellSet::new(n, cells).expect("cells share the ambient dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdealSpec;
    use crate::polyhedron::build_polyhedron;

    fn fan(rows: &[&[u64]]) -> CellSet {
        decompose_fan(&build_polyhedron(&MonomialIdealSpec::from_rows(rows)))
    }

    fn strings(cs: &CellSet, degenerate: bool) -> Vec<String> {
        let mut v: Vec<String> = cs
            .cells()
            .iter()
            .filter(|c| c.is_degenerate() == degenerate)
            .map(|c| c.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn plane_cells() {
        let cs = fan(&[&[2, 6], &[3, 4], &[4, 3], &[5, 1], &[7, 0]]);
        assert_eq!(
            strings(&cs, false),
            [
                "[(0,0), (2,6), (3,4)]",
                "[(0,0), (2,6)] + cone(e2)",
                "[(0,0), (3,4), (5,1)]",
                "[(0,0), (5,1), (7,0)]",
            ]
        );
        assert_eq!(strings(&cs, true), ["[(0,0), (7,0)] + cone(e1)"]);
    }

    #[test]
    fn single_generator_cells() {
        let cs = fan(&[&[3, 4]]);
        assert_eq!(
            strings(&cs, false),
            ["[(0,0), (3,4)] + cone(e1)", "[(0,0), (3,4)] + cone(e2)"]
        );
        assert_eq!(cs.len(), 2);
    }

    #[test]
    fn three_lines_cells() {
        let cs = fan(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let eff = strings(&cs, false);
        assert_eq!(eff.len(), 4);
        assert!(eff.contains(&"[(0,0,0), (0,1,1), (1,0,1), (1,1,0)]".to_string()));
        assert!(eff.contains(&"[(0,0,0), (0,1,1), (1,0,1)] + cone(e3)".to_string()));
        assert_eq!(cs.cells().iter().filter(|c| c.is_degenerate()).count(), 3);
    }

    #[test]
    fn every_cell_has_origin_and_full_dimension() {
        let cs = fan(&[&[1, 2, 0], &[1, 0, 2], &[0, 0, 3], &[2, 1, 1]]);
        for c in cs.cells() {
            assert!(c.contains_origin_vertex());
            assert_eq!(c.dim() + c.extensions().len(), 3);
        }
    }
}
