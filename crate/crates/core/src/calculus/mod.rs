//! Exact class calculus: cell integrals, sums of terms, power series,
//! specialization to a hyperplane class, closed forms and excess numbers.

mod closed_form;
mod excess;
mod expr;
pub(crate) use expr::factor_string;
mod poly;
mod series;

use num_traits::Signed;
use rayon::prelude::*;

use crate::decompose::{Cell, CellSet};
use crate::error::{Error, Result};

pub use closed_form::{closed_form, ClosedForm};
pub use excess::{excess, Excess};
pub use expr::{ClassExpr, ClassTerm, Fraction};
pub use poly::Poly;
pub use series::{specialize_series, to_series, HSeries, TruncatedSeries};

/// The integral over one cell: `|det| · X^J / ∏_{v ∈ T} (1 + v·X)`, where
/// `det` is the determinant of the edge vectors projected to the `J`
/// coordinates. Degenerate cells give the zero term.
pub fn cell_integral(cell: &Cell) -> Result<ClassTerm> {
    let n = cell.n();
    let j = cell.projection_set();
    if j.len() != cell.dim() {
        return Err(Error::DimensionMismatch(format!(
            "|J| = {} but the simplex has dimension {}",
            j.len(),
            cell.dim()
        )));
    }
    if cell.is_degenerate() {
        return Ok(ClassTerm::zero(n));
    }
    let mut numer = vec![0; n];
    for &i in &j {
        numer[i] = 1;
    }
    Ok(ClassTerm::new(
        cell.projected_det().abs(),
        numer,
        cell.simplex().to_vec(),
    ))
}

/// Normalized sum of the integrals of all cells. Cells are evaluated in
/// parallel; the result does not depend on their order.
pub fn sum_cells(cells: &CellSet) -> Result<ClassExpr> {
    let terms = cells
        .cells()
        .par_iter()
        .filter(|c| !c.is_degenerate())
        .map(cell_integral)
        .collect::<Result<Vec<_>>>()?;
    ClassExpr::from_terms(cells.n(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{decompose_fan, decompose_staircase, Engine};
    use crate::ideal::MonomialIdealSpec;
    use crate::polyhedron::build_polyhedron;
    use crate::Rational;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn cell_integrals_match_hand_values() {
        let strip = Cell::new(vec![pt(&[0, 0]), pt(&[2, 6])], vec![1], Engine::Fan, "t").unwrap();
        assert_eq!(cell_integral(&strip).unwrap().to_string(), "2X1 / (1 + 2X1 + 6X2)");
        let tri = Cell::new(
            vec![pt(&[0, 0, 0]), pt(&[1, 0, 1]), pt(&[0, 1, 1])],
            vec![2],
            Engine::Fan,
            "t",
        )
        .unwrap();
        assert_eq!(
            cell_integral(&tri).unwrap().to_string(),
            "X1X2 / (1 + X2 + X3)(1 + X1 + X3)"
        );
        let fat = Cell::new(vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])], vec![], Engine::Staircase, "t").unwrap();
        assert_eq!(cell_integral(&fat).unwrap().to_string(), "4X1X2 / (1 + 2X2)(1 + 2X1)");
    }

    #[test]
    fn sums_of_simple_regions() {
        let spec = MonomialIdealSpec::from_rows(&[&[3, 4]]);
        let e = sum_cells(&decompose_fan(&build_polyhedron(&spec))).unwrap();
        assert_eq!(e.to_string(), "4X2 / (1 + 3X1 + 4X2) + 3X1 / (1 + 3X1 + 4X2)");
        let fat = MonomialIdealSpec::from_rows(&[&[2, 0], &[0, 2]]);
        let e = sum_cells(&decompose_staircase(&fat).unwrap()).unwrap();
        assert_eq!(e.to_string(), "4X1X2 / (1 + 2X2)(1 + 2X1)");
        assert!(sum_cells(&CellSet::new(2, vec![]).unwrap()).unwrap().is_zero());
    }
}
