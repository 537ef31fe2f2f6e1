//! Numeric cell integrals next to their exact values.

use newton_segre::oracle::quadrature_cell;
use newton_segre::{cell_integral, compute_segre, parse_ideal, Rational, SegreOptions};
use num_traits::ToPrimitive;

fn main() -> newton_segre::Result<()> {
    let spec = parse_ideal("x1*x2, x1*x3, x2*x3", None)?;
    let out = compute_segre(&spec, &SegreOptions::default())?;
    let point = [Rational::new(1.into(), 10.into()), Rational::new(1.into(), 7.into()), Rational::new(1.into(), 5.into())];
    let pf: Vec<f64> = point.iter().map(|x| x.to_f64().expect("finite")).collect();
    for cell in out.cells.effective() {
        let exact = cell_integral(cell)?.evaluate(&point)?;
        let numeric = quadrature_cell(cell, &pf, 1e-10)?;
        println!(
            "{cell:<44} exact {:.12}  numeric {:.12}  ({} boxes)",
            exact.to_f64().expect("finite"),
            numeric.value,
            numeric.boxes
        );
    }
    Ok(())
}
