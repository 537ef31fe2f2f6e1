//! Fan and staircase decompositions of a plane Newton region.

use newton_segre::{build_polyhedron, cell_integral, decompose_fan, decompose_staircase, minimalize, parse_ideal};

fn main() -> newton_segre::Result<()> {
    let spec = minimalize(&parse_ideal("x1^2*x2^6, x1^3*x2^4, x1^4*x2^3, x1^5*x2, x1^7", None)?);
    let poly = build_polyhedron(&spec);
    let fan = decompose_fan(&poly);
    let stair = decompose_staircase(&spec)?;
    for cells in [&fan, &stair] {
        for c in cells.cells() {
            let term = if c.is_degenerate() {
                "degenerate".to_string()
            } else {
                cell_integral(c)?.to_string()
            };
            println!("{:<9} {:<12} {:<28} {term}", c.engine(), c.node(), c.to_string());
        }
    }
    let a = newton_segre::sum_cells(&fan)?;
    let b = newton_segre::sum_cells(&stair)?;
    println!("sums agree: {}", a.certify_equal(&b, 1)?);
    Ok(())
}
