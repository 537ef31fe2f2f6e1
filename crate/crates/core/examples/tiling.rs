//! Grid check that cells cover the Newton region exactly once.

use newton_segre::decompose::{validate_tiling_with, TilingOptions};
use newton_segre::{build_polyhedron, decompose_fan, minimalize, parse_ideal, CellSet, Rational};

fn main() -> newton_segre::Result<()> {
    let spec = minimalize(&parse_ideal("x1^2*x2^6, x1^3*x2^4, x1^5*x2, x1^7", None)?);
    let poly = build_polyhedron(&spec);
    let cells = decompose_fan(&poly);
    let opts = TilingOptions {
        grid_step: Rational::new(1.into(), 8.into()),
        ..TilingOptions::default()
    };
    let report = validate_tiling_with(&cells, &poly, &opts)?;
    println!(
        "full fan   : {} violations, {} of {} points decided",
        report.violation_count, report.points_decided, report.points_checked
    );
    let mut broken: Vec<_> = cells.cells().to_vec();
    broken.remove(2);
    let report = validate_tiling_with(&CellSet::new(2, broken)?, &poly, &opts)?;
    println!("one removed: {} violations", report.violation_count);
    if let Some(v) = report.violations.first() {
        println!("  e.g. {:?} uncovered", v.point.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    Ok(())
}
