//! Facets, vertices and bounded faces of a Newton polyhedron.

use newton_segre::{build_polyhedron, minimalize, parse_ideal, Rational};

fn main() -> newton_segre::Result<()> {
    let spec = parse_ideal("x1^3*x2, x2^2*x3, x1*x3^4, x1^2*x2^2*x3, x1^4*x2^4", None)?;
    let min = minimalize(&spec);
    println!("input   : {}", spec.to_ideal_string());
    println!("minimal : {}", min.to_ideal_string());
    let poly = build_polyhedron(&min);
    println!("facets:");
    for f in poly.facets() {
        println!("  {f}");
    }
    println!("bounded faces:");
    for face in poly.compact_faces() {
        let verts: Vec<String> = face.vertices.iter().map(|v| v.to_string()).collect();
        let ext: Vec<usize> = face.extensions.iter().map(|i| i + 1).collect();
        println!("  dim {} [{}] extensions {ext:?}", face.dim, verts.join(", "));
    }
    let q = |x: i64| Rational::from_integer(x.into());
    for p in [[q(0), q(0), q(0)], [q(1), q(1), q(1)], [q(3), q(3), q(3)]] {
        let shown: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        println!("({}) -> {:?}", shown.join(","), poly.contains(&p));
    }
    Ok(())
}
