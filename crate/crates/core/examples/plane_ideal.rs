//! The plane ideal (x1^2 x2^6, x1^3 x2^4, x1^4 x2^3, x1^5 x2, x1^7) in P^5.

use num_bigint::BigInt;
use newton_segre::{compute_segre, parse_ideal, SegreOptions};

fn main() -> newton_segre::Result<()> {
    let spec = parse_ideal("x1^2*x2^6, x1^3*x2^4, x1^4*x2^3, x1^5*x2, x1^7", None)?;
    let out = compute_segre(
        &spec,
        &SegreOptions {
            degrees: Some(vec![BigInt::from(1); 2]),
            ambient_dim: Some(5),
            ..Default::default()
        },
    )?;
    let h = out.specialized.as_ref().expect("specialized");
    println!("class       : {}", out.class);
    println!("Segre class : {h}");
    println!("            = {}", h.bracket_string());
    println!("closed form : {}", out.specialized_closed_form.as_ref().expect("specialized"));
    let names = vec!["H".to_string()];
    for ((cell, _), term) in out.cell_breakdown.iter().zip(out.specialized_cell_terms().unwrap_or_default()) {
        println!("  {:<28} {}", cell.to_string(), term.render(&names));
    }
    Ok(())
}
