//! Three coordinate lines in P^3 and three quadrics through them.

use num_bigint::BigInt;
use newton_segre::{compute_segre, parse_ideal, SegreOptions};

fn main() -> newton_segre::Result<()> {
    let spec = parse_ideal("x1*x2, x1*x3, x2*x3", None)?;
    let out = compute_segre(
        &spec,
        &SegreOptions {
            excess_degrees: Some(vec![BigInt::from(2); 3]),
            ..Default::default()
        },
    )?;
    let x = out.excess.as_ref().expect("excess requested");
    println!("Segre class  : {}", out.specialized.as_ref().expect("specialized"));
    println!("closed form  : {}", out.specialized_closed_form.as_ref().expect("specialized"));
    println!("equivalence  : {}", x.equivalence);
    println!("bezout       : {}", x.bezout);
    println!("excess       : {}", x.excess);
    if out.conjectural {
        println!("conjectural: the integral formula is proven only for two variables");
    }
    Ok(())
}
