//! Series expansion, closed forms and specialization of a class.

use newton_segre::calculus::{closed_form, specialize_series};
use newton_segre::{compute_segre, parse_ideal, to_series, Rational, SegreOptions};

fn main() -> newton_segre::Result<()> {
    let spec = parse_ideal("x1^3*x2, x1*x2^2, x2^5", None)?;
    let out = compute_segre(&spec, &SegreOptions::default())?;
    let names = vec!["X1".to_string(), "X2".to_string()];
    println!("class       : {}", out.class);
    println!("closed form : {}", closed_form(&out.class).render(&names));
    let series = to_series(&out.class, 4);
    println!("series      : {series}");
    for degrees in [[1, 1], [2, 3]] {
        let d: Vec<Rational> = degrees.iter().map(|&x| Rational::from_integer(x.into())).collect();
        let h = specialize_series(&series, &d, 4)?;
        let cf = closed_form(&out.class.specialize(&d)?);
        println!("X = {degrees:?}H : {h}  =  {cf}");
    }
    Ok(())
}
