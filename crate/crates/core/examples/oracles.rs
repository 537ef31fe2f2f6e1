//! Every applicable oracle against a few ideals.

use newton_segre::oracle::{cross_check, singularity_family_spec, CrossCheckOptions};
use newton_segre::parse_ideal;

fn main() -> newton_segre::Result<()> {
    let specs = [
        parse_ideal("x1^2*x2^6, x1^3*x2^4, x1^4*x2^3, x1^5*x2, x1^7", None)?,
        parse_ideal("x1^2, x2^3, x3", None)?,
        singularity_family_spec(4),
    ];
    for spec in &specs {
        println!("{}", spec.to_ideal_string());
        let report = cross_check(spec, &CrossCheckOptions::default())?;
        print!("{report}");
        println!("all passed: {}\n", report.passed());
    }
    Ok(())
}
