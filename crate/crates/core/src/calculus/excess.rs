//! Equivalence and excess numbers for intersections of hypersurfaces.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::series::HSeries;
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Excess {
    /// Coefficient of `H^N` in `∏ (1 + d_i H) · s`.
    pub equivalence: Rational,
    /// `∏ d_i`.
    pub bezout: BigInt,
    /// `bezout − equivalence`.
    pub excess: Rational,
}

/// Contribution of the subscheme to the intersection of `N` hypersurfaces
/// of degrees `d_1 … d_N` in `P^N`.
pub fn excess(series: &HSeries, degrees: &[BigInt]) -> Result<Excess> {
    let n = series.ambient_dim();
    if degrees.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} hypersurface degrees in P^{n}",
            degrees.len()
        )));
    }
    // elementary symmetric functions of the degrees
    let mut e = vec![BigInt::one()];
    for d in degrees {
        let mut next = e.clone();
        next.push(BigInt::from(0));
        for k in 1..next.len() {
            next[k] += &e[k - 1] * d;
        }
        e = next;
    }
    let equivalence: Rational = (0..=n)
        .map(|j| series.coeff(j) * Rational::from_integer(e[n - j].clone()))
        .sum();
    let bezout: BigInt = degrees.iter().product();
    Ok(Excess {
        excess: Rational::from_integer(bezout.clone()) - &equivalence,
        equivalence,
        bezout,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    fn d(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn three_lines_in_three_quadrics() {
        let s = HSeries::new(vec![q(0), q(0), q(3), q(-10)], 3);
        let x = excess(&s, &d(&[2, 2, 2])).unwrap();
        assert_eq!(x.equivalence, q(8));
        assert_eq!(x.bezout, 8.into());
        assert_eq!(x.excess, q(0));
    }

    #[test]
    fn zero_series_and_hypersurface() {
        let x = excess(&HSeries::new(vec![], 2), &d(&[3, 5])).unwrap();
        assert_eq!((x.equivalence, x.excess), (q(0), q(15)));
        // s = 4H/(1+4H) in P^3
        let s = HSeries::new(vec![q(0), q(4), q(-16), q(64)], 3);
        let x = excess(&s, &d(&[4, 4, 4])).unwrap();
        assert_eq!(x.equivalence, q(64));
        assert!(excess(&s, &d(&[4, 4])).is_err());
    }
}
