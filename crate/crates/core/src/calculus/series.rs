//! Truncated power series of classes and their specialization to `H`.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::expr::{default_names, ClassExpr};
use super::poly::{push_signed_term, Poly};
use crate::error::{Error, Result};
use crate::Rational;

/// A power series in `X_1 … X_n` with all terms of total degree above
/// `max_degree` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: Poly,
    max_degree: u32,
}

impl TruncatedSeries {
    pub fn new(poly: Poly, max_degree: u32) -> Self {
        Self {
            poly: poly.truncate(max_degree),
            max_degree,
        }
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.poly.coeff(exp)
    }

    pub fn constant_term(&self) -> Rational {
        self.poly.coeff(&vec![0; self.n()])
    }

    /// Product, truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.poly.check_n(&other.poly)?;
        let d = self.max_degree.min(other.max_degree);
        Ok(Self {
            poly: self.poly.mul_truncated(&other.poly, d),
            max_degree: d,
        })
    }

    /// Relabel variables: variable `i` becomes variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut p = Poly::zero(self.n());
        for (e, c) in self.poly.terms() {
            let mut moved = vec![0; e.len()];
            for (i, &k) in e.iter().enumerate() {
                moved[perm[i]] = k;
            }
            p = &p + &Poly::monomial(self.n(), moved, c.clone());
        }
        Self::new(p, self.max_degree)
    }

    pub fn render(&self, names: &[String]) -> String {
        self.poly.render(names)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.n())))
    }
}

/// `Σ_{k<=d} (−v·X)^k`.
fn geometric(v: &[Rational], d: u32) -> Poly {
    let n = v.len();
    let minus_linear = &Poly::one(n) - &Poly::one_plus_linear(v);
    let mut sum = Poly::one(n);
    let mut power = Poly::one(n);
    for _ in 0..d {
        power = power.mul_truncated(&minus_linear, d);
        sum = &sum + &power;
    }
    sum
}

/// Expand every term geometrically up to total degree `max_degree`.
pub fn to_series(expr: &ClassExpr, max_degree: u32) -> TruncatedSeries {
    let n = expr.n();
    let mut cache: HashMap<&[Rational], Poly> = HashMap::new();
    let mut total = Poly::zero(n);
    for t in expr.terms() {
        let deg: u32 = t.numer.iter().sum();
        if deg > max_degree {
            continue;
        }
        let budget = max_degree - deg;
        let mut p = Poly::constant(n, t.coeff.clone());
        for v in &t.denom {
            let g = cache.entry(v.as_slice()).or_insert_with(|| geometric(v, max_degree));
            p = p.mul_truncated(g, budget);
        }
        let p = &p * &Poly::monomial(n, t.numer.clone(), Rational::from_integer(1.into()));
        total = &total + &p;
    }
    TruncatedSeries::new(total, max_degree)
}

/// A class in the Chow ring of `P^N`: coefficients of `H^0 … H^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HSeries {
    coeffs: Vec<Rational>,
}

impl HSeries {
    pub fn new(mut coeffs: Vec<Rational>, ambient_dim: usize) -> Self {
        coeffs.resize(ambient_dim + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_poly(p: &Poly, ambient_dim: usize) -> Result<Self> {
        if p.n() != 1 {
            return Err(Error::DimensionMismatch("expected a polynomial in H".into()));
        }
        Ok(Self::new(
            (0..=ambient_dim as u32).map(|k| p.coeff(&[k])).collect(),
            ambient_dim,
        ))
    }

    pub fn ambient_dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `H^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(1), |acc, (k, c)| &acc + &Poly::monomial(1, vec![k as u32], c.clone()))
    }

    /// Highest power first, as in `- 35278H^5 + 3714H^4 - … + 2H`.
    pub fn descending_string(&self) -> String {
        self.to_poly().render_descending("H")
    }

    /// Coefficient of `H^j` attached to `[P^{N−j}]`.
    pub fn bracket_string(&self) -> String {
        let n = self.ambient_dim();
        let mut s = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = format!("[P^{}]", n - j);
            let first = s.is_empty();
            push_signed_term(&mut s, c, &mono, first);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn max_abs(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().render(&["H".to_string()]))
    }
}

/// Substitute `X_i = d_i·H` in a series and keep `H^0 … H^N`.
pub fn specialize_series(series: &TruncatedSeries, degrees: &[Rational], ambient_dim: usize) -> Result<HSeries> {
    if degrees.len() != series.n() {
        return Err(Error::DimensionMismatch(format!(
            "{} degrees for {} variables",
            degrees.len(),
            series.n()
        )));
    }
    if (series.max_degree() as usize) < ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "series truncated at degree {} cannot be read in P^{ambient_dim}",
            series.max_degree()
        )));
    }
    HSeries::from_poly(&series.poly().specialize(degrees), ambient_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::ClassTerm;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    #[test]
    fn principal_series() {
        let e = ClassExpr::from_terms(
            2,
            vec![
                ClassTerm::new(q(3), vec![1, 0], vec![vec![q(3), q(4)]]),
                ClassTerm::new(q(4), vec![0, 1], vec![vec![q(3), q(4)]]),
            ],
        )
        .unwrap();
        let s = to_series(&e, 2);
        assert_eq!(s.to_string(), "3X1 + 4X2 - 9X1^2 - 24X1X2 - 16X2^2");
        assert!(to_series(&ClassExpr::zero(3), 4).poly().is_zero());
    }

    #[test]
    fn h_series_strings() {
        let h = HSeries::new(vec![q(0), q(2), q(18), q(-334), q(3714), q(-35278)], 5);
        assert_eq!(h.to_string(), "2H + 18H^2 - 334H^3 + 3714H^4 - 35278H^5");
        assert_eq!(h.descending_string(), "- 35278H^5 + 3714H^4 - 334H^3 + 18H^2 + 2H");
        assert_eq!(h.bracket_string(), "2[P^4] + 18[P^3] - 334[P^2] + 3714[P^1] - 35278[P^0]");
    }

    #[test]
    fn series_product_truncates() {
        let a = TruncatedSeries::new(Poly::one_plus_linear(&[q(1), q(0)]), 3);
        let b = TruncatedSeries::new(Poly::one_plus_linear(&[q(0), q(1)]).pow(4), 2);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.max_degree(), 2);
        assert_eq!(c.to_string(), "1 + X1 + 4X2 + 4X1X2 + 6X2^2");
    }
}
