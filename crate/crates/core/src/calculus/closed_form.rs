//! Closed forms `numerator / ∏ (1 + v·X)^k` with common factors divided out.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::expr::{default_names, render_factors, ClassExpr, Fraction};
use super::poly::Poly;
use crate::Rational;

/// Over one variable the cancellation is complete; over several it removes
/// every denominator factor that divides the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub numerator: Poly,
    /// Distinct factors `1 + v·X` with multiplicities, sorted by `v`.
    pub den_factors: Vec<(Vec<Rational>, u32)>,
}

pub fn closed_form(expr: &ClassExpr) -> ClosedForm {
    let Fraction { numer, den } = expr.to_fraction().cancel();
    ClosedForm {
        numerator: numer,
        den_factors: den,
    }
}

impl ClosedForm {
    pub fn n(&self) -> usize {
        self.numerator.n()
    }

    /// `(c, k, q)` with numerator `c·H^k·q(H)`, `q(0) > 0` and `q` having
    /// coprime integer coefficients. Univariate only.
    pub fn numerator_factors(&self) -> Option<(Rational, u32, Poly)> {
        if self.n() != 1 || self.numerator.is_zero() {
            return None;
        }
        let k = self.numerator.min_degree()?;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in self.numerator.terms() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.numerator.coeff(&[k]).is_negative() {
            content = -content;
        }
        let mut q = Poly::zero(1);
        for (e, c) in self.numerator.terms() {
            q = &q + &Poly::monomial(1, vec![e[0] - k], c / &content);
        }
        Some((content, k, q))
    }

    pub fn numerator_string(&self, names: &[String]) -> String {
        if let Some((c, k, q)) = self.numerator_factors() {
            if !c.is_one() && q.len() > 1 {
                let lead = Poly::monomial(1, vec![k], c).render(names);
                return format!("{lead}({})", q.render(names));
            }
        }
        self.numerator.render(names)
    }

    pub fn denominator_string(&self, names: &[String]) -> String {
        render_factors(&self.den_factors, names)
    }

    pub fn render(&self, names: &[String]) -> String {
        let num = self.numerator_string(names);
        if self.den_factors.is_empty() {
            return num;
        }
        let factored = self.numerator_factors().is_some_and(|(c, _, q)| !c.is_one() && q.len() > 1);
        let num = if self.numerator.len() > 1 && !factored {
            format!("({num})")
        } else {
            num
        };
        let den = self.denominator_string(names);
        let den = if self.den_factors.len() > 1 { format!("({den})") } else { den };
        format!("{num} / {den}")
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.n())))
    }
}
