//! Classes as sums of terms `c·X^α / ∏ (1 + v·X)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::poly::{monomial_string, push_signed_term, Poly};
use crate::error::{Error, Result};
use crate::Rational;

/// `coeff · X^numer / ∏_{v ∈ denom} (1 + v·X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassTerm {
    pub coeff: Rational,
    pub numer: Vec<u32>,
    /// Sorted; zero vectors are removed on normalization.
    pub denom: Vec<Vec<Rational>>,
}

impl ClassTerm {
    pub fn new(coeff: Rational, numer: Vec<u32>, denom: Vec<Vec<Rational>>) -> Self {
        let mut denom: Vec<Vec<Rational>> = denom.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        denom.sort();
        Self { coeff, numer, denom }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Rational::zero(), vec![0; n], Vec::new())
    }

    pub fn n(&self) -> usize {
        self.numer.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let mut den = Rational::one();
        for v in &self.denom {
            den *= Rational::one() + v.iter().zip(point).map(|(a, x)| a * x).sum::<Rational>();
        }
        if den.is_zero() {
            return Err(Error::VanishingDenominator);
        }
        let num = self
            .numer
            .iter()
            .zip(point)
            .fold(self.coeff.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize));
        Ok(num / den)
    }

    /// Substitute `X_i = d_i·H`.
    pub fn specialize(&self, degrees: &[Rational]) -> ClassTerm {
        let coeff = self
            .numer
            .iter()
            .zip(degrees)
            .fold(self.coeff.clone(), |acc, (&k, d)| acc * num_traits::pow(d.clone(), k as usize));
        let denom = self
            .denom
            .iter()
            .map(|v| vec![v.iter().zip(degrees).map(|(a, d)| a * d).sum()])
            .collect();
        ClassTerm::new(coeff, vec![self.numer.iter().sum()], denom)
    }

    pub fn render(&self, names: &[String]) -> String {
        let mono = monomial_string(&self.numer, names);
        let mut s = String::new();
        push_signed_term(&mut s, &self.coeff, &mono, true);
        if !self.denom.is_empty() {
            s.push_str(" / ");
            s.push_str(&render_factors(&group_factors(&self.denom), names));
        }
        s
    }
}

/// Collect repeated factors into `(vector, multiplicity)` pairs, in order.
pub(crate) fn group_factors(denom: &[Vec<Rational>]) -> Vec<(Vec<Rational>, u32)> {
    let mut map: BTreeMap<Vec<Rational>, u32> = BTreeMap::new();
    for v in denom {
        *map.entry(v.clone()).or_insert(0) += 1;
    }
    map.into_iter().collect()
}

pub(crate) fn factor_string(v: &[Rational], names: &[String]) -> String {
    let mut s = "1".to_string();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = vec![0; v.len()];
        e[i] = 1;
        push_signed_term(&mut s, c, &monomial_string(&e, names), false);
    }
    s
}

pub(crate) fn render_factors(factors: &[(Vec<Rational>, u32)], names: &[String]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .map(|(v, k)| {
            let f = format!("({})", factor_string(v, names));
            if *k == 1 {
                f
            } else {
                format!("{f}^{k}")
            }
        })
        .collect();
    parts.join("")
}

/// A normalized sum of class terms in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassExpr {
    n: usize,
    terms: Vec<ClassTerm>,
}

/// A fraction `numer / ∏ (1 + v·X)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub numer: Poly,
    pub den: Vec<(Vec<Rational>, u32)>,
}

impl Fraction {
    fn merge(a: Fraction, b: Fraction) -> Fraction {
        let mut lcm: BTreeMap<Vec<Rational>, u32> = a.den.iter().cloned().collect();
        for (v, k) in &b.den {
            let e = lcm.entry(v.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
        let lift = |f: &Fraction| {
            let have: BTreeMap<&Vec<Rational>, u32> = f.den.iter().map(|(v, k)| (v, *k)).collect();
            let mut p = f.numer.clone();
            for (v, k) in &lcm {
                let missing = k - have.get(v).copied().unwrap_or(0);
                for _ in 0..missing {
                    p = &p * &Poly::one_plus_linear(v);
                }
            }
            p
        };
        let numer = &lift(&a) + &lift(&b);
        Fraction {
            numer,
            den: lcm.into_iter().collect(),
        }
    }

    /// Divide out denominator factors that divide the numerator.
    pub fn cancel(mut self) -> Fraction {
        if self.numer.is_zero() {
            self.den.clear();
            return self;
        }
        let mut den = Vec::new();
        for (v, k) in std::mem::take(&mut self.den) {
            let f = Poly::one_plus_linear(&v);
            let mut left = k;
            while left > 0 {
                match self.numer.exact_div(&f) {
                    Some(q) => {
                        self.numer = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.push((v, left));
            }
        }
        self.den = den;
        self
    }

    pub fn denominator(&self) -> Poly {
        let n = self.numer.n();
        self.den
            .iter()
            .fold(Poly::one(n), |acc, (v, k)| &acc * &Poly::one_plus_linear(v).pow(*k))
    }
}

impl ClassExpr {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Vec::new() }
    }

    pub fn from_terms(n: usize, terms: Vec<ClassTerm>) -> Result<Self> {
        if terms.iter().any(|t| t.n() != n || t.denom.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch("class term in wrong number of variables".into()));
        }
        Ok(Self::normalized(n, terms))
    }

    /// `numer / ∏ (1 + v·X)` split into monomial terms.
    pub fn from_fraction(numer: &Poly, denom: &[Vec<Rational>]) -> Result<Self> {
        let n = numer.n();
        let terms = numer
            .terms()
            .map(|(e, c)| ClassTerm::new(c.clone(), e.clone(), denom.to_vec()))
            .collect();
        Self::from_terms(n, terms)
    }

    fn normalized(n: usize, terms: Vec<ClassTerm>) -> Self {
        let mut map: BTreeMap<(Vec<u32>, Vec<Vec<Rational>>), Rational> = BTreeMap::new();
        for t in terms {
            let t = ClassTerm::new(t.coeff, t.numer, t.denom);
            *map.entry((t.numer, t.denom)).or_insert_with(Rational::zero) += t.coeff;
        }
        let terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((numer, denom), coeff)| ClassTerm { coeff, numer, denom })
            .collect();
        Self { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[ClassTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "classes in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::normalized(
            self.n,
            self.terms.iter().chain(&other.terms).cloned().collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(
            self.n,
            self.terms
                .iter()
                .map(|t| ClassTerm::new(&t.coeff * c, t.numer.clone(), t.denom.clone()))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                terms.push(ClassTerm::new(
                    &a.coeff * &b.coeff,
                    a.numer.iter().zip(&b.numer).map(|(x, y)| x + y).collect(),
                    a.denom.iter().chain(&b.denom).cloned().collect(),
                ));
            }
        }
        Ok(Self::normalized(self.n, terms))
    }

    /// Place the class in `n + extra` variables, the new ones last.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut numer = t.numer.clone();
                numer.resize(self.n + extra, 0);
                let denom = t
                    .denom
                    .iter()
                    .map(|v| {
                        let mut v = v.clone();
                        v.resize(self.n + extra, Rational::zero());
                        v
                    })
                    .collect();
                ClassTerm::new(t.coeff.clone(), numer, denom)
            })
            .collect();
        Self::normalized(self.n + extra, terms)
    }

    /// Relabel variables: variable `i` becomes variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        let move_vec = |v: &[Rational]| {
            let mut out = vec![Rational::zero(); v.len()];
            for (i, x) in v.iter().enumerate() {
                out[perm[i]] = x.clone();
            }
            out
        };
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut numer = vec![0; self.n];
                for (i, &k) in t.numer.iter().enumerate() {
                    numer[perm[i]] = k;
                }
                ClassTerm::new(t.coeff.clone(), numer, t.denom.iter().map(|v| move_vec(v)).collect())
            })
            .collect();
        Ok(Self::normalized(self.n, terms))
    }

    pub fn evaluate_exact(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch("evaluation point length".into()));
        }
        self.terms.iter().map(|t| t.evaluate(point)).sum()
    }

    /// Substitute `X_i = d_i·H`, giving a class in one variable.
    pub fn specialize(&self, degrees: &[Rational]) -> Result<Self> {
        if degrees.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} degrees for {} variables",
                degrees.len(),
                self.n
            )));
        }
        Ok(Self::normalized(
            1,
            self.terms.iter().map(|t| t.specialize(degrees)).collect(),
        ))
    }

    /// The sum over the least common denominator, without cancellation.
    pub fn to_fraction(&self) -> Fraction {
        let mut parts: Vec<Fraction> = self
            .terms
            .iter()
            .map(|t| Fraction {
                numer: Poly::monomial(self.n, t.numer.clone(), t.coeff.clone()),
                den: group_factors(&t.denom),
            })
            .collect();
        if parts.is_empty() {
            return Fraction {
                numer: Poly::zero(self.n),
                den: Vec::new(),
            };
        }
        // pairwise merging keeps the intermediate numerators small
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len().div_ceil(2));
            let mut it = parts.into_iter();
            while let Some(a) = it.next() {
                next.push(match it.next() {
                    Some(b) => Fraction::merge(a, b),
                    None => a,
                });
            }
            parts = next;
        }
        parts.pop().expect("nonempty")
    }

    /// Exact equality as rational functions: the difference has a zero
    /// numerator over the common denominator.
    pub fn identical_to(&self, other: &Self) -> Result<bool> {
        Ok(self.sub(other)?.to_fraction().numer.is_zero())
    }

    /// Compare exact values at `count` random positive rational points.
    pub fn agrees_at_random_points(&self, other: &Self, count: usize, seed: u64) -> Result<bool> {
        self.check(other)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let x = random_point(&mut rng, self.n);
            if self.evaluate_exact(&x)? != other.evaluate_exact(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Both the identity test and the random-point test.
    pub fn certify_equal(&self, other: &Self, seed: u64) -> Result<bool> {
        Ok(self.identical_to(other)? && self.agrees_at_random_points(other, 20, seed)?)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let mono = monomial_string(&t.numer, names);
            let mut piece = String::new();
            push_signed_term(&mut piece, &t.coeff, &mono, i == 0);
            s.push_str(&piece);
            if !t.denom.is_empty() {
                s.push_str(" / ");
                s.push_str(&render_factors(&group_factors(&t.denom), names));
            }
        }
        s
    }
}

pub(crate) fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(1..=9i64).into(), rng.gen_range(1..=9i64).into()))
        .collect()
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["H".into()]
    } else {
        (1..=n).map(|i| format!("X{i}")).collect()
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.n)))
    }
}

impl fmt::Display for ClassTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.n())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| q(a)).collect()
    }

    #[test]
    fn normalization_merges_and_drops() {
        let t = ClassTerm::new(q(2), vec![1, 0], vec![v(&[2, 6]), v(&[0, 0])]);
        assert_eq!(t.denom, vec![v(&[2, 6])]);
        let e = ClassExpr::from_terms(2, vec![t.clone(), t.clone()]).unwrap();
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.terms()[0].coeff, q(4));
        assert!(e.sub(&e).unwrap().is_zero());
        assert_eq!(t.to_string(), "2X1 / (1 + 2X1 + 6X2)");
    }

    #[test]
    fn principal_identity() {
        // 3X1/(1+3X1+4X2) + 4X2/(1+3X1+4X2) equals the fraction form
        let a = ClassExpr::from_terms(
            2,
            vec![
                ClassTerm::new(q(3), vec![1, 0], vec![v(&[3, 4])]),
                ClassTerm::new(q(4), vec![0, 1], vec![v(&[3, 4])]),
            ],
        )
        .unwrap();
        let num = &Poly::monomial(2, vec![1, 0], q(3)) + &Poly::monomial(2, vec![0, 1], q(4));
        let b = ClassExpr::from_fraction(&num, &[v(&[3, 4])]).unwrap();
        assert!(a.certify_equal(&b, 1).unwrap());
        assert_eq!(a.evaluate_exact(&[q(1), q(1)]).unwrap(), Rational::new(7.into(), 8.into()));
    }

    #[test]
    fn identity_detects_nontrivial_equalities_and_differences() {
        // X1/(1+X1) = 1 - 1/(1+X1)
        let lhs = ClassExpr::from_terms(1, vec![ClassTerm::new(q(1), vec![1], vec![v(&[1])])]).unwrap();
        let rhs = ClassExpr::from_terms(
            1,
            vec![
                ClassTerm::new(q(1), vec![0], vec![]),
                ClassTerm::new(q(-1), vec![0], vec![v(&[1])]),
            ],
        )
        .unwrap();
        assert!(lhs.identical_to(&rhs).unwrap());
        let other = ClassExpr::from_terms(1, vec![ClassTerm::new(q(1), vec![1], vec![v(&[2])])]).unwrap();
        assert!(!lhs.identical_to(&other).unwrap());
        assert!(!lhs.agrees_at_random_points(&other, 5, 3).unwrap());
    }

    #[test]
    fn fraction_cancellation() {
        // 2H/(1+8H) + 2H/(1+8H) -> cancels nothing; (1+8H)/(1+8H) -> 1
        let e = ClassExpr::from_terms(
            1,
            vec![
                ClassTerm::new(q(1), vec![0], vec![v(&[8])]),
                ClassTerm::new(q(8), vec![1], vec![v(&[8])]),
            ],
        )
        .unwrap();
        let f = e.to_fraction().cancel();
        assert!(f.den.is_empty());
        assert_eq!(f.numer, Poly::one(1));
    }
}
