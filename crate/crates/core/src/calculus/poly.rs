//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A polynomial in `n` variables, keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Graded order: total degree first, then larger leading exponents first.
pub(crate) fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    pub fn monomial(n: usize, exp: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exp.len(), n, "exponent length");
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// `X_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, e, Rational::one())
    }

    /// The linear form `1 + v·X`.
    pub fn one_plus_linear(v: &[Rational]) -> Self {
        let n = v.len();
        let mut p = Self::one(n);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Terms in graded order (lowest degree first).
    pub fn graded_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_cmp(a.0, b.0));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Product with all terms of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            if da > max_degree {
                continue;
            }
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da + db > max_degree {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }

    /// Substitute `X_i = d_i·H`, giving a polynomial in one variable.
    pub fn specialize(&self, degrees: &[Rational]) -> Self {
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            for (&k, d) in e.iter().zip(degrees) {
                coeff *= num_traits::pow(d.clone(), k as usize);
            }
            out.add_term(vec![e.iter().sum()], coeff);
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().max_by(|a, b| graded_cmp(a.0, b.0))
    }

    /// Exact quotient `self / divisor` when the division leaves no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (dl_exp, dl_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        while !rem.is_zero() {
            let (re, rc) = rem.leading_term()?;
            if re.iter().zip(&dl_exp).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&dl_exp).map(|(a, b)| a - b).collect();
            let qc = &rc / &dl_c;
            let t = Self::monomial(self.n, qe, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Render with the given variable names, lowest degree first.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.graded_terms().into_iter().enumerate() {
            let mono = monomial_string(e, names);
            push_signed_term(&mut s, c, &mono, i == 0);
        }
        s
    }

    /// Render a univariate polynomial from the highest degree down.
    pub fn render_descending(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let names = [name.to_string()];
        let mut terms = self.graded_terms();
        terms.reverse();
        let mut s = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mono = monomial_string(e, &names);
            if i == 0 && c.is_negative() {
                s.push_str("- ");
                s.push_str(&coeff_times(&-c, &mono));
            } else {
                push_signed_term(&mut s, c, &mono, i == 0);
            }
        }
        s
    }

    pub fn leading_term(&self) -> Option<(Vec<u32>, Rational)> {
        self.leading().map(|(e, c)| (e.clone(), c.clone()))
    }

    pub(crate) fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "polynomials in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

pub(crate) fn monomial_string(e: &[u32], names: &[String]) -> String {
    let mut s = String::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => s.push_str(&names[i]),
            _ => {
                let _ = write!(s, "{}^{k}", names[i]);
            }
        }
    }
    s
}

fn coeff_string(c: &Rational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("({c})")
    }
}

/// `c·mono` with `c` positive.
pub(crate) fn coeff_times(c: &Rational, mono: &str) -> String {
    if mono.is_empty() {
        coeff_string(c)
    } else if c.is_one() {
        mono.to_string()
    } else {
        format!("{}{mono}", coeff_string(c))
    }
}

pub(crate) fn push_signed_term(s: &mut String, c: &Rational, mono: &str, first: bool) {
    let body = coeff_times(&c.abs(), mono);
    match (first, c.is_negative()) {
        (true, false) => s.push_str(&body),
        (true, true) => {
            s.push('-');
            s.push_str(&body);
        }
        (false, false) => {
            s.push_str(" + ");
            s.push_str(&body);
        }
        (false, true) => {
            s.push_str(" - ");
            s.push_str(&body);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}
