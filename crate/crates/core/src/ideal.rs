//! Monomial ideal input: parsing, validation and canonical form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::polyhedron::build_polyhedron;
use crate::Rational;

/// Exponents `(i_1, …, i_n)` of one monomial generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector(Vec<BigInt>);

impl ExponentVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpec("exponent vector has no entries".into()));
        }
        if entries.iter().any(Signed::is_negative) {
            return Err(Error::InvalidSpec(format!(
                "negative exponent in {}",
                ExponentVector(entries)
            )));
        }
        Ok(Self(entries))
    }

    /// Convenience constructor for small literal exponents.
    pub fn from_u64s(entries: &[u64]) -> Self {
        Self(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    /// Monomial notation, `x1^2*x2^6`; the empty product prints as `1`.
    pub fn monomial_string(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| {
                if *e == BigInt::from(1) {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A monomial ideal in `n` variables given by its generators' exponents.
///
/// Generators are kept sorted and free of duplicates, so two specs describing
/// the same generator set compare equal regardless of input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdealSpec {
    n: usize,
    generators: Vec<ExponentVector>,
    labels: Option<Vec<String>>,
}

impl MonomialIdealSpec {
    pub fn new(n: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("variable count must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidSpec("at least one generator is required".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "generator {g} has {} entries, expected {n}",
                g.len()
            )));
        }
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        Ok(Self {
            n,
            generators,
            labels: None,
        })
    }

    /// Build from small literal exponent rows; panics on ragged input.
    pub fn from_rows(rows: &[&[u64]]) -> Self {
        let n = rows.first().map_or(0, |r| r.len());
        Self::new(n, rows.iter().map(|r| ExponentVector::from_u64s(r)).collect())
            .expect("literal rows must form a valid spec")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} variables",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of variable `i` (0-based).
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("X{}", i + 1),
        }
    }

    /// The ideal contains 1, so the subscheme is empty.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(ExponentVector::is_zero)
    }

    /// Relabel variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut e = vec![BigInt::zero(); self.n];
                for (i, x) in g.entries().iter().enumerate() {
                    e[perm[i]] = x.clone();
                }
                ExponentVector(e)
            })
            .collect();
        Self::new(self.n, gens)
    }

    /// Comma-separated monomials in the input grammar; re-parses to `self`.
    pub fn to_ideal_string(&self) -> String {
        self.generators
            .iter()
            .map(ExponentVector::monomial_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

enum Term {
    Monomial(Vec<(usize, BigInt)>),
    Row(Vec<BigInt>),
    One,
}

fn parse_int(tok: &str, whole: &str) -> std::result::Result<BigInt, ParseError> {
    if let Some(rest) = tok.strip_prefix('-') {
        if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(ParseError::NegativeExponent(whole.to_string()));
        }
    }
    if tok.is_empty() || !tok.chars().all(|c| c.is_ascii_digit()) {
        return Err(ParseError::MalformedToken(whole.to_string()));
    }
    Ok(tok.parse().expect("digits parse as an integer"))
}

fn parse_monomial(text: &str) -> std::result::Result<Term, ParseError> {
    if text == "1" {
        return Ok(Term::One);
    }
    let mut factors = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let body = factor
            .strip_prefix('x')
            .or_else(|| factor.strip_prefix('X'))
            .ok_or_else(|| ParseError::MalformedToken(text.to_string()))?;
        let (index, exp) = match body.split_once('^') {
            Some((i, e)) => (i, parse_int(e.trim(), text)?),
            None => (body, BigInt::from(1)),
        };
        let index = parse_int(index.trim(), text)?;
        let index: usize = index
            .try_into()
            .map_err(|_| ParseError::MalformedToken(text.to_string()))?;
        if index == 0 {
            return Err(ParseError::ZeroVariableIndex(text.to_string()));
        }
        factors.push((index, exp));
    }
    Ok(Term::Monomial(factors))
}

/// Parse an ideal written as monomials (`x1^2*x2^6, x1^7`) or as integer rows
/// (`2 6, 7 0`, one exponent vector per row).
///
/// Terms are separated by commas, semicolons, slashes or newlines; monomials
/// may also be separated by whitespace. A bare `1` is the unit monomial when
/// the input contains monomials, and the one-entry row `(1)` otherwise.
/// Without `n`, the variable count is the largest variable index or row length.
pub fn parse_ideal(text: &str, n: Option<usize>) -> std::result::Result<MonomialIdealSpec, ParseError> {
    let mut terms = Vec::new();
    for chunk in text.split([',', ';', '/', '\n']) {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        if chunk.contains(['x', 'X']) {
            // glue `x1 * x2` back together before splitting on whitespace
            let glued = chunk
                .split('*')
                .map(str::trim)
                .collect::<Vec<_>>()
                .join("*");
            for mono in glued.split_whitespace() {
                terms.push(parse_monomial(mono)?);
            }
        } else if chunk == "1" {
            terms.push(Term::One);
        } else {
            let row = chunk
                .split_whitespace()
                .map(|t| parse_int(t, chunk))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            terms.push(Term::Row(row));
        }
    }
    if terms.is_empty() {
        return Err(ParseError::Empty);
    }
    let has_monomials = terms.iter().any(|t| matches!(t, Term::Monomial(_)));
    if !has_monomials {
        // a lone `1` in row mode is the row (1)
        for t in &mut terms {
            if matches!(t, Term::One) {
                *t = Term::Row(vec![BigInt::from(1)]);
            }
        }
    }

    let mut row_len: Option<usize> = None;
    let mut max_index = 0usize;
    for (r, t) in terms.iter().enumerate() {
        match t {
            Term::Row(row) => match row_len {
                None => row_len = Some(row.len()),
                Some(l) if l != row.len() => {
                    return Err(ParseError::InconsistentRowLength {
                        row: r + 1,
                        expected: l,
                        found: row.len(),
                    })
                }
                _ => {}
            },
            Term::Monomial(f) => {
                max_index = max_index.max(f.iter().map(|(i, _)| *i).max().unwrap_or(0));
            }
            Term::One => {}
        }
    }
    let width = match n {
        Some(n) => {
            if max_index > n {
                return Err(ParseError::VariableOutOfRange { index: max_index, n });
            }
            if let Some(l) = row_len {
                if l != n {
                    return Err(ParseError::InconsistentRowLength {
                        row: 1,
                        expected: n,
                        found: l,
                    });
                }
            }
            n
        }
        None => match row_len {
            Some(l) if has_monomials && max_index > l => {
                return Err(ParseError::VariableOutOfRange { index: max_index, n: l })
            }
            Some(l) => l,
            None => max_index.max(1),
        },
    };

    let generators = terms
        .into_iter()
        .map(|t| match t {
            Term::Row(row) => ExponentVector(row),
            Term::One => ExponentVector(vec![BigInt::zero(); width]),
            Term::Monomial(factors) => {
                let mut e = vec![BigInt::zero(); width];
                for (i, x) in factors {
                    e[i - 1] += x;
                }
                ExponentVector(e)
            }
        })
        .collect();
    Ok(MonomialIdealSpec::new(width, generators).expect("parsed generators are well-formed"))
}

/// Keep only the generators that are vertices of the Newton polyhedron.
///
/// Dropped generators lie inside the convex hull of the other translated
/// orthants, so the Newton region is unchanged. A unit ideal is returned as is.
pub fn minimalize(spec: &MonomialIdealSpec) -> MonomialIdealSpec {
    if spec.is_unit() {
        return spec.clone();
    }
    let poly = build_polyhedron(spec);
    MonomialIdealSpec {
        n: spec.n,
        generators: poly.vertices().to_vec(),
        labels: spec.labels.clone(),
    }
}
