//! Closed-form classes of ideal families with known answers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::calculus::{ClassExpr, ClassTerm, Poly};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, ExponentVector, MonomialIdealSpec};
use crate::Rational;

fn q(x: &BigInt) -> Rational {
    Rational::from_integer(x.clone())
}

/// `(Σ i_j X_j) / (1 + Σ i_j X_j)`; zero for the unit ideal.
pub fn principal_class(exponents: &ExponentVector) -> ClassExpr {
    let n = exponents.len();
    let v: Vec<Rational> = exponents.entries().iter().map(q).collect();
    let terms = (0..n)
        .filter(|&j| !v[j].is_zero())
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            ClassTerm::new(v[j].clone(), e, vec![v.clone()])
        })
        .collect();
    ClassExpr::from_terms(n, terms).expect("terms match the exponent length")
}

/// `∏ m_i X_i / (1 + m_i X_i)`.
pub fn complete_intersection_class(m: &[BigInt]) -> Result<ClassExpr> {
    if m.is_empty() || m.iter().any(|x| x <= &BigInt::zero()) {
        return Err(Error::InvalidSpec("multiplicities must be positive".into()));
    }
    let n = m.len();
    let coeff = m.iter().map(q).fold(Rational::one(), |a, b| a * b);
    let denom = (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[i] = q(&m[i]);
            v
        })
        .collect();
    ClassExpr::from_terms(n, vec![ClassTerm::new(coeff, vec![1; n], denom)])
}

/// The vectors `f_j = (1,…,1) − e_j`.
pub fn singularity_family_exponents(n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|j| (0..n).map(|i| u64::from(i != j)).collect())
        .collect()
}

pub fn singularity_family_spec(n: usize) -> MonomialIdealSpec {
    let rows = singularity_family_exponents(n);
    let refs: Vec<&[u64]> = rows.iter().map(Vec::as_slice).collect();
    MonomialIdealSpec::from_rows(&refs)
}

/// `1 − (1 + Σ X_i)^(n−1) / ∏_j (1 + f_j·X)`.
pub fn singularity_family_class(n: usize) -> Result<ClassExpr> {
    if n < 2 {
        return Err(Error::InvalidSpec("the family needs at least 2 variables".into()));
    }
    let ones = vec![Rational::one(); n];
    let power = Poly::one_plus_linear(&ones).pow(n as u32 - 1);
    let denom: Vec<Vec<Rational>> = singularity_family_exponents(n)
        .iter()
        .map(|f| f.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let fraction = ClassExpr::from_fraction(&power, &denom)?;
    let one = ClassExpr::from_terms(n, vec![ClassTerm::new(Rational::one(), vec![0; n], vec![])])?;
    one.sub(&fraction)
}

/// A family with an independent closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Principal(ExponentVector),
    CompleteIntersection(Vec<BigInt>),
    Singularity(usize),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Principal(_) => "principal",
            Family::CompleteIntersection(_) => "complete intersection",
            Family::Singularity(_) => "singularity family",
        }
    }

    pub fn class(&self) -> Result<ClassExpr> {
        match self {
            Family::Principal(e) => Ok(principal_class(e)),
            Family::CompleteIntersection(m) => complete_intersection_class(m),
            Family::Singularity(n) => singularity_family_class(*n),
        }
    }
}

/// Recognize the family of the minimal generating set, if any.
pub fn detect_family(spec: &MonomialIdealSpec) -> Option<Family> {
    if spec.is_unit() {
        return None;
    }
    let min = minimalize(spec);
    let n = min.n();
    let gens = min.generators();
    if gens.len() == 1 {
        return Some(Family::Principal(gens[0].clone()));
    }
    if gens.len() == n {
        let mut m = vec![BigInt::zero(); n];
        let pure = gens.iter().all(|g| {
            let support: Vec<usize> = (0..n).filter(|&i| !g.entries()[i].is_zero()).collect();
            if let [i] = support.as_slice() {
                m[*i] = g.entries()[*i].clone();
                true
            } else {
                false
            }
        });
        if pure && m.iter().all(|x| !x.is_zero()) {
            return Some(Family::CompleteIntersection(m));
        }
        if n >= 2 && min == minimalize(&singularity_family_spec(n)) {
            return Some(Family::Singularity(n));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_examples() {
        assert_eq!(
            principal_class(&ExponentVector::from_u64s(&[3, 4])).to_string(),
            "4X2 / (1 + 3X1 + 4X2) + 3X1 / (1 + 3X1 + 4X2)"
        );
        assert!(principal_class(&ExponentVector::from_u64s(&[0, 0])).is_zero());
        assert_eq!(
            principal_class(&ExponentVector::from_u64s(&[7, 0])).to_string(),
            "7X1 / (1 + 7X1)"
        );
    }

    #[test]
    fn complete_intersection_examples() {
        let c = complete_intersection_class(&[2.into(), 3.into()]).unwrap();
        assert_eq!(c.to_string(), "6X1X2 / (1 + 3X2)(1 + 2X1)");
        assert!(complete_intersection_class(&[0.into()]).is_err());
    }

    #[test]
    fn small_singularity_family_is_a_complete_intersection() {
        let s = singularity_family_class(2).unwrap();
        let ci = complete_intersection_class(&[1.into(), 1.into()]).unwrap();
        assert!(s.identical_to(&ci).unwrap());
        assert!(singularity_family_class(1).is_err());
    }

    #[test]
    fn detection() {
        let p = MonomialIdealSpec::from_rows(&[&[2, 1], &[3, 3]]);
        assert_eq!(detect_family(&p), Some(Family::Principal(ExponentVector::from_u64s(&[2, 1]))));
        let ci = MonomialIdealSpec::from_rows(&[&[2, 0, 0], &[0, 0, 1], &[0, 3, 0]]);
        assert_eq!(
            detect_family(&ci),
            Some(Family::CompleteIntersection(vec![2.into(), 3.into(), 1.into()]))
        );
        assert_eq!(detect_family(&singularity_family_spec(4)), Some(Family::Singularity(4)));
        assert_eq!(detect_family(&MonomialIdealSpec::from_rows(&[&[2, 6], &[7, 0]])), None);
    }
}
