#![allow(dead_code)]

use newton_segre::{ExponentVector, MonomialIdealSpec, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonzero exponent vector with entries in `0..=max`.
pub fn random_exponent(rng: &mut ChaCha8Rng, n: usize, max: u64) -> Vec<u64> {
    loop {
        let v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        if v.iter().any(|&x| x > 0) {
            return v;
        }
    }
}

/// A random spec with `1..=max_gens` nonzero generators.
pub fn random_spec(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_exp: u64) -> MonomialIdealSpec {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| ExponentVector::from_u64s(&random_exponent(rng, n, max_exp)))
        .collect();
    MonomialIdealSpec::new(n, gens).expect("valid random spec")
}

/// A random point in `(0, 1/5]^n` with denominator 100.
pub fn small_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(1..=20).into(), 100.into()))
        .collect()
}
