//! Double description method over the integers.
//!
//! Computes the extreme rays of a pointed cone `{y : a·y >= 0 for all rows a}`,
//! adding one constraint at a time and combining adjacent rays on opposite
//! sides of each new hyperplane. Adjacency uses the combinatorial test on
//! zero sets.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{inverse, primitive, primitive_int, rank, to_rational_row};

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    /// Indices of processed constraints that vanish on this ray.
    zeros: Vec<bool>,
}

fn eval(row: &[BigInt], y: &[BigInt]) -> BigInt {
    row.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Extreme rays of the cone cut out by `rows`, each as a primitive integer
/// vector, in a deterministic (sorted) order. The cone must be pointed, i.e.
/// the rows must span the ambient space.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let dim = rows.first().map_or(0, Vec::len);
    let m = rows.len();

    // initial basis of `dim` independent rows
    let mut basis: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<crate::Rational>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.push(to_rational_row(r));
        if rank(&trial) > chosen.len() {
            chosen = trial;
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    assert_eq!(basis.len(), dim, "constraint rows must span the space");

    let inv = inverse(&chosen).expect("basis rows are independent");
    let mut processed = vec![false; m];
    for &b in &basis {
        processed[b] = true;
    }
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<crate::Rational> = (0..dim).map(|i| inv[i][j].clone()).collect();
            let coords = primitive(&col);
            let zeros = (0..m)
                .map(|i| processed[i] && eval(&rows[i], &coords).is_zero())
                .collect();
            Ray { coords, zeros }
        })
        .collect();

    for (idx, row) in rows.iter().enumerate() {
        if processed[idx] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| eval(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !values[i].is_negative() {
                let mut r = r.clone();
                if values[i].is_zero() {
                    r.zeros[idx] = true;
                }
                next.push(r);
            }
        }
        for &p in &pos {
            for &q in &neg {
                if !adjacent(&rays, p, q, dim) {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let coords: Vec<BigInt> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(a, b)| a * &vq + b * vp)
                    .collect();
                let coords = primitive_int(&coords);
                let mut zeros: Vec<bool> = rays[p]
                    .zeros
                    .iter()
                    .zip(&rays[q].zeros)
                    .map(|(a, b)| *a && *b)
                    .collect();
                zeros[idx] = true;
                next.push(Ray { coords, zeros });
            }
        }
        processed[idx] = true;
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    out.dedup();
    out
}

fn adjacent(rays: &[Ray], p: usize, q: usize, dim: usize) -> bool {
    let common: Vec<usize> = rays[p]
        .zeros
        .iter()
        .zip(&rays[q].zeros)
        .enumerate()
        .filter(|(_, (a, b))| **a && **b)
        .map(|(i, _)| i)
        .collect();
    if common.len() + 2 < dim {
        return false;
    }
    !rays
        .iter()
        .enumerate()
        .any(|(k, r)| k != p && k != q && common.iter().all(|&i| r.zeros[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn orthant_rays() {
        let rays = extreme_rays(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(rays, vec![v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]);
    }

    #[test]
    fn square_cone() {
        // cone over the square [-1,1]^2 at height 1: x3 ± x1 >= 0, x3 ± x2 >= 0
        let rows = vec![v(&[1, 0, 1]), v(&[-1, 0, 1]), v(&[0, 1, 1]), v(&[0, -1, 1])];
        let rays = extreme_rays(&rows);
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert_eq!(r[2], BigInt::from(1));
            assert_eq!(r[0].abs(), BigInt::from(1));
            assert_eq!(r[1].abs(), BigInt::from(1));
        }
    }

    #[test]
    fn redundant_constraint_is_harmless() {
        let rows = vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert_eq!(extreme_rays(&rows), vec![v(&[0, 1]), v(&[1, 0])]);
    }
}
