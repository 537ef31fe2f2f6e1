//! Numeric integration of `n! X1⋯Xn / (1 + a·X)^(n+1)` over a single cell.
//!
//! The unit cube is mapped onto the cell: the first `k` coordinates go to
//! the simplex through the collapsed-coordinate (Duffy) map, and each
//! extension cone is written as `λ_i = ρ·θ_i/X_i` with `θ` on a standard
//! simplex (again collapsed coordinates) and `ρ = t/(1−t)`. The mapped
//! integrand is smooth on the closed cube, so tensor Gauss–Legendre rules
//! with dyadic refinement converge quickly.

use std::collections::BinaryHeap;
use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use num_traits::{Signed, ToPrimitive};

use crate::decompose::Cell;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureOptions {
    /// Target relative error of the estimate.
    pub tol: f64,
    /// Maximum number of subdivision boxes.
    pub max_boxes: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_boxes: 20_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub boxes: usize,
}

struct Rule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Rule {
    fn new(order: usize) -> Self {
        let gl = GaussLegendre::new(NonZeroUsize::new(order).expect("positive order"));
        let (nodes, weights) = gl
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| ((x + 1.0) / 2.0, w / 2.0))
            .unzip();
        Self { nodes, weights }
    }
}

struct Integrand {
    n: usize,
    k: usize,
    v0: Vec<f64>,
    edges: Vec<Vec<f64>>,
    extensions: Vec<usize>,
    x: Vec<f64>,
    prefactor: f64,
    ext_scale: f64,
}

impl Integrand {
    fn new(cell: &Cell, x: &[f64]) -> Self {
        let n = cell.n();
        let f = |r: &crate::Rational| r.to_f64().expect("finite coordinate");
        let v0: Vec<f64> = cell.simplex()[0].iter().map(f).collect();
        let edges = cell.simplex()[1..]
            .iter()
            .map(|v| v.iter().zip(&v0).map(|(a, b)| f(a) - b).collect())
            .collect();
        let factorial: f64 = (1..=n).map(|i| i as f64).product();
        let prefactor = factorial * x.iter().product::<f64>() * f(&cell.projected_det().abs());
        Self {
            n,
            k: cell.dim(),
            v0,
            edges,
            extensions: cell.extensions().to_vec(),
            x: x.to_vec(),
            prefactor,
            ext_scale: 1.0 / cell.extensions().iter().map(|&w| x[w]).product::<f64>(),
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn eval(&self, u: &[f64]) -> f64 {
        let mut a = self.v0.clone();
        let mut jac = 1.0;
        let mut rest = 1.0;
        for j in 0..self.k {
            let s = u[j] * rest;
            for (ai, ei) in a.iter_mut().zip(&self.edges[j]) {
                *ai += s * ei;
            }
            jac *= rest;
            rest *= 1.0 - u[j];
        }
        let lin = 1.0 + a.iter().zip(&self.x).map(|(ai, xi)| ai * xi).sum::<f64>();
        let m = self.extensions.len();
        if m == 0 {
            return self.prefactor * jac / lin.powi(self.n as i32 + 1);
        }
        // rho·theta_i / X_i with theta on the standard simplex; the
        // extension directions only enter through rho, since sum theta = 1.
        let mut rest = 1.0;
        for &uj in &u[self.k + 1..] {
            jac *= rest;
            rest *= 1.0 - uj;
        }
        let t = u[self.k];
        let rho = t / (1.0 - t);
        jac *= rho.powi(m as i32 - 1) / ((1.0 - t) * (1.0 - t));
        self.prefactor * self.ext_scale * jac / (lin + rho).powi(self.n as i32 + 1)
    }
}

#[derive(Clone, Debug)]
struct Box_ {
    lo: Vec<f64>,
    width: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Box_ {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Box_ {}
impl PartialOrd for Box_ {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Box_ {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn tensor(rule: &Rule, f: &Integrand, lo: &[f64], width: f64) -> f64 {
    let n = lo.len();
    let m = rule.nodes.len();
    let total = m.pow(n as u32);
    let mut u = vec![0.0; n];
    let mut sum = 0.0;
    for mut idx in 0..total {
        let mut w = 1.0;
        for d in 0..n {
            let i = idx % m;
            idx /= m;
            u[d] = lo[d] + width * rule.nodes[i];
            w *= rule.weights[i];
        }
        sum += w * f.eval(&u);
    }
    sum * width.powi(n as i32)
}

fn estimate(lo: Vec<f64>, width: f64, f: &Integrand, low: &Rule, high: &Rule) -> Box_ {
    let value = tensor(high, f, &lo, width);
    let error = (value - tensor(low, f, &lo, width)).abs();
    Box_ {
        lo,
        width,
        value,
        error,
    }
}

/// Integrate over one cell at the positive point `x`, to relative tolerance `tol`.
pub fn quadrature_cell(cell: &Cell, x: &[f64], tol: f64) -> Result<QuadratureResult> {
    quadrature_cell_with(
        cell,
        x,
        &QuadratureOptions {
            tol,
            ..QuadratureOptions::default()
        },
    )
}

pub fn quadrature_cell_with(cell: &Cell, x: &[f64], opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let n = cell.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch("evaluation point length".into()));
    }
    if x.iter().any(|&xi| !(xi > 0.0 && xi.is_finite())) {
        return Err(Error::InvalidSpec("quadrature needs a positive point".into()));
    }
    if cell.is_degenerate() {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            boxes: 0,
        });
    }
    let f = Integrand::new(cell, x);
    let low = Rule::new(6);
    let high = Rule::new(10);
    let mut heap = BinaryHeap::new();
    heap.push(estimate(vec![0.0; n], 1.0, &f, &low, &high));
    let mut boxes = 1;
    loop {
        let value: f64 = heap.iter().map(|b| b.value).sum();
        let error: f64 = heap.iter().map(|b| b.error).sum();
        if error <= opts.tol * value.abs().max(f64::MIN_POSITIVE) {
            return Ok(QuadratureResult {
                value,
                error_estimate: error,
                boxes,
            });
        }
        if boxes + (1 << n) > opts.max_boxes {
            return Err(Error::QuadratureBudget {
                tol: opts.tol,
                estimate: error / value.abs().max(f64::MIN_POSITIVE),
            });
        }
        let worst = heap.pop().expect("heap is nonempty");
        let half = worst.width / 2.0;
        for corner in 0..(1usize << n) {
            let lo = (0..n)
                .map(|d| worst.lo[d] + if corner >> d & 1 == 1 { half } else { 0.0 })
                .collect();
            heap.push(estimate(lo, half, &f, &low, &high));
        }
        boxes += (1 << n) - 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::Engine;
    use crate::Rational;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn strip_matches_closed_form() {
        let c = Cell::new(vec![pt(&[0, 0]), pt(&[2, 6])], vec![1], Engine::Fan, "t").unwrap();
        let r = quadrature_cell(&c, &[0.1, 0.1], 1e-10).unwrap();
        assert!((r.value - 0.2 / 1.8).abs() < 1e-9, "{r:?}");
    }

    #[test]
    fn orthants() {
        let full = Cell::new(vec![pt(&[0, 0, 0])], vec![0, 1, 2], Engine::Fan, "t").unwrap();
        let r = quadrature_cell(&full, &[0.3, 0.1, 0.7], 1e-10).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);
        let shifted = Cell::new(vec![pt(&[1, 2, 3])], vec![0, 1, 2], Engine::Fan, "t").unwrap();
        let r = quadrature_cell(&shifted, &[0.2, 0.2, 0.2], 1e-10).unwrap();
        assert!((r.value - 1.0 / 2.2).abs() < 1e-9);
    }

    #[test]
    fn rejects_nonpositive_points() {
        let c = Cell::new(vec![pt(&[0, 0])], vec![0, 1], Engine::Fan, "t").unwrap();
        assert!(quadrature_cell(&c, &[0.0, 1.0], 1e-6).is_err());
    }
}
