//! Segre classes of monomial subschemes computed from their Newton regions.
//!
//! A monomial subscheme is described by the exponent vectors of its generators.
//! The push-forward of its Segre class is the formal integral
//!
//! ```text
//!   ∫_N  n! X1⋯Xn da / (1 + a·X)^(n+1)
//! ```
//!
//! over the Newton region `N`, the complement in the nonnegative orthant of
//! the convex hull of the translated orthants `I_k + R≥0^n`. The region is cut
//! into simplices extended along coordinate rays, each of which integrates to
//! a closed-form rational function; the sum is expanded as a power series in
//! the divisor classes `X_i` or specialized to a hyperplane class `H`.
//!
//! Everything symbolic is exact (arbitrary-precision rationals). Numeric
//! quadrature exists only as an independent check.
//!
//! ```
//! use newton_segre::{parse_ideal, compute_segre, SegreOptions};
//! use num_bigint::BigInt;
//!
//! let spec = parse_ideal("x1*x2, x1*x3, x2*x3", None).unwrap();
//! let opts = SegreOptions {
//!     degrees: Some(vec![BigInt::from(1); 3]),
//!     ambient_dim: Some(3),
//!     ..SegreOptions::default()
//! };
//! let out = compute_segre(&spec, &opts).unwrap();
//! assert_eq!(out.specialized.unwrap().to_string(), "3H^2 - 10H^3");
//! ```

pub mod calculus;
pub mod cli;
pub mod decompose;
mod error;
pub mod fixtures;
pub mod ideal;
pub mod linalg;
pub mod oracle;
mod pipeline;
pub mod polyhedron;

pub use calculus::{
    cell_integral, excess, sum_cells, to_series, ClassExpr, ClassTerm, ClosedForm, Excess,
    HSeries, Poly, TruncatedSeries,
};
pub use decompose::{decompose_fan, decompose_staircase, validate_tiling, Cell, CellSet, Engine};
pub use error::{Error, ParseError, Result};
pub use ideal::{minimalize, parse_ideal, ExponentVector, MonomialIdealSpec};
pub use pipeline::{compute_segre, SegreOptions, SegreOutput};
pub use polyhedron::{build_polyhedron, CompactFace, FacetInequality, Membership, NewtonPolyhedron};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
