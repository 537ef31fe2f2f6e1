//! Reference instances with hand-checked expected values.

use crate::ideal::MonomialIdealSpec;

/// Expected output for one reference ideal.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub ideal: &'static str,
    pub degrees: &'static [i64],
    pub ambient_dim: usize,
    /// Coefficients of `H^0 … H^N`.
    pub series: &'static [i64],
    /// Ascending numerator coefficients of the closed form in `H`.
    pub closed_numerator: &'static [i64],
    /// Denominator factors `1 + cH`, as `(c, multiplicity)`.
    pub closed_denominator: &'static [(i64, u32)],
    /// Specialized per-cell terms as `(coeff, H power, [c_i of 1 + c_i H])`.
    pub cell_terms: &'static [(i64, u32, &'static [i64])],
}

impl Fixture {
    pub fn spec(&self) -> MonomialIdealSpec {
        crate::ideal::parse_ideal(self.ideal, None).expect("fixture ideal parses")
    }
}

pub const PLANE: Fixture = Fixture {
    name: "plane",
    ideal: "x1^2*x2^6, x1^3*x2^4, x1^4*x2^3, x1^5*x2, x1^7",
    degrees: &[1, 1],
    ambient_dim: 5,
    series: &[0, 2, 18, -334, 3714, -35278],
    closed_numerator: &[0, 2, 60, 336],
    closed_denominator: &[(6, 1), (7, 1), (8, 1)],
    cell_terms: &[(2, 1, &[8]), (10, 2, &[8, 7]), (17, 2, &[7, 6]), (7, 2, &[6, 7])],
};

pub const THREELINES: Fixture = Fixture {
    name: "threelines",
    ideal: "x1*x2, x1*x3, x2*x3",
    degrees: &[1, 1, 1],
    ambient_dim: 3,
    series: &[0, 0, 3, -10],
    closed_numerator: &[0, 0, 3, 8],
    closed_denominator: &[(2, 3)],
    cell_terms: &[(1, 2, &[2, 2]), (1, 2, &[2, 2]), (1, 2, &[2, 2]), (2, 3, &[2, 2, 2])],
};

/// The scheme `(x1^2, x1*x2, x2^2)` in the plane: one triangle.
pub const FATPOINT: Fixture = Fixture {
    name: "fatpoint",
    ideal: "x1^2, x1*x2, x2^2",
    degrees: &[1, 1],
    ambient_dim: 2,
    series: &[0, 0, 4],
    closed_numerator: &[0, 0, 4],
    closed_denominator: &[(2, 2)],
    cell_terms: &[(4, 2, &[2, 2])],
};

pub const ALL: [&Fixture; 3] = [&PLANE, &THREELINES, &FATPOINT];
