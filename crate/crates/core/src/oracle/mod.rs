//! Independent checks: closed forms of special families, numeric
//! quadrature of single cells, and agreement between the two decompositions.

mod families;
mod quadrature;
mod report;

pub use families::{
    complete_intersection_class, detect_family, principal_class, singularity_family_class,
    singularity_family_exponents, singularity_family_spec, Family,
};
pub use quadrature::{quadrature_cell, quadrature_cell_with, QuadratureOptions, QuadratureResult};
pub use report::{cross_check, Check, CheckStatus, CrossCheckOptions, OracleReport};
