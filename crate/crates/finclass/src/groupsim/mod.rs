//! Desk-scale verification engine over fully enumerated matrix groups:
//! conjugacy classes, supports, Weil values, regular orbits, factorization
//! counts, and class-square coverage.

mod build;
mod coverage;
mod frobenius;
mod orbits;
mod support;

pub use build::{build_group, GroupKind, GroupSpec, GroupTable};
pub use coverage::{class_square_coverage, coverage_set, CoverageReport};
pub use frobenius::{frobenius_count_direct, frobenius_count_formula_sn};
pub use orbits::{
    build_x2, count_non_su_regular, is_su_regular, su_common_field, t_orbit, verify_scalars,
    SuRegularCount, TOrbit, X2Witness,
};
pub use support::{
    is_regular_semisimple, primary_eigenvalue, support, tensor_fixed_dim, weil_gl_value,
    Eigenvalue, TensorBoundReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error("group order {0} exceeds the enumeration cap {1}")]
    CapExceeded(u64, u64),
    #[error("closure from the generator set gives {0} elements, expected {1}")]
    ClosureMismatch(u64, u64),
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("element is not in the group")]
    NotInGroup,
    #[error("work estimate {0} exceeds the cap {1}")]
    WorkCapExceeded(u64, u64),
    #[error("{0}")]
    BadInput(String),
}
