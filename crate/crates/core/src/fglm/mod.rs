//! Change of ordering by linear algebra, triangular solving and the
//! eigenvalue cross-check.

mod convert;
mod echelon;
mod quotient;
mod solve;

pub use convert::{fglm, fglm_convert, ReducedGB};
pub use quotient::{krylov_minpoly, QuotientAlgebra};
pub use solve::{
    moller_stetter_check, pairwise_distinct, solve_triangular, VarietyPoint, CERTIFICATION_BITS,
};
