//! Multivariate polynomials, monomial orders and reduction.

mod groebner;
mod monomial;
mod mpoly;
mod order;

pub use groebner::{
    is_groebner, normal_form, s_polynomial, GroebnerCheck, PolyBasis, SPairWitness,
};
pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use order::{MonomialOrder, OrderKind};
