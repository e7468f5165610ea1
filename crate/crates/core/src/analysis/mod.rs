//! Character tables, P-polynomiality, generating sets and generic
//! elements.

mod chartab;
mod express;
mod generic;
mod points;
mod ppoly;

pub use chartab::{character_table, CharacterTable};
pub use express::{express_in_terms_of, minimal_generating_sets};
pub use generic::{
    find_generic_element, CoordinateChange, GenericElement, DEFAULT_MAX_ATTEMPTS, DEFAULT_MAX_COEFF,
};
pub use points::{points_from_generic, variety_points, FALLBACK_SEED};
pub use ppoly::{check_p_polynomial, PPolyFailure, PPolyReport, VariableDiagnostic};
