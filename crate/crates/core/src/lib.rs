pub mod analysis;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod fglm;
pub mod polyring;
pub mod scheme;
pub mod structure_ideal;

pub use error::{Error, Result};
