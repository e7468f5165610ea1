//! Exact rational arithmetic, dense matrices and univariate root machinery.

pub mod fixed;
pub mod interval;
pub mod matrix;
pub mod rational;
pub mod roots;
pub mod unipoly;

pub use fixed::{dyadic_bits, FixedInterval};
pub use interval::Interval;
pub use matrix::QMatrix;
pub use rational::{frac, rat, Rational};
pub use roots::{default_precision, pick_root, real_roots, RealRoot, SturmSequence};
pub use unipoly::UniPoly;
