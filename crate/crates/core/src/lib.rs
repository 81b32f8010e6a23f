//! Exact symbolic spinor L-factors for irreducible GSp(4) representations
//! with split Bessel models, with cross-checks between the underlying tables.

pub mod catalog;
pub mod chars;
pub mod corpus;
pub mod dsl;
pub mod gk;
pub mod poles;
pub mod tables;
pub mod verify;
