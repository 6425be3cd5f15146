//! Exact-arithmetic workbench for plane mixed discriminants of bivariate
//! Laurent polynomials: sparse resultants, boundary factors and the
//! resultant-of-the-toric-Jacobian identity, all over the integers.

pub mod error;
pub mod lattice;
pub mod poly;
pub mod disc;
pub mod report;
pub mod resultant;

pub use error::{Error, Result};
