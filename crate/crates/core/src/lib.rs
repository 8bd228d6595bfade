//! Exact computations with Lie 2-algebras, crossed modules of Lie algebras and
//! Lie groups, 2-term representations up to homotopy, butterflies and their
//! strictification, and the omni-Lie algebra.
//!
//! Every structural identity is checked on basis tuples (or seeded random
//! samples for group-level statements) over exact rationals. The only float
//! code is the matrix exponential bridge in [`group2::exp`].

pub mod butterfly;
pub mod error;
pub mod exactlin;
pub mod gradedend;
pub mod group2;
pub mod json;
pub mod lie2;
pub mod omni;
pub mod rephomotopy;
pub mod report;
pub mod sample;

pub use error::{Error, Result};
pub use exactlin::{int, rat, Matrix, Rational, Tensor, Vector};
pub use report::Report;
