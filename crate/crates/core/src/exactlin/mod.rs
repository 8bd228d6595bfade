//! Exact rational linear algebra, multilinear tensors, and a small float path
//! used only for matrix exponentials.

mod float;
mod matrix;
mod rational;
mod subspace;
mod tensor;
pub mod vector;

pub use float::FloatMatrix;
pub use matrix::Matrix;
pub use rational::{int, parse_rational, rat, Rational};
pub use subspace::Subspace;
pub use tensor::Tensor;
pub(crate) use tensor::advance as advance_index;
pub use vector::Vector;
