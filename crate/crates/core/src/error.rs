use thiserror::Error;

/// Everything that can go wrong while building or checking a structure.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degree {0} is outside the represented range")]
    DegreeOutOfRange(i32),
    #[error("argument {index} has degree {degree}, expected 0 or 1")]
    BadGrading { index: usize, degree: i32 },
    #[error("tensor is not antisymmetric: {0}")]
    NotAntisymmetric(String),
    #[error("bracket violates the Jacobi identity: {0}")]
    NotJacobi(String),
    #[error("ternary bracket is nonzero, structure is not strict")]
    NotStrict,
    #[error("maps do not commute with the differentials")]
    NotChainMap,
    #[error("not a representation up to homotopy: {0}")]
    InvalidRep(String),
    #[error("image of {0} does not lie in the kernel of delta")]
    ImageNotInKernel(String),
    #[error("not a strict morphism: {0}")]
    NotStrictMorphism(String),
    #[error("not a Lie 2-algebra morphism: {0}")]
    NotAMorphism(String),
    #[error("arrows are not composable: {0}")]
    NotComposable(String),
    #[error("not a strict morphism of group crossed modules: {0}")]
    NotStrictGroupMorphism(String),
    #[error("subspace is not central: {0}")]
    NotCentral(String),
    #[error("group element is not invertible: {0}")]
    NotInvertible(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}
