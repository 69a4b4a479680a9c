use std::fmt;

use num_complex::Complex64;

/// Coarse failure category. Front ends map these to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input: files, formats, dimensions, empty argument lists.
    Input,
    /// The request falls outside the mathematical domain of the operation
    /// (singular matrix, excluded evaluation point, insufficient smoothness).
    Domain,
    /// A numerical procedure broke down (iteration cap, singular system).
    Numerical,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    NonSquare { rows: usize, cols: usize },
    NonFinite { row: usize, col: usize },
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    Parse { message: String },
    EmptyInput { what: &'static str },
    Domain { message: String },
    /// A derivative of higher order than the function carries was requested.
    InsufficientOrder { required: usize, available: usize },
    /// Sylvester system T_ii X - X T_jj = C is singular: the two triangles
    /// share the named eigenvalue pair.
    SingularPair { left: Complex64, right: Complex64 },
    NearSingular { at: Complex64, context: &'static str },
    NoConvergence { what: &'static str, iterations: usize },
    NotDiagonalizable { representative: Complex64, exponent_bound: usize },
    /// Equal nodes must be stored adjacently in a divided-difference node list.
    InadmissibleNodes,
    DiscsOverlap { first: usize, second: usize },
    ImaginaryAxisEigenvalue { eigenvalue: Complex64 },
    UncoveredEigenvalue { eigenvalue: Complex64 },
    EigenvalueOnQuadratureNode { eigenvalue: Complex64 },
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NonSquare { .. }
            | Error::NonFinite { .. }
            | Error::ShapeMismatch { .. }
            | Error::Parse { .. }
            | Error::EmptyInput { .. } => ErrorClass::Input,
            Error::Domain { .. }
            | Error::InsufficientOrder { .. }
            | Error::NearSingular { .. }
            | Error::NotDiagonalizable { .. }
            | Error::InadmissibleNodes
            | Error::DiscsOverlap { .. }
            | Error::ImaginaryAxisEigenvalue { .. }
            | Error::UncoveredEigenvalue { .. } => ErrorClass::Domain,
            Error::SingularPair { .. }
            | Error::NoConvergence { .. }
            | Error::EigenvalueOnQuadratureNode { .. } => ErrorClass::Numerical,
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Error::Parse { message: message.into() }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain { message: message.into() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::NonFinite { row, col } => {
                write!(f, "non-finite entry at ({row}, {col})")
            }
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::Parse { message } => write!(f, "parse error: {message}"),
            Error::EmptyInput { what } => write!(f, "empty input: {what}"),
            Error::Domain { message } => write!(f, "domain error: {message}"),
            Error::InsufficientOrder { required, available } => write!(
                f,
                "function carries derivatives up to order {available}, order {required} required"
            ),
            Error::SingularPair { left, right } => write!(
                f,
                "singular Sylvester system: eigenvalue {left} of the left triangle \
                 coincides with eigenvalue {right} of the right triangle"
            ),
            Error::NearSingular { at, context } => {
                write!(f, "{context}: matrix is singular or nearly singular at {at}")
            }
            Error::NoConvergence { what, iterations } => {
                write!(f, "{what} did not converge within {iterations} iterations")
            }
            Error::NotDiagonalizable { representative, exponent_bound } => write!(
                f,
                "matrix is not diagonalizable within the cluster tolerance: \
                 eigenvalue {representative} has exponent bound {exponent_bound}"
            ),
            Error::InadmissibleNodes => {
                write!(f, "node list is inadmissible: equal nodes must be adjacent")
            }
            Error::DiscsOverlap { first, second } => {
                write!(f, "discs {first} and {second} overlap")
            }
            Error::ImaginaryAxisEigenvalue { eigenvalue } => {
                write!(f, "eigenvalue {eigenvalue} lies on the imaginary axis")
            }
            Error::UncoveredEigenvalue { eigenvalue } => {
                write!(f, "eigenvalue {eigenvalue} is not covered by the disc set")
            }
            Error::EigenvalueOnQuadratureNode { eigenvalue } => write!(
                f,
                "eigenvalue {eigenvalue} lies within 1e-10 of a quadrature node"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
