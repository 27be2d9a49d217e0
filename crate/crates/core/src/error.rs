use std::fmt;

/// Errors surfaced by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Weights must be strictly positive integers.
    InvalidWeight(i64),
    /// Monomial exponents must be nonnegative.
    InvalidExponent(i64),
    /// No presentation row exists for weights outside the finite star types.
    NoTableRow([u64; 3]),
    /// The operation requires a unit upper triangular matrix.
    NotUnitTriangular,
    /// The quadratic form must be given by a symmetric matrix.
    NotSymmetric,
    /// The form is not positive definite; `minor` is the 1-based index of the
    /// first non-positive leading principal minor.
    IndefiniteForm { minor: usize },
    /// A root touched the search box boundary, so the enumeration cannot be
    /// certified complete at this bound.
    BoxTooSmall { root: Vec<i64> },
    /// Vertex index outside the quiver.
    VertexOutOfRange { index: usize, len: usize },
    /// Malformed textual input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWeight(w) => write!(f, "invalid weight {w}: weights must be >= 1"),
            Error::InvalidExponent(e) => {
                write!(f, "invalid exponent {e}: exponents must be >= 0")
            }
            Error::NoTableRow(p) => write!(
                f,
                "no presentation row for weights ({}, {}, {}): not of finite star type",
                p[0], p[1], p[2]
            ),
            Error::NotUnitTriangular => write!(f, "matrix is not unit upper triangular"),
            Error::NotSymmetric => write!(f, "matrix is not symmetric"),
            Error::IndefiniteForm { minor } => write!(
                f,
                "form is not positive definite: leading principal minor {minor} is not positive"
            ),
            Error::BoxTooSmall { root } => write!(
                f,
                "root {root:?} touches the search box boundary; increase the box bound"
            ),
            Error::VertexOutOfRange { index, len } => {
                write!(f, "vertex index {index} out of range for quiver with {len} vertices")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
