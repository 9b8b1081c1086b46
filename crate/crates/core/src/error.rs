use std::fmt;

/// Errors for data-dependent failures.
///
/// Structural preconditions (mismatched variable counts, zero-sized variable
/// sets, out-of-range indices passed by internal callers) are programming
/// errors and panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial.
    DivisionByZero,
    /// Exact division requested but the divisor does not divide the dividend.
    InexactDivision,
    /// A determinant was requested for a non-square matrix.
    NonSquare { rows: usize, cols: usize },
    /// Cofactor expansion refused: the matrix exceeds the configured cap.
    CofactorCap { size: usize, cap: usize },
    /// Fraction-free elimination hit a non-exact division; this indicates a
    /// pivoting bug, never valid input.
    FractionFreeDivision,
    /// A column selection violated its invariants.
    InvalidSelection(String),
    /// A partition string or part list was not weakly decreasing.
    InvalidPartition(String),
    /// A row-minor request did not match the matrix shape.
    InvalidMinor(String),
    /// Tableau enumeration refused: shape or variable count beyond the cap.
    EnumerationCap(String),
    /// Text or JSON input could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::InexactDivision => write!(f, "exact division has a nonzero remainder"),
            Error::NonSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            Error::CofactorCap { size, cap } => {
                write!(f, "cofactor expansion refused: size {size} exceeds cap {cap}")
            }
            Error::FractionFreeDivision => {
                write!(f, "fraction-free elimination produced a non-exact division")
            }
            Error::InvalidSelection(msg) => write!(f, "invalid column selection: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::InvalidMinor(msg) => write!(f, "invalid row minor: {msg}"),
            Error::EnumerationCap(msg) => write!(f, "tableau enumeration cap: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
