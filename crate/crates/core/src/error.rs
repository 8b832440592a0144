use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A component was NaN or infinite.
    NonFinite,
    /// Inversion of the zero quaternion.
    ZeroDivision,
    DimensionMismatch { expected: usize, found: usize },
    /// Vectors and matrices need at least one entry.
    EmptyInput,
    /// No usable pivot during elimination.
    Singular,
    /// Input to `unembed` does not carry the quaternion block pattern.
    StructureViolation { deviation: f64 },
    NotSelfAdjoint { deviation: f64 },
    /// The embedded spectrum did not split into matched pairs.
    PairingViolation { gap: f64 },
    /// The Hermitian eigensolver did not converge.
    NoConvergence,
    NotAFrame { lower: f64, upper: f64 },
    /// Coefficients do not synthesize the requested vector.
    NotARepresentation { residual: f64 },
    InvalidSubspace(&'static str),
    SingularProjectedFrame,
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => write!(f, "non-finite component"),
            Error::ZeroDivision => write!(f, "division by the zero quaternion"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::EmptyInput => write!(f, "empty input"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::StructureViolation { deviation } => {
                write!(f, "matrix is not a complex adjoint image (deviation {deviation:e})")
            }
            Error::NotSelfAdjoint { deviation } => {
                write!(f, "matrix is not self-adjoint (deviation {deviation:e})")
            }
            Error::PairingViolation { gap } => {
                write!(f, "embedded spectrum does not pair up (gap {gap:e})")
            }
            Error::NoConvergence => write!(f, "eigenvalue iteration did not converge"),
            Error::NotAFrame { lower, upper } => {
                write!(f, "family is not a frame (lower bound {lower:e}, upper bound {upper:e})")
            }
            Error::NotARepresentation { residual } => {
                write!(f, "coefficients do not represent the vector (residual {residual:e})")
            }
            Error::InvalidSubspace(why) => write!(f, "invalid subspace: {why}"),
            Error::SingularProjectedFrame => {
                write!(f, "projected frame operator is not invertible on the subspace")
            }
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
