use core::fmt;

/// Errors raised at the API boundary when an input violates a domain invariant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Turning radius outside the open interval `(0, 1)`.
    TurningRadius(f64),
    /// Rotation axis whose norm differs from one.
    NonUnitAxis(f64),
    /// A matrix that is not a proper rotation.
    NotARotation { orthonormality: f64, det: f64 },
    /// Fewer than two samples requested for a segment.
    TooFewSamples(usize),
    /// Solver tolerances that are non-positive or too loose.
    Tolerances,
    /// Angle that is NaN or infinite.
    NonFiniteAngle(f64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::TurningRadius(r) => {
                write!(f, "turning radius {r} is outside the open interval (0, 1)")
            }
            Error::NonUnitAxis(n) => write!(f, "rotation axis has norm {n}, expected 1"),
            Error::NotARotation {
                orthonormality,
                det,
            } => write!(
                f,
                "matrix is not a proper rotation (|M^T M - I|_F = {orthonormality:e}, det = {det})"
            ),
            Error::TooFewSamples(n) => write!(f, "at least 2 samples are required, got {n}"),
            Error::Tolerances => f.write_str(
                "solver tolerances must be strictly positive and clamp_eps must be below 1e-6",
            ),
            Error::NonFiniteAngle(a) => write!(f, "angle {a} is not finite"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
