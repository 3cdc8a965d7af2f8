use crate::lattice::MukaiVector;
use crate::Rational;

/// Errors raised by the lattice and wall computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("surface degree parameter d must be positive, got {0}")]
    InvalidDegree(i64),
    #[error("reflection class {class} has square {square}, expected -2")]
    NotSpherical { class: MukaiVector, square: i64 },
    #[error("classes {0} and {1} are linearly dependent")]
    Parallel(MukaiVector, MukaiVector),
    #[error("wall does not meet the half-plane")]
    EmptyWall,
    #[error("class collapses at this point")]
    CollapsedCharge,
    #[error("stability point needs y > 0, got y^2 = {0}")]
    InvalidPoint(Rational),
    #[error("class {0} is not primitive")]
    NotPrimitive(MukaiVector),
    #[error("class {class} has square {square} < -2")]
    SquareTooNegative { class: MukaiVector, square: i64 },
    #[error("Hilbert scheme needs n >= 2, got {0}")]
    InvalidN(i64),
    #[error("Gamma is undefined for {0}: the wall is not a ray of the positive cone")]
    GammaUndefined(MukaiVector),
    #[error("no cone boundary within search bounds")]
    NoConeBoundary,
    #[error("no canonical base point on a vertical wall")]
    NoBasePoint,
    #[error("base point shifted below the x-axis")]
    BasePointBelowAxis,
    #[error("non-effective extension step {step}: pairing {pairing}")]
    NonEffectiveExtension { step: usize, pairing: i64 },
    #[error("decomposition needs at least two parts")]
    TooFewParts,
    #[error("the positive region of this wall is unbounded")]
    UnboundedRegion,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
