use crate::lattice::KCoord;
use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AztecError {
    #[error("diamond order must be at least 1")]
    ZeroOrder,
    #[error("({x1}, {x2}) is not a vertex: the two coordinates must have opposite parity")]
    NotAVertex { x1: i32, x2: i32 },
    #[error("{vertex} is not a {color} vertex of the order-{n} diamond")]
    OutOfDiamond { vertex: KCoord, color: &'static str, n: usize },
    #[error("black {black} and white {white} are not adjacent")]
    NotAdjacent { black: KCoord, white: KCoord },
    #[error("{scheme} weights need an {expected} order, got n = {n}")]
    ParityMismatch { scheme: &'static str, expected: &'static str, n: usize },
    #[error("parameter {name} must be positive and finite, got {value}")]
    BadParameter { name: &'static str, value: f64 },
    #[error("Kasteleyn matrix is singular ({context})")]
    Singular { context: String },
    #[error("exhaustive enumeration is limited to n <= 4, got n = {0}")]
    EnumerationTooLarge(usize),
    #[error("removed vertices must be one white and one black")]
    SameColor,
    #[error("urban renewal factor vanishes at face ({k}, {l})")]
    DegenerateFace { k: usize, l: usize },
    #[error("the two-periodic closed form needs n divisible by 4, got n = {0}")]
    NotMultipleOfFour(usize),
    #[error("contour poles are distinct but only {gap:e} apart; use the exact backend")]
    ClusteredPoles { gap: f64 },
    #[error("edges of a joint event must be vertex-disjoint")]
    OverlappingEdges,
    #[error("determinant {value} is not a probability")]
    NotAProbability { value: f64 },
    #[error("inverse does not match the Kasteleyn matrix: residual {residual:e}")]
    InconsistentInverse { residual: f64 },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, AztecError>;
