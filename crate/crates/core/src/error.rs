use crate::scalars::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands use different scalar modes (rational vs symbolic)")]
    MixedScalarMode,
    #[error("coupling A must be nonzero")]
    ZeroCoupling,
    #[error("sequence {0:?} is not non-increasing")]
    NotNonIncreasing(Vec<i64>),
    #[error("negative part {0} in partition")]
    NegativePart(i64),
    #[error("partitions have different weights ({0} vs {1})")]
    UnequalWeight(usize, usize),
    #[error("cell ({row}, {col}) lies outside the Young diagram")]
    CellOutOfDiagram { row: usize, col: usize },
    #[error("invalid root state: {0}")]
    InvalidRoot(String),
    #[error("squeeze of positions ({j}, {k}) by {p} is out of range")]
    SqueezeOutOfRange { j: usize, k: usize, p: i64 },
    #[error("polynomial is not symmetric under exchange of variables")]
    NotSymmetric,
    #[error("exact division by (w{j} - w{k}) left a nonzero remainder")]
    InexactDivision { j: usize, k: usize },
    #[error("partition length {len} exceeds the number of variables {n}")]
    LengthExceedsN { len: usize, n: usize },
    #[error("too many variables for dense permutation expansion ({0} > {max})", max = crate::oracle::MAX_VARIABLES)]
    TooManyVariables(usize),
    #[error("torus integration needs a non-negative integer coupling, got {0}")]
    NonIntegerCoupling(Rational),
    #[error("state {0} is generated but lies outside the basis")]
    BasisNotClosed(String),
    #[error("operator image of {from} has a component on {to}, which precedes it in the basis order")]
    NotTriangular { from: String, to: String },
    #[error("state {0} is not in the basis or graph")]
    NodeNotInGraph(String),
    #[error(
        "degenerate diagonal: E0({label}) = E0({other}); pivot vanishes at A in {{{}}}",
        list(.roots)
    )]
    DegenerateDiagonal {
        label: String,
        other: String,
        roots: Vec<Rational>,
    },
    #[error("structural degeneracy: E0({label}) and E0({other}) coincide identically in A")]
    StructuralDegeneracy { label: String, other: String },
    #[error("pseudo-momenta ordering assumption fails for {0}")]
    SgnInconsistent(String),
    #[error("positions {0} and {1} coincide")]
    CoincidentPositions(usize, usize),
    #[error("symmetric functions have different weights ({0} vs {1})")]
    WeightMismatch(usize, usize),
    #[error("Gram-Schmidt breaks down at {label}: {reason}")]
    SingularGram { label: String, reason: String },
    #[error("{n} particles cannot carry a partition of length {len}")]
    NTooSmall { n: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

fn list(values: &[Rational]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
