use thiserror::Error;

/// Errors raised while building or operating on multi-complexes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the base set of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("face {0} is empty")]
    EmptyFace(usize),
    #[error("face id {0} is used twice")]
    DuplicateFaceId(usize),
    #[error("singleton {{{0}}} is missing")]
    MissingSingleton(usize),
    #[error("singleton {{{0}}} appears more than once")]
    DuplicateSingleton(usize),
    #[error("face {lower} is ordered below face {upper} but is not contained in it")]
    ContainmentViolation { lower: usize, upper: usize },
    #[error("order relation contains a cycle through faces {0} and {1}")]
    CycleInOrder(usize, usize),
    #[error("singleton {{{vertex}}} is ordered below face {face} which does not contain it")]
    SingletonRelationViolation { vertex: usize, face: usize },
    #[error("unknown face id {0}")]
    UnknownFace(usize),
    #[error("sub-complex masks belong to different complexes")]
    OwnerMismatch,
    #[error("face set {0:#x} is not closed under the order")]
    NotDownClosed(u64),
    #[error("masks {0:#x} and {1:#x} are not comparable in the lattice")]
    NotComparable(u64, u64),
    #[error("operation needs dimension at most 1, complex has dimension {0}")]
    DimensionTooHigh(usize),
    #[error("face {0} is not an edge")]
    NotAnEdge(usize),
    #[error("{what} is {actual}, limit is {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("cross-check mismatch in {what}: {left} vs {right}")]
    CrossCheckMismatch {
        what: &'static str,
        left: String,
        right: String,
    },
    #[error("edge {{{0}, {1}}} appears twice")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopNotAllowed(usize),
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("edge {0} has a single vertex; singleton hyperedges are disabled")]
    SingletonEdge(usize),
    #[error("face family is not closed under subsets: {0:?} is missing")]
    NotDownwardClosed(Vec<usize>),
    #[error("malformed incidence: {0}")]
    MalformedIncidence(String),
    #[error("negative color {color} on face {face}")]
    NegativeColor { face: usize, color: i64 },
    #[error("malformed canonical key")]
    MalformedKey,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
