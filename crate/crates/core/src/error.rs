use thiserror::Error;

/// Errors surfaced by graph construction, the coloring pipeline, and the
/// matching oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {u} lists {v} but {v} does not list {u} (multiplicity mismatch)")]
    AsymmetricAdjacency { u: usize, v: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("rotation system does not embed in the sphere (V - E + F = {euler}, components = {components})")]
    NonPlanarEmbedding { euler: i64, components: usize },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph is not simple (parallel edge or loop at vertex {0})")]
    NotSimple(usize),
    #[error("face {face} has size {size}, expected 5 or 6")]
    BadFaceSize { face: usize, size: usize },
    #[error("expected 12 pentagonal faces, found {0}")]
    PentagonCount(usize),
    #[error("graph is not 3-connected (separating pair {{{0}, {1}}})")]
    NotThreeConnected(usize, usize),
    #[error("BFS source set is empty")]
    EmptySourceSet,
    #[error("patch around dual vertex {center} is degenerate: {reason}")]
    PatchDegenerate { center: usize, reason: String },
    #[error("identifying R*({0}) would create a loop")]
    LoopCreated(usize),
    #[error("4-coloring search exceeded node budget of {budget}")]
    SearchBudgetExceeded { budget: u64 },
    #[error("inner-ring vertex {vertex} has {available} available colors, expected 2")]
    ListDeficit { vertex: usize, available: usize },
    #[error("best color class has {count} resonant hexagons, expected at least {expected}")]
    PigeonholeViolated { count: usize, expected: usize },
    #[error("resonant faces are not pairwise disjoint")]
    NotDisjoint,
    #[error("face {0} is not resonant in the given matching")]
    NotResonant(usize),
    #[error("graph is not planar")]
    NonPlanar,
    #[error("enumeration exceeded cap of {0} matchings")]
    CapExceeded(u64),
    #[error("bad vertex count {0}: need an even p >= 20")]
    BadVertexCount(usize),
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("truncated planar_code record at byte {0}")]
    TruncatedRecord(usize),
    #[error("vertex count {0} exceeds the single-byte planar_code limit of 255")]
    UnsupportedVertexCount(usize),
    #[error("neighbor byte {value} out of range 1..={max}")]
    NeighborOutOfRange { value: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
