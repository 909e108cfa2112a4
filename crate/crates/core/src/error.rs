use std::io;

use thiserror::Error;

use crate::lattice::{Coord, Family};

#[derive(Debug, Error)]
pub enum Error {
    #[error("coordinate {0} exceeds the lattice cap of ±{cap}", cap = crate::lattice::COORD_CAP)]
    CoordinateOutOfRange(Coord),

    #[error("a vertex order needs at least 4 vertices, got {0}")]
    OrderTooShort(usize),

    #[error("prefix length {requested} outside 4..={available}")]
    PrefixOutOfRange { requested: usize, available: usize },

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::lattice::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("edge ({0}, {1}) is invalid")]
    InvalidEdge(usize, usize),

    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("color id {color} is out of range for {colors} colors")]
    ColorOutOfRange { color: usize, colors: usize },

    #[error("color count must be in 1..=255, got {0}")]
    InvalidColorCount(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex order exhausted at {0} vertices")]
    OrderExhausted(usize),

    #[error("max vertex count must be at least 4, got {0}")]
    MaxVerticesTooSmall(usize),

    #[error("oracle workload of {0} colorings exceeds the tractability guard")]
    OracleIntractable(u128),

    #[error("checkpoint: {0}")]
    Checkpoint(#[from] CheckpointError),

    #[error("table: {0}")]
    Table(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("bad magic bytes")]
    BadMagic,

    #[error("unsupported format version {0}")]
    VersionMismatch(u16),

    #[error("unknown family id {0}")]
    UnknownFamily(u8),

    #[error("corrupted record {row}: {reason}")]
    CorruptRecord { row: u64, reason: String },

    #[error("truncated file")]
    Truncated,

    #[error("trailing bytes after the last record")]
    TrailingBytes,

    #[error("record {row} violates the frontier invariant: {reason}")]
    InvariantViolation { row: u64, reason: String },

    #[error("checkpoint is for the {found} family, run requested {expected}")]
    FamilyMismatch { expected: Family, found: Family },

    #[error("checkpoint uses {found} colors, run requested {expected}")]
    ColorsMismatch { expected: u8, found: u8 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
