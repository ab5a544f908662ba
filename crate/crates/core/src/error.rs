use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("extended size prefix is not supported (graphs are limited to 62 vertices)")]
    ExtendedSize,
    #[error("graph6 payload for {n} vertices needs {expected} bytes, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("graph6 size byte encodes zero vertices")]
    ZeroOrder,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} is outside 1..=62")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("graph is disconnected, distances are undefined")]
    Disconnected,
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("brute-force canonical form supports at most 8 vertices, got {0}")]
    CanonicalRange(usize),
    #[error("connected graph generation supports 1..=7 vertices, got {0}")]
    GenerationRange(usize),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    CorpusLine {
        line: usize,
        #[source]
        source: Graph6Error,
    },
}
