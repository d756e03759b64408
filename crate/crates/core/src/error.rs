use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("edge multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("difference {diff} out of range 1..={max} for circulant on {n} vertices")]
    DifferenceOutOfRange { diff: usize, n: usize, max: usize },
    #[error("duplicate entry for vertex pair ({0}, {1})")]
    DuplicatePair(usize, usize),
    #[error("graph has parallel edges; a simple graph is required")]
    NotSimple,
    #[error("{what} requires {expected}, got n = {n}")]
    BadOrder {
        what: &'static str,
        expected: &'static str,
        n: usize,
    },
    #[error("colouring has {got} vertex colours but the graph has {n} vertices")]
    VertexCountMismatch { got: usize, n: usize },
    #[error("edge {0} is not coloured")]
    MissingEdgeColour(EdgeId),
    #[error("edge {0} is coloured but is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("colour id {colour} outside palette of size {size}")]
    ColourOutOfRange { colour: u32, size: usize },
    #[error("duplicate palette label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid embedding: {0}")]
    BadEmbedding(String),
    #[error("edge colouring needs {used} colours, exceeding the budget of {budget}")]
    BudgetExceeded { used: usize, budget: usize },
    #[error("symmetry breaking for complete graphs requested on a graph that is not complete")]
    NotComplete,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal construction error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
