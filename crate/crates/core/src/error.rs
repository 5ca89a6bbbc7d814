use thiserror::Error;

use crate::graph::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex index {index} out of range for n = {n}")]
    VertexOutOfRange { line: usize, index: usize, n: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("missing \"p edge <n> <m>\" header")]
    MissingHeader,

    #[error("graph is disconnected ({components} components); solve each connected component separately")]
    Disconnected { components: usize },

    #[error("vertex {vertex} out of range for n = {n}")]
    BadVertex { vertex: usize, n: usize },

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),

    #[error("{0} is a tree edge, expected a cotree edge")]
    TreeEdge(Edge),

    #[error("invalid swap: {0}")]
    InvalidMove(String),

    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),

    /// No strictly improving swap exists for a violating cotree edge. The
    /// payload is a full instance dump.
    #[error("no improving swap for a non-monotone fundamental path\n{0}")]
    NoImprovingSwap(String),

    #[error("sign labeling is not total on the tree edges: missing {0}")]
    LabelingNotTotal(Edge),

    #[error("sign labeling references {0}, which is not a tree edge")]
    LabelingNotOnTree(Edge),

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("integer overflow in exact determinant")]
    Overflow,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
