use thiserror::Error;

use crate::partial_cube::RejectReason;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("removing theta class {class} leaves {components} components instead of 2")]
    ClassRemovalNotTwoComponents { class: usize, components: usize },
    #[error("graph is not a partial cube: {0}")]
    NotPartialCube(RejectReason),
    #[error("infeasible parameters: {0}")]
    InfeasibleSpec(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("order {n} exceeds the enumeration bound {max}")]
    OrderTooLarge { n: usize, max: usize },
}
