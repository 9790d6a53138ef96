use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u},{v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not bipartite: odd cycle {0:?}")]
    OddCycle(Vec<usize>),
    #[error("graph is not planar")]
    NonPlanar,
    #[error("edge ({0},{1}) is drawn horizontally")]
    HorizontalEdge(usize, usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("path enumeration exceeded cap of {0} paths")]
    CapExceeded(usize),
    #[error("gadgets do not fit at resolution {0}; use a larger resolution")]
    Clearance(usize),
    #[error("cell ({0},{1}) is not inside the polygon")]
    CellOutside(i64, i64),
    #[error("vertex set does not dominate vertex {0}")]
    NotDominating(usize),
    #[error("solver budget exhausted; optimum lies in [{lower}, {upper}]")]
    BudgetExceeded { lower: usize, upper: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
