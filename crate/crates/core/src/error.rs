use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("commodity count must be at least 1")]
    ZeroCommodities,
    #[error("source and sink must differ (both are `{0}`)")]
    SourceIsSink(String),
    #[error("unknown node `{node}` referenced by {context}")]
    UnknownNode { node: String, context: String },
    #[error("duplicate node id `{0}`")]
    DuplicateNode(String),
    #[error("duplicate arc id `{0}`")]
    DuplicateArc(String),
    #[error("arc `{0}` is a self-loop")]
    SelfLoop(String),
    #[error("arc id `e` is reserved for the return arc")]
    ReservedArcId,
    #[error("dimension mismatch: expected {expected}, found {found}{}", context.as_ref().map(|c| format!(" ({c})")).unwrap_or_default())]
    Dimension {
        expected: usize,
        found: usize,
        context: Option<String>,
    },
    #[error("polygonal regions require exactly 2 commodities, found {0}")]
    PolygonDimension(usize),
    #[error("cannot combine a point-set region with a polygonal region")]
    MixedVariants,
    #[error("region is empty")]
    EmptyRegion,
    #[error("region is unbounded")]
    Unbounded,
    #[error("assignment is missing arc `{0}`")]
    MissingArc(String),
    #[error("assignment refers to unknown arc `{0}`")]
    UnknownArc(String),
    #[error("local flows are not compatible on arc `{0}`")]
    Incompatible(String),
    #[error("arc `{0}` has a polygonal capacity; enumeration needs finite point sets")]
    NotEnumerable(String),
    #[error("search budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("network is not fully disjoint: {0}")]
    NotFullyDisjoint(String),
    #[error("no path between source and sink")]
    NoPath,
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("arc `{0}` has a capacity that is not reducible")]
    NotReducible(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("arc `{arc}`: {message}")]
    ArcSemantic { arc: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
