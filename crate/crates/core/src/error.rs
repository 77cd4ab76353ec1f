use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),

    #[error("a line needs (a, b) != (0, 0)")]
    DegenerateLine,

    #[error("cannot build a line through two identical points")]
    IdenticalPoints,

    #[error("duplicate node: index {index} repeats index {first}")]
    DuplicateNode { first: usize, index: usize },

    #[error("wrong number of nodes for degree {degree}: expected {expected}, found {found}")]
    WrongCardinality {
        degree: usize,
        expected: usize,
        found: usize,
    },

    #[error("node set is not poised")]
    NotPoised,

    #[error("node index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("polynomial of degree {degree} does not fit in bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error(
        "node set is not a GC set: fundamental polynomial of node {node} does not split into lines"
    )]
    NotGc { node: usize },

    #[error("operation requires degree {expected}, node set has degree {found}")]
    WrongDegree { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    #[error("degenerate line arrangement: {0}")]
    DegenerateArrangement(String),

    #[error("invalid batch: {0}")]
    BatchViolation(String),

    #[error("singular affine matrix")]
    SingularMatrix,

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}
