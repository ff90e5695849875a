use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("eigenvalue outside μ₂₄")]
    EigenvalueOutsideRoots,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group too large or not finite (closure exceeded {cap} elements)")]
    CapExceeded { cap: usize },
    #[error("unknown group label {0:?}")]
    UnknownLabel(String),
    #[error("{sub} is not a subgroup of {group}")]
    NotSubgroup { sub: String, group: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("element is projectively trivial")]
    TrivialElement,
    #[error("line lies in the quadric")]
    LineInQuadric,
    #[error("unsupported degree {0} (expected 6 or 8)")]
    UnsupportedDegree(u32),
    #[error("vectors do not span a line")]
    NotALine,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error("no node data for {group} at fiber {fiber}")]
    MissingNodeData { group: String, fiber: String },
    #[error("unknown fiber {0:?} (expected smooth or 1..4)")]
    UnknownFiber(String),
    #[error("unknown fix-group name {0:?}")]
    UnknownFixGroup(String),
    #[error("bad meeting-lines annotation {0:?}")]
    BadAnnotation(String),
    #[error("{0}")]
    Inconsistent(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    #[error("degenerate lattice (determinant 0)")]
    Degenerate,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("class is not {p}-divisible")]
    NotDivisible { p: i64 },
    #[error("{0}")]
    Precondition(String),
    #[error("ramified curve self-intersection {s} is not divisible by {p}")]
    NotRamifiable { s: i64, p: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown curve {name}")]
    UnknownCurve { line: usize, name: String },
    #[error("line {line}: duplicate {what} {name}")]
    Duplicate {
        line: usize,
        what: &'static str,
        name: String,
    },
}

/// Umbrella error for the CLI and the Python bindings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Singularity(#[from] SingularityError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("unknown table {0:?}")]
    UnknownTable(String),
}
