use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("system must have at least one factor")]
    EmptySpec,
    #[error("factor dimension {0} is not prime")]
    NonPrimeFactor(u32),
    #[error("operator has {found} factors, system has {expected}")]
    FactorCountMismatch { expected: usize, found: usize },
    #[error("exponent {value} out of range for factor of dimension {dim}")]
    ExponentOutOfRange { value: u32, dim: u32 },
    #[error("dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("graph has {vertices} vertices, above the cap of {cap}")]
    VertexCap { vertices: usize, cap: usize },
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge weight must be at least 1")]
    ZeroWeight,
    #[error("invalid ring modulus {0}")]
    InvalidModulus(u32),
    #[error("ring element {element} out of range for ring of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("pair ({0}, {1}) is not admissible")]
    NotAdmissible(usize, usize),
    #[error("neighbor relation is defined on distinct points only")]
    SamePoint,
    #[error("grid needs at least 2 rows and 2 columns, got {rows}x{cols}")]
    GridShape { rows: usize, cols: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
