//! Cluster-algebra engine and verification routines for the level-ℓ
//! restricted T- and Y-systems of type B_r and for simply laced pairs.

pub mod matrix;
pub mod quiver;
pub mod semifield;
pub mod laurent;
pub mod seed;
pub mod rng;
pub mod report;
pub mod br;
pub mod troplab;
pub mod fpoly;
pub mod roots;
pub mod dilog;
pub mod pairs;

pub use laurent::LaurentPoly;
pub use matrix::SkewMatrix;
pub use quiver::{Quiver, VertexId};
pub use seed::Seed;
pub use semifield::{PosRational, Semifield, SignClass, TropMonomial};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("matrix is not skew-symmetric at ({i},{j})")]
    NotSkew { i: usize, j: usize },
    #[error("integer overflow")]
    Overflow,
    #[error("vertex map is not a bijection")]
    NotBijective,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("2-cycle between {0} and {1}")]
    TwoCycle(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator sets differ ({0} vs {1})")]
    GeneratorMismatch(usize, usize),
    #[error("unknown semifield tag {0:?}")]
    UnknownTag(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division leaves the Laurent ring")]
    NotDivisible,
    #[error("mutation at {0} produced a y-denominator or negative coefficient")]
    LaurentViolation(usize),
    #[error("vertices {0} and {1} in one batch are connected")]
    BatchNotCommuting(usize, usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("exchange matrix mismatch at 2u = {0}")]
    ScheduleMismatch(i64),
    #[error("solver did not converge: {0}")]
    NoConvergence(String),
}
