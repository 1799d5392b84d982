use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^31")]
    InvalidModulus(u64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("relation {relation} is not admissible: {reason}")]
    NotAdmissible { relation: usize, reason: String },

    #[error("arrow ideal is not nilpotent within bound {bound}: path {path} survives")]
    NotNilpotent { bound: usize, path: String },

    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NonAssociative(String, String, String),

    #[error("invalid unit: {0}")]
    InvalidUnit(String),

    #[error("invalid idempotents: {0}")]
    InvalidIdempotents(String),

    #[error("algebra is not basic elementary: dim A/rad A = {quotient}, but {idempotents} idempotents given")]
    NotBasic { quotient: usize, idempotents: usize },

    #[error("trace-form radical needs p > dim (p = {p}, dim = {dim})")]
    UnsupportedField { p: u32, dim: usize },

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("action does not respect the algebra: {0}")]
    NotAModule(String),

    #[error("map does not intertwine the actions at basis element {0}")]
    NotIntertwining(String),

    #[error("endomorphism ring of {0} is not local; decompose the module first")]
    NotLocal(String),

    #[error("endomorphism algebra is not basic elementary: summands {0} and {1}")]
    NonBasicEndomorphism(usize, usize),

    #[error("invalid extension: {0}")]
    InvalidExtension(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
