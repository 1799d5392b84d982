//! Text formats, the built-in corpus, the invariant cache and the `homdim`
//! command line.

pub mod cache;
pub mod cli;
pub mod corpus;
pub mod format;
pub mod load;

use thiserror::Error;

pub use cli::{run, Output};
pub use format::ParseError;
pub use load::{Loaded, NamedModule};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Engine(#[from] homdim::Error),

    #[error("cache: {0}")]
    Io(String),
}

impl CatalogError {
    /// 2 for bad input, 3 for budget, unsupported field, I/O and internal errors.
    pub fn exit_code(&self) -> i32 {
        use homdim::Error as E;
        match self {
            CatalogError::Parse(_) | CatalogError::Input(_) => 2,
            CatalogError::Io(_) => 3,
            CatalogError::Engine(e) => match e {
                E::Budget(_) | E::UnsupportedField { .. } | E::Internal(_) => 3,
                _ => 2,
            },
        }
    }
}
