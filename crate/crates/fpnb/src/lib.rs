//! File formats, model persistence and the `fpnb` command-line tool built on
//! [`fpnb_core`].

pub mod cli;
pub mod formats;
pub mod model_file;

pub use model_file::{load_model, save_model, MODEL_HEADER};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("missing section `{0}`")]
    MissingSection(&'static str),
    #[error("expected {expected} itemset lines, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("unsupported model version `{0}`")]
    Version(String),
    #[error(transparent)]
    Core(#[from] fpnb_core::Error),
}
