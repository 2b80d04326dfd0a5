use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Minimum support must be at least one transaction.
    ZeroMinSupport,
    /// Brute-force enumeration refuses item universes above this size.
    UniverseTooLarge {
        items: usize,
        max: usize,
    },
    EmptyCorpus,
    DuplicateDocumentId(String),
    EmptyDocumentId,
    /// A keyword that is empty, contains whitespace or a comma, or is not lowercase.
    InvalidKeyword(String),
    InvalidClassName(String),
    MissingLabel(String),
    /// Training needs documents from at least two classes.
    TooFewClasses(usize),
    ZeroTokenDocument,
    TermNotInCorpus(String),
    InvalidModel(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroMinSupport => write!(f, "minimum support must be at least 1"),
            Error::UniverseTooLarge { items, max } => {
                write!(
                    f,
                    "item universe of {items} exceeds the enumeration bound of {max}"
                )
            }
            Error::EmptyCorpus => write!(f, "corpus has no non-empty documents"),
            Error::DuplicateDocumentId(id) => write!(f, "duplicate document id `{id}`"),
            Error::EmptyDocumentId => write!(f, "document id is empty"),
            Error::InvalidKeyword(k) => write!(f, "invalid keyword `{k}`"),
            Error::InvalidClassName(c) => write!(f, "invalid class name `{c}`"),
            Error::MissingLabel(id) => write!(f, "training document `{id}` has no label"),
            Error::TooFewClasses(n) => write!(f, "need >= 2 classes, found {n}"),
            Error::ZeroTokenDocument => write!(f, "document has no tokens"),
            Error::TermNotInCorpus(t) => write!(f, "term `{t}` occurs in no document"),
            Error::InvalidModel(msg) => write!(f, "invalid model: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
