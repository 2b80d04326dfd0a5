//! Text classification over frequent word sets.
//!
//! Documents are reduced to keyword transactions ([`preprocess`]), per-class
//! frequent word sets are mined with FP-growth ([`fpgrowth`]), and an
//! m-estimate Naive Bayes model over those sets ([`nbmodel`]) scores new
//! documents by their inclusion-maximal matching sets ([`classify`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, IO and the
//! command-line tool live in the `fpnb` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod corpus;
mod error;
pub mod fpgrowth;
pub mod nbmodel;
pub mod preprocess;

pub use classify::{classify_batch, match_sets, score, Classification, MatchResult};
pub use corpus::{idf, tf, tfidf, Corpus, TermCounts, TermDocumentMatrix, TfIdfWeight};
pub use error::{Error, Result};
pub use fpgrowth::{
    build_fp_tree, dump_tree, mine_bruteforce, mine_frequent_itemsets, FpNode, FpTree,
    FrequentItemset, HeaderEntry, Miner, NodeId, TransactionDb,
};
pub use nbmodel::{train, ClassInfo, ClassModel, TrainingReport};
pub use preprocess::{
    porter_stem, preprocess_document, singularize, tokenize, KeywordSet, PipelineConfig,
    PipelineFlags, RawDocument, Stemming,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
