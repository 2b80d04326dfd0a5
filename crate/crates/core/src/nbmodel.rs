//! m-estimate Naive Bayes over per-class frequent word sets.
//!
//! Each class's transactions are mined separately (word sets of two or more
//! keywords). The union of those sets is the vocabulary `V`. For a set `s`
//! and class `j`:
//!
//! ```text
//! likelihood(s, j) = (n_k(s, j) + 1) / (n_j + |V|)
//! ```
//!
//! where `n_k(s, j)` is the number of class-`j` documents containing `s` and
//! `n_j` is the number of sets mined from class `j`. Counts are the source of
//! truth; priors and likelihoods are always derived from them.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::corpus::{validate_class_name, Corpus};
use crate::error::{Error, Result};
use crate::fpgrowth::{Miner, TransactionDb};
use crate::preprocess::{validate_keyword, PipelineFlags};

/// Word sets smaller than this are not features.
pub const MIN_SET_SIZE: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub doc_count: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassModel {
    classes: Vec<ClassInfo>,
    min_sup: u32,
    pipeline: Option<PipelineFlags>,
    // sorted by (size, comma-joined items)
    vocabulary: Vec<Vec<String>>,
    // [set][class]
    set_counts: Vec<Vec<u32>>,
    class_counts: Vec<u32>,
    priors: Vec<f64>,
    likelihoods: Vec<Vec<f64>>,
}

/// Trains on a labeled corpus. Every document needs a label and at least
/// two classes must be present.
pub fn train(corpus: &Corpus, min_sup: u32) -> Result<ClassModel> {
    if min_sup == 0 {
        return Err(Error::ZeroMinSupport);
    }
    if let Some(doc) = corpus.documents().iter().find(|d| d.label().is_none()) {
        return Err(Error::MissingLabel(doc.id().to_owned()));
    }
    if corpus.classes().len() < 2 {
        return Err(Error::TooFewClasses(corpus.classes().len()));
    }

    let miner = Miner::new(min_sup).min_size(MIN_SET_SIZE);
    let mut vocabulary: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut per_class: Vec<TransactionDb<String>> = Vec::new();
    for class in corpus.classes() {
        let db = TransactionDb::new(corpus.documents_of(class).map(|d| d.keywords().to_vec()));
        for set in miner.mine(&db)? {
            vocabulary.insert(set.items);
        }
        per_class.push(db);
    }

    let classes = corpus
        .classes()
        .iter()
        .zip(&per_class)
        .map(|(name, db)| ClassInfo {
            name: name.clone(),
            doc_count: db.len() as u32,
        })
        .collect();
    let entries = vocabulary
        .into_iter()
        .map(|set| {
            let counts = per_class.iter().map(|db| db.support(&set)).collect();
            (set, counts)
        })
        .collect();
    ClassModel::from_counts(classes, min_sup, None, entries)
}

impl ClassModel {
    /// Assembles a model from its counts: the classes with their document
    /// counts, and for each vocabulary set the per-class number of documents
    /// containing it. Entries may come in any order.
    pub fn from_counts(
        classes: Vec<ClassInfo>,
        min_sup: u32,
        pipeline: Option<PipelineFlags>,
        entries: Vec<(Vec<String>, Vec<u32>)>,
    ) -> Result<Self> {
        if min_sup == 0 {
            return Err(Error::ZeroMinSupport);
        }
        if classes.len() < 2 {
            return Err(Error::TooFewClasses(classes.len()));
        }
        for (i, c) in classes.iter().enumerate() {
            validate_class_name(&c.name)?;
            if classes[..i].iter().any(|p| p.name == c.name) {
                return Err(invalid(format!("duplicate class `{}`", c.name)));
            }
            if c.doc_count == 0 {
                return Err(invalid(format!("class `{}` has no documents", c.name)));
            }
        }

        let mut entries = entries;
        entries.sort_by_cached_key(|(set, _)| (set.len(), set.join(",")));
        for (i, (set, counts)) in entries.iter().enumerate() {
            let shown = set.join(",");
            if set.len() < MIN_SET_SIZE {
                return Err(invalid(format!(
                    "word set `{shown}` has fewer than {MIN_SET_SIZE} items"
                )));
            }
            for k in set {
                validate_keyword(k)?;
            }
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid(format!(
                    "word set `{shown}` is not strictly ascending"
                )));
            }
            if i > 0 && entries[i - 1].0 == *set {
                return Err(invalid(format!("duplicate word set `{shown}`")));
            }
            if counts.len() != classes.len() {
                return Err(invalid(format!(
                    "word set `{shown}` has {} counts for {} classes",
                    counts.len(),
                    classes.len()
                )));
            }
            for (c, &n) in classes.iter().zip(counts) {
                if n > c.doc_count {
                    return Err(invalid(format!(
                        "word set `{shown}` count {n} exceeds {} documents of `{}`",
                        c.doc_count, c.name
                    )));
                }
            }
            if counts.iter().all(|&n| n < min_sup) {
                return Err(invalid(format!(
                    "word set `{shown}` is frequent in no class"
                )));
            }
        }

        let (vocabulary, set_counts): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let class_counts: Vec<u32> = (0..classes.len())
            .map(|j| {
                set_counts
                    .iter()
                    .filter(|c: &&Vec<u32>| c[j] >= min_sup)
                    .count() as u32
            })
            .collect();
        let total: u32 = classes.iter().map(|c| c.doc_count).sum();
        let priors = classes
            .iter()
            .map(|c| f64::from(c.doc_count) / f64::from(total))
            .collect();
        let v = vocabulary.len() as u32;
        let likelihoods = set_counts
            .iter()
            .map(|counts| {
                counts
                    .iter()
                    .zip(&class_counts)
                    .map(|(&n_k, &n_j)| f64::from(n_k + 1) / f64::from(n_j + v))
                    .collect()
            })
            .collect();

        let model = ClassModel {
            classes,
            min_sup,
            pipeline,
            vocabulary,
            set_counts,
            class_counts,
            priors,
            likelihoods,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn with_pipeline(mut self, flags: PipelineFlags) -> Self {
        self.pipeline = Some(flags);
        self
    }

    /// Checks the derived quantities against the counts.
    pub fn validate(&self) -> Result<()> {
        let sum: f64 = self.priors.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(invalid(format!("priors sum to {sum}, not 1")));
        }
        let v = self.vocabulary.len() as u32;
        for (s, row) in self.likelihoods.iter().enumerate() {
            for (j, &l) in row.iter().enumerate() {
                let expected =
                    f64::from(self.set_counts[s][j] + 1) / f64::from(self.class_counts[j] + v);
                if l <= 0.0 || l != expected {
                    return Err(invalid(format!(
                        "likelihood of `{}` for `{}` is {l}, expected {expected}",
                        self.vocabulary[s].join(","),
                        self.classes[j].name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn min_sup(&self) -> u32 {
        self.min_sup
    }

    /// Preprocessing flags recorded at training time, if any.
    pub fn pipeline(&self) -> Option<PipelineFlags> {
        self.pipeline
    }

    pub fn vocabulary(&self) -> &[Vec<String>] {
        &self.vocabulary
    }

    /// Position of a word set in the vocabulary; `items` must be ascending.
    pub fn vocab_index<S: AsRef<str>>(&self, items: &[S]) -> Option<usize> {
        self.vocabulary.iter().position(|v| {
            v.len() == items.len() && v.iter().zip(items).all(|(a, b)| a == b.as_ref())
        })
    }

    /// `n_k`: class-`class` documents containing vocabulary set `set`.
    pub fn set_count(&self, set: usize, class: usize) -> u32 {
        self.set_counts[set][class]
    }

    /// `n_j`: number of word sets mined from class `class`.
    pub fn class_set_count(&self, class: usize) -> u32 {
        self.class_counts[class]
    }

    pub fn prior(&self, class: usize) -> f64 {
        self.priors[class]
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    pub fn likelihood(&self, set: usize, class: usize) -> f64 {
        self.likelihoods[set][class]
    }

    /// Vocabulary sets with their per-class counts, in vocabulary order.
    pub fn entries(&self) -> impl Iterator<Item = (&[String], &[u32])> + '_ {
        self.vocabulary
            .iter()
            .zip(&self.set_counts)
            .map(|(s, c)| (s.as_slice(), c.as_slice()))
    }

    pub fn report(&self) -> TrainingReport {
        TrainingReport {
            classes: self
                .classes
                .iter()
                .enumerate()
                .map(|(j, c)| ClassSummary {
                    name: c.name.clone(),
                    documents: c.doc_count,
                    prior: self.priors[j],
                    mined_sets: self.class_counts[j],
                })
                .collect(),
            vocabulary_size: self.vocabulary.len(),
        }
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidModel(msg)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassSummary {
    pub name: String,
    pub documents: u32,
    pub prior: f64,
    pub mined_sets: u32,
}

/// Summary printed after training.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingReport {
    pub classes: Vec<ClassSummary>,
    pub vocabulary_size: usize,
}

impl TrainingReport {
    pub fn total_documents(&self) -> u32 {
        self.classes.iter().map(|c| c.documents).sum()
    }
}

impl fmt::Display for TrainingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "documents\t{}", self.total_documents())?;
        for c in &self.classes {
            writeln!(
                f,
                "class\t{}\tdocs={}\tprior={}\tsets={}",
                c.name, c.documents, c.prior, c.mined_sets
            )?;
        }
        write!(f, "vocabulary\t{}", self.vocabulary_size)
    }
}
