//! Preprocessed corpora, the binary term-document matrix and TF-IDF weights.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::preprocess::KeywordSet;

/// An ordered collection of keyword sets and the classes their labels name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    documents: Vec<KeywordSet>,
    classes: Vec<String>,
}

impl Corpus {
    /// Classes are taken from document labels in order of first appearance.
    pub fn new(documents: Vec<KeywordSet>) -> Result<Self> {
        let mut ids = BTreeSet::new();
        let mut classes: Vec<String> = Vec::new();
        for doc in &documents {
            if !ids.insert(doc.id()) {
                return Err(Error::DuplicateDocumentId(doc.id().to_owned()));
            }
            if let Some(label) = doc.label() {
                validate_class_name(label)?;
                if !classes.iter().any(|c| c == label) {
                    classes.push(label.to_owned());
                }
            }
        }
        Ok(Corpus { documents, classes })
    }

    pub fn documents(&self) -> &[KeywordSet] {
        &self.documents
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn documents_of<'a>(&'a self, class: &'a str) -> impl Iterator<Item = &'a KeywordSet> + 'a {
        self.documents
            .iter()
            .filter(move |d| d.label() == Some(class))
    }
}

pub(crate) fn validate_class_name(name: &str) -> Result<()> {
    let ok = !name.is_empty()
        && name.trim() == name
        && !name.chars().any(|c| c.is_control() || c == '=');
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidClassName(name.to_owned()))
    }
}

/// Binary term x document incidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDocumentMatrix {
    terms: Vec<String>,
    doc_ids: Vec<String>,
    // row-major: terms.len() rows of doc_ids.len() cells
    cells: Vec<bool>,
}

impl TermDocumentMatrix {
    /// Terms are ordered by first appearance, walking documents in corpus
    /// order and keywords in their stored order.
    pub fn build(corpus: &Corpus) -> Result<Self> {
        if corpus.documents().iter().all(KeywordSet::is_empty) {
            return Err(Error::EmptyCorpus);
        }
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        let mut terms = Vec::new();
        for doc in corpus.documents() {
            for k in doc.keywords() {
                if !index.contains_key(k.as_str()) {
                    index.insert(k, terms.len());
                    terms.push(k.clone());
                }
            }
        }
        let n_docs = corpus.len();
        let mut cells = alloc::vec![false; terms.len() * n_docs];
        for (d, doc) in corpus.documents().iter().enumerate() {
            for k in doc.keywords() {
                cells[index[k.as_str()] * n_docs + d] = true;
            }
        }
        let doc_ids = corpus
            .documents()
            .iter()
            .map(|d| d.id().to_owned())
            .collect();
        Ok(TermDocumentMatrix {
            terms,
            doc_ids,
            cells,
        })
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn doc_ids(&self) -> &[String] {
        &self.doc_ids
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn n_docs(&self) -> usize {
        self.doc_ids.len()
    }

    pub fn cell(&self, term: usize, doc: usize) -> bool {
        self.cells[term * self.n_docs() + doc]
    }

    pub fn row(&self, term: &str) -> Option<&[bool]> {
        let t = self.terms.iter().position(|x| x == term)?;
        let n = self.n_docs();
        Some(&self.cells[t * n..(t + 1) * n])
    }

    pub fn get(&self, term: &str, doc_id: &str) -> Option<bool> {
        let d = self.doc_ids.iter().position(|x| x == doc_id)?;
        self.row(term).map(|r| r[d])
    }

    /// Number of documents containing `term` (0 if unknown).
    pub fn document_frequency(&self, term: &str) -> usize {
        self.row(term)
            .map_or(0, |r| r.iter().filter(|&&c| c).count())
    }

    /// All `(term, doc_id)` pairs whose cell is 1.
    pub fn incidences(&self) -> BTreeSet<(&str, &str)> {
        let mut out = BTreeSet::new();
        for (t, term) in self.terms.iter().enumerate() {
            for (d, doc) in self.doc_ids.iter().enumerate() {
                if self.cell(t, d) {
                    out.insert((term.as_str(), doc.as_str()));
                }
            }
        }
        out
    }
}

/// Token occurrence counts of one document, before deduplication.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermCounts {
    counts: BTreeMap<String, u32>,
    total: u32,
}

impl TermCounts {
    pub fn from_tokens<I, S>(tokens: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut tc = TermCounts::default();
        for t in tokens {
            *tc.counts.entry(t.into()).or_insert(0) += 1;
            tc.total += 1;
        }
        tc
    }

    pub fn count(&self, term: &str) -> u32 {
        self.counts.get(term).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.total
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TfIdfWeight {
    pub term: String,
    pub doc_id: String,
    pub tf: f64,
    pub idf: f64,
    pub weight: f64,
}

/// Occurrences of `term` over all token occurrences in the document.
pub fn tf(term: &str, doc: &TermCounts) -> Result<f64> {
    if doc.total() == 0 {
        return Err(Error::ZeroTokenDocument);
    }
    Ok(f64::from(doc.count(term)) / f64::from(doc.total()))
}

/// `log10(N / df)` with `N` the number of documents in the matrix.
pub fn idf(term: &str, matrix: &TermDocumentMatrix) -> Result<f64> {
    let df = matrix.document_frequency(term);
    if df == 0 {
        return Err(Error::TermNotInCorpus(term.to_owned()));
    }
    Ok(libm::log10(matrix.n_docs() as f64 / df as f64))
}

pub fn tfidf(
    term: &str,
    doc_id: &str,
    doc: &TermCounts,
    matrix: &TermDocumentMatrix,
) -> Result<TfIdfWeight> {
    let tf = tf(term, doc)?;
    let idf = idf(term, matrix)?;
    Ok(TfIdfWeight {
        term: term.to_owned(),
        doc_id: doc_id.to_owned(),
        tf,
        idf,
        weight: tf * idf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ks(id: &str, label: Option<&str>, words: &[&str]) -> KeywordSet {
        KeywordSet::new(id, label.map(String::from), words.iter().copied()).unwrap()
    }

    #[test]
    fn single_document_matrix() {
        let c = Corpus::new(vec![ks("d", None, &["a"])]).unwrap();
        let m = TermDocumentMatrix::build(&c).unwrap();
        assert_eq!((m.n_terms(), m.n_docs()), (1, 1));
        assert!(m.cell(0, 0));
    }

    #[test]
    fn empty_corpus_rejected() {
        let c = Corpus::new(vec![ks("d", None, &[])]).unwrap();
        assert_eq!(TermDocumentMatrix::build(&c), Err(Error::EmptyCorpus));
        let c = Corpus::new(vec![]).unwrap();
        assert_eq!(TermDocumentMatrix::build(&c), Err(Error::EmptyCorpus));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let r = Corpus::new(vec![ks("d", None, &["a"]), ks("d", None, &["b"])]);
        assert_eq!(r, Err(Error::DuplicateDocumentId("d".into())));
    }

    #[test]
    fn classes_in_first_appearance_order() {
        let c = Corpus::new(vec![
            ks("1", Some("b"), &["x"]),
            ks("2", None, &["x"]),
            ks("3", Some("a"), &["x"]),
            ks("4", Some("b"), &["x"]),
        ])
        .unwrap();
        assert_eq!(c.classes(), ["b", "a"]);
        assert_eq!(c.documents_of("b").count(), 2);
    }

    #[test]
    fn tf_examples() {
        let doc = TermCounts::from_tokens(["a", "b", "c", "d"]);
        assert_eq!(tf("z", &doc).unwrap(), 0.0);
        assert_eq!(tf("a", &doc).unwrap(), 0.25);
        assert_eq!(tf("a", &TermCounts::from_tokens(["a", "a"])).unwrap(), 1.0);
        assert_eq!(
            tf("a", &TermCounts::default()),
            Err(Error::ZeroTokenDocument)
        );
    }

    #[test]
    fn idf_examples() {
        let docs: Vec<_> = (0..10)
            .map(|i| {
                let id = alloc::format!("d{i}");
                if i == 0 {
                    ks(&id, None, &["all", "rare"])
                } else {
                    ks(&id, None, &["all"])
                }
            })
            .collect();
        let m = TermDocumentMatrix::build(&Corpus::new(docs).unwrap()).unwrap();
        assert_eq!(idf("all", &m).unwrap(), 0.0);
        assert!((idf("rare", &m).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(idf("none", &m), Err(Error::TermNotInCorpus("none".into())));
    }

    #[test]
    fn tfidf_is_product() {
        let a = ks("a", None, &["x", "y"]);
        let b = ks("b", None, &["y"]);
        let m = TermDocumentMatrix::build(&Corpus::new(vec![a, b]).unwrap()).unwrap();
        let w = tfidf("x", "a", &TermCounts::from_tokens(["x", "x", "y"]), &m).unwrap();
        assert_eq!(w.weight, w.tf * w.idf);
        assert!((w.tf - 2.0 / 3.0).abs() < 1e-15);
        assert!((w.idf - libm::log10(2.0)).abs() < 1e-15);
    }
}
