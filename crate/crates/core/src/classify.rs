//! Scoring documents against a trained [`ClassModel`].
//!
//! A document's features are the inclusion-maximal vocabulary sets it
//! contains. Each class scores `prior * product(likelihood)` over those
//! sets; with no match the score falls back to the prior alone.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::nbmodel::ClassModel;
use crate::preprocess::KeywordSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchResult {
    indices: Vec<usize>,
    /// Matched vocabulary sets, in vocabulary order.
    pub sets: Vec<Vec<String>>,
    /// Distinct document keywords covered by the matched sets.
    pub coverage: usize,
}

impl MatchResult {
    /// Vocabulary positions of the matched sets.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub doc_id: String,
    /// Per class, in model declaration order.
    pub scores: Vec<(String, f64)>,
    pub predicted: String,
    pub matched: MatchResult,
    /// No vocabulary set matched; scores are the priors.
    pub fallback: bool,
}

/// Inclusion-maximal vocabulary sets contained in the document.
pub fn match_sets(keywords: &KeywordSet, model: &ClassModel) -> MatchResult {
    let doc = keywords.to_set();
    let candidates: Vec<usize> = model
        .vocabulary()
        .iter()
        .enumerate()
        .filter(|(_, set)| set.iter().all(|k| doc.contains(k.as_str())))
        .map(|(i, _)| i)
        .collect();

    let vocab = model.vocabulary();
    let is_proper_subset = |a: &[String], b: &[String]| {
        a.len() < b.len() && a.iter().all(|k| b.binary_search(k).is_ok())
    };
    let indices: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| {
            !candidates
                .iter()
                .any(|&j| is_proper_subset(&vocab[i], &vocab[j]))
        })
        .collect();

    let covered: BTreeSet<&str> = indices
        .iter()
        .flat_map(|&i| vocab[i].iter().map(String::as_str))
        .collect();
    MatchResult {
        sets: indices.iter().map(|&i| vocab[i].clone()).collect(),
        coverage: covered.len(),
        indices,
    }
}

/// Scores every class and picks the highest; ties go to the class declared
/// first.
pub fn score(keywords: &KeywordSet, model: &ClassModel) -> Classification {
    let matched = match_sets(keywords, model);
    let scores: Vec<f64> = (0..model.classes().len())
        .map(|j| {
            matched
                .indices()
                .iter()
                .fold(model.prior(j), |acc, &s| acc * model.likelihood(s, j))
        })
        .collect();

    let mut best = 0;
    for (j, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = j;
        }
    }
    Classification {
        doc_id: String::from(keywords.id()),
        scores: model
            .classes()
            .iter()
            .map(|c| c.name.clone())
            .zip(scores)
            .collect(),
        predicted: model.classes()[best].name.clone(),
        fallback: matched.is_empty(),
        matched,
    }
}

pub fn classify_batch(docs: &[KeywordSet], model: &ClassModel) -> Vec<Classification> {
    docs.iter().map(|d| score(d, model)).collect()
}
