#![allow(dead_code)]

use std::collections::BTreeMap;

use fpnb_core::preprocess::word_list;
use fpnb_core::{KeywordSet, PipelineConfig, RawDocument};

pub const TRAIN_RAW: &str = include_str!("../../../../fixtures/train_raw.tsv");
pub const TRAIN_PRE: &str = include_str!("../../../../fixtures/train_pre.tsv");
pub const TEST_RAW: &str = include_str!("../../../../fixtures/test_raw.tsv");
pub const TEST_PRE: &str = include_str!("../../../../fixtures/test_pre.tsv");
pub const INCIDENCE: &str = include_str!("../../../../fixtures/incidence_printed.tsv");
pub const LIKELIHOODS: &str = include_str!("../../../../fixtures/likelihoods.tsv");
pub const SCORES: &str = include_str!("../../../../fixtures/test_scores.tsv");

const LEXICON: &str = include_str!("../../data/lexicon.txt");
const UNWANTED_TRAIN: &str = include_str!("../../data/unwanted-train.txt");
const SYNONYMS: &str = include_str!("../../data/synonyms.txt");

pub const SN: &str = "Social Network";
pub const CN: &str = "Computer Network";

fn rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').collect())
}

fn label(s: &str) -> Option<String> {
    (!s.is_empty()).then(|| s.to_string())
}

pub fn pre_docs(text: &str) -> Vec<KeywordSet> {
    rows(text)
        .map(|r| KeywordSet::new(r[0], label(r[1]), r[2].split(' ')).unwrap())
        .collect()
}

pub fn raw_docs(text: &str) -> Vec<RawDocument> {
    rows(text)
        .map(|r| RawDocument::new(r[0], label(r[1]), r[2]).unwrap())
        .collect()
}

fn words(text: &str) -> impl Iterator<Item = String> + '_ {
    word_list(text).map(|(_, w)| w.to_string())
}

/// Shipped stopwords, lexicon and synonyms; singularize on, stemming off.
pub fn test_config() -> PipelineConfig {
    PipelineConfig {
        keyword_lexicon: Some(words(LEXICON).collect()),
        synonyms: word_list(SYNONYMS)
            .map(|(_, l)| {
                let (a, b) = l.split_once(' ').unwrap();
                (a.to_string(), b.trim().to_string())
            })
            .collect(),
        ..PipelineConfig::default()
    }
}

/// [`test_config`] plus the training-set unwanted words.
pub fn train_config() -> PipelineConfig {
    let mut cfg = test_config();
    cfg.stopwords.extend(words(UNWANTED_TRAIN));
    cfg
}

/// Printed incidence table as (term -> cells).
pub fn printed_incidence() -> (Vec<String>, BTreeMap<String, Vec<bool>>) {
    let mut it = rows(INCIDENCE);
    let header = it.next().unwrap();
    let docs = header[1..].iter().map(|s| s.to_string()).collect();
    let cells = it
        .map(|r| (r[0].to_string(), r[1..].iter().map(|c| *c == "1").collect()))
        .collect();
    (docs, cells)
}

/// Printed likelihood rows: sorted word set, SN value, CN value.
pub fn printed_likelihoods() -> Vec<(Vec<String>, f64, f64)> {
    rows(LIKELIHOODS)
        .map(|r| {
            let mut set: Vec<String> = r[0].split(',').map(String::from).collect();
            set.sort();
            (set, r[1].parse().unwrap(), r[2].parse().unwrap())
        })
        .collect()
}

pub struct ScoreRow {
    pub id: String,
    pub sets: Vec<Vec<String>>,
    pub sn: f64,
    pub cn: f64,
    pub target: String,
}

pub fn printed_scores() -> Vec<ScoreRow> {
    rows(SCORES)
        .map(|r| {
            let mut sets: Vec<Vec<String>> = r[1]
                .split(';')
                .map(|s| {
                    let mut v: Vec<String> = s.split(',').map(String::from).collect();
                    v.sort();
                    v
                })
                .collect();
            sets.sort();
            ScoreRow {
                id: r[0].to_string(),
                sets,
                sn: r[2].parse().unwrap(),
                cn: r[3].parse().unwrap(),
                target: r[4].to_string(),
            }
        })
        .collect()
}
