#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use fpnb::formats::{parse_corpus, parse_synonyms, parse_word_list};
use fpnb_core::{KeywordSet, PipelineConfig};

pub const SN: &str = "Social Network";
pub const CN: &str = "Computer Network";

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn fixture(name: &str) -> PathBuf {
    root().join("fixtures").join(name)
}

pub fn data(name: &str) -> PathBuf {
    root().join("crates/core/data").join(name)
}

pub fn path_str(p: &Path) -> String {
    p.to_str().unwrap().to_string()
}

pub fn read_fixture(name: &str) -> String {
    fs::read_to_string(fixture(name)).unwrap()
}

/// Shipped stopwords, lexicon and synonyms; singularize on, stemming off.
pub fn test_config() -> PipelineConfig {
    PipelineConfig {
        keyword_lexicon: Some(
            parse_word_list(&fs::read_to_string(data("lexicon.txt")).unwrap()).unwrap(),
        ),
        synonyms: parse_synonyms(&fs::read_to_string(data("synonyms.txt")).unwrap()).unwrap(),
        ..PipelineConfig::default()
    }
}

/// [`test_config`] plus the training-set unwanted words.
pub fn train_config() -> PipelineConfig {
    let mut cfg = test_config();
    cfg.stopwords
        .extend(parse_word_list(&fs::read_to_string(data("unwanted-train.txt")).unwrap()).unwrap());
    cfg
}

pub fn keyword_sets(fixture_name: &str, cfg: &PipelineConfig) -> Vec<KeywordSet> {
    parse_corpus(&read_fixture(fixture_name))
        .unwrap()
        .keyword_sets(cfg)
        .unwrap()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the tool in-process.
pub fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fpnb").chain(args.iter().copied());
    let code = fpnb::cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Flags that reproduce the printed keyword tables from the raw texts.
pub fn lexicon_flags() -> Vec<String> {
    vec![
        "--lexicon".into(),
        path_str(&data("lexicon.txt")),
        "--synonyms".into(),
        path_str(&data("synonyms.txt")),
    ]
}
