//! Raw text to keyword transactions.
//!
//! The pipeline is: tokenize, drop stopwords, resolve each token against the
//! keyword lexicon (when one is configured), singularize, optionally stem,
//! and deduplicate. With a lexicon, a token is kept if it or one of its
//! inflection variants (plural stripped, `-ed`/`-ing` undone, synonym
//! mapped) is a lexicon entry; the entry is what gets kept.

pub mod porter;

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use porter::stem as porter_stem;

/// The stopword list used when none is supplied. One word per line, `#` comments.
pub const DEFAULT_STOPWORDS: &str = include_str!("../../data/stopwords.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDocument {
    pub id: String,
    pub label: Option<String>,
    pub text: String,
}

impl RawDocument {
    pub fn new(
        id: impl Into<String>,
        label: Option<impl Into<String>>,
        text: impl Into<String>,
    ) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::EmptyDocumentId);
        }
        Ok(RawDocument {
            id,
            label: label.map(Into::into),
            text: text.into(),
        })
    }
}

/// A document reduced to its distinct keywords.
///
/// Keywords keep the order in which they first appeared; equality ignores
/// that order.
#[derive(Debug, Clone, Eq)]
pub struct KeywordSet {
    id: String,
    label: Option<String>,
    keywords: Vec<String>,
}

impl KeywordSet {
    pub fn new<I, S>(id: impl Into<String>, label: Option<String>, keywords: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::EmptyDocumentId);
        }
        let mut seen = BTreeSet::new();
        let mut ordered = Vec::new();
        for k in keywords {
            let k = k.into();
            validate_keyword(&k)?;
            if seen.insert(k.clone()) {
                ordered.push(k);
            }
        }
        Ok(KeywordSet {
            id,
            label,
            keywords: ordered,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Keywords in first-appearance order.
    pub fn keywords(&self) -> &[String] {
        &self.keywords
    }

    pub fn len(&self) -> usize {
        self.keywords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keywords.is_empty()
    }

    pub fn contains(&self, keyword: &str) -> bool {
        self.keywords.iter().any(|k| k == keyword)
    }

    pub fn to_set(&self) -> BTreeSet<&str> {
        self.keywords.iter().map(String::as_str).collect()
    }

    /// Returns a copy with `keyword` appended (no-op if already present).
    pub fn with_keyword(&self, keyword: impl Into<String>) -> Result<Self> {
        let mut next = self.clone();
        let keyword = keyword.into();
        validate_keyword(&keyword)?;
        if !next.contains(&keyword) {
            next.keywords.push(keyword);
        }
        Ok(next)
    }
}

impl PartialEq for KeywordSet {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.label == other.label && self.to_set() == other.to_set()
    }
}

pub(crate) fn validate_keyword(k: &str) -> Result<()> {
    let ok = !k.is_empty()
        && !k
            .chars()
            .any(|c| c.is_whitespace() || c.is_uppercase() || c == ',' || c.is_control());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidKeyword(k.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stemming {
    #[default]
    Off,
    Porter,
}

/// The normalization switches that change what a keyword looks like. Models
/// record these so that classification can flag a mismatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineFlags {
    pub stemming: Stemming,
    pub singularize: bool,
}

impl Default for PipelineFlags {
    fn default() -> Self {
        PipelineFlags {
            stemming: Stemming::Off,
            singularize: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConfig {
    pub stopwords: BTreeSet<String>,
    /// Allow-list of keywords; `None` keeps every non-stopword token.
    pub keyword_lexicon: Option<BTreeSet<String>>,
    /// Variant to canonical form, applied before the lexicon check.
    pub synonyms: BTreeMap<String, String>,
    pub stemming: Stemming,
    pub singularize: bool,
}

impl Default for PipelineConfig {
    /// Shipped stopwords, no lexicon, singularize on, stemming off.
    fn default() -> Self {
        PipelineConfig {
            stopwords: word_list(DEFAULT_STOPWORDS)
                .map(|(_, w)| w.to_owned())
                .collect(),
            keyword_lexicon: None,
            synonyms: BTreeMap::new(),
            stemming: Stemming::Off,
            singularize: true,
        }
    }
}

impl PipelineConfig {
    pub fn flags(&self) -> PipelineFlags {
        PipelineFlags {
            stemming: self.stemming,
            singularize: self.singularize,
        }
    }

    pub fn with_flags(mut self, flags: PipelineFlags) -> Self {
        self.stemming = flags.stemming;
        self.singularize = flags.singularize;
        self
    }

    fn is_stopword(&self, word: &str) -> bool {
        self.stopwords.contains(word)
    }

    fn canonical(&self, word: String) -> String {
        match self.synonyms.get(&word) {
            Some(c) => c.clone(),
            None => word,
        }
    }

    fn normalize(&self, token: &str) -> Option<String> {
        if self.is_stopword(token) {
            return None;
        }
        let resolved = match &self.keyword_lexicon {
            None if self.singularize => self.canonical(singularize(token)),
            None => self.canonical(token.to_owned()),
            Some(lexicon) => self.resolve(token, lexicon)?,
        };
        let out = match self.stemming {
            Stemming::Off => resolved,
            Stemming::Porter => porter::stem(&resolved),
        };
        (!self.is_stopword(&out)).then_some(out)
    }

    fn resolve(&self, token: &str, lexicon: &BTreeSet<String>) -> Option<String> {
        let mut forms: Vec<String> = alloc::vec![token.to_owned()];
        if self.singularize {
            forms.push(singularize(token));
            if let Some(stripped) = token.strip_suffix('s') {
                if !stripped.ends_with('s') {
                    forms.push(stripped.to_owned());
                }
            }
        }
        let inflected = forms.len();
        for i in 0..inflected {
            for (suffix, replacement) in [("ed", "e"), ("ed", ""), ("ing", "e"), ("ing", "")] {
                if let Some(stem) = forms[i].strip_suffix(suffix) {
                    if !stem.is_empty() {
                        forms.push(stem.to_owned() + replacement);
                    }
                }
            }
        }
        forms
            .into_iter()
            .map(|f| self.canonical(f))
            .find(|f| lexicon.contains(f) && !self.is_stopword(f))
    }
}

/// Non-comment, non-blank lines of a word-list file with their 1-based line
/// numbers, trimmed.
pub fn word_list(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Splits on every non-alphabetic character and lowercases.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphabetic())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Rule-based plural stripping: `-ies` to `-y` (words longer than four
/// letters), `-ses` to `-s`, and a final `s` not preceded by another `s`
/// (words longer than three letters).
pub fn singularize(word: &str) -> String {
    let len = word.chars().count();
    if len > 4 {
        if let Some(stem) = word.strip_suffix("ies") {
            return stem.to_string() + "y";
        }
    }
    if let Some(stem) = word.strip_suffix("ses") {
        return stem.to_string() + "s";
    }
    if len > 3 && word.ends_with('s') && !word.ends_with("ss") {
        return word[..word.len() - 1].to_string();
    }
    word.to_string()
}

/// Normalized tokens of `text` before deduplication, in order.
pub fn preprocess_tokens(text: &str, cfg: &PipelineConfig) -> Vec<String> {
    tokenize(text)
        .iter()
        .filter_map(|t| cfg.normalize(t))
        .collect()
}

pub fn preprocess_document(doc: &RawDocument, cfg: &PipelineConfig) -> Result<KeywordSet> {
    KeywordSet::new(
        doc.id.clone(),
        doc.label.clone(),
        preprocess_tokens(&doc.text, cfg),
    )
}
