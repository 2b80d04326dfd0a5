//! Text formats: word lists, synonym maps, corpus files, transaction files,
//! and the TSV outputs of the command-line tool.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use fpnb_core::preprocess::word_list;
use fpnb_core::{
    preprocess_document, Classification, FrequentItemset, KeywordSet, PipelineConfig, RawDocument,
    TermDocumentMatrix, TransactionDb,
};

use crate::FormatError;

fn parse_err(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        reason: reason.into(),
    }
}

fn check_word(line: usize, w: &str) -> Result<(), FormatError> {
    if w.chars().any(|c| c.is_whitespace() || c.is_uppercase()) {
        return Err(parse_err(
            line,
            format!("`{w}` is not a single lowercase word"),
        ));
    }
    Ok(())
}

/// One lowercase word per line; `#` lines and blank lines are skipped.
pub fn parse_word_list(text: &str) -> Result<BTreeSet<String>, FormatError> {
    word_list(text)
        .map(|(line, w)| check_word(line, w).map(|_| w.to_string()))
        .collect()
}

/// `variant canonical` pairs, one per line.
pub fn parse_synonyms(text: &str) -> Result<BTreeMap<String, String>, FormatError> {
    let mut out = BTreeMap::new();
    for (line, l) in word_list(text) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [variant, canonical] = fields[..] else {
            return Err(parse_err(line, "expected `variant canonical`"));
        };
        check_word(line, variant)?;
        check_word(line, canonical)?;
        if out
            .insert(variant.to_string(), canonical.to_string())
            .is_some()
        {
            return Err(parse_err(line, format!("duplicate variant `{variant}`")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    /// `id TAB label TAB text`
    Raw,
    /// `id TAB label TAB space-separated keywords`
    Pre,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusFile {
    Raw(Vec<RawDocument>),
    Pre(Vec<KeywordSet>),
}

impl CorpusFile {
    pub fn format(&self) -> CorpusFormat {
        match self {
            CorpusFile::Raw(_) => CorpusFormat::Raw,
            CorpusFile::Pre(_) => CorpusFormat::Pre,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            CorpusFile::Raw(d) => d.len(),
            CorpusFile::Pre(d) => d.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Keyword sets, running raw documents through the pipeline.
    pub fn keyword_sets(&self, cfg: &PipelineConfig) -> Result<Vec<KeywordSet>, FormatError> {
        match self {
            CorpusFile::Pre(docs) => Ok(docs.clone()),
            CorpusFile::Raw(docs) => docs
                .iter()
                .map(|d| preprocess_document(d, cfg).map_err(FormatError::from))
                .collect(),
        }
    }
}

/// Parses a corpus file. The first line declares the format
/// (`#format: raw` or `#format: pre`); an empty file is an empty corpus.
/// Records have either three tab-separated fields (id, label, body) or two
/// (id, body); an empty label means unlabeled.
pub fn parse_corpus(text: &str) -> Result<CorpusFile, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)));
    let format = loop {
        match lines.next() {
            None => return Ok(CorpusFile::Pre(Vec::new())),
            Some((_, l)) if l.trim().is_empty() => continue,
            Some((n, l)) => {
                let Some(decl) = l.strip_prefix("#format:") else {
                    return Err(parse_err(
                        n,
                        "first line must be `#format: raw` or `#format: pre`",
                    ));
                };
                break match decl.trim() {
                    "raw" => CorpusFormat::Raw,
                    "pre" => CorpusFormat::Pre,
                    other => return Err(parse_err(n, format!("unknown corpus format `{other}`"))),
                };
            }
        }
    };

    let mut ids = BTreeSet::new();
    let mut raw = Vec::new();
    let mut pre = Vec::new();
    for (n, l) in lines {
        if l.trim().is_empty() || l.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = l.split('\t').collect();
        let (id, label, body) = match fields[..] {
            [id, label, body] => (id, (!label.is_empty()).then(|| label.to_string()), body),
            [id, body] => (id, None, body),
            _ => {
                return Err(parse_err(
                    n,
                    format!(
                        "expected 2 or 3 tab-separated fields, found {}",
                        fields.len()
                    ),
                ))
            }
        };
        if id.is_empty() {
            return Err(parse_err(n, "empty document id"));
        }
        if !ids.insert(id.to_string()) {
            return Err(parse_err(n, format!("duplicate document id `{id}`")));
        }
        match format {
            CorpusFormat::Raw => raw.push(RawDocument {
                id: id.into(),
                label,
                text: body.into(),
            }),
            CorpusFormat::Pre => {
                let words = body.split_whitespace().map(str::to_lowercase);
                let ks =
                    KeywordSet::new(id, label, words).map_err(|e| parse_err(n, e.to_string()))?;
                pre.push(ks);
            }
        }
    }
    Ok(match format {
        CorpusFormat::Raw => CorpusFile::Raw(raw),
        CorpusFormat::Pre => CorpusFile::Pre(pre),
    })
}

/// One transaction per line, items separated by whitespace.
pub fn parse_transactions(text: &str) -> TransactionDb<String> {
    TransactionDb::new(
        text.lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|l| l.split_whitespace().map(String::from).collect::<Vec<_>>()),
    )
}

/// Header row of document ids, then one row per term of `0`/`1` cells.
pub fn matrix_tsv(m: &TermDocumentMatrix) -> String {
    let mut out = String::from("term");
    for id in m.doc_ids() {
        out.push('\t');
        out.push_str(id);
    }
    out.push('\n');
    for (t, term) in m.terms().iter().enumerate() {
        out.push_str(term);
        for d in 0..m.n_docs() {
            out.push_str(if m.cell(t, d) { "\t1" } else { "\t0" });
        }
        out.push('\n');
    }
    out
}

/// `items TAB support` per line, items comma-joined.
pub fn itemsets_tsv(sets: &[FrequentItemset<String>]) -> String {
    let mut sorted: Vec<&FrequentItemset<String>> = sets.iter().collect();
    sorted.sort();
    let mut out = String::new();
    for f in sorted {
        let _ = writeln!(out, "{}\t{}", f.items.join(","), f.support);
    }
    out
}

/// `x` with ten significant digits in positional notation.
pub fn format_score(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.9e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    let decimals = (9 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// `id TAB predicted TAB class=score ... TAB sets`, sets as `a,b;c,d`
/// (`-` when nothing matched).
pub fn classification_line(c: &Classification) -> String {
    let mut out = format!("{}\t{}", c.doc_id, c.predicted);
    for (name, s) in &c.scores {
        let _ = write!(out, "\t{name}={}", format_score(*s));
    }
    let sets: Vec<String> = c.matched.sets.iter().map(|s| s.join(",")).collect();
    out.push('\t');
    out.push_str(if sets.is_empty() { "-" } else { "" });
    out.push_str(&sets.join(";"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_lists() {
        let words = parse_word_list("# c\nthe\n\nand\n").unwrap();
        assert_eq!(
            words,
            BTreeSet::from(["the".to_string(), "and".to_string()])
        );
        assert!(matches!(
            parse_word_list("ok\nNot\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_word_list("two words\n"),
            Err(FormatError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn synonyms() {
        let s = parse_synonyms("# v c\nsite website\n").unwrap();
        assert_eq!(s["site"], "website");
        assert!(matches!(
            parse_synonyms("site\n"),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(parse_synonyms("a b\na c\n").is_err());
    }

    #[test]
    fn corpus_formats() {
        let raw = parse_corpus("#format: raw\nd1\tx\tSome text.\n# note\nd2\tMore\n").unwrap();
        let CorpusFile::Raw(docs) = raw else { panic!() };
        assert_eq!(docs[0].label.as_deref(), Some("x"));
        assert_eq!(docs[1].label, None);
        assert_eq!(docs[1].text, "More");

        let pre = parse_corpus("#format: pre\nd1\t\talpha beta alpha\n").unwrap();
        let CorpusFile::Pre(docs) = pre else { panic!() };
        assert_eq!(docs[0].keywords(), ["alpha", "beta"]);
        assert_eq!(docs[0].label(), None);

        assert!(parse_corpus("").unwrap().is_empty());
    }

    #[test]
    fn corpus_errors_carry_line_numbers() {
        let cases = [
            ("d1\tx\ttext\n", 1),
            ("#format: xml\n", 1),
            ("#format: raw\nd1\tx\ty\tz\n", 2),
            ("#format: raw\nd1\tx\ta\nd1\tx\tb\n", 3),
            ("#format: pre\nd1\tx\ta,b\n", 2),
            ("#format: raw\n\tx\ta\n", 2),
        ];
        for (text, line) in cases {
            match parse_corpus(text) {
                Err(FormatError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn transactions() {
        let db = parse_transactions("# c\na b a\n\nc\n");
        assert_eq!(db.len(), 2);
        assert_eq!(db.transactions()[0], ["a", "b"]);
    }

    #[test]
    fn score_formatting() {
        assert_eq!(format_score(0.0162), "0.01620000000");
        assert_eq!(format_score(0.6), "0.6000000000");
        assert_eq!(format_score(1.0), "1.000000000");
        assert_eq!(format_score(0.00075810), "0.0007581000000");
        assert_eq!(format_score(9.99999999999e-3), "0.01000000000");
        assert_eq!(format_score(1234.5), "1234.500000");
    }
}
