//! Plain-text model files.
//!
//! ```text
//! #fpnb-model v1
//! minsup 2
//! pipeline stemming=off singularize=on
//! class Social Network 6
//! class Computer Network 4
//! vocab 24
//! community,interest 3 0
//! ```
//!
//! Itemset lines separate the items from each count with a tab.
//! The `pipeline` line is optional. Only counts are stored; priors and
//! likelihoods are recomputed on load.

use std::fmt::Write as _;

use fpnb_core::{ClassInfo, ClassModel, PipelineFlags, Stemming};

use crate::FormatError;

pub const MODEL_HEADER: &str = "#fpnb-model v1";

fn parse_err(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        reason: reason.into(),
    }
}

pub fn flags_line(flags: PipelineFlags) -> String {
    let stem = match flags.stemming {
        Stemming::Off => "off",
        Stemming::Porter => "porter",
    };
    let sing = if flags.singularize { "on" } else { "off" };
    format!("stemming={stem} singularize={sing}")
}

fn parse_flags(line: usize, s: &str) -> Result<PipelineFlags, FormatError> {
    let mut flags = PipelineFlags::default();
    let (mut stem_seen, mut sing_seen) = (false, false);
    for field in s.split_whitespace() {
        match field.split_once('=') {
            Some(("stemming", v)) if !stem_seen => {
                stem_seen = true;
                flags.stemming = match v {
                    "off" => Stemming::Off,
                    "porter" => Stemming::Porter,
                    _ => return Err(parse_err(line, format!("unknown stemming `{v}`"))),
                };
            }
            Some(("singularize", v)) if !sing_seen => {
                sing_seen = true;
                flags.singularize = match v {
                    "on" => true,
                    "off" => false,
                    _ => return Err(parse_err(line, format!("unknown singularize `{v}`"))),
                };
            }
            _ => return Err(parse_err(line, format!("bad pipeline field `{field}`"))),
        }
    }
    if !(stem_seen && sing_seen) {
        return Err(parse_err(line, "pipeline needs stemming= and singularize="));
    }
    Ok(flags)
}

pub fn save_model(model: &ClassModel) -> String {
    let mut out = format!("{MODEL_HEADER}\nminsup {}\n", model.min_sup());
    if let Some(flags) = model.pipeline() {
        let _ = writeln!(out, "pipeline {}", flags_line(flags));
    }
    for c in model.classes() {
        let _ = writeln!(out, "class {} {}", c.name, c.doc_count);
    }
    let _ = writeln!(out, "vocab {}", model.vocabulary().len());
    for (set, counts) in model.entries() {
        out.push_str(&set.join(","));
        for n in counts {
            let _ = write!(out, "\t{n}");
        }
        out.push('\n');
    }
    out
}

fn keyword<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.strip_prefix(key)?.strip_prefix(' ')
}

fn parse_u32(line: usize, what: &str, s: &str) -> Result<u32, FormatError> {
    s.parse()
        .map_err(|_| parse_err(line, format!("{what} `{s}` is not a non-negative integer")))
}

pub fn load_model(text: &str) -> Result<ClassModel, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).peekable();

    match lines.next() {
        None => return Err(FormatError::MissingSection("#fpnb-model")),
        Some((_, l)) if l == MODEL_HEADER => {}
        Some((_, l)) => {
            return Err(match l.strip_prefix("#fpnb-model ") {
                Some(v) => FormatError::Version(v.to_string()),
                None => parse_err(1, format!("expected `{MODEL_HEADER}`")),
            })
        }
    }

    let min_sup = match lines.next() {
        Some((n, l)) => match keyword(l, "minsup") {
            Some(v) => parse_u32(n, "minsup", v)?,
            None => return Err(parse_err(n, "expected `minsup <int>`")),
        },
        None => return Err(FormatError::MissingSection("minsup")),
    };

    let mut pipeline = None;
    if let Some(&(n, l)) = lines.peek() {
        if let Some(v) = keyword(l, "pipeline") {
            pipeline = Some(parse_flags(n, v)?);
            lines.next();
        }
    }

    let mut classes = Vec::new();
    while let Some(&(n, l)) = lines.peek() {
        let Some(rest) = keyword(l, "class") else {
            break;
        };
        let Some((name, count)) = rest.rsplit_once(' ') else {
            return Err(parse_err(n, "expected `class <name> <doc_count>`"));
        };
        classes.push(ClassInfo {
            name: name.to_string(),
            doc_count: parse_u32(n, "doc_count", count)?,
        });
        lines.next();
    }
    if classes.is_empty() {
        return Err(match lines.peek() {
            None => FormatError::MissingSection("class"),
            Some(&(n, _)) => parse_err(n, "expected `class <name> <doc_count>`"),
        });
    }

    let vocab_size = match lines.next() {
        Some((n, l)) => match keyword(l, "vocab") {
            Some(v) => parse_u32(n, "vocab", v)? as usize,
            None => return Err(parse_err(n, "expected `vocab <size>`")),
        },
        None => return Err(FormatError::MissingSection("vocab")),
    };

    let mut entries = Vec::with_capacity(vocab_size);
    for (n, l) in lines {
        if entries.len() == vocab_size {
            return Err(parse_err(
                n,
                format!("unexpected line after {vocab_size} itemset lines"),
            ));
        }
        let mut fields = l.split('\t');
        let items: Vec<String> = fields
            .next()
            .unwrap_or("")
            .split(',')
            .map(String::from)
            .collect();
        let counts = fields
            .map(|f| parse_u32(n, "count", f))
            .collect::<Result<Vec<_>, _>>()?;
        if counts.len() != classes.len() {
            return Err(parse_err(
                n,
                format!("expected {} counts, found {}", classes.len(), counts.len()),
            ));
        }
        entries.push((items, counts));
    }
    if entries.len() != vocab_size {
        return Err(FormatError::Truncated {
            expected: vocab_size,
            found: entries.len(),
        });
    }

    Ok(ClassModel::from_counts(
        classes, min_sup, pipeline, entries,
    )?)
}
