//! The `fpnb` command-line tool.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on unreadable or malformed
//! data.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fpnb_core::{
    build_fp_tree, classify_batch, dump_tree, train, Corpus, Miner, PipelineConfig, Stemming,
    TermDocumentMatrix,
};

use crate::formats::{
    classification_line, itemsets_tsv, matrix_tsv, parse_corpus, parse_synonyms,
    parse_transactions, parse_word_list, CorpusFile,
};
use crate::model_file::{flags_line, load_model, save_model};
use crate::FormatError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fpnb",
    version,
    about = "Frequent word-set Naive Bayes document classifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Train a model from a labeled corpus and print a training report.
    Train(TrainArgs),
    /// Classify documents against a saved model, one TSV row per document.
    Classify(ClassifyArgs),
    /// Mine frequent itemsets from a transaction file.
    Mine(MineArgs),
    /// Print the term-document incidence matrix of a corpus.
    Matrix(MatrixArgs),
    /// Print the FP-tree built from a transaction file.
    InspectTree(TreeArgs),
}

fn min_sup_parser() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StemArg {
    Off,
    Porter,
}

#[derive(Debug, Args)]
struct PipelineArgs {
    /// Extra stopword file, one word per line (repeatable).
    #[arg(long = "stopwords", value_name = "FILE")]
    stopwords: Vec<PathBuf>,
    /// Do not use the built-in stopword list.
    #[arg(long)]
    no_default_stopwords: bool,
    /// Keep only keywords listed in this file.
    #[arg(long, value_name = "FILE")]
    lexicon: Option<PathBuf>,
    /// `variant canonical` pairs applied before the lexicon check.
    #[arg(long, value_name = "FILE")]
    synonyms: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "off")]
    stem: StemArg,
    /// Keep plural forms as they are.
    #[arg(long)]
    no_singularize: bool,
}

#[derive(Debug, Args)]
struct TrainArgs {
    #[arg(long, value_name = "FILE")]
    corpus: PathBuf,
    #[arg(long, value_parser = min_sup_parser())]
    min_sup: u32,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long, value_name = "FILE")]
    model_out: PathBuf,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, value_name = "FILE")]
    model: PathBuf,
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
}

#[derive(Debug, Args)]
struct MineArgs {
    #[arg(long, value_name = "FILE")]
    transactions: PathBuf,
    #[arg(long, value_parser = min_sup_parser())]
    min_sup: u32,
    #[arg(long, default_value_t = 1)]
    min_size: usize,
    /// Mine single-path trees recursively instead of enumerating the path.
    #[arg(long)]
    no_single_path: bool,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[arg(long, value_name = "FILE")]
    corpus: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
}

#[derive(Debug, Args)]
struct TreeArgs {
    #[arg(long, value_name = "FILE")]
    transactions: PathBuf,
    #[arg(long, value_parser = min_sup_parser())]
    min_sup: u32,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
struct DataError(String);

impl DataError {
    fn in_file(path: &Path, e: impl std::fmt::Display) -> Self {
        DataError(format!("{}: {e}", path.display()))
    }
}

impl From<fpnb_core::Error> for DataError {
    fn from(e: fpnb_core::Error) -> Self {
        DataError(e.to_string())
    }
}

type CmdResult = Result<(), DataError>;

fn read(path: &Path) -> Result<String, DataError> {
    fs::read_to_string(path).map_err(|e| DataError::in_file(path, e))
}

fn parse_file<T>(
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T, FormatError>,
) -> Result<T, DataError> {
    parse(&read(path)?).map_err(|e| DataError::in_file(path, e))
}

fn pipeline_config(args: &PipelineArgs) -> Result<PipelineConfig, DataError> {
    let mut cfg = PipelineConfig::default();
    if args.no_default_stopwords {
        cfg.stopwords.clear();
    }
    for path in &args.stopwords {
        cfg.stopwords.extend(parse_file(path, parse_word_list)?);
    }
    if let Some(path) = &args.lexicon {
        cfg.keyword_lexicon = Some(parse_file(path, parse_word_list)?);
    }
    if let Some(path) = &args.synonyms {
        cfg.synonyms = parse_file(path, parse_synonyms)?;
    }
    cfg.stemming = match args.stem {
        StemArg::Off => Stemming::Off,
        StemArg::Porter => Stemming::Porter,
    };
    cfg.singularize = !args.no_singularize;
    Ok(cfg)
}

fn write_out(out: &mut dyn Write, s: &str) -> CmdResult {
    out.write_all(s.as_bytes())
        .map_err(|e| DataError(format!("writing output: {e}")))
}

fn cmd_train(a: &TrainArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = pipeline_config(&a.pipeline)?;
    let file = parse_file(&a.corpus, parse_corpus)?;
    let docs = file
        .keyword_sets(&cfg)
        .map_err(|e| DataError::in_file(&a.corpus, e))?;
    let mut model = train(&Corpus::new(docs)?, a.min_sup)?;
    if matches!(file, CorpusFile::Raw(_)) {
        model = model.with_pipeline(cfg.flags());
    }
    fs::write(&a.model_out, save_model(&model)).map_err(|e| DataError::in_file(&a.model_out, e))?;
    write_out(out, &format!("{}\n", model.report()))
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let cfg = pipeline_config(&a.pipeline)?;
    let model = parse_file(&a.model, load_model)?;
    let file = parse_file(&a.input, parse_corpus)?;
    if let (CorpusFile::Raw(_), Some(trained)) = (&file, model.pipeline()) {
        if trained != cfg.flags() {
            let _ = writeln!(
                err,
                "warning: model was trained with {}, input is preprocessed with {}",
                flags_line(trained),
                flags_line(cfg.flags())
            );
        }
    }
    let docs = file
        .keyword_sets(&cfg)
        .map_err(|e| DataError::in_file(&a.input, e))?;
    let mut text = String::new();
    for c in classify_batch(&docs, &model) {
        text.push_str(&classification_line(&c));
        text.push('\n');
    }
    write_out(out, &text)
}

fn cmd_mine(a: &MineArgs, out: &mut dyn Write) -> CmdResult {
    let db = parse_transactions(&read(&a.transactions)?);
    let sets = Miner::new(a.min_sup)
        .min_size(a.min_size)
        .single_path(!a.no_single_path)
        .mine(&db)?;
    write_out(out, &itemsets_tsv(&sets))
}

fn cmd_matrix(a: &MatrixArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = pipeline_config(&a.pipeline)?;
    let file = parse_file(&a.corpus, parse_corpus)?;
    let docs = file
        .keyword_sets(&cfg)
        .map_err(|e| DataError::in_file(&a.corpus, e))?;
    let matrix = TermDocumentMatrix::build(&Corpus::new(docs)?)?;
    write_out(out, &matrix_tsv(&matrix))
}

fn cmd_inspect_tree(a: &TreeArgs, out: &mut dyn Write) -> CmdResult {
    let db = parse_transactions(&read(&a.transactions)?);
    let tree = build_fp_tree(&db, a.min_sup)?;
    write_out(out, &format!("{}\n", dump_tree(&tree)))
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Train(a) => cmd_train(a, out),
        Command::Classify(a) => cmd_classify(a, out, err),
        Command::Mine(a) => cmd_mine(a, out),
        Command::Matrix(a) => cmd_matrix(a, out),
        Command::InspectTree(a) => cmd_inspect_tree(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(DataError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DATA
        }
    }
}
