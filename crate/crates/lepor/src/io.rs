//! Batch file formats: parallel segment files, POS tag files, numeric
//! score series, system manifests, parameter and grid configuration.
//!
//! The interchange shape is one segment per line across parallel UTF-8
//! files with `\n` newlines: line i of every file forms segment i.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use crate::params::{ParamError, ParamSet};
use crate::text::{Corpus, Segment, Sentence};
use crate::tune::GridSpec;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("line count mismatch: {left} has {left_lines} lines, {right} has {right_lines} lines")]
    LineCount {
        left: String,
        left_lines: usize,
        right: String,
        right_lines: usize,
    },
    #[error("{path}:{line}: {tags} tags for {tokens} tokens")]
    TagCount {
        path: String,
        line: usize,
        tags: usize,
        tokens: usize,
    },
    #[error("need one POS reference file per reference file ({refs} references, {pos_refs} POS files)")]
    PosRefCount { refs: usize, pos_refs: usize },
    #[error("{path}:{line}: invalid number {value:?}")]
    BadNumber {
        path: String,
        line: usize,
        value: String,
    },
    #[error("{path} is empty")]
    Empty { path: String },
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{path}: {source}")]
    Param { path: String, source: ParamError },
}

/// The input files of one scoring run.
#[derive(Debug, Clone)]
pub struct CorpusFiles {
    pub hyp: PathBuf,
    pub refs: Vec<PathBuf>,
    pub pos_hyp: Option<PathBuf>,
    pub pos_refs: Vec<PathBuf>,
    /// Lower-case tokens while parsing (tags are never folded).
    pub case_fold: bool,
}

impl CorpusFiles {
    pub fn new(hyp: impl Into<PathBuf>, refs: Vec<PathBuf>) -> Self {
        Self {
            hyp: hyp.into(),
            refs,
            pos_hyp: None,
            pos_refs: Vec::new(),
            case_fold: true,
        }
    }

    /// Loads every file and assembles segments line by line.
    pub fn load(&self) -> Result<Corpus, LoadError> {
        load_segments(self)
    }
}

/// Line i of each file forms segment i; text lines are tokenized (folded
/// unless disabled) and POS lines split into tag sequences that must match
/// their text lines token for token.
pub fn load_segments(files: &CorpusFiles) -> Result<Corpus, LoadError> {
    let tokenize = |line: &str| {
        if files.case_fold {
            Sentence::tokenize(line)
        } else {
            Sentence::tokenize_cased(line)
        }
    };

    let hyp_lines = read_lines(&files.hyp)?;
    let mut ref_columns = Vec::with_capacity(files.refs.len());
    for path in &files.refs {
        let lines = read_lines(path)?;
        check_line_count(&files.hyp, hyp_lines.len(), path, lines.len())?;
        ref_columns.push(lines);
    }

    let tags = match &files.pos_hyp {
        None => None,
        Some(pos_hyp) => {
            if files.pos_refs.len() != files.refs.len() {
                return Err(LoadError::PosRefCount {
                    refs: files.refs.len(),
                    pos_refs: files.pos_refs.len(),
                });
            }
            let hyp_tags = read_lines(pos_hyp)?;
            check_line_count(&files.hyp, hyp_lines.len(), pos_hyp, hyp_tags.len())?;
            let mut ref_tags = Vec::with_capacity(files.pos_refs.len());
            for path in &files.pos_refs {
                let lines = read_lines(path)?;
                check_line_count(&files.hyp, hyp_lines.len(), path, lines.len())?;
                ref_tags.push(lines);
            }
            Some((pos_hyp, hyp_tags, ref_tags))
        }
    };

    let mut segments = Vec::with_capacity(hyp_lines.len());
    for (i, hyp_line) in hyp_lines.iter().enumerate() {
        let hypothesis = tokenize(hyp_line);
        let references: Vec<Sentence> =
            ref_columns.iter().map(|lines| tokenize(&lines[i])).collect();
        let segment = match &tags {
            None => Segment::new(hypothesis, references).expect("references present"),
            Some((pos_hyp_path, hyp_tags, ref_tags)) => {
                let hyp_tag_sentence = Sentence::tokenize_cased(&hyp_tags[i]);
                check_tag_count(pos_hyp_path, i, &hyp_tag_sentence, &hypothesis)?;
                let mut ref_tag_sentences = Vec::with_capacity(ref_tags.len());
                for (path, lines) in files.pos_refs.iter().zip(ref_tags) {
                    let tag_sentence = Sentence::tokenize_cased(&lines[i]);
                    check_tag_count(path, i, &tag_sentence, &references[ref_tag_sentences.len()])?;
                    ref_tag_sentences.push(tag_sentence);
                }
                Segment::with_tags(hypothesis, references, hyp_tag_sentence, ref_tag_sentences)
                    .expect("lengths checked")
            }
        };
        segments.push(segment);
    }
    Ok(Corpus::new(segments))
}

fn check_tag_count(
    path: &Path,
    line_index: usize,
    tags: &Sentence,
    tokens: &Sentence,
) -> Result<(), LoadError> {
    if tags.len() != tokens.len() {
        return Err(LoadError::TagCount {
            path: display(path),
            line: line_index + 1,
            tags: tags.len(),
            tokens: tokens.len(),
        });
    }
    Ok(())
}

fn check_line_count(
    left: &Path,
    left_lines: usize,
    right: &Path,
    right_lines: usize,
) -> Result<(), LoadError> {
    if left_lines != right_lines {
        return Err(LoadError::LineCount {
            left: display(left),
            left_lines,
            right: display(right),
            right_lines,
        });
    }
    Ok(())
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

fn read_lines(path: &Path) -> Result<Vec<String>, LoadError> {
    let content = fs::read_to_string(path).map_err(|source| LoadError::Read {
        path: display(path),
        source,
    })?;
    Ok(content.lines().map(str::to_string).collect())
}

/// One score per line, parallel to the corresponding segment or system
/// file.
pub fn load_score_series(path: &Path) -> Result<Vec<f64>, LoadError> {
    let lines = read_lines(path)?;
    let mut values = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        let trimmed = line.trim();
        let value: f64 = trimmed.parse().map_err(|_| LoadError::BadNumber {
            path: display(path),
            line: i + 1,
            value: trimmed.to_string(),
        })?;
        values.push(value);
    }
    Ok(values)
}

/// One system per line: a hypothesis path, optionally followed by a tab
/// and a POS tag file path. Relative paths resolve against the manifest's
/// directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub hyp: PathBuf,
    pub pos_hyp: Option<PathBuf>,
}

pub fn load_manifest(path: &Path) -> Result<Vec<ManifestEntry>, LoadError> {
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = |raw: &str| {
        let p = PathBuf::from(raw);
        if p.is_absolute() {
            p
        } else {
            base.join(p)
        }
    };
    let lines = read_lines(path)?;
    let entries: Vec<ManifestEntry> = lines
        .iter()
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let mut parts = line.splitn(2, '\t');
            let hyp = resolve(parts.next().expect("non-empty line").trim());
            let pos_hyp = parts
                .next()
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(resolve);
            ManifestEntry { hyp, pos_hyp }
        })
        .collect();
    if entries.is_empty() {
        return Err(LoadError::Empty {
            path: display(path),
        });
    }
    Ok(entries)
}

/// Flat JSON object with the parameter keys; missing keys take the
/// defaults, unknown keys are rejected.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamFile {
    alpha: Option<f64>,
    beta: Option<f64>,
    w_lp: Option<f64>,
    w_npos: Option<f64>,
    w_hpr: Option<f64>,
    ngram_weights: Option<Vec<f64>>,
    window: Option<usize>,
    w_hw: Option<f64>,
    w_hp: Option<f64>,
}

pub fn parse_param_config(path: &Path) -> Result<ParamSet, ConfigError> {
    let content = fs::read_to_string(path).map_err(|source| ConfigError::Read {
        path: display(path),
        source,
    })?;
    parse_param_str(&content).map_err(|error| match error {
        ParamParseError::Json(message) => ConfigError::Parse {
            path: display(path),
            message,
        },
        ParamParseError::Param(source) => ConfigError::Param {
            path: display(path),
            source,
        },
    })
}

enum ParamParseError {
    Json(String),
    Param(ParamError),
}

fn parse_param_str(content: &str) -> Result<ParamSet, ParamParseError> {
    let file: ParamFile =
        serde_json::from_str(content).map_err(|e| ParamParseError::Json(e.to_string()))?;
    let defaults = ParamSet::default();
    let params = ParamSet {
        alpha: file.alpha.unwrap_or(defaults.alpha),
        beta: file.beta.unwrap_or(defaults.beta),
        w_lp: file.w_lp.unwrap_or(defaults.w_lp),
        w_npos: file.w_npos.unwrap_or(defaults.w_npos),
        w_hpr: file.w_hpr.unwrap_or(defaults.w_hpr),
        ngram_weights: file.ngram_weights.unwrap_or(defaults.ngram_weights),
        window: file.window.unwrap_or(defaults.window),
        w_hw: file.w_hw.unwrap_or(defaults.w_hw),
        w_hp: file.w_hp.unwrap_or(defaults.w_hp),
    };
    params.validate().map_err(ParamParseError::Param)?;
    Ok(params)
}

/// JSON candidate lists per parameter group; missing groups take the
/// single default candidate, unknown keys are rejected.
pub fn parse_grid_file(path: &Path) -> Result<GridSpec, ConfigError> {
    let content = fs::read_to_string(path).map_err(|source| ConfigError::Read {
        path: display(path),
        source,
    })?;
    let grid: GridSpec = serde_json::from_str(&content).map_err(|e| ConfigError::Parse {
        path: display(path),
        message: e.to_string(),
    })?;
    Ok(grid)
}
