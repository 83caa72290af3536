//! Report emission. Reports are deterministic: identical inputs produce
//! byte-identical output, and every computed value is printed with six
//! decimal places and a `.` separator.

use std::fmt::Write as _;

use serde::Serialize;

use crate::metrics::{MetricKind, SegmentScore, SystemScore};
use crate::params::ParamSet;
use crate::tune::{Objective, TuneResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Tsv,
    Json,
}

/// Rounds to the emitted precision, normalizing negative zero.
fn round6(value: f64) -> f64 {
    (value * 1e6).round() / 1e6 + 0.0
}

fn metric_tag(metric: MetricKind, hybrid: bool) -> &'static str {
    if hybrid {
        "hybrid"
    } else {
        metric.as_str()
    }
}

/// Renders a scoring run. The segment table carries index, LP, NPD,
/// NPosPenal, unigram P and R, the combined HPR factor, the sentence
/// score, and the degenerate flag (0/1 in TSV). A system-level summary,
/// when present, precedes the TSV table as a `#` comment line and fills
/// the JSON `system` object.
pub fn emit_report(
    metric: MetricKind,
    params: &ParamSet,
    system: Option<&SystemScore>,
    segments: &[SegmentScore],
    format: ReportFormat,
) -> String {
    match format {
        ReportFormat::Tsv => tsv_report(metric, system, segments),
        ReportFormat::Json => json_report(metric, params, system, segments),
    }
}

fn tsv_report(
    metric: MetricKind,
    system: Option<&SystemScore>,
    segments: &[SegmentScore],
) -> String {
    let mut out = String::new();
    if let Some(system) = system {
        write!(
            out,
            "# metric={}\tstrategy={}\tscore={:.6}\tmean_lp={:.6}\tmean_npos_penal={:.6}\tmean_hpr={:.6}",
            metric_tag(system.metric, system.hybrid),
            system.strategy,
            system.score,
            system.factor_means.lp,
            system.factor_means.npos_penal,
            system.factor_means.hpr,
        )
        .unwrap();
        if let Some(pos_score) = system.pos_score {
            write!(
                out,
                "\tword_score={:.6}\tpos_score={:.6}",
                system.word_score, pos_score
            )
            .unwrap();
        }
        out.push('\n');
    } else {
        // Keep the metric visible on sentence-level reports too.
        writeln!(out, "# metric={}", metric.as_str()).unwrap();
    }
    out.push_str("index\tlp\tnpd\tnpos_penal\tprecision\trecall\thpr\tscore\tdegenerate\n");
    for segment in segments {
        let f = &segment.word.factors;
        writeln!(
            out,
            "{}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{}",
            segment.index,
            f.lp,
            f.npd,
            f.npos_penal,
            f.precisions[0],
            f.recalls[0],
            f.hpr,
            segment.score,
            u8::from(segment.degenerate),
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct JsonReport<'a> {
    metric: &'a str,
    params: &'a ParamSet,
    system: Option<JsonSystem>,
    segments: Vec<JsonSegment>,
}

#[derive(Serialize)]
struct JsonSystem {
    strategy: &'static str,
    score: f64,
    factor_means: JsonFactorMeans,
    word_score: f64,
    pos_score: Option<f64>,
}

#[derive(Serialize)]
struct JsonFactorMeans {
    lp: f64,
    npos_penal: f64,
    hpr: f64,
}

#[derive(Serialize)]
struct JsonSegment {
    index: usize,
    lp: f64,
    npd: f64,
    npos_penal: f64,
    precision: f64,
    recall: f64,
    hpr: f64,
    score: f64,
    degenerate: bool,
}

fn json_report(
    metric: MetricKind,
    params: &ParamSet,
    system: Option<&SystemScore>,
    segments: &[SegmentScore],
) -> String {
    let report = JsonReport {
        metric: system.map_or(metric.as_str(), |s| metric_tag(s.metric, s.hybrid)),
        params,
        system: system.map(|s| JsonSystem {
            strategy: s.strategy.as_str(),
            score: round6(s.score),
            factor_means: JsonFactorMeans {
                lp: round6(s.factor_means.lp),
                npos_penal: round6(s.factor_means.npos_penal),
                hpr: round6(s.factor_means.hpr),
            },
            word_score: round6(s.word_score),
            pos_score: s.pos_score.map(round6),
        }),
        segments: segments
            .iter()
            .map(|segment| {
                let f = &segment.word.factors;
                JsonSegment {
                    index: segment.index,
                    lp: round6(f.lp),
                    npd: round6(f.npd),
                    npos_penal: round6(f.npos_penal),
                    precision: round6(f.precisions[0]),
                    recall: round6(f.recalls[0]),
                    hpr: round6(f.hpr),
                    score: round6(segment.score),
                    degenerate: segment.degenerate,
                }
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

#[derive(Serialize)]
struct JsonTuneReport<'a> {
    metric: &'a str,
    objective: &'a str,
    strategy: &'static str,
    best: &'a ParamSet,
    best_objective: f64,
    grid: &'a [crate::tune::GridPoint],
}

/// Renders a tuning run: the winning parameters plus the full audit table
/// in grid enumeration order.
pub fn emit_tune_report(
    result: &TuneResult,
    metric: MetricKind,
    objective: Objective,
    strategy: crate::metrics::Strategy,
) -> String {
    let report = JsonTuneReport {
        metric: metric.as_str(),
        objective: objective.as_str(),
        strategy: strategy.as_str(),
        best: &result.best,
        best_objective: result.best_objective,
        grid: &result.grid,
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}
