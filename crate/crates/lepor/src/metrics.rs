//! Sentence-level and system-level metric scores.
//!
//! LEPOR multiplies the three factors, hLEPOR combines them with a
//! weighted harmonic mean, and nLEPOR replaces the unigram factor with a
//! weighted geometric mean over n-gram orders. System-level scores come in
//! two strategies: A averages sentence scores, B composes the per-factor
//! system means with the same rule the sentence score uses. A POS-level
//! score, when requested, runs the identical machinery on tag sequences
//! and mixes linearly with the word-level score.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::align::align;
use crate::factors::{
    effective_reference, length_penalty, ngram_pr, ngram_pr_smoothed, npd, unigram_pr,
    weighted_harmonic, FactorValues,
};
use crate::params::{ParamError, ParamSet};
use crate::text::{Corpus, Segment, Sentence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricKind {
    Lepor,
    Hlepor,
    Nlepor,
}

impl MetricKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MetricKind::Lepor => "lepor",
            MetricKind::Hlepor => "hlepor",
            MetricKind::Nlepor => "nlepor",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lepor" => Ok(MetricKind::Lepor),
            "hlepor" => Ok(MetricKind::Hlepor),
            "nlepor" => Ok(MetricKind::Nlepor),
            other => Err(format!("unknown metric {other:?}")),
        }
    }
}

/// System-level aggregation strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Arithmetic mean of sentence scores.
    A,
    /// Composition of per-factor system means.
    B,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::A => "A",
            Strategy::B => "B",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Factor values plus the composed metric score for one scoring level.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelScore {
    pub factors: FactorValues,
    pub score: f64,
}

/// One scored segment. `score` is the final sentence score: the word-level
/// score, or the word/POS mix when POS weighting is active. Degenerate
/// segments (empty hypothesis or no usable reference) score 0 and are
/// flagged.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentScore {
    /// 1-based segment index (the line number in batch input).
    pub index: usize,
    pub word: LevelScore,
    pub pos: Option<LevelScore>,
    pub score: f64,
    pub degenerate: bool,
}

/// Arithmetic means of the per-segment factors (word level).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorMeans {
    pub lp: f64,
    pub npos_penal: f64,
    pub hpr: f64,
}

/// A system-level score under one aggregation strategy.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemScore {
    pub metric: MetricKind,
    /// True when the score mixes word-level and POS-level scores.
    pub hybrid: bool,
    pub strategy: Strategy,
    pub score: f64,
    pub factor_means: FactorMeans,
    pub word_score: f64,
    pub pos_score: Option<f64>,
}

/// Scoring switches that are not tunable parameters.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScoreOptions {
    /// Add-one chunk smoothing for n-gram orders >= 2.
    pub smoothing: bool,
}

#[derive(Debug, Error, PartialEq)]
pub enum MetricError {
    #[error(transparent)]
    Param(#[from] ParamError),
    /// POS weighting is on but a segment carries no tags.
    #[error("w_hp > 0 requires POS tags, but segment {index} has none")]
    MissingTags { index: usize },
    #[error("cannot aggregate an empty corpus")]
    EmptyCorpus,
}

/// Sentence-level LEPOR: LP x NPosPenal x Harmonic(alpha R, beta P).
pub fn lepor_sentence(segment: &Segment, params: &ParamSet) -> Result<SegmentScore, MetricError> {
    score_segment(segment, 1, params, MetricKind::Lepor, ScoreOptions::default())
}

/// Sentence-level hLEPOR: weighted harmonic mean of LP, NPosPenal, HPR.
pub fn hlepor_sentence(segment: &Segment, params: &ParamSet) -> Result<SegmentScore, MetricError> {
    score_segment(segment, 1, params, MetricKind::Hlepor, ScoreOptions::default())
}

/// Sentence-level nLEPOR: LP x NPosPenal x exp(sum w_n log HPR_n) with one
/// term per n-gram order in `params.ngram_weights`.
pub fn nlepor_sentence(segment: &Segment, params: &ParamSet) -> Result<SegmentScore, MetricError> {
    score_segment(segment, 1, params, MetricKind::Nlepor, ScoreOptions::default())
}

/// Scores one segment under `metric`, running the POS level and the
/// word/POS mix when `params.w_hp > 0`.
pub fn score_segment(
    segment: &Segment,
    index: usize,
    params: &ParamSet,
    metric: MetricKind,
    options: ScoreOptions,
) -> Result<SegmentScore, MetricError> {
    params.validate()?;
    let word_alignment = align(segment.hypothesis(), segment.references(), params.window);
    let pos_alignment = segment
        .hypothesis_tags()
        .zip(segment.reference_tags())
        .map(|(hyp_tags, ref_tags)| align(hyp_tags, ref_tags, params.window));
    score_segment_aligned(segment, index, &word_alignment, pos_alignment.as_ref(), params, metric, options)
}

/// Scoring core over precomputed alignments; the tuner reuses alignments
/// across grid points through this entry.
pub(crate) fn score_segment_aligned(
    segment: &Segment,
    index: usize,
    word_alignment: &crate::align::Alignment,
    pos_alignment: Option<&crate::align::Alignment>,
    params: &ParamSet,
    metric: MetricKind,
    options: ScoreOptions,
) -> Result<SegmentScore, MetricError> {
    let (word, degenerate) = level_score(
        segment.hypothesis(),
        segment.references(),
        word_alignment,
        params,
        metric,
        options,
    );
    let (pos, score) = if params.uses_pos() {
        let (hyp_tags, ref_tags) = match (segment.hypothesis_tags(), segment.reference_tags()) {
            (Some(h), Some(r)) => (h, r),
            _ => return Err(MetricError::MissingTags { index }),
        };
        let alignment = pos_alignment.expect("POS alignment supplied alongside tags");
        let (pos, _) = level_score(hyp_tags, ref_tags, alignment, params, metric, options);
        let score = if degenerate {
            0.0
        } else {
            hybrid_score(word.score, pos.score, params)
        };
        (Some(pos), score)
    } else {
        (None, if degenerate { 0.0 } else { word.score })
    };
    Ok(SegmentScore {
        index,
        word,
        pos,
        score,
        degenerate,
    })
}

/// Scores every segment of a corpus. Segment indices are 1-based.
pub fn score_corpus(
    corpus: &Corpus,
    params: &ParamSet,
    metric: MetricKind,
) -> Result<Vec<SegmentScore>, MetricError> {
    score_corpus_opts(corpus, params, metric, ScoreOptions::default())
}

pub fn score_corpus_opts(
    corpus: &Corpus,
    params: &ParamSet,
    metric: MetricKind,
    options: ScoreOptions,
) -> Result<Vec<SegmentScore>, MetricError> {
    params.validate()?;
    corpus
        .segments()
        .iter()
        .enumerate()
        .map(|(i, segment)| score_segment(segment, i + 1, params, metric, options))
        .collect()
}

fn level_score(
    hyp: &Sentence,
    refs: &[Sentence],
    alignment: &crate::align::Alignment,
    params: &ParamSet,
    metric: MetricKind,
    options: ScoreOptions,
) -> (LevelScore, bool) {
    let orders = match metric {
        MetricKind::Nlepor => params.max_order(),
        _ => 1,
    };
    let effective = effective_reference(hyp, refs);
    if hyp.is_empty() || effective.is_empty() {
        return (degenerate_level(orders), true);
    }

    let lp = length_penalty(hyp.len(), effective.len()).expect("non-empty reference");
    let npd_value = npd(alignment);
    let npos = (-npd_value).exp();
    let (p1, r1) = unigram_pr(alignment.match_count(), hyp.len(), effective.len());
    let hpr1 = weighted_harmonic(&[r1, p1], &[params.alpha, params.beta])
        .expect("alpha+beta validated positive");

    let mut precisions = vec![p1];
    let mut recalls = vec![r1];
    let (hpr, score) = match metric {
        MetricKind::Lepor => (hpr1, lp * npos * hpr1),
        MetricKind::Hlepor => {
            let score = weighted_harmonic(
                &[lp, npos, hpr1],
                &[params.w_lp, params.w_npos, params.w_hpr],
            )
            .expect("factor weights validated positive");
            (hpr1, score)
        }
        MetricKind::Nlepor => {
            // Order 1 reuses the alignment-based counts, so nLEPOR with
            // N = 1 reduces to LEPOR exactly; higher orders consume
            // chunks against the effective reference.
            let mut log_sum = 0.0;
            let mut pole = false;
            for (order, &weight) in params.ngram_weights.iter().enumerate() {
                let n = order + 1;
                let (p, r) = if n == 1 {
                    (p1, r1)
                } else if options.smoothing {
                    ngram_pr_smoothed(hyp, effective, n)
                } else {
                    ngram_pr(hyp, effective, n)
                };
                if n > 1 {
                    precisions.push(p);
                    recalls.push(r);
                }
                if weight == 0.0 {
                    continue;
                }
                let hpr_n = weighted_harmonic(&[r, p], &[params.alpha, params.beta])
                    .expect("alpha+beta validated positive");
                if hpr_n == 0.0 {
                    pole = true;
                } else {
                    log_sum += weight * hpr_n.ln();
                }
            }
            let term = if pole { 0.0 } else { log_sum.exp() };
            (term, lp * npos * term)
        }
    };

    (
        LevelScore {
            factors: FactorValues {
                lp,
                npd: npd_value,
                npos_penal: npos,
                precisions,
                recalls,
                hpr,
            },
            score,
        },
        false,
    )
}

fn degenerate_level(orders: usize) -> LevelScore {
    LevelScore {
        factors: FactorValues {
            lp: 0.0,
            npd: 0.0,
            npos_penal: 1.0,
            precisions: vec![0.0; orders],
            recalls: vec![0.0; orders],
            hpr: 0.0,
        },
        score: 0.0,
    }
}

/// Word/POS linear mix: (w_hw * word + w_hp * pos) / (w_hw + w_hp).
pub fn hybrid_score(word: f64, pos: f64, params: &ParamSet) -> f64 {
    debug_assert!(params.w_hw + params.w_hp > 0.0);
    (params.w_hw * word + params.w_hp * pos) / (params.w_hw + params.w_hp)
}

/// System-level LEPOR over the word level.
pub fn lepor_system(
    scores: &[SegmentScore],
    strategy: Strategy,
) -> Result<SystemScore, MetricError> {
    let (score, means) = aggregate(scores, strategy, |m| m.lp * m.npos_penal * m.hpr)?;
    Ok(word_system(MetricKind::Lepor, strategy, score, means))
}

/// System-level hLEPOR over the word level; strategy B applies the factor
/// weights to the per-factor means.
pub fn hlepor_system(
    scores: &[SegmentScore],
    strategy: Strategy,
    params: &ParamSet,
) -> Result<SystemScore, MetricError> {
    let (score, means) = aggregate(scores, strategy, |m| {
        weighted_harmonic(
            &[m.lp, m.npos_penal, m.hpr],
            &[params.w_lp, params.w_npos, params.w_hpr],
        )
        .expect("factor weights validated positive")
    })?;
    Ok(word_system(MetricKind::Hlepor, strategy, score, means))
}

/// System-level nLEPOR over the word level; strategy B multiplies the
/// means of LP, NPosPenal, and the per-segment exponentiated term.
pub fn nlepor_system(
    scores: &[SegmentScore],
    strategy: Strategy,
) -> Result<SystemScore, MetricError> {
    let (score, means) = aggregate(scores, strategy, |m| m.lp * m.npos_penal * m.hpr)?;
    Ok(word_system(MetricKind::Nlepor, strategy, score, means))
}

/// System-level score under any metric, mixing in the POS level when
/// `params.w_hp > 0`. Strategy A stays the exact arithmetic mean of the
/// final sentence scores.
pub fn system_score(
    scores: &[SegmentScore],
    params: &ParamSet,
    metric: MetricKind,
    strategy: Strategy,
) -> Result<SystemScore, MetricError> {
    let mut system = match metric {
        MetricKind::Lepor => lepor_system(scores, strategy)?,
        MetricKind::Hlepor => hlepor_system(scores, strategy, params)?,
        MetricKind::Nlepor => nlepor_system(scores, strategy)?,
    };
    if !params.uses_pos() {
        return Ok(system);
    }

    let pos_levels: Vec<&LevelScore> = scores
        .iter()
        .map(|s| {
            s.pos
                .as_ref()
                .ok_or(MetricError::MissingTags { index: s.index })
        })
        .collect::<Result<_, _>>()?;
    let pos_score = match strategy {
        Strategy::A => mean(pos_levels.iter().map(|l| l.score)),
        Strategy::B => {
            let means = factor_means(pos_levels.iter().map(|l| &l.factors));
            match metric {
                MetricKind::Lepor | MetricKind::Nlepor => means.lp * means.npos_penal * means.hpr,
                MetricKind::Hlepor => weighted_harmonic(
                    &[means.lp, means.npos_penal, means.hpr],
                    &[params.w_lp, params.w_npos, params.w_hpr],
                )
                .expect("factor weights validated positive"),
            }
        }
    };

    system.hybrid = true;
    system.pos_score = Some(pos_score);
    system.score = match strategy {
        // The mean of the per-segment mixed scores, so strategy A remains
        // the exact mean of sentence scores.
        Strategy::A => mean(scores.iter().map(|s| s.score)),
        Strategy::B => hybrid_score(system.word_score, pos_score, params),
    };
    Ok(system)
}

fn word_system(
    metric: MetricKind,
    strategy: Strategy,
    score: f64,
    factor_means: FactorMeans,
) -> SystemScore {
    SystemScore {
        metric,
        hybrid: false,
        strategy,
        score,
        factor_means,
        word_score: score,
        pos_score: None,
    }
}

fn aggregate(
    scores: &[SegmentScore],
    strategy: Strategy,
    compose: impl Fn(&FactorMeans) -> f64,
) -> Result<(f64, FactorMeans), MetricError> {
    if scores.is_empty() {
        return Err(MetricError::EmptyCorpus);
    }
    let means = factor_means(scores.iter().map(|s| &s.word.factors));
    let score = match strategy {
        Strategy::A => mean(scores.iter().map(|s| s.word.score)),
        Strategy::B => compose(&means),
    };
    Ok((score, means))
}

fn factor_means<'a>(factors: impl Iterator<Item = &'a FactorValues> + Clone) -> FactorMeans {
    FactorMeans {
        lp: mean(factors.clone().map(|f| f.lp)),
        npos_penal: mean(factors.clone().map(|f| f.npos_penal)),
        hpr: mean(factors.map(|f| f.hpr)),
    }
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in values {
        sum += v;
        count += 1;
    }
    sum / count as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Segment;

    const TOL: f64 = 1e-6;

    fn sent(line: &str) -> Sentence {
        Sentence::tokenize(line)
    }

    fn segment(hyp: &str, refs: &[&str]) -> Segment {
        Segment::new(sent(hyp), refs.iter().map(|r| sent(r)).collect()).unwrap()
    }

    #[test]
    fn lepor_identity_scores_one() {
        let seg = segment("the cat sat", &["the cat sat"]);
        let score = lepor_sentence(&seg, &ParamSet::default()).unwrap();
        assert_eq!(score.score, 1.0);
        assert!(!score.degenerate);
    }

    #[test]
    fn lepor_disjoint_scores_zero() {
        let seg = segment("x y z", &["a b c", "d e f"]);
        let score = lepor_sentence(&seg, &ParamSet::default()).unwrap();
        assert_eq!(score.score, 0.0);
        assert!(!score.degenerate);
    }

    // Stage-by-stage derivation: LP = e^(1-4/3); the alignment is
    // positional so NPD = (1/12 + 2/12 + 3/12)/3 = 1/6 and
    // NPosPenal = e^(-1/6); HPR = 10/(9/0.75 + 1) = 10/13. The product is
    // e^(-1/2) * 10/13 = 0.466562.
    #[test]
    fn lepor_worked_chain() {
        let seg = segment("the cat sat", &["the cat sat down"]);
        let score = lepor_sentence(&seg, &ParamSet::default()).unwrap();
        let f = &score.word.factors;
        assert!((f.lp - (1.0f64 - 4.0 / 3.0).exp()).abs() < 1e-12);
        assert!((f.npd - 1.0 / 6.0).abs() < 1e-12);
        assert!((f.npos_penal - (-1.0f64 / 6.0).exp()).abs() < 1e-12);
        assert!((f.hpr - 10.0 / 13.0).abs() < 1e-12);
        assert!((score.score - 0.466562).abs() < TOL);
    }

    #[test]
    fn empty_hypothesis_is_degenerate() {
        let seg = segment("", &["the cat"]);
        let score = lepor_sentence(&seg, &ParamSet::default()).unwrap();
        assert!(score.degenerate);
        assert_eq!(score.score, 0.0);
        assert_eq!(score.word.factors.lp, 0.0);
        assert_eq!(score.word.factors.npos_penal, 1.0);
    }

    #[test]
    fn hlepor_equal_weights_example() {
        // Factors (0.5, 1, 1) with weights 1:1:1 give 3/4.
        let value = weighted_harmonic(&[0.5, 1.0, 1.0], &[1.0, 1.0, 1.0]).unwrap();
        assert!((value - 0.75).abs() < 1e-12);
        let seg = segment("a b", &["a b"]);
        let one = hlepor_sentence(&seg, &ParamSet::default()).unwrap();
        assert_eq!(one.score, 1.0);
    }

    #[test]
    fn nlepor_reduces_to_lepor_at_order_one() {
        let params = ParamSet::default();
        for (hyp, refs) in [
            ("the cat sat", vec!["the cat sat down"]),
            ("a b c d", vec!["b a d c", "a b d"]),
            ("x", vec!["x y z"]),
        ] {
            let refs: Vec<&str> = refs;
            let seg = segment(hyp, &refs);
            let lepor = lepor_sentence(&seg, &params).unwrap();
            let nlepor = nlepor_sentence(&seg, &params).unwrap();
            assert!((lepor.score - nlepor.score).abs() < 1e-12);
        }
    }

    #[test]
    fn nlepor_bigram_worked_example() {
        // HPR_1 = 2/3, HPR_2 = 1/2, equal weights: term = sqrt(1/3);
        // LP = 1 and NPosPenal = 1, so the score is 0.57735.
        let seg = segment("a b c", &["a b d"]);
        let params = ParamSet {
            alpha: 1.0,
            beta: 1.0,
            ngram_weights: vec![0.5, 0.5],
            ..ParamSet::default()
        };
        let score = nlepor_sentence(&seg, &params).unwrap();
        assert!((score.score - (1.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((score.score - 0.57735).abs() < 1e-5);
    }

    #[test]
    fn nlepor_identity_any_order() {
        let seg = segment("a b c d", &["a b c d"]);
        let params = ParamSet {
            ngram_weights: vec![0.4, 0.3, 0.3],
            ..ParamSet::default()
        };
        assert_eq!(nlepor_sentence(&seg, &params).unwrap().score, 1.0);
    }

    fn seg_with_factors(lp: f64, npos: f64, hpr: f64, score: f64) -> SegmentScore {
        SegmentScore {
            index: 1,
            word: LevelScore {
                factors: FactorValues {
                    lp,
                    npd: 0.0,
                    npos_penal: npos,
                    precisions: vec![0.0],
                    recalls: vec![0.0],
                    hpr,
                },
                score,
            },
            pos: None,
            score,
            degenerate: false,
        }
    }

    #[test]
    fn lepor_system_strategy_a_is_mean() {
        let scores = vec![
            seg_with_factors(1.0, 1.0, 0.4, 0.4),
            seg_with_factors(1.0, 1.0, 0.8, 0.8),
        ];
        let system = lepor_system(&scores, Strategy::A).unwrap();
        assert!((system.score - 0.6).abs() < 1e-12);
    }

    #[test]
    fn lepor_system_strategy_b_composes_factor_means() {
        let scores = vec![
            seg_with_factors(1.0, 1.0, 0.5, 0.5),
            seg_with_factors(0.5, 1.0, 1.0, 0.5),
        ];
        let system = lepor_system(&scores, Strategy::B).unwrap();
        assert!((system.score - 0.5625).abs() < 1e-12);
    }

    #[test]
    fn single_segment_system_equals_sentence_score() {
        let seg = segment("the cat sat", &["the cat sat down"]);
        let params = ParamSet::default();
        let scores = score_corpus(&Corpus::new(vec![seg]), &params, MetricKind::Lepor).unwrap();
        for strategy in [Strategy::A, Strategy::B] {
            let system = lepor_system(&scores, strategy).unwrap();
            if strategy == Strategy::A {
                assert!((system.score - scores[0].score).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hlepor_system_examples() {
        let params = ParamSet {
            alpha: 9.0,
            beta: 1.0,
            w_lp: 1.0,
            w_npos: 1.0,
            w_hpr: 1.0,
            ..ParamSet::default()
        };
        let scores = vec![
            seg_with_factors(1.0, 1.0, 1.0, 1.0),
            seg_with_factors(0.5, 0.5, 0.5, 0.5),
        ];
        let b = hlepor_system(&scores, Strategy::B, &params).unwrap();
        assert!((b.score - 0.75).abs() < 1e-12);
        let a = hlepor_system(&scores, Strategy::A, &params).unwrap();
        assert!((a.score - 0.75).abs() < 1e-12);
    }

    #[test]
    fn nlepor_system_strategy_b_multiplies_term_means() {
        let scores = vec![
            seg_with_factors(1.0, 1.0, 0.6, 0.6),
            seg_with_factors(0.5, 1.0, 1.0, 0.5),
        ];
        let system = nlepor_system(&scores, Strategy::B).unwrap();
        assert!((system.score - 0.6).abs() < 1e-12);
    }

    #[test]
    fn empty_corpus_rejected() {
        assert_eq!(
            lepor_system(&[], Strategy::A),
            Err(MetricError::EmptyCorpus)
        );
    }

    #[test]
    fn hybrid_mix_examples() {
        let equal = ParamSet {
            w_hw: 3.0,
            w_hp: 2.0,
            ..ParamSet::default()
        };
        assert!((hybrid_score(0.7, 0.7, &equal) - 0.7).abs() < 1e-12);
        let de_en = ParamSet {
            w_hw: 1.0,
            w_hp: 9.0,
            ..ParamSet::default()
        };
        assert!((hybrid_score(0.9, 0.5, &de_en) - 0.54).abs() < 1e-12);
        let word_only = ParamSet::default();
        assert_eq!(hybrid_score(0.9, 0.5, &word_only), 0.9);
    }

    #[test]
    fn pos_weighting_requires_tags() {
        let seg = segment("the cat", &["the cat"]);
        let params = ParamSet {
            w_hw: 1.0,
            w_hp: 9.0,
            ..ParamSet::default()
        };
        let err = score_segment(&seg, 3, &params, MetricKind::Lepor, ScoreOptions::default());
        assert_eq!(err, Err(MetricError::MissingTags { index: 3 }));
    }

    #[test]
    fn hybrid_runs_identical_metric_on_tags() {
        let hyp = sent("the cat sat");
        let refs = vec![sent("the cat sat")];
        let hyp_tags = Sentence::tokenize_cased("DET NOUN VERB");
        let ref_tags = vec![Sentence::tokenize_cased("DET NOUN VERB")];
        let seg = Segment::with_tags(hyp, refs, hyp_tags, ref_tags).unwrap();
        let params = ParamSet {
            w_hw: 1.0,
            w_hp: 1.0,
            ..ParamSet::default()
        };
        let score = score_segment(&seg, 1, &params, MetricKind::Hlepor, ScoreOptions::default())
            .unwrap();
        assert_eq!(score.score, 1.0);
        assert_eq!(score.pos.as_ref().unwrap().score, 1.0);
    }
}
