//! Exhaustive grid search over parameter candidates, maximizing a rank
//! correlation between system-level metric scores and human judgments on
//! a development set.
//!
//! Grids stay tiny (tens of points), so every point is evaluated and the
//! whole table is returned for audit. Alignments are independent of every
//! parameter except the context window, so they are computed once per
//! window value and reused across grid points.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::align::{align, Alignment};
use crate::metrics::{
    score_segment_aligned, system_score, MetricError, MetricKind, ScoreOptions, Strategy,
};
use crate::params::{ParamError, ParamSet};
use crate::stats::{kendall_tau, pearson, spearman, StatsError};
use crate::text::Corpus;

/// Correlation maximized by the tuner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Pearson,
    Spearman,
    Kendall,
}

impl Objective {
    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Pearson => "pearson",
            Objective::Spearman => "spearman",
            Objective::Kendall => "kendall",
        }
    }

    fn compute(self, metric_scores: &[f64], human_scores: &[f64]) -> Result<f64, StatsError> {
        match self {
            Objective::Pearson => pearson(metric_scores, human_scores),
            Objective::Spearman => spearman(metric_scores, human_scores),
            Objective::Kendall => kendall_tau(metric_scores, human_scores),
        }
    }
}

/// Candidate ratio lists per parameter group. Factor weights are listed in
/// (w_lp, w_npos, w_hpr) order and mix weights as (w_hw, w_hp); all groups
/// are ratios except `ngram_weights`, which is normalized to sum 1.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridSpec {
    pub alpha_beta: Vec<(f64, f64)>,
    pub factor_weights: Vec<(f64, f64, f64)>,
    pub mix_weights: Vec<(f64, f64)>,
    pub ngram_weights: Vec<Vec<f64>>,
    pub windows: Vec<usize>,
    pub objective: Objective,
    pub strategy: Strategy,
}

impl Default for GridSpec {
    fn default() -> Self {
        let p = ParamSet::default();
        Self {
            alpha_beta: vec![(p.alpha, p.beta)],
            factor_weights: vec![(p.w_lp, p.w_npos, p.w_hpr)],
            mix_weights: vec![(p.w_hw, p.w_hp)],
            ngram_weights: vec![p.ngram_weights],
            windows: vec![p.window],
            objective: Objective::Spearman,
            strategy: Strategy::A,
        }
    }
}

impl GridSpec {
    /// The preset grid spanned by the published tuned configurations:
    /// factor ratios HPR:LP:NPP of 7:2:1, 3:2:1 and 1:3:7, alpha:beta of
    /// 9:1 and 1:9, and (when POS input is available) word/POS mixes of
    /// 9:1 and 1:9.
    pub fn preset(include_pos_mix: bool) -> Self {
        let mut mix_weights = vec![(1.0, 0.0)];
        if include_pos_mix {
            mix_weights.push((9.0, 1.0));
            mix_weights.push((1.0, 9.0));
        }
        Self {
            alpha_beta: vec![(9.0, 1.0), (1.0, 9.0)],
            factor_weights: vec![(2.0, 1.0, 7.0), (2.0, 1.0, 3.0), (3.0, 7.0, 1.0)],
            mix_weights,
            ..Self::default()
        }
    }

    /// Expands the cartesian product into validated parameter sets, in
    /// lexicographic order over the groups as listed, deduplicating
    /// candidates whose weight ratios are positive scalings of each other.
    pub fn candidates(&self) -> Result<Vec<ParamSet>, ParamError> {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut out = Vec::new();
        for &(alpha, beta) in &self.alpha_beta {
            for &(w_lp, w_npos, w_hpr) in &self.factor_weights {
                for &(w_hw, w_hp) in &self.mix_weights {
                    for ngram in &self.ngram_weights {
                        for &window in &self.windows {
                            let params = ParamSet {
                                alpha,
                                beta,
                                w_lp,
                                w_npos,
                                w_hpr,
                                ngram_weights: normalize_ngram_weights(ngram)?,
                                window,
                                w_hw,
                                w_hp,
                            };
                            params.validate()?;
                            if seen.insert(canonical_key(&params)) {
                                out.push(params);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn normalize_ngram_weights(raw: &[f64]) -> Result<Vec<f64>, ParamError> {
    if raw.is_empty() {
        return Err(ParamError::NgramWeightsEmpty);
    }
    for w in raw {
        if !w.is_finite() {
            return Err(ParamError::NonFinite("ngram_weights"));
        }
        if *w < 0.0 {
            return Err(ParamError::Negative("ngram_weights"));
        }
    }
    let sum: f64 = raw.iter().sum();
    if sum <= 0.0 {
        return Err(ParamError::NgramWeightsSum);
    }
    Ok(raw.iter().map(|w| w / sum).collect())
}

/// Scale-invariant identity of a candidate: every ratio group normalized
/// to sum 1, bit patterns compared exactly.
fn canonical_key(params: &ParamSet) -> Vec<u64> {
    let mut key = Vec::new();
    let mut push_group = |values: &[f64]| {
        let sum: f64 = values.iter().sum();
        key.extend(values.iter().map(|v| (v / sum).to_bits()));
    };
    push_group(&[params.alpha, params.beta]);
    push_group(&[params.w_lp, params.w_npos, params.w_hpr]);
    push_group(&[params.w_hw, params.w_hp]);
    key.extend(params.ngram_weights.iter().map(|w| w.to_bits()));
    key.push(params.window as u64);
    key
}

/// One evaluated grid point. The objective is absent when the correlation
/// is undefined at this point (all systems scored identically).
#[derive(Debug, Clone, Serialize)]
pub struct GridPoint {
    pub params: ParamSet,
    pub objective: Option<f64>,
}

/// The winning parameter set with the full audit table.
#[derive(Debug, Clone, Serialize)]
pub struct TuneResult {
    pub best: ParamSet,
    pub best_objective: f64,
    pub grid: Vec<GridPoint>,
}

#[derive(Debug, Error)]
pub enum TuneError {
    #[error("need at least 3 systems with human scores, got {0}")]
    TooFewSystems(usize),
    #[error("human scores must be finite")]
    NonFiniteHumanScores,
    #[error("human scores are degenerate (all equal)")]
    DegenerateHumanScores,
    #[error("the grid is empty")]
    EmptyGrid,
    #[error("no grid point produced a defined objective")]
    NoDefinedObjective,
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

type SegmentAlignments = Vec<(Alignment, Option<Alignment>)>;

/// Exhaustively evaluates every grid point: each system's corpus is scored
/// with the candidate parameters, the objective correlation against the
/// human scores is computed, and the argmax is returned (ties break toward
/// the lexicographically first point).
pub fn grid_search(
    systems: &[(Corpus, f64)],
    grid: &GridSpec,
    metric: MetricKind,
) -> Result<TuneResult, TuneError> {
    if systems.len() < 3 {
        return Err(TuneError::TooFewSystems(systems.len()));
    }
    let human_scores: Vec<f64> = systems.iter().map(|(_, score)| *score).collect();
    if !human_scores.iter().all(|s| s.is_finite()) {
        return Err(TuneError::NonFiniteHumanScores);
    }
    if human_scores.windows(2).all(|w| w[0] == w[1]) {
        return Err(TuneError::DegenerateHumanScores);
    }
    let candidates = grid.candidates()?;
    if candidates.is_empty() {
        return Err(TuneError::EmptyGrid);
    }

    let mut alignment_cache: HashMap<usize, Vec<SegmentAlignments>> = HashMap::new();
    let mut table = Vec::with_capacity(candidates.len());
    let mut best: Option<(usize, f64)> = None;

    for (point_index, params) in candidates.iter().enumerate() {
        let aligned = alignment_cache
            .entry(params.window)
            .or_insert_with(|| align_systems(systems, params.window));
        let mut metric_scores = Vec::with_capacity(systems.len());
        for ((corpus, _), alignments) in systems.iter().zip(aligned.iter()) {
            let mut segment_scores = Vec::with_capacity(corpus.segment_count());
            for (i, (segment, (word, pos))) in
                corpus.segments().iter().zip(alignments).enumerate()
            {
                segment_scores.push(score_segment_aligned(
                    segment,
                    i + 1,
                    word,
                    pos.as_ref(),
                    params,
                    metric,
                    ScoreOptions::default(),
                )?);
            }
            metric_scores.push(system_score(&segment_scores, params, metric, grid.strategy)?.score);
        }
        // Inputs are pre-checked, so the only failure left is an undefined
        // correlation (zero variance in the metric scores).
        let objective = grid.objective.compute(&metric_scores, &human_scores).ok();
        if let Some(value) = objective {
            if best.is_none_or(|(_, b)| value > b) {
                best = Some((point_index, value));
            }
        }
        table.push(GridPoint {
            params: params.clone(),
            objective,
        });
    }

    let (best_index, best_objective) = best.ok_or(TuneError::NoDefinedObjective)?;
    Ok(TuneResult {
        best: candidates[best_index].clone(),
        best_objective,
        grid: table,
    })
}

fn align_systems(systems: &[(Corpus, f64)], window: usize) -> Vec<SegmentAlignments> {
    systems
        .iter()
        .map(|(corpus, _)| {
            corpus
                .segments()
                .iter()
                .map(|segment| {
                    let word = align(segment.hypothesis(), segment.references(), window);
                    let pos = segment
                        .hypothesis_tags()
                        .zip(segment.reference_tags())
                        .map(|(hyp_tags, ref_tags)| align(hyp_tags, ref_tags, window));
                    (word, pos)
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{Segment, Sentence};

    fn corpus(lines: &[(&str, &str)]) -> Corpus {
        Corpus::new(
            lines
                .iter()
                .map(|(hyp, reference)| {
                    Segment::new(
                        Sentence::tokenize(hyp),
                        vec![Sentence::tokenize(reference)],
                    )
                    .unwrap()
                })
                .collect(),
        )
    }

    /// Three systems against the same reference, built so that the recall
    /// ordering (S1 > S2 > S3) and the precision ordering (S1 > S3 > S2)
    /// disagree; human scores follow recall.
    fn recall_monotone_fixture() -> Vec<(Corpus, f64)> {
        vec![
            (corpus(&[("a b c d", "a b c d")]), 1.0),   // P = 1.00, R = 1.00
            (corpus(&[("a b c x y z", "a b c d")]), 0.75), // P = 0.50, R = 0.75
            (corpus(&[("a b", "a b c d")]), 0.5),       // P = 1.00, R = 0.50
        ]
    }

    fn recall_vs_precision_grid() -> GridSpec {
        GridSpec {
            alpha_beta: vec![(1.0, 9.0), (9.0, 1.0)],
            // Zero weight on LP and NPosPenal isolates the HPR factor.
            factor_weights: vec![(0.0, 0.0, 1.0)],
            ..GridSpec::default()
        }
    }

    #[test]
    fn single_point_grid_returns_that_point() {
        let grid = GridSpec::default();
        let result = grid_search(&recall_monotone_fixture(), &grid, MetricKind::Hlepor).unwrap();
        assert_eq!(result.grid.len(), 1);
        assert_eq!(result.best, grid.candidates().unwrap()[0]);
        assert_eq!(result.grid[0].objective, Some(result.best_objective));
    }

    #[test]
    fn recall_weighted_point_wins_on_recall_monotone_data() {
        let result = grid_search(
            &recall_monotone_fixture(),
            &recall_vs_precision_grid(),
            MetricKind::Hlepor,
        )
        .unwrap();
        assert_eq!((result.best.alpha, result.best.beta), (9.0, 1.0));
        assert!((result.best_objective - 1.0).abs() < 1e-12);
        // The precision-weighted point misranks S2 and S3.
        let losing = result.grid.iter().find(|p| p.params.alpha == 1.0).unwrap();
        assert!(losing.objective.unwrap() < 1.0);
    }

    #[test]
    fn determinism_and_audit_consistency() {
        let fixture = recall_monotone_fixture();
        let grid = recall_vs_precision_grid();
        let first = grid_search(&fixture, &grid, MetricKind::Hlepor).unwrap();
        let second = grid_search(&fixture, &grid, MetricKind::Hlepor).unwrap();
        assert_eq!(first.best, second.best);
        assert_eq!(first.best_objective, second.best_objective);
        let max = first
            .grid
            .iter()
            .filter_map(|p| p.objective)
            .fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(first.best_objective, max);
    }

    #[test]
    fn scale_equivalent_points_deduplicate() {
        let grid = GridSpec {
            alpha_beta: vec![(9.0, 1.0), (18.0, 2.0), (1.0, 9.0)],
            ..GridSpec::default()
        };
        let candidates = grid.candidates().unwrap();
        assert_eq!(candidates.len(), 2);
        assert_eq!((candidates[0].alpha, candidates[0].beta), (9.0, 1.0));
    }

    #[test]
    fn degenerate_human_scores_rejected() {
        let mut fixture = recall_monotone_fixture();
        for (_, score) in &mut fixture {
            *score = 0.5;
        }
        assert!(matches!(
            grid_search(&fixture, &GridSpec::default(), MetricKind::Lepor),
            Err(TuneError::DegenerateHumanScores)
        ));
    }

    #[test]
    fn too_few_systems_rejected() {
        let fixture = recall_monotone_fixture();
        assert!(matches!(
            grid_search(&fixture[..2], &GridSpec::default(), MetricKind::Lepor),
            Err(TuneError::TooFewSystems(2))
        ));
    }

    #[test]
    fn ngram_candidates_normalize() {
        let grid = GridSpec {
            ngram_weights: vec![vec![1.0, 1.0]],
            ..GridSpec::default()
        };
        let candidates = grid.candidates().unwrap();
        assert_eq!(candidates[0].ngram_weights, vec![0.5, 0.5]);
    }
}
