//! Machine translation evaluation with the LEPOR metric family.
//!
//! The sentence score combines three factors: an enhanced length penalty
//! that punishes both short and long outputs, a word-order penalty derived
//! from a context-dependent one-to-one word alignment, and a weighted
//! harmonic mean of unigram precision and recall. LEPOR multiplies the
//! factors, hLEPOR mixes them with tunable weights, and nLEPOR swaps the
//! unigram factor for a weighted geometric mean over n-gram orders. Tag
//! sequences can be scored with the identical machinery and mixed in for
//! a word+POS hybrid score.
//!
//! Beyond scoring, the crate carries the meta-evaluation statistics used
//! to judge metrics against human assessments (Pearson, Spearman,
//! Kendall's tau, agreement kappas, MAE/RMSE/DeltaAvg) and an exhaustive
//! grid-search tuner that maximizes a chosen correlation on a development
//! set.
//!
//! ```
//! use lepor::{lepor_sentence, ParamSet, Segment, Sentence};
//!
//! let segment = Segment::new(
//!     Sentence::tokenize("the cat sat"),
//!     vec![Sentence::tokenize("the cat sat down")],
//! )
//! .unwrap();
//! let score = lepor_sentence(&segment, &ParamSet::default()).unwrap();
//! assert!(score.score > 0.4 && score.score < 0.5);
//! ```

#![forbid(unsafe_code)]

pub mod align;
pub mod factors;
pub mod io;
pub mod metrics;
pub mod params;
pub mod report;
pub mod stats;
pub mod text;
pub mod tune;

pub use align::{align, match_count, AlignedPair, Alignment};
pub use factors::{
    effective_reference, length_penalty, ngram_pr, npd, npos_penal, unigram_pr,
    weighted_harmonic, FactorError, FactorValues,
};
pub use metrics::{
    hlepor_sentence, hlepor_system, hybrid_score, lepor_sentence, lepor_system, nlepor_sentence,
    nlepor_system, score_corpus, score_corpus_opts, score_segment, system_score, MetricError,
    MetricKind, ScoreOptions, SegmentScore, Strategy, SystemScore,
};
pub use params::{validate_params, ParamError, ParamSet};
pub use report::{emit_report, emit_tune_report, ReportFormat};
pub use stats::{
    average_ranks, cohen_kappa, delta_avg, kappa, kendall_tau, mae, pairwise_kappa, pearson,
    rmse, spearman, StatsError,
};
pub use text::{Corpus, Segment, Sentence, TaggedSentence, TextError};
pub use tune::{grid_search, GridPoint, GridSpec, Objective, TuneError, TuneResult};
