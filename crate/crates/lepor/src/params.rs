//! Tunable metric parameters.

use serde::Serialize;
use thiserror::Error;

/// Tolerance for the n-gram weight normalization check.
pub const NGRAM_WEIGHT_TOLERANCE: f64 = 1e-9;

/// All tunable weights of the metric family.
///
/// `alpha`/`beta` weight recall and precision inside the harmonic mean;
/// `w_lp`/`w_npos`/`w_hpr` weight the three factors in hLEPOR;
/// `ngram_weights` holds one weight per n-gram order 1..=N for nLEPOR and
/// must sum to 1; `window` is the alignment context neighbourhood;
/// `w_hw`/`w_hp` mix the word-level and POS-level scores. Weights are
/// ratios: only `ngram_weights` needs normalizing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamSet {
    pub alpha: f64,
    pub beta: f64,
    pub w_lp: f64,
    pub w_npos: f64,
    pub w_hpr: f64,
    pub ngram_weights: Vec<f64>,
    pub window: usize,
    pub w_hw: f64,
    pub w_hp: f64,
}

impl Default for ParamSet {
    /// The documented defaults: recall-heavy alpha:beta = 9:1, equal factor
    /// weights, unigram-only, context window 2, word-level only.
    fn default() -> Self {
        Self {
            alpha: 9.0,
            beta: 1.0,
            w_lp: 1.0,
            w_npos: 1.0,
            w_hpr: 1.0,
            ngram_weights: vec![1.0],
            window: 2,
            w_hw: 1.0,
            w_hp: 0.0,
        }
    }
}

/// The first violated parameter invariant, by name.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("{0} must be finite")]
    NonFinite(&'static str),
    #[error("{0} must be non-negative")]
    Negative(&'static str),
    #[error("alpha+beta must be positive")]
    AlphaBetaZero,
    #[error("w_lp+w_npos+w_hpr must be positive")]
    FactorWeightsZero,
    #[error("w_hw+w_hp must be positive")]
    MixWeightsZero,
    #[error("ngram weights must be non-empty")]
    NgramWeightsEmpty,
    #[error("ngram weights must sum to 1")]
    NgramWeightsSum,
    #[error("window must be at least 1")]
    WindowZero,
}

impl ParamSet {
    /// Checks every invariant, reporting the first violated one.
    pub fn validate(&self) -> Result<(), ParamError> {
        let scalars = [
            (self.alpha, "alpha"),
            (self.beta, "beta"),
            (self.w_lp, "w_lp"),
            (self.w_npos, "w_npos"),
            (self.w_hpr, "w_hpr"),
            (self.w_hw, "w_hw"),
            (self.w_hp, "w_hp"),
        ];
        for (value, name) in scalars {
            if !value.is_finite() {
                return Err(ParamError::NonFinite(name));
            }
            if value < 0.0 {
                return Err(ParamError::Negative(name));
            }
        }
        for w in &self.ngram_weights {
            if !w.is_finite() {
                return Err(ParamError::NonFinite("ngram_weights"));
            }
            if *w < 0.0 {
                return Err(ParamError::Negative("ngram_weights"));
            }
        }
        if self.alpha + self.beta <= 0.0 {
            return Err(ParamError::AlphaBetaZero);
        }
        if self.w_lp + self.w_npos + self.w_hpr <= 0.0 {
            return Err(ParamError::FactorWeightsZero);
        }
        if self.w_hw + self.w_hp <= 0.0 {
            return Err(ParamError::MixWeightsZero);
        }
        if self.ngram_weights.is_empty() {
            return Err(ParamError::NgramWeightsEmpty);
        }
        let sum: f64 = self.ngram_weights.iter().sum();
        if (sum - 1.0).abs() > NGRAM_WEIGHT_TOLERANCE {
            return Err(ParamError::NgramWeightsSum);
        }
        if self.window == 0 {
            return Err(ParamError::WindowZero);
        }
        Ok(())
    }

    /// Highest n-gram order in play (the N of nLEPOR).
    pub fn max_order(&self) -> usize {
        self.ngram_weights.len()
    }

    /// Whether the POS-level score participates in the final score.
    pub fn uses_pos(&self) -> bool {
        self.w_hp > 0.0
    }
}

/// Returns `p` unchanged when every invariant holds.
pub fn validate_params(p: ParamSet) -> Result<ParamSet, ParamError> {
    p.validate()?;
    Ok(p)
}
