//! Scalar factor computations: length penalty, position-difference
//! penalty, precision/recall at every order, and the weighted harmonic
//! mean that combines them.

use std::collections::HashMap;

use thiserror::Error;

use crate::align::Alignment;
use crate::text::Sentence;

#[derive(Debug, Error, PartialEq)]
pub enum FactorError {
    /// No usable reference: the reference length is zero.
    #[error("reference length must be positive")]
    EmptyReference,
    /// A position-difference value outside [0, 1].
    #[error("npd {0} outside [0, 1]")]
    NpdOutOfRange(f64),
    #[error("{values} values against {weights} weights")]
    LengthMismatch { values: usize, weights: usize },
    #[error("weights must sum to a positive value")]
    ZeroWeightSum,
}

/// Per-sentence factor values for one scoring level (words or tags).
///
/// `precisions`/`recalls` hold one entry per n-gram order 1..=N. `hpr` is
/// the combined precision/recall factor: the unigram harmonic mean for
/// LEPOR and hLEPOR, the exponentiated weighted log-sum over orders for
/// nLEPOR.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorValues {
    pub lp: f64,
    pub npd: f64,
    pub npos_penal: f64,
    pub precisions: Vec<f64>,
    pub recalls: Vec<f64>,
    pub hpr: f64,
}

/// Enhanced length penalty, symmetric in long and short outputs:
/// exp(1 - r/c) when c < r, 1 when c = r, exp(1 - c/r) when c > r.
///
/// `c = 0` returns 0 (limit convention, flagged upstream); `r = 0` is an
/// error because there is no usable reference.
pub fn length_penalty(c: usize, r: usize) -> Result<f64, FactorError> {
    if r == 0 {
        return Err(FactorError::EmptyReference);
    }
    if c == 0 {
        return Ok(0.0);
    }
    let (shorter, longer) = if c < r { (c, r) } else { (r, c) };
    Ok((1.0 - longer as f64 / shorter as f64).exp())
}

/// Mean absolute normalized position displacement over the hypothesis:
/// (1/hyp_length) * sum |hyp_pos/hyp_length - ref_pos/ref_length| with
/// 1-based positions; unaligned tokens contribute 0. Empty hypothesis
/// yields 0.
pub fn npd(alignment: &Alignment) -> f64 {
    let hyp_length = alignment.hyp_length();
    if hyp_length == 0 {
        return 0.0;
    }
    let sum: f64 = alignment
        .pairs()
        .iter()
        .map(|pair| {
            let ref_length = alignment.ref_lengths()[pair.ref_id];
            let hyp_pos = (pair.hyp_index + 1) as f64 / hyp_length as f64;
            let ref_pos = (pair.ref_index + 1) as f64 / ref_length as f64;
            (hyp_pos - ref_pos).abs()
        })
        .sum();
    sum / hyp_length as f64
}

/// Word-order penalty exp(-npd), decreasing from 1 to 1/e as npd runs
/// from 0 to 1.
pub fn npos_penal(npd_value: f64) -> Result<f64, FactorError> {
    if !(0.0..=1.0).contains(&npd_value) {
        return Err(FactorError::NpdOutOfRange(npd_value));
    }
    Ok((-npd_value).exp())
}

/// Unigram precision and recall from an aligned-word count.
///
/// Degenerate lengths map to 0. Both values clamp to 1: a multi-reference
/// alignment can collect more matches than a single effective reference
/// holds, and recall is still reported against that one reference.
pub fn unigram_pr(matches: usize, hyp_len: usize, ref_len: usize) -> (f64, f64) {
    let p = if hyp_len == 0 {
        0.0
    } else {
        (matches as f64 / hyp_len as f64).min(1.0)
    };
    let r = if ref_len == 0 {
        0.0
    } else {
        (matches as f64 / ref_len as f64).min(1.0)
    };
    (p, r)
}

/// N-gram precision and recall via one-to-one chunk consumption: each
/// hypothesis n-gram consumes at most one equal, unconsumed reference
/// n-gram (clipped multiset intersection). A sentence shorter than `n`
/// has no chunks and scores 0.
pub fn ngram_pr(hyp: &Sentence, reference: &Sentence, n: usize) -> (f64, f64) {
    assert!(n >= 1, "n-gram order must be at least 1");
    let hyp_count = chunk_count(hyp.len(), n);
    let ref_count = chunk_count(reference.len(), n);
    if hyp_count == 0 || ref_count == 0 {
        return (0.0, 0.0);
    }
    let matched = clipped_matches(hyp, reference, n);
    (
        matched as f64 / hyp_count as f64,
        matched as f64 / ref_count as f64,
    )
}

/// Like [`ngram_pr`] with add-one smoothing on both sides, for
/// short-segment studies. Orders with no chunks on either side still
/// score 0.
pub fn ngram_pr_smoothed(hyp: &Sentence, reference: &Sentence, n: usize) -> (f64, f64) {
    assert!(n >= 1, "n-gram order must be at least 1");
    let hyp_count = chunk_count(hyp.len(), n);
    let ref_count = chunk_count(reference.len(), n);
    if hyp_count == 0 || ref_count == 0 {
        return (0.0, 0.0);
    }
    let matched = clipped_matches(hyp, reference, n);
    (
        (matched + 1) as f64 / (hyp_count + 1) as f64,
        (matched + 1) as f64 / (ref_count + 1) as f64,
    )
}

fn chunk_count(len: usize, n: usize) -> usize {
    (len + 1).saturating_sub(n)
}

fn clipped_matches(hyp: &Sentence, reference: &Sentence, n: usize) -> usize {
    let mut ref_grams: HashMap<&[String], usize> = HashMap::new();
    for gram in reference.tokens().windows(n) {
        *ref_grams.entry(gram).or_insert(0) += 1;
    }
    let mut hyp_grams: HashMap<&[String], usize> = HashMap::new();
    for gram in hyp.tokens().windows(n) {
        *hyp_grams.entry(gram).or_insert(0) += 1;
    }
    hyp_grams
        .iter()
        .map(|(gram, count)| ref_grams.get(gram).map_or(0, |r| *count.min(r)))
        .sum()
}

/// Weighted harmonic mean (sum w_i) / (sum w_i / v_i).
///
/// Any zero value with a positive weight pulls the mean to 0 (pole
/// convention); zero-weight entries are ignored.
pub fn weighted_harmonic(values: &[f64], weights: &[f64]) -> Result<f64, FactorError> {
    if values.len() != weights.len() {
        return Err(FactorError::LengthMismatch {
            values: values.len(),
            weights: weights.len(),
        });
    }
    let weight_sum: f64 = weights.iter().sum();
    if weight_sum <= 0.0 {
        return Err(FactorError::ZeroWeightSum);
    }
    let mut denominator = 0.0;
    for (&value, &weight) in values.iter().zip(weights) {
        if weight == 0.0 {
            continue;
        }
        if value == 0.0 {
            return Ok(0.0);
        }
        denominator += weight / value;
    }
    Ok(weight_sum / denominator)
}

/// The reference whose length is nearest the hypothesis length; ties break
/// toward the shorter reference, then the lower index.
///
/// Empty references are skipped unless every reference is empty, so a
/// usable reference is preferred whenever one exists.
pub fn effective_reference<'a>(hyp: &Sentence, refs: &'a [Sentence]) -> &'a Sentence {
    assert!(!refs.is_empty(), "at least one reference is required");
    let nearest = |candidates: &mut dyn Iterator<Item = (usize, &'a Sentence)>| {
        candidates
            .min_by_key(|(index, r)| (r.len().abs_diff(hyp.len()), r.len(), *index))
            .map(|(_, r)| r)
    };
    nearest(&mut refs.iter().enumerate().filter(|(_, r)| !r.is_empty()))
        .unwrap_or_else(|| nearest(&mut refs.iter().enumerate()).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::align::align;

    const TOL: f64 = 1e-6;

    fn sent(line: &str) -> Sentence {
        Sentence::tokenize(line)
    }

    #[test]
    fn length_penalty_equal_lengths() {
        for len in [1, 5, 100] {
            assert_eq!(length_penalty(len, len).unwrap(), 1.0);
        }
    }

    #[test]
    fn length_penalty_golden_values() {
        // exp(1 - 2) = 1/e, both directions.
        let expected = 0.367879;
        assert!((length_penalty(5, 10).unwrap() - expected).abs() < TOL);
        assert!((length_penalty(10, 5).unwrap() - expected).abs() < TOL);
    }

    #[test]
    fn length_penalty_edge_cases() {
        assert_eq!(length_penalty(3, 0), Err(FactorError::EmptyReference));
        assert_eq!(length_penalty(0, 4).unwrap(), 0.0);
    }

    #[test]
    fn npd_identity_is_zero() {
        let s = sent("a b c d");
        let alignment = align(&s, std::slice::from_ref(&s), 2);
        assert_eq!(npd(&alignment), 0.0);
    }

    #[test]
    fn npd_crosswise_pair() {
        // hyp [b, a] vs ref [a, b]: (|1/2-2/2| + |2/2-1/2|)/2 = 0.5.
        let hyp = sent("b a");
        let reference = sent("a b");
        let alignment = align(&hyp, std::slice::from_ref(&reference), 2);
        assert_eq!(alignment.match_count(), 2);
        assert!((npd(&alignment) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn npd_empty_hypothesis() {
        let alignment = align(&sent(""), &[sent("a")], 2);
        assert_eq!(npd(&alignment), 0.0);
    }

    #[test]
    fn npos_penal_golden_values() {
        assert_eq!(npos_penal(0.0).unwrap(), 1.0);
        assert!((npos_penal(0.5).unwrap() - 0.606531).abs() < TOL);
        assert!((npos_penal(1.0).unwrap() - 0.367879).abs() < TOL);
        assert!(npos_penal(-0.1).is_err());
        assert!(npos_penal(1.1).is_err());
    }

    #[test]
    fn unigram_pr_examples() {
        assert_eq!(unigram_pr(3, 3, 4), (1.0, 0.75));
        assert_eq!(unigram_pr(4, 4, 4), (1.0, 1.0));
        assert_eq!(unigram_pr(0, 3, 4), (0.0, 0.0));
        assert_eq!(unigram_pr(0, 0, 0), (0.0, 0.0));
        // Multi-reference over-matching clamps.
        assert_eq!(unigram_pr(4, 4, 2), (1.0, 1.0));
    }

    #[test]
    fn ngram_pr_identical_sentences() {
        let s = sent("a b c d");
        for n in 1..=4 {
            assert_eq!(ngram_pr(&s, &s, n), (1.0, 1.0));
        }
    }

    #[test]
    fn ngram_pr_bigram_example() {
        // Bigrams: hyp {ab, bc}, ref {ab, bd}; one match.
        let hyp = sent("a b c");
        let reference = sent("a b d");
        assert_eq!(ngram_pr(&hyp, &reference, 2), (0.5, 0.5));
    }

    #[test]
    fn ngram_pr_short_sentence_has_no_chunks() {
        let hyp = sent("a");
        let reference = sent("a b c");
        assert_eq!(ngram_pr(&hyp, &reference, 2), (0.0, 0.0));
    }

    #[test]
    fn ngram_pr_clips_repeats() {
        let hyp = sent("a a a");
        let reference = sent("a a b");
        // Unigrams: min(3, 2) = 2 matches out of 3 and 3.
        let (p, r) = ngram_pr(&hyp, &reference, 1);
        assert!((p - 2.0 / 3.0).abs() < 1e-12);
        assert!((r - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn smoothed_ngram_pr_adds_one_chunk() {
        let hyp = sent("a b c");
        let reference = sent("x y z");
        assert_eq!(ngram_pr(&hyp, &reference, 2), (0.0, 0.0));
        assert_eq!(ngram_pr_smoothed(&hyp, &reference, 2), (1.0 / 3.0, 1.0 / 3.0));
        // Still zero when a side has no chunks at all.
        assert_eq!(ngram_pr_smoothed(&sent("a"), &reference, 2), (0.0, 0.0));
    }

    #[test]
    fn weighted_harmonic_golden_value() {
        // Harmonic(9R, 1P), R = 0.75, P = 1: 10 / (9/0.75 + 1/1) = 10/13.
        let value = weighted_harmonic(&[0.75, 1.0], &[9.0, 1.0]).unwrap();
        assert!((value - 0.769231).abs() < TOL);
    }

    #[test]
    fn weighted_harmonic_fixed_point_and_pole() {
        let v = 0.37;
        let all_equal = weighted_harmonic(&[v, v, v], &[3.0, 1.0, 2.5]).unwrap();
        assert!((all_equal - v).abs() < 1e-12);
        assert_eq!(weighted_harmonic(&[0.0, 1.0], &[1.0, 1.0]).unwrap(), 0.0);
        // A zero under a zero weight is ignored.
        assert_eq!(weighted_harmonic(&[0.0, 1.0], &[0.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn weighted_harmonic_errors() {
        assert_eq!(
            weighted_harmonic(&[1.0], &[1.0, 2.0]),
            Err(FactorError::LengthMismatch { values: 1, weights: 2 })
        );
        assert_eq!(
            weighted_harmonic(&[1.0], &[0.0]),
            Err(FactorError::ZeroWeightSum)
        );
    }

    #[test]
    fn effective_reference_nearest_length() {
        let hyp = sent("1 2 3 4 5 6");
        let refs = vec![sent("a b c d e f g h"), sent("a b c d e f g")];
        assert_eq!(effective_reference(&hyp, &refs).len(), 7);
    }

    #[test]
    fn effective_reference_single() {
        let hyp = sent("x");
        let refs = vec![sent("a b")];
        assert_eq!(effective_reference(&hyp, &refs), &refs[0]);
    }

    #[test]
    fn effective_reference_tie_prefers_shorter() {
        let hyp = sent("1 2 3 4 5 6");
        let refs = vec![sent("a b c d e"), sent("a b c d e f g")];
        assert_eq!(effective_reference(&hyp, &refs).len(), 5);
    }

    #[test]
    fn effective_reference_skips_empty_unless_all_empty() {
        let hyp = sent("x");
        let refs = vec![sent(""), sent("a b c")];
        assert_eq!(effective_reference(&hyp, &refs).len(), 3);
        let empties = vec![sent(""), sent("")];
        assert_eq!(effective_reference(&hyp, &empties).len(), 0);
    }
}
