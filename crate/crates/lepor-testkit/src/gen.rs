//! Seeded random inputs for the randomized suites.

use lepor::{ParamSet, Segment, Sentence};
use rand::rngs::StdRng;
use rand::Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random sentence over a `vocab_size`-word vocabulary (`w0`, `w1`, ...).
pub fn sentence(rng: &mut StdRng, vocab_size: usize, min_len: usize, max_len: usize) -> Sentence {
    let len = rng.gen_range(min_len..=max_len);
    Sentence::from_tokens((0..len).map(|_| format!("w{}", rng.gen_range(0..vocab_size))))
}

/// A random segment with 1..=max_refs references.
pub fn segment(
    rng: &mut StdRng,
    vocab_size: usize,
    min_len: usize,
    max_len: usize,
    max_refs: usize,
) -> Segment {
    let hyp = sentence(rng, vocab_size, min_len, max_len);
    let ref_count = rng.gen_range(1..=max_refs);
    let refs = (0..ref_count)
        .map(|_| sentence(rng, vocab_size, min_len.max(1), max_len))
        .collect();
    Segment::new(hyp, refs).expect("references present")
}

/// A segment whose hypothesis equals its single reference.
pub fn identity_segment(rng: &mut StdRng, vocab_size: usize, min_len: usize, max_len: usize) -> Segment {
    let hyp = sentence(rng, vocab_size, min_len, max_len);
    Segment::new(hyp.clone(), vec![hyp]).expect("references present")
}

/// A random valid parameter set with up to `max_order` n-gram orders.
pub fn param_set(rng: &mut StdRng, max_order: usize) -> ParamSet {
    let order = rng.gen_range(1..=max_order);
    let mut ngram_weights: Vec<f64> = (0..order).map(|_| rng.gen_range(0.05..1.0)).collect();
    let sum: f64 = ngram_weights.iter().sum();
    for w in &mut ngram_weights {
        *w /= sum;
    }
    ParamSet {
        alpha: rng.gen_range(0.0..10.0),
        beta: rng.gen_range(0.1..10.0),
        w_lp: rng.gen_range(0.0..5.0),
        w_npos: rng.gen_range(0.0..5.0),
        w_hpr: rng.gen_range(0.1..5.0),
        ngram_weights,
        window: rng.gen_range(1..=3),
        w_hw: 1.0,
        w_hp: 0.0,
    }
}

/// A tie-free random series: a shuffled permutation with jitter.
pub fn tie_free_series(rng: &mut StdRng, len: usize) -> Vec<f64> {
    let mut values: Vec<f64> = (0..len)
        .map(|i| i as f64 + rng.gen_range(0.0..0.4))
        .collect();
    for i in (1..values.len()).rev() {
        let j = rng.gen_range(0..=i);
        values.swap(i, j);
    }
    values
}
