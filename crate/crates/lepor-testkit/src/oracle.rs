//! Independent rule oracles.

use std::cmp::Ordering;

/// The normalized position distance |hyp_pos/hyp_len - ref_pos/ref_len|
/// (1-based positions) as an exact fraction. Exactness matters: equal
/// rational distances must compare as ties for the declared tie-break,
/// and f64 subtraction of rounded quotients can order them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Distance {
    numerator: u128,
    denominator: u128,
}

impl Distance {
    fn new(hyp_pos: usize, hyp_len: usize, ref_pos: usize, ref_len: usize) -> Self {
        let a = (hyp_pos as u128) * (ref_len as u128);
        let b = (ref_pos as u128) * (hyp_len as u128);
        Self {
            numerator: a.abs_diff(b),
            denominator: (hyp_len as u128) * (ref_len as u128),
        }
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numerator * other.denominator).cmp(&(other.numerator * self.denominator))
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A reference-rule alignment over raw token slices: for each hypothesis
/// position, every unclaimed equal reference token is listed as a
/// candidate, candidates with a matching neighbour at some shared signed
/// offset within the window are kept in preference to the rest, and the
/// candidate with the smallest normalized position distance wins, ties
/// going to the lower reference id, then the lower position. Returns
/// (hyp_index, ref_id, ref_index) triples.
pub fn align_oracle(
    hyp: &[&str],
    refs: &[Vec<&str>],
    window: usize,
) -> Vec<(usize, usize, usize)> {
    let mut claimed: Vec<Vec<bool>> = refs.iter().map(|r| vec![false; r.len()]).collect();
    let mut pairs = Vec::new();

    for h in 0..hyp.len() {
        // Candidate set: (context flag, distance, ref id, ref index).
        let mut candidates: Vec<(bool, Distance, usize, usize)> = Vec::new();
        for (ref_id, reference) in refs.iter().enumerate() {
            for (ref_index, token) in reference.iter().enumerate() {
                if claimed[ref_id][ref_index] || *token != hyp[h] {
                    continue;
                }
                let mut context = false;
                for k in 1..=window {
                    let k = k as isize;
                    for offset in [-k, k] {
                        let hn = h as isize + offset;
                        let rn = ref_index as isize + offset;
                        if hn >= 0
                            && rn >= 0
                            && (hn as usize) < hyp.len()
                            && (rn as usize) < reference.len()
                            && hyp[hn as usize] == reference[rn as usize]
                        {
                            context = true;
                        }
                    }
                }
                let distance = Distance::new(h + 1, hyp.len(), ref_index + 1, reference.len());
                candidates.push((context, distance, ref_id, ref_index));
            }
        }
        if candidates.is_empty() {
            continue;
        }
        if candidates.iter().any(|c| c.0) {
            candidates.retain(|c| c.0);
        }
        candidates.sort_by(|a, b| a.1.cmp(&b.1).then(a.2.cmp(&b.2)).then(a.3.cmp(&b.3)));
        let winner = candidates[0];
        claimed[winner.2][winner.3] = true;
        pairs.push((h, winner.2, winner.3));
    }
    pairs
}

/// Recomputes the mean absolute normalized displacement straight from an
/// alignment pair list.
pub fn npd_oracle(
    pairs: &[(usize, usize, usize)],
    hyp_len: usize,
    ref_lens: &[usize],
) -> f64 {
    if hyp_len == 0 {
        return 0.0;
    }
    let mut total = 0.0;
    for &(hyp_index, ref_id, ref_index) in pairs {
        let hyp_pos = (hyp_index + 1) as f64 / hyp_len as f64;
        let ref_pos = (ref_index + 1) as f64 / ref_lens[ref_id] as f64;
        total += (hyp_pos - ref_pos).abs();
    }
    total / hyp_len as f64
}

/// Brute-force one-to-one n-gram chunk matching: each hypothesis n-gram
/// consumes the first equal unconsumed reference n-gram.
pub fn ngram_matches_oracle(hyp: &[&str], reference: &[&str], n: usize) -> usize {
    if hyp.len() < n || reference.len() < n {
        return 0;
    }
    let ref_grams: Vec<&[&str]> = reference.windows(n).collect();
    let mut used = vec![false; ref_grams.len()];
    let mut matched = 0;
    for gram in hyp.windows(n) {
        for (i, candidate) in ref_grams.iter().enumerate() {
            if !used[i] && *candidate == gram {
                used[i] = true;
                matched += 1;
                break;
            }
        }
    }
    matched
}

/// Pair-classification Kendall tau: concordant and discordant pairs
/// counted by explicit ordering comparison, ties kept in the denominator.
pub fn kendall_oracle(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = xs[i].partial_cmp(&xs[j]).unwrap();
            let dy = ys[i].partial_cmp(&ys[j]).unwrap();
            match (dx, dy) {
                (Ordering::Less, Ordering::Less) | (Ordering::Greater, Ordering::Greater) => {
                    concordant += 1;
                }
                (Ordering::Less, Ordering::Greater) | (Ordering::Greater, Ordering::Less) => {
                    discordant += 1;
                }
                _ => {}
            }
        }
    }
    (concordant - discordant) as f64 / (n * (n - 1) / 2) as f64
}

/// All token sequences over `vocab` with lengths `min_len..=max_len`.
pub fn enumerate_sentences<'a>(
    vocab: &[&'a str],
    min_len: usize,
    max_len: usize,
) -> Vec<Vec<&'a str>> {
    let mut out = Vec::new();
    for len in min_len..=max_len {
        if len == 0 {
            out.push(Vec::new());
            continue;
        }
        let mut indices = vec![0usize; len];
        'sequences: loop {
            out.push(indices.iter().map(|&i| vocab[i]).collect());
            // Odometer increment over vocab indices.
            let mut position = len - 1;
            loop {
                indices[position] += 1;
                if indices[position] < vocab.len() {
                    break;
                }
                indices[position] = 0;
                if position == 0 {
                    break 'sequences;
                }
                position -= 1;
            }
        }
    }
    out
}
