//! Context-dependent n-gram word alignment.
//!
//! The hypothesis is scanned left to right. Each token gathers every
//! reference position across all references that still holds an equal
//! (case-folded upstream) token. Candidates with a matching neighbour
//! inside the context window take priority over the rest; among the
//! survivors the one nearest in normalized position wins, with exact ties
//! broken toward the lower reference id, then the lower position. A
//! claimed reference token never participates again, so the result is
//! one-to-one on both sides.

use crate::text::Sentence;

/// One aligned token pair. All indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlignedPair {
    pub hyp_index: usize,
    pub ref_id: usize,
    pub ref_index: usize,
}

/// An injective partial matching from hypothesis positions to reference
/// positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pairs: Vec<AlignedPair>,
    hyp_length: usize,
    ref_lengths: Vec<usize>,
}

impl Alignment {
    pub fn pairs(&self) -> &[AlignedPair] {
        &self.pairs
    }

    pub fn hyp_length(&self) -> usize {
        self.hyp_length
    }

    pub fn ref_lengths(&self) -> &[usize] {
        &self.ref_lengths
    }

    /// Number of aligned (matching) words: the common_num of unigram
    /// precision and recall.
    pub fn match_count(&self) -> usize {
        self.pairs.len()
    }
}

/// See [`Alignment::match_count`].
pub fn match_count(alignment: &Alignment) -> usize {
    alignment.match_count()
}

/// Aligns `hyp` against one or more references.
///
/// `window` is the context neighbourhood: a candidate has matched context
/// when some signed offset k with 0 < |k| <= window holds equal tokens on
/// both sides. An empty hypothesis yields an empty alignment.
pub fn align(hyp: &Sentence, refs: &[Sentence], window: usize) -> Alignment {
    assert!(window >= 1, "window must be at least 1");
    assert!(!refs.is_empty(), "at least one reference is required");

    let mut claimed: Vec<Vec<bool>> = refs.iter().map(|r| vec![false; r.len()]).collect();
    let mut pairs = Vec::new();

    for (hyp_index, token) in hyp.tokens().iter().enumerate() {
        let mut best: Option<Candidate> = None;
        for (ref_id, reference) in refs.iter().enumerate() {
            for (ref_index, other) in reference.tokens().iter().enumerate() {
                if claimed[ref_id][ref_index] || other != token {
                    continue;
                }
                let candidate = Candidate {
                    context: has_matching_neighbour(hyp, hyp_index, reference, ref_index, window),
                    ref_id,
                    ref_index,
                    ref_length: reference.len(),
                };
                // Scan order is (ref_id, ref_index) ascending, so keeping
                // the incumbent on ties realizes the documented tie-break.
                best = match best {
                    None => Some(candidate),
                    Some(incumbent) => {
                        if candidate.beats(&incumbent, hyp_index, hyp.len()) {
                            Some(candidate)
                        } else {
                            Some(incumbent)
                        }
                    }
                };
            }
        }
        if let Some(chosen) = best {
            claimed[chosen.ref_id][chosen.ref_index] = true;
            pairs.push(AlignedPair {
                hyp_index,
                ref_id: chosen.ref_id,
                ref_index: chosen.ref_index,
            });
        }
    }

    Alignment {
        pairs,
        hyp_length: hyp.len(),
        ref_lengths: refs.iter().map(Sentence::len).collect(),
    }
}

#[derive(Clone, Copy)]
struct Candidate {
    context: bool,
    ref_id: usize,
    ref_index: usize,
    ref_length: usize,
}

impl Candidate {
    fn beats(&self, incumbent: &Candidate, hyp_index: usize, hyp_length: usize) -> bool {
        if self.context != incumbent.context {
            return self.context;
        }
        // Strictly smaller normalized position distance wins; equality
        // keeps the incumbent. Compared exactly: with 1-based positions,
        // |h/H - p/L| < |h/H - q/M|  <=>  |h*L - p*H| * M < |h*M - q*H| * L.
        let ours = position_gap(hyp_index, hyp_length, self.ref_index, self.ref_length);
        let theirs = position_gap(
            hyp_index,
            hyp_length,
            incumbent.ref_index,
            incumbent.ref_length,
        );
        ours * (incumbent.ref_length as u128) < theirs * (self.ref_length as u128)
    }
}

/// |h*L - p*H| over 1-based positions h = hyp_index+1, p = ref_index+1.
fn position_gap(hyp_index: usize, hyp_length: usize, ref_index: usize, ref_length: usize) -> u128 {
    let lhs = (hyp_index as u128 + 1) * ref_length as u128;
    let rhs = (ref_index as u128 + 1) * hyp_length as u128;
    lhs.abs_diff(rhs)
}

fn has_matching_neighbour(
    hyp: &Sentence,
    hyp_index: usize,
    reference: &Sentence,
    ref_index: usize,
    window: usize,
) -> bool {
    let window = window as isize;
    for offset in -window..=window {
        if offset == 0 {
            continue;
        }
        let h = hyp_index as isize + offset;
        let r = ref_index as isize + offset;
        if h < 0 || r < 0 {
            continue;
        }
        match (
            hyp.tokens().get(h as usize),
            reference.tokens().get(r as usize),
        ) {
            (Some(a), Some(b)) if a == b => return true,
            _ => {}
        }
    }
    false
}
