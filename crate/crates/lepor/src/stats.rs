//! Meta-evaluation statistics: correlation of metric scores with human
//! assessments, annotator agreement, and error measures for quality
//! estimation.
//!
//! Tie handling follows the usual completions: Spearman assigns average
//! ranks and falls back to Pearson on the ranks, Kendall counts tied pairs
//! as neither concordant nor discordant while keeping them in the
//! denominator.

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("series lengths differ: {left} vs {right}")]
    MismatchedLengths { left: usize, right: usize },
    #[error("need at least {needed} observations, got {got}")]
    TooFewObservations { needed: usize, got: usize },
    #[error("series values must be finite")]
    NonFinite,
    #[error("correlation undefined: a series has zero variance")]
    ZeroVariance,
    #[error("proportion {0} outside [0, 1]")]
    ProportionOutOfRange(f64),
    #[error("chance agreement of 1 leaves nothing to measure")]
    ChanceAgreementOne,
    #[error("quantile count {quantiles} outside 2..={items}")]
    QuantilesOutOfRange { quantiles: usize, items: usize },
}

fn check_paired(xs: &[f64], ys: &[f64], min_len: usize) -> Result<(), StatsError> {
    if xs.len() != ys.len() {
        return Err(StatsError::MismatchedLengths {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < min_len {
        return Err(StatsError::TooFewObservations {
            needed: min_len,
            got: xs.len(),
        });
    }
    if !xs.iter().chain(ys).all(|v| v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    Ok(())
}

/// Pearson correlation coefficient of paired samples.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64, StatsError> {
    check_paired(xs, ys, 2)?;
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut covariance = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        let dy = y - mean_y;
        covariance += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if var_x == 0.0 || var_y == 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    Ok(covariance / (var_x.sqrt() * var_y.sqrt()))
}

/// 1-based ranks with ties assigned the average of their rank range.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite values"));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // Positions i..=j (0-based) share the average of ranks i+1..=j+1.
        let shared = (i + j) as f64 / 2.0 + 1.0;
        for &index in &order[i..=j] {
            ranks[index] = shared;
        }
        i = j + 1;
    }
    ranks
}

fn has_ties(values: &[f64]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// Spearman rank correlation: the closed form 1 - 6 sum d_i^2 / (n(n^2-1))
/// when tie-free, Pearson over average ranks otherwise.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<f64, StatsError> {
    check_paired(xs, ys, 2)?;
    let rank_x = average_ranks(xs);
    let rank_y = average_ranks(ys);
    if has_ties(xs) || has_ties(ys) {
        return pearson(&rank_x, &rank_y);
    }
    let n = xs.len() as f64;
    let d_squared: f64 = rank_x
        .iter()
        .zip(&rank_y)
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok(1.0 - 6.0 * d_squared / (n * (n * n - 1.0)))
}

/// Kendall's tau: (concordant - discordant) / (n(n-1)/2). Tied pairs count
/// as neither but stay in the denominator.
pub fn kendall_tau(xs: &[f64], ys: &[f64]) -> Result<f64, StatsError> {
    check_paired(xs, ys, 2)?;
    let n = xs.len();
    let mut concordant = 0u64;
    let mut discordant = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let sign = (xs[i] - xs[j]) * (ys[i] - ys[j]);
            if sign > 0.0 {
                concordant += 1;
            } else if sign < 0.0 {
                discordant += 1;
            }
        }
    }
    let total = (n * (n - 1) / 2) as f64;
    Ok((concordant as f64 - discordant as f64) / total)
}

/// Agreement coefficient (P(A) - P(E)) / (1 - P(E)) from pre-computed
/// proportions.
pub fn kappa(p_agree: f64, p_chance: f64) -> Result<f64, StatsError> {
    for p in [p_agree, p_chance] {
        if !(0.0..=1.0).contains(&p) {
            return Err(StatsError::ProportionOutOfRange(p));
        }
    }
    if p_chance >= 1.0 {
        return Err(StatsError::ChanceAgreementOne);
    }
    Ok((p_agree - p_chance) / (1.0 - p_chance))
}

/// Cohen's two-rater kappa with chance agreement from the raters' label
/// marginals.
pub fn cohen_kappa<T: Eq + Hash>(a: &[T], b: &[T]) -> Result<f64, StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::MismatchedLengths {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(StatsError::TooFewObservations { needed: 1, got: 0 });
    }
    let n = a.len() as f64;
    let agreements = a.iter().zip(b).filter(|(x, y)| x == y).count() as f64;
    let mut count_a: HashMap<&T, usize> = HashMap::new();
    let mut count_b: HashMap<&T, usize> = HashMap::new();
    for label in a {
        *count_a.entry(label).or_insert(0) += 1;
    }
    for label in b {
        *count_b.entry(label).or_insert(0) += 1;
    }
    let p_chance: f64 = count_a
        .iter()
        .map(|(label, &ca)| {
            let cb = count_b.get(label).copied().unwrap_or(0);
            (ca as f64 / n) * (cb as f64 / n)
        })
        .sum();
    kappa(agreements / n, p_chance)
}

/// Pairwise pooled kappa over a label matrix (rows = items, columns =
/// annotators), with uniform chance agreement 1/|labels|: the shared-task
/// ranking convention.
pub fn pairwise_kappa<T: Eq + Hash>(rows: &[Vec<T>]) -> Result<f64, StatsError> {
    if rows.is_empty() {
        return Err(StatsError::TooFewObservations { needed: 1, got: 0 });
    }
    let annotators = rows[0].len();
    if annotators < 2 {
        return Err(StatsError::TooFewObservations {
            needed: 2,
            got: annotators,
        });
    }
    for row in rows {
        if row.len() != annotators {
            return Err(StatsError::MismatchedLengths {
                left: annotators,
                right: row.len(),
            });
        }
    }
    let mut labels: Vec<&T> = Vec::new();
    for value in rows.iter().flatten() {
        if !labels.contains(&value) {
            labels.push(value);
        }
    }
    if labels.len() < 2 {
        return Err(StatsError::ChanceAgreementOne);
    }
    let mut agreeing = 0usize;
    let mut total = 0usize;
    for row in rows {
        for i in 0..annotators {
            for j in (i + 1)..annotators {
                total += 1;
                if row[i] == row[j] {
                    agreeing += 1;
                }
            }
        }
    }
    kappa(agreeing as f64 / total as f64, 1.0 / labels.len() as f64)
}

/// Mean absolute error between hypothesis scores and gold values.
pub fn mae(hyp: &[f64], gold: &[f64]) -> Result<f64, StatsError> {
    check_paired(hyp, gold, 1)?;
    let sum: f64 = hyp.iter().zip(gold).map(|(h, v)| (h - v).abs()).sum();
    Ok(sum / hyp.len() as f64)
}

/// Root mean squared error between hypothesis scores and gold values.
pub fn rmse(hyp: &[f64], gold: &[f64]) -> Result<f64, StatsError> {
    check_paired(hyp, gold, 1)?;
    let sum: f64 = hyp.iter().zip(gold).map(|(h, v)| (h - v) * (h - v)).sum();
    Ok((sum / hyp.len() as f64).sqrt())
}

/// Ranking value: items are sorted by `hyp_scores` descending and split
/// into `n_quantiles` contiguous quantiles (earlier quantiles take the
/// extra items); the result is the average gold value of the growing
/// head unions, minus the overall gold mean.
pub fn delta_avg(
    hyp_scores: &[f64],
    gold: &[f64],
    n_quantiles: usize,
) -> Result<f64, StatsError> {
    check_paired(hyp_scores, gold, 1)?;
    let items = hyp_scores.len();
    if n_quantiles < 2 || n_quantiles > items {
        return Err(StatsError::QuantilesOutOfRange {
            quantiles: n_quantiles,
            items,
        });
    }
    let mut order: Vec<usize> = (0..items).collect();
    // Stable descending sort: score ties keep input order.
    order.sort_by(|&a, &b| {
        hyp_scores[b]
            .partial_cmp(&hyp_scores[a])
            .expect("finite values")
    });

    let base = items / n_quantiles;
    let extra = items % n_quantiles;
    let mut head_sum = 0.0;
    let mut consumed = 0usize;
    let mut union_means = 0.0;
    for quantile in 0..n_quantiles - 1 {
        let size = base + usize::from(quantile < extra);
        for &index in &order[consumed..consumed + size] {
            head_sum += gold[index];
        }
        consumed += size;
        union_means += head_sum / consumed as f64;
    }
    let overall = gold.iter().sum::<f64>() / items as f64;
    Ok(union_means / (n_quantiles - 1) as f64 - overall)
}
