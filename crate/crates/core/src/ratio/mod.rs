//! Maximum/minimum-ratio subset search by parametric binary search, with
//! pluggable inner additive optimizers.
//!
//! The ratio of a subset is the sum of its `p` values divided by the sum of
//! its `q` values. For a candidate ratio `A` every element gets the weight
//! `p - A * q`; the sign of the best additive value under the subset property
//! tells which half of the search interval survives.

mod bounded;
mod segment;
mod unbounded;

pub use bounded::{max_weight_cycle_bounded, max_weight_path_bounded, BoundedBest, LengthBoundedInstance, WeightedEdge};
pub use segment::{max_sum_segment, SegmentResult};
pub use unbounded::{unbounded_max_weight, UnboundedMax};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element carrying the two ratio values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioItem {
    pub p: f64,
    pub q: f64,
}

impl RatioItem {
    pub fn validate(items: &[RatioItem]) -> Result<()> {
        for (i, it) in items.iter().enumerate() {
            if !(it.p >= 0.0) || !it.p.is_finite() {
                return Err(Error::validation(format!("item {i}: p must be >= 0")));
            }
            if !(it.q > 0.0) || !it.q.is_finite() {
                return Err(Error::validation(format!("item {i}: q must be > 0")));
            }
        }
        Ok(())
    }
}

/// Maximizes a sum of element weights over the subsets satisfying some fixed
/// property, reporting the best value and a witness subset (element indices,
/// repetition allowed for walk-like witnesses). `None` means no subset
/// satisfies the property at all.
pub trait AdditiveOptimizer {
    fn optimize(&self, weights: &[f64]) -> Option<(f64, Vec<usize>)>;
}

/// Property `exactly one element`.
pub struct ExactlyOne;

impl AdditiveOptimizer for ExactlyOne {
    fn optimize(&self, weights: &[f64]) -> Option<(f64, Vec<usize>)> {
        weights
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap().then(b.0.cmp(&a.0)))
            .map(|(i, &w)| (w, vec![i]))
    }
}

/// Property `any non-empty subset`.
pub struct AnyNonempty;

impl AdditiveOptimizer for AnyNonempty {
    fn optimize(&self, weights: &[f64]) -> Option<(f64, Vec<usize>)> {
        if weights.is_empty() {
            return None;
        }
        let positive: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] > 0.0).collect();
        if positive.is_empty() {
            return ExactlyOne.optimize(weights);
        }
        let total = positive.iter().map(|&i| weights[i]).sum();
        Some((total, positive))
    }
}

/// Result of a ratio search.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioResult {
    pub ratio: f64,
    pub witness: Vec<usize>,
    pub iterations: u32,
}

const MAX_ITERATIONS: u32 = 200;

fn amax(items: &[RatioItem]) -> f64 {
    let max_p = items.iter().map(|i| i.p).fold(0.0f64, f64::max);
    let min_q = items.iter().map(|i| i.q).fold(f64::INFINITY, f64::min);
    if items.is_empty() {
        0.0
    } else {
        max_p / min_q
    }
}

/// Upper bound of the search interval: max p over min q.
pub fn search_upper_bound(items: &[RatioItem]) -> f64 {
    amax(items)
}

/// Binary-searches the maximum ratio over the optimizer's feasible subsets.
///
/// Returns a ratio within `eps` of the optimum together with a witness whose
/// own ratio is at least `ratio - eps`. The feasibility sign must be
/// non-increasing in the candidate; a violation is reported as
/// [`Error::OptimizerNotMonotone`].
pub fn ratio_search(
    items: &[RatioItem],
    opta: &dyn AdditiveOptimizer,
    eps: f64,
) -> Result<RatioResult> {
    RatioItem::validate(items)?;
    if !(eps > 0.0) {
        return Err(Error::validation("eps must be positive"));
    }

    let evaluate = |cand: f64| -> Option<(f64, Vec<usize>)> {
        let weights: Vec<f64> = items.iter().map(|it| it.p - cand * it.q).collect();
        let best = opta.optimize(&weights);
        if let Some((value, witness)) = &best {
            let total: f64 = witness.iter().map(|&i| weights[i]).sum();
            debug_assert!(
                (total - value).abs() <= 1e-6 * (1.0 + value.abs()),
                "optimizer witness sums to {total}, reported {value}"
            );
        }
        best
    };

    let mut lo = 0.0f64;
    let mut hi = amax(items);
    let (v0, mut witness) = evaluate(lo).ok_or(Error::NoFeasibleSubset)?;
    if v0 < 0.0 {
        // p >= 0 and q > 0 make every subset's weight at A=0 non-negative.
        return Err(Error::OptimizerNotMonotone(format!(
            "negative best value {v0} at candidate 0"
        )));
    }
    let mut highest_feasible = lo;
    let mut lowest_infeasible = f64::INFINITY;

    let mut iterations = 0;
    while hi - lo > eps && iterations < MAX_ITERATIONS {
        iterations += 1;
        let mid = lo + (hi - lo) / 2.0;
        match evaluate(mid) {
            Some((value, w)) if value >= 0.0 => {
                if mid > highest_feasible {
                    highest_feasible = mid;
                }
                if mid >= lowest_infeasible {
                    return Err(Error::OptimizerNotMonotone(format!(
                        "feasible at {mid} but infeasible below it"
                    )));
                }
                witness = w;
                lo = mid;
            }
            Some(_) | None => {
                if mid < lowest_infeasible {
                    lowest_infeasible = mid;
                }
                if mid <= highest_feasible {
                    return Err(Error::OptimizerNotMonotone(format!(
                        "infeasible at {mid} but feasible above it"
                    )));
                }
                hi = mid;
            }
        }
    }
    Ok(RatioResult {
        ratio: lo,
        witness,
        iterations,
    })
}

/// Minimum-ratio variant, reduced to maximization by replacing every `p` with
/// `AMAX * q - p` (which flips the objective and keeps weights non-negative).
pub fn ratio_search_min(
    items: &[RatioItem],
    opta: &dyn AdditiveOptimizer,
    eps: f64,
) -> Result<RatioResult> {
    RatioItem::validate(items)?;
    let bound = amax(items);
    let flipped: Vec<RatioItem> = items
        .iter()
        .map(|it| RatioItem {
            p: bound * it.q - it.p,
            q: it.q,
        })
        .collect();
    let mut r = ratio_search(&flipped, opta, eps)?;
    r.ratio = bound - r.ratio;
    Ok(r)
}
