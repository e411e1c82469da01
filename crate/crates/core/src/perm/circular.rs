//! Circular sorting of a multi-permutation: pick the rotation of the
//! ascending arrangement that minimizes (number of swaps, total cost), where
//! swapping positions i and j costs |i - j|.
//!
//! For each rotation, positions where a value already matches the target are
//! cancelled out of its occurrence lists; the counts and positional distances
//! of the remainder give the (ni, ci) pair.

use serde::{Deserialize, Serialize};

use super::MultiPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularSortResult {
    /// Number of mismatched entries across all values (the paper's ni).
    pub swaps: u64,
    /// Sum of matched positional distances (the paper's ci).
    pub cost: u64,
    /// Left-rotation offset of the ascending arrangement that won.
    pub rotation_offset: usize,
    /// The winning target arrangement itself.
    pub target: Vec<u32>,
}

/// Positions present in both ascending lists.
fn common_positions(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Ordered difference `a \ cancel` (cancel is a subset of a).
fn cancel_merge(a: &[usize], cancel: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut j = 0;
    for &x in a {
        if j < cancel.len() && cancel[j] == x {
            j += 1;
        } else {
            out.push(x);
        }
    }
    out
}

pub fn circular_multiperm_sort(p: &MultiPermutation) -> CircularSortResult {
    let n = p.len();
    let k = p.k() as usize;
    let mut ascending: Vec<u32> = p.values().to_vec();
    ascending.sort_unstable();

    let lp = p.occurrence_lists();
    let mut best: Option<CircularSortResult> = None;

    for rot in 0..n.max(1) {
        let mut target = Vec::with_capacity(n);
        target.extend_from_slice(&ascending[rot.min(n)..]);
        target.extend_from_slice(&ascending[..rot.min(n)]);

        let mut lq: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, &v) in target.iter().enumerate() {
            lq[v as usize - 1].push(i + 1);
        }

        let mut ni = 0u64;
        let mut ci = 0u64;
        for v in 0..k {
            let lc = common_positions(&lp[v], &lq[v]);
            let lpp = cancel_merge(&lp[v], &lc);
            let lqp = cancel_merge(&lq[v], &lc);
            debug_assert_eq!(lpp.len(), lqp.len());
            ni += lpp.len() as u64;
            for (a, b) in lpp.iter().zip(lqp.iter()) {
                ci += a.abs_diff(*b) as u64;
            }
        }

        if best
            .as_ref()
            .map_or(true, |b| (ni, ci) < (b.swaps, b.cost))
        {
            best = Some(CircularSortResult {
                swaps: ni,
                cost: ci,
                rotation_offset: rot,
                target,
            });
        }
    }
    best.expect("at least one rotation considered")
}
