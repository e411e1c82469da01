//! Adjacent-swap distance between two multi-permutations, and inversion
//! counting.
//!
//! Matching the j-th occurrence of each value in `p` to the j-th occurrence in
//! `q` yields a permutation `r`; the distance is the inversion count of `r`.
//! For a binary alphabet the distance is also the sum of positional distances
//! of the value-1 occurrences.

use super::{MultiPermutation, OpScript, Permutation, SCRIPT_STEP_CAP};
use crate::error::{Error, Result};


#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InversionMethod {
    Merge,
    Tree,
    Blocks,
}

fn check_same_multiset(p: &MultiPermutation, q: &MultiPermutation) -> Result<()> {
    if p.len() != q.len() || p.k() != q.k() || p.counts() != q.counts() {
        return Err(Error::validation(
            "the two multi-permutations must have identical value multisets",
        ));
    }
    Ok(())
}

/// The occurrence-matching permutation r with r(i) = position in `q` of the
/// occurrence of p(i) that p(i) maps to. Its inversion count is the
/// adjacent-swap distance.
pub fn occurrence_matching(p: &MultiPermutation, q: &MultiPermutation) -> Result<Permutation> {
    check_same_multiset(p, q)?;
    Permutation::new(matching_permutation(p, q))
}

fn matching_permutation(p: &MultiPermutation, q: &MultiPermutation) -> Vec<u32> {
    let lists = q.occurrence_lists();
    let mut idx = vec![0usize; p.k() as usize];
    p.values()
        .iter()
        .map(|&v| {
            let slot = &mut idx[v as usize - 1];
            let r = lists[v as usize - 1][*slot] as u32;
            *slot += 1;
            r
        })
        .collect()
}

/// Minimum number of adjacent swaps turning `p` into `q`.
pub fn min_adjacent_swaps(p: &MultiPermutation, q: &MultiPermutation) -> Result<u64> {
    check_same_multiset(p, q)?;
    let r = matching_permutation(p, q);
    let count = count_inversions_raw(&r, InversionMethod::Merge);
    if p.k() <= 2 {
        // Linear route for binary alphabets: positional distances of value 1.
        let lp = p.occurrence_lists();
        let lq = q.occurrence_lists();
        let linear: u64 = lp[0]
            .iter()
            .zip(lq[0].iter())
            .map(|(a, b)| a.abs_diff(*b) as u64)
            .sum();
        debug_assert_eq!(linear, count, "binary-alphabet formula disagrees");
    }
    Ok(count)
}

/// Swap script of exactly `min_adjacent_swaps(p, q)` steps: scan left to
/// right; on a mismatch, bubble the nearest matching element leftward.
pub fn min_adjacent_swap_script(p: &MultiPermutation, q: &MultiPermutation) -> Result<OpScript> {
    check_same_multiset(p, q)?;
    let expected = min_adjacent_swaps(p, q)?;
    if expected > SCRIPT_STEP_CAP {
        return Err(Error::capacity(format!(
            "script would need {expected} steps (cap {SCRIPT_STEP_CAP})"
        )));
    }
    let mut cur = p.values().to_vec();
    let target = q.values();
    let mut steps = Vec::with_capacity(expected as usize);
    for i in 0..cur.len() {
        if cur[i] == target[i] {
            continue;
        }
        let j = (i + 1..cur.len())
            .find(|&j| cur[j] == target[i])
            .expect("multisets match");
        for t in (i + 1..=j).rev() {
            cur.swap(t - 1, t);
            steps.push(t); // 1-based left index of the swap (t-1, t) 0-based
        }
    }
    debug_assert_eq!(cur, target);
    debug_assert_eq!(steps.len() as u64, expected);
    Ok(OpScript::AdjacentSwap(steps))
}

fn count_inversions_raw(values: &[u32], method: InversionMethod) -> u64 {
    match method {
        InversionMethod::Merge => {
            let mut buf = values.to_vec();
            let mut scratch = vec![0u32; values.len()];
            merge_count(&mut buf, &mut scratch)
        }
        InversionMethod::Tree => tree_count(values),
        InversionMethod::Blocks => block_count(values),
    }
}

/// Inversion count of a permutation by one of three methods; all agree.
pub fn count_inversions(r: &Permutation, method: InversionMethod) -> u64 {
    count_inversions_raw(r.values(), method)
}

fn merge_count(buf: &mut [u32], scratch: &mut [u32]) -> u64 {
    let n = buf.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let (left, right) = buf.split_at_mut(mid);
    let mut inv = merge_count(left, &mut scratch[..mid]) + merge_count(right, &mut scratch[mid..]);
    let (mut i, mut j, mut o) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        if left[i] < right[j] {
            scratch[o] = left[i];
            i += 1;
        } else {
            scratch[o] = right[j];
            j += 1;
            inv += (left.len() - i) as u64;
        }
        o += 1;
    }
    while i < left.len() {
        scratch[o] = left[i];
        i += 1;
        o += 1;
    }
    while j < right.len() {
        scratch[o] = right[j];
        j += 1;
        o += 1;
    }
    buf.copy_from_slice(&scratch[..n]);
    inv
}

/// Segment tree with all leaves 1; for each position, count the still-unseen
/// smaller values, then zero the leaf of the seen value.
fn tree_count(values: &[u32]) -> u64 {
    let n = values.len();
    if n == 0 {
        return 0;
    }
    let size = n.next_power_of_two();
    let mut tree = vec![0u64; 2 * size];
    for leaf in size..size + n {
        tree[leaf] = 1;
    }
    for i in (1..size).rev() {
        tree[i] = tree[2 * i] + tree[2 * i + 1];
    }
    let sum_prefix = |tree: &[u64], upto: usize| -> u64 {
        // Sum of leaves [0, upto) in 0-based leaf indexing.
        let mut acc = 0;
        let (mut l, mut r) = (size, size + upto);
        while l < r {
            if l & 1 == 1 {
                acc += tree[l];
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                acc += tree[r];
            }
            l >>= 1;
            r >>= 1;
        }
        acc
    };
    let mut inv = 0;
    for &v in values {
        let leaf0 = v as usize - 1;
        inv += sum_prefix(&tree, leaf0);
        let mut node = size + leaf0;
        tree[node] = 0;
        while node > 1 {
            node >>= 1;
            tree[node] = tree[2 * node] + tree[2 * node + 1];
        }
    }
    inv
}

/// Sqrt-decomposed variant of the same frontier count: O(n * sqrt(n)).
fn block_count(values: &[u32]) -> u64 {
    let n = values.len();
    if n == 0 {
        return 0;
    }
    let block = (n as f64).sqrt().ceil() as usize;
    let nblocks = n.div_ceil(block);
    let mut present = vec![1u8; n];
    let mut block_sum = vec![0u64; nblocks];
    for b in 0..nblocks {
        block_sum[b] = (((b + 1) * block).min(n) - b * block) as u64;
    }
    let mut inv = 0;
    for &v in values {
        let pos = v as usize - 1;
        let full_blocks = pos / block;
        for bsum in block_sum.iter().take(full_blocks) {
            inv += bsum;
        }
        for p in full_blocks * block..pos {
            inv += present[p] as u64;
        }
        present[pos] = 0;
        block_sum[full_blocks] -= 1;
    }
    inv
}
