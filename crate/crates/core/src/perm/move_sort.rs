//! Minimum-cost sorting by Move(i, j) operations of cost i + j.
//!
//! Move(i, j) removes the element at position i and reinserts it at position
//! j. Every element moves at most once and moved elements move in decreasing
//! value order, which gives a DP over (element, landing position): either
//! element i moves right before element i+1, or it stays put and later moves
//! of smaller elements are charged a compensation sweep.

use super::Permutation;

const INF: u64 = u64::MAX;

/// Minimum total cost of sorting `p` ascending with Move operations.
pub fn move_sort_min_cost(p: &Permutation) -> u64 {
    let n = p.len();
    if n == 0 {
        return 0;
    }
    let values = p.values();
    let pos = p.positions(); // pos[v - 1] = 1-based position of value v
    // value_at(j) for j in 1..=n+1, with the virtual p(n+1) = n+1.
    let value_at = |j: usize| -> usize {
        if j == n + 1 {
            n + 1
        } else {
            values[j - 1] as usize
        }
    };

    // cmin[j]: dp row for the current element, landing position j in 1..=n+1.
    let mut next = vec![INF; n + 2];
    next[n + 1] = 0;

    for i in (1..=n).rev() {
        let mut row = vec![INF; n + 2];
        // Each element k < i still left of i in the original permutation
        // contributes to i's source position when it finally moves.
        let posv = pos[i - 1];
        let moved_src = 1 + (1..i).filter(|&k| pos[k - 1] < posv).count() as u64;

        // Case move: element i is inserted right before element i+1, which
        // sits at landing position j in the next row. pdest tracks where the
        // insertion lands among the not-yet-moved smaller elements.
        let mut pdest = 1u64;
        for j in 1..=n + 1 {
            if value_at(j) < i {
                pdest += 1;
            }
            if next[j] != INF {
                row[j] = next[j] + moved_src + pdest;
            }
        }

        // Case keep: element i stays at its original position; smaller
        // elements moved before it would have shifted it, so charge them.
        let mut extra_cost = 0u64;
        let keep_slot = posv;
        for j in posv + 1..=n + 1 {
            if next[j] != INF {
                let cand = next[j] + extra_cost;
                if cand < row[keep_slot] {
                    row[keep_slot] = cand;
                }
            }
            if value_at(j) < i {
                extra_cost += (i - value_at(j)) as u64;
            }
        }

        next = row;
    }
    (1..=n + 1).map(|j| next[j]).min().expect("non-empty range")
}
