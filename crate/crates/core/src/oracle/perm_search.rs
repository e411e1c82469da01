//! Uniform-cost and breadth-first search over arrangement states.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use crate::error::{Error, Result};

const STATE_LEN_CAP: usize = 8;

fn check_len(n: usize) -> Result<()> {
    if n > STATE_LEN_CAP {
        Err(Error::capacity(format!(
            "state search handles arrangements of length <= {STATE_LEN_CAP}"
        )))
    } else {
        Ok(())
    }
}

/// Dijkstra over arrangements with an arbitrary move generator.
pub fn dijkstra_min_cost(
    start: &[u32],
    is_goal: impl Fn(&[u32]) -> bool,
    moves: impl Fn(&[u32]) -> Vec<(Vec<u32>, u64)>,
) -> Result<Option<u64>> {
    check_len(start.len())?;
    let mut dist: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut heap = BinaryHeap::new();
    dist.insert(start.to_vec(), 0);
    heap.push(Reverse((0u64, start.to_vec())));
    while let Some(Reverse((d, state))) = heap.pop() {
        if dist.get(&state) != Some(&d) {
            continue;
        }
        if is_goal(&state) {
            return Ok(Some(d));
        }
        for (next, cost) in moves(&state) {
            let nd = d + cost;
            if dist.get(&next).map_or(true, |&old| nd < old) {
                dist.insert(next.clone(), nd);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(None)
}

/// All-pairs swaps with per-value costs c(x) + c(y).
pub fn swap_candidates_all_pairs(costs: &[u64]) -> impl Fn(&[u32]) -> Vec<(Vec<u32>, u64)> + '_ {
    move |state: &[u32]| {
        let n = state.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut next = state.to_vec();
                next.swap(i, j);
                let cost = costs[state[i] as usize - 1] + costs[state[j] as usize - 1];
                out.push((next, cost));
            }
        }
        out
    }
}

/// Swaps restricted to an allowed position-pair set, unit cost.
pub fn swap_candidates_allowed(
    allowed: &[(usize, usize)],
) -> impl Fn(&[u32]) -> Vec<(Vec<u32>, u64)> + '_ {
    move |state: &[u32]| {
        allowed
            .iter()
            .map(|&(i, j)| {
                let mut next = state.to_vec();
                next.swap(i - 1, j - 1);
                (next, 1)
            })
            .collect()
    }
}

/// Move(i, j) operations: remove at i, insert at j, cost i + j (1-based).
pub fn move_candidates() -> impl Fn(&[u32]) -> Vec<(Vec<u32>, u64)> {
    |state: &[u32]| {
        let n = state.len();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let mut next = state.to_vec();
                let v = next.remove(i - 1);
                next.insert(j - 1, v);
                out.push((next, (i + j) as u64));
            }
        }
        out
    }
}

/// Fewest adjacent swaps from `start` to `target` by plain BFS.
pub fn bfs_adjacent_swaps(start: &[u32], target: &[u32]) -> Result<Option<u64>> {
    check_len(start.len())?;
    if start.len() != target.len() {
        return Err(Error::validation("arrangements must have equal length"));
    }
    let mut seen: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec(), 0);
    queue.push_back(start.to_vec());
    while let Some(state) = queue.pop_front() {
        let d = seen[&state];
        if state == target {
            return Ok(Some(d));
        }
        for i in 0..state.len().saturating_sub(1) {
            let mut next = state.clone();
            next.swap(i, i + 1);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Adjacent-swap distance from every arrangement of the multiset to its
/// nearest "grouped" arrangement (equal values contiguous), via one
/// multi-source BFS per multiset.
pub fn grouping_distances(counts: &[usize]) -> Result<HashMap<Vec<u32>, u64>> {
    let n: usize = counts.iter().sum();
    check_len(n)?;
    let k = counts.len();
    // All grouped arrangements: every ordering of the distinct values.
    let mut orders: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for prefix in orders {
            for v in 1..=k as u32 {
                if !prefix.contains(&v) {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
        }
        orders = next;
    }
    let mut dist: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut queue = VecDeque::new();
    for order in orders {
        let grouped: Vec<u32> = order
            .iter()
            .flat_map(|&v| std::iter::repeat(v).take(counts[v as usize - 1]))
            .collect();
        if dist.insert(grouped.clone(), 0).is_none() {
            queue.push_back(grouped);
        }
    }
    while let Some(state) = queue.pop_front() {
        let d = dist[&state];
        for i in 0..n.saturating_sub(1) {
            if state[i] == state[i + 1] {
                continue;
            }
            let mut next = state.clone();
            next.swap(i, i + 1);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(dist)
}
