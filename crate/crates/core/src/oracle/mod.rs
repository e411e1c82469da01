//! Independent brute-force reference solvers.
//!
//! These share nothing with the optimized implementations beyond the domain
//! types: they enumerate, exhaustively and slowly, and exist to certify the
//! fast paths on small instances.

mod perm_search;
mod sets_naive;

pub use perm_search::{
    bfs_adjacent_swaps, dijkstra_min_cost, grouping_distances, move_candidates,
    swap_candidates_all_pairs, swap_candidates_allowed,
};
pub use sets_naive::{oracle_ordered_sets, oracle_split_find, NaiveSplitFind, NaiveSplitOp};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::mst_offers::OfferGraph;
use crate::ratio::{RatioItem, WeightedEdge};
use crate::transfer::{TimedEdge, TransferResult};
pub use crate::toggle::toggle_brute_force as oracle_toggle;

/// Exhaustive transfer optimum: every chronologically consistent edge
/// sequence from s (departures at or after the previous arrival) that ends at
/// d by the deadline. Arrival times strictly increase, so the recursion is
/// finite.
pub fn oracle_transfer(
    n: usize,
    edges: &[TimedEdge],
    s: usize,
    d: usize,
    deadline: u64,
) -> Result<TransferResult> {
    if n > 6 || edges.len() > 10 {
        return Err(Error::capacity("oracle_transfer handles n <= 6, m <= 10"));
    }
    fn explore(
        edges: &[TimedEdge],
        at: usize,
        now: u64,
        waited: u64,
        d: usize,
        deadline: u64,
        best: &mut Option<u64>,
    ) {
        if at == d && now <= deadline {
            let total = waited + (deadline - now);
            if best.map_or(true, |b| total < b) {
                *best = Some(total);
            }
        }
        for e in edges {
            if e.from as usize == at && e.tstart >= now && e.tfinish <= deadline {
                explore(
                    edges,
                    e.to as usize,
                    e.tfinish,
                    waited + (e.tstart - now) + e.twait,
                    d,
                    deadline,
                    best,
                );
            }
        }
    }
    let mut best = None;
    explore(edges, s, 0, 0, d, deadline, &mut best);
    Ok(match best {
        Some(total_wait) => TransferResult::Feasible {
            total_wait,
            itinerary: vec![],
        },
        None => TransferResult::Infeasible,
    })
}

/// Subset property for the item-set ratio oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetProp {
    ExactlyOne,
    AnyNonempty,
}

/// Best ratio over all feasible subsets by enumeration; <= 20 items.
pub fn oracle_ratio(items: &[RatioItem], prop: SubsetProp) -> Result<(f64, Vec<usize>)> {
    if items.len() > 20 {
        return Err(Error::capacity("oracle_ratio handles at most 20 items"));
    }
    if items.is_empty() {
        return Err(Error::NoFeasibleSubset);
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    for mask in 1u32..(1 << items.len()) {
        let chosen: Vec<usize> = (0..items.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let feasible = match prop {
            SubsetProp::ExactlyOne => chosen.len() == 1,
            SubsetProp::AnyNonempty => true,
        };
        if !feasible {
            continue;
        }
        let p: f64 = chosen.iter().map(|&i| items[i].p).sum();
        let q: f64 = chosen.iter().map(|&i| items[i].q).sum();
        let ratio = p / q;
        if best.as_ref().map_or(true, |(b, _)| ratio > *b) {
            best = Some((ratio, chosen));
        }
    }
    best.ok_or(Error::NoFeasibleSubset)
}

/// Maximum-weight walk with length in [lmin, lmax] by enumerating all walks.
pub fn oracle_bounded_walk(
    n: usize,
    edges: &[WeightedEdge],
    lmin: u64,
    lmax: u64,
    closed: bool,
) -> Result<Option<f64>> {
    if n > 6 || lmax > 8 {
        return Err(Error::capacity("walk oracle handles n <= 6, lmax <= 8"));
    }
    fn explore(
        edges: &[WeightedEdge],
        start: usize,
        at: usize,
        len: u64,
        weight: f64,
        lmin: u64,
        lmax: u64,
        closed: bool,
        best: &mut Option<f64>,
    ) {
        let qualifies = len >= lmin && len <= lmax && (!closed || at == start);
        if qualifies && best.map_or(true, |b| weight > b) {
            *best = Some(weight);
        }
        for e in edges {
            if e.from as usize == at && len + e.l <= lmax {
                explore(
                    edges,
                    start,
                    e.to as usize,
                    len + e.l,
                    weight + e.w,
                    lmin,
                    lmax,
                    closed,
                    best,
                );
            }
        }
    }
    let mut best = None;
    for start in 1..=n {
        explore(edges, start, start, 0, 0.0, lmin, lmax, closed, &mut best);
    }
    Ok(best)
}

/// Best weight over all simple paths (the empty path included). When no
/// positive cycle exists this equals the best over all walks.
pub fn oracle_best_simple_path(n: usize, edges: &[WeightedEdge]) -> Result<f64> {
    if n > 6 {
        return Err(Error::capacity("simple path oracle handles n <= 6"));
    }
    fn explore(
        edges: &[WeightedEdge],
        at: usize,
        weight: f64,
        visited: &mut Vec<bool>,
        best: &mut f64,
    ) {
        if weight > *best {
            *best = weight;
        }
        for e in edges {
            let to = e.to as usize;
            if e.from as usize == at && !visited[to] {
                visited[to] = true;
                explore(edges, to, weight + e.w, visited, best);
                visited[to] = false;
            }
        }
    }
    let mut best = 0.0f64;
    for start in 1..=n {
        let mut visited = vec![false; n + 1];
        visited[start] = true;
        explore(edges, start, 0.0, &mut visited, &mut best);
    }
    Ok(best)
}

/// Does a positive-total-weight simple cycle exist? n <= 6.
pub fn oracle_positive_cycle(n: usize, edges: &[WeightedEdge]) -> Result<bool> {
    if n > 6 {
        return Err(Error::capacity("cycle oracle handles n <= 6"));
    }
    fn explore(
        edges: &[WeightedEdge],
        start: usize,
        at: usize,
        weight: f64,
        visited: &mut Vec<bool>,
        found: &mut bool,
    ) {
        if *found {
            return;
        }
        for e in edges {
            if e.from as usize != at {
                continue;
            }
            let to = e.to as usize;
            if to == start {
                if weight + e.w > 0.0 {
                    *found = true;
                    return;
                }
            } else if !visited[to] {
                visited[to] = true;
                explore(edges, start, to, weight + e.w, visited, found);
                visited[to] = false;
            }
        }
    }
    let mut found = false;
    for start in 1..=n {
        let mut visited = vec![false; n + 1];
        visited[start] = true;
        explore(edges, start, start, 0.0, &mut visited, &mut found);
        if found {
            break;
        }
    }
    Ok(found)
}

/// Best p-sum over q-sum ratio over all non-empty contiguous segments.
pub fn oracle_ratio_segment(items: &[RatioItem]) -> Result<f64> {
    if items.is_empty() {
        return Err(Error::NoFeasibleSubset);
    }
    let mut best = f64::NEG_INFINITY;
    for i in 0..items.len() {
        let (mut p, mut q) = (0.0, 0.0);
        for item in &items[i..] {
            p += item.p;
            q += item.q;
            best = best.max(p / q);
        }
    }
    Ok(best)
}

/// Best ratio over all walks (closed walks) with length in the window, by
/// enumeration over the `(p, q, l)`-weighted edges.
pub fn oracle_ratio_walk(
    n: usize,
    edges: &[(u32, u32, f64, f64, u64)],
    lmin: u64,
    lmax: u64,
    closed: bool,
) -> Result<Option<f64>> {
    if n > 6 || lmax > 8 {
        return Err(Error::capacity("ratio walk oracle handles n <= 6, lmax <= 8"));
    }
    #[allow(clippy::too_many_arguments)]
    fn explore(
        edges: &[(u32, u32, f64, f64, u64)],
        start: usize,
        at: usize,
        len: u64,
        p: f64,
        q: f64,
        lmin: u64,
        lmax: u64,
        closed: bool,
        best: &mut Option<f64>,
    ) {
        if len >= lmin && len <= lmax && len > 0 && (!closed || at == start) {
            let ratio = p / q;
            if best.map_or(true, |b| ratio > b) {
                *best = Some(ratio);
            }
        }
        for &(from, to, ep, eq, el) in edges {
            if from as usize == at && len + el <= lmax {
                explore(edges, start, to as usize, len + el, p + ep, q + eq, lmin, lmax, closed, best);
            }
        }
    }
    let mut best = None;
    for start in 1..=n {
        explore(edges, start, start, 0, 0.0, 0.0, lmin, lmax, closed, &mut best);
    }
    Ok(best)
}

/// Quadratic scan over all segments; `bounds` as in the solver.
pub fn oracle_max_segment(seq: &[f64], bounds: Option<(usize, usize)>) -> (f64, Option<(usize, usize)>) {
    let n = seq.len();
    let (lo, hi, mut best, mut where_) = match bounds {
        None => (1usize, n, 0.0f64, None),
        Some((a, b)) => (a, b, f64::NEG_INFINITY, None),
    };
    for i in 1..=n {
        let mut sum = 0.0;
        for j in i..=n {
            sum += seq[j - 1];
            let len = j - i + 1;
            if len >= lo && len <= hi && sum > best {
                best = sum;
                where_ = Some((i, j));
            }
        }
    }
    (best, where_)
}

/// MST by enumerating all (n-1)-edge subsets under a pricing function.
fn enumerate_mst(n: usize, edges: &[(u32, u32)], prices: &[u64]) -> Option<u64> {
    let m = edges.len();
    if n == 1 {
        return Some(0);
    }
    if n == 0 || m < n - 1 {
        return None;
    }
    let mut best: Option<u64> = None;
    // All subsets of exactly n-1 edges.
    let mut chosen: Vec<usize> = (0..n - 1).collect();
    loop {
        let mut dsu = crate::sets::PlainDsu::new(n + 1);
        let mut merges = 0;
        let mut cost = 0u64;
        for &e in &chosen {
            if dsu.union(edges[e].0 as usize, edges[e].1 as usize) {
                merges += 1;
            }
            cost += prices[e];
        }
        if merges == n - 1 && best.map_or(true, |b| cost < b) {
            best = Some(cost);
        }
        // Next combination.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if chosen[i] != i + m - (n - 1) {
                break;
            }
        }
        chosen[i] += 1;
        for j in i + 1..n - 1 {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}

/// Recompute-per-offer MST oracle: for "no offer" and every owner, price all
/// m edges accordingly and take the best spanning tree; n <= 7, m <= 14.
pub fn oracle_offer_mst(g: &OfferGraph) -> Result<Option<(u64, Option<u32>)>> {
    if g.n > 7 || g.edges.len() > 14 {
        return Err(Error::capacity("offer MST oracle handles n <= 7, m <= 14"));
    }
    g.validate()?;
    let pairs: Vec<(u32, u32)> = g.edges.iter().map(|e| (e.a, e.b)).collect();
    let normal: Vec<u64> = g.edges.iter().map(|e| e.np).collect();
    let mut best = enumerate_mst(g.n, &pairs, &normal).map(|c| (c, None));
    for owner in 1..=g.q as u32 {
        let prices: Vec<u64> = g
            .edges
            .iter()
            .map(|e| if e.owner == owner { e.sp } else { e.np })
            .collect();
        if let Some(cost) = enumerate_mst(g.n, &pairs, &prices) {
            if best.map_or(true, |(b, _)| cost < b) {
                best = Some((cost, Some(owner)));
            }
        }
    }
    Ok(best)
}

/// Exhaustive same-parity pair check for average-free permutations.
pub fn avg_free_valid(perm: &[u32]) -> bool {
    let n = perm.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in perm.iter().enumerate() {
        pos[v as usize] = i + 1;
    }
    for a in 1..=n as u32 {
        for b in (a + 2..=n as u32).step_by(2) {
            let avg = (a + b) / 2;
            let (pa, pb) = (pos[a as usize], pos[b as usize]);
            let (lo, hi) = (pa.min(pb), pa.max(pb));
            let pc = pos[avg as usize];
            if lo < pc && pc < hi {
                return false;
            }
        }
    }
    true
}

/// The literal triple-loop variant of the same predicate, O(n^3).
pub fn avg_free_valid_cubic(perm: &[u32]) -> bool {
    let n = perm.len();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (perm[i], perm[j]);
            if a % 2 != b % 2 {
                continue;
            }
            let avg = (a + b) / 2;
            if avg == a || avg == b {
                continue;
            }
            for k in i + 1..j {
                if perm[k] == avg {
                    return false;
                }
            }
        }
    }
    true
}

/// Reachability of the sorted arrangement under a swap set, by BFS over
/// arrangements. Backs the IMPOSSIBLE side of the constrained swap sort.
pub fn sorted_reachable(start: &[u32], allowed: &[(usize, usize)]) -> Result<bool> {
    if start.len() > 8 {
        return Err(Error::capacity("reachability oracle handles n <= 8"));
    }
    let sorted: Vec<u32> = {
        let mut s = start.to_vec();
        s.sort_unstable();
        s
    };
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(cur) = queue.pop_front() {
        if cur == sorted {
            return Ok(true);
        }
        for &(i, j) in allowed {
            let mut next = cur.clone();
            next.swap(i - 1, j - 1);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}
