//! Minimum-cost sorting by swaps with per-value costs.
//!
//! A swap of values x and y costs `c(x) + c(y)`. The digraph with the edges
//! `(i, p(i))` splits into cycles; every non-trivial cycle is resolved either
//! with its own cheapest value or by borrowing the globally cheapest one.

use super::{OpScript, Permutation};
use crate::error::{Error, Result};

/// Returns the minimum total cost and a swap script realizing exactly it.
/// Swaps are recorded as position pairs.
pub fn min_cost_cycle_sort(p: &Permutation, costs: &[u64]) -> Result<(u64, OpScript)> {
    let n = p.len();
    if costs.len() != n {
        return Err(Error::validation(format!(
            "need exactly {n} costs, got {}",
            costs.len()
        )));
    }
    if costs.iter().any(|&c| c == 0) {
        return Err(Error::validation("costs must be positive"));
    }
    if n == 0 {
        return Ok((0, OpScript::Swap(vec![])));
    }

    let cost_of = |v: u32| costs[v as usize - 1];
    let global_min = (1..=n as u32).min_by_key(|&v| (cost_of(v), v)).unwrap();

    // cur / pos track the arrangement while the script is produced.
    let mut cur = p.values().to_vec();
    let mut pos = p.positions();
    let mut swaps: Vec<(usize, usize)> = Vec::new();
    let mut total = 0u64;

    let swap_values = |cur: &mut Vec<u32>,
                           pos: &mut Vec<usize>,
                           total: &mut u64,
                           out: &mut Vec<(usize, usize)>,
                           x: u32,
                           y: u32| {
        let (a, b) = (pos[x as usize - 1], pos[y as usize - 1]);
        cur.swap(a - 1, b - 1);
        pos[x as usize - 1] = b;
        pos[y as usize - 1] = a;
        *total += cost_of(x) + cost_of(y);
        out.push((a, b));
    };

    let mut seen = vec![false; n + 1];
    for start in 1..=n as u32 {
        if seen[start as usize] {
            continue;
        }
        // Cycle of the digraph (i, p(i)).
        let mut cycle = Vec::new();
        let mut v = start;
        loop {
            seen[v as usize] = true;
            cycle.push(v);
            v = p.values()[v as usize - 1];
            if v == start {
                break;
            }
        }
        let k = cycle.len() as u64;
        if k < 2 {
            continue;
        }
        let sc: u64 = cycle.iter().map(|&v| cost_of(v)).sum();
        let q = *cycle.iter().min_by_key(|&&v| (cost_of(v), v)).unwrap();
        let choice1 = sc - cost_of(q) + (k - 1) * cost_of(q);
        let choice2 =
            sc - cost_of(q) + (k - 1) * cost_of(global_min) + 2 * (cost_of(q) + cost_of(global_min));

        // Walk the cycle from prev(q) against the edge direction; q (or the
        // borrowed global minimum) meets every other vertex once.
        let qi = cycle.iter().position(|&v| v == q).unwrap();
        let mut order = Vec::with_capacity(cycle.len() - 1);
        for step in 1..cycle.len() {
            order.push(cycle[(qi + cycle.len() - step) % cycle.len()]);
        }

        if choice1 <= choice2 {
            for &other in &order {
                swap_values(&mut cur, &mut pos, &mut total, &mut swaps, q, other);
            }
        } else {
            let r = global_min;
            swap_values(&mut cur, &mut pos, &mut total, &mut swaps, q, r);
            for &other in &order {
                swap_values(&mut cur, &mut pos, &mut total, &mut swaps, r, other);
            }
            swap_values(&mut cur, &mut pos, &mut total, &mut swaps, q, r);
        }
    }
    debug_assert!(cur.iter().enumerate().all(|(i, &v)| v as usize == i + 1));
    Ok((total, OpScript::Swap(swaps)))
}
