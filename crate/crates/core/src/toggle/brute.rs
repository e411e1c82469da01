//! Exhaustive toggle solver: since no vertex needs selecting twice, the 2^p
//! subsets cover every strategy.

use super::{ToggleInstance, ToggleResult};
use crate::error::{Error, Result};

const VERTEX_CAP: usize = 24;

/// Exact minimum by enumerating all selections; p <= 24.
pub fn toggle_brute_force(inst: &ToggleInstance) -> Result<ToggleResult> {
    inst.validate()?;
    if inst.p > VERTEX_CAP {
        return Err(Error::capacity(format!(
            "brute force enumerates 2^p selections and needs p <= {VERTEX_CAP} (got {})",
            inst.p
        )));
    }
    let p = inst.p;
    let adj = inst.adjacency();
    // Closed neighborhood parity mask per vertex.
    let closed: Vec<u32> = (1..=p)
        .map(|u| {
            adj[u]
                .iter()
                .fold(1u32 << (u - 1), |m, &v| m | (1 << (v - 1)))
        })
        .collect();
    let target_parity: u32 = (0..p)
        .map(|i| (((inst.initial[i] ^ inst.target[i]) & 1) as u32) << i)
        .sum();

    let mut best: Option<(u64, u32)> = None;
    for mask in 0..(1u32 << p) {
        let mut parity = 0u32;
        let mut cost = 0u64;
        for i in 0..p {
            if mask >> i & 1 == 1 {
                parity ^= closed[i];
                cost += inst.costs[i];
            }
        }
        if parity == target_parity && best.map_or(true, |(b, _)| cost < b) {
            best = Some((cost, mask));
        }
    }
    Ok(match best {
        Some((min_cost, mask)) => ToggleResult::Feasible {
            min_cost,
            selection: (0..p as u32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
        },
        None => ToggleResult::Infeasible,
    })
}
