//! Minimum-cost resource toggling: selecting a vertex flips its own state and
//! every neighbor's. Find the cheapest selection driving all states from I to
//! F. No vertex ever needs selecting twice, so a selection is a vertex set.

mod brute;
mod tree;
mod treewidth;

pub use brute::toggle_brute_force;
pub use tree::toggle_tree_min_cost;
pub use treewidth::{
    toggle_treewidth_min_cost, validate_decomposition, DecompositionViolation, TreeDecomposition,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToggleInstance {
    /// Vertex count; vertices are 1-based.
    pub p: usize,
    /// Undirected edges.
    pub edges: Vec<(u32, u32)>,
    /// Initial state bits.
    pub initial: Vec<u8>,
    /// Final state bits.
    pub target: Vec<u8>,
    /// Non-negative selection costs.
    pub costs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToggleResult {
    Feasible {
        min_cost: u64,
        /// Ascending vertex ids.
        selection: Vec<u32>,
    },
    Infeasible,
}

impl ToggleResult {
    pub fn min_cost(&self) -> Option<u64> {
        match self {
            ToggleResult::Feasible { min_cost, .. } => Some(*min_cost),
            ToggleResult::Infeasible => None,
        }
    }
}

impl ToggleInstance {
    pub fn validate(&self) -> Result<()> {
        if self.initial.len() != self.p || self.target.len() != self.p || self.costs.len() != self.p
        {
            return Err(Error::validation(format!(
                "initial/target/costs must each have {} entries",
                self.p
            )));
        }
        for bits in [&self.initial, &self.target] {
            if bits.iter().any(|&b| b > 1) {
                return Err(Error::validation("states must be 0 or 1 bits"));
            }
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u < 1 || u as usize > self.p || v < 1 || v as usize > self.p {
                return Err(Error::validation(format!(
                    "edge {i}: endpoint out of range 1..={}",
                    self.p
                )));
            }
            if u == v {
                return Err(Error::validation(format!("edge {i}: self-loop")));
            }
        }
        Ok(())
    }

    /// Neighbor lists (deduplicated), 1-based outer index.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.p + 1];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v as usize);
            adj[v as usize].push(u as usize);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// True when the undirected graph is a forest.
    pub fn is_forest(&self) -> bool {
        let mut dsu = crate::sets::PlainDsu::new(self.p + 1);
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return false; // parallel edge closes a cycle
            }
            if !dsu.union(u as usize, v as usize) {
                return false;
            }
        }
        true
    }
}

/// Applies a selection: each selected vertex flips itself and all neighbors.
/// Order is irrelevant by parity.
pub fn apply_selection(inst: &ToggleInstance, selection: &[u32]) -> Vec<u8> {
    let adj = inst.adjacency();
    let mut state = inst.initial.clone();
    for &u in selection {
        let u = u as usize;
        state[u - 1] ^= 1;
        for &v in &adj[u] {
            state[v - 1] ^= 1;
        }
    }
    state
}

/// Checks that a selection maps I to F and its cost matches.
pub fn verify_selection(inst: &ToggleInstance, selection: &[u32], min_cost: u64) -> Result<()> {
    let reached = apply_selection(inst, selection);
    if reached != inst.target {
        return Err(Error::validation("selection does not reach the target states"));
    }
    let cost: u64 = selection.iter().map(|&u| inst.costs[u as usize - 1]).sum();
    if cost != min_cost {
        return Err(Error::validation(format!(
            "selection cost {cost} differs from reported {min_cost}"
        )));
    }
    Ok(())
}
