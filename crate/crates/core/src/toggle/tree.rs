//! Linear-time toggle DP when the graph is a tree (or forest).
//!
//! State per vertex u: `cmin[u][state][sel]` - the cheapest way to finish
//! every resource strictly inside u's subtree, leaving u's own resource at
//! `state` (counting only flips from inside the subtree) with u selected or
//! not. The parent later decides whether u receives one more flip.

use super::{ToggleInstance, ToggleResult};
use crate::error::{Error, Result};

const INF: u64 = u64::MAX;

fn add(a: u64, b: u64) -> u64 {
    if a == INF || b == INF {
        INF
    } else {
        a + b
    }
}

struct TreeDp<'a> {
    inst: &'a ToggleInstance,
    adj: Vec<Vec<usize>>,
    /// cmin[u][state][sel]
    cmin: Vec<[[u64; 2]; 2]>,
    /// Children in processing order, and the per-(state, sel) decision of
    /// which son (if any) had its argmin flipped to fix parity.
    children: Vec<Vec<usize>>,
    flip_son: Vec<[[Option<usize>; 2]; 2]>,
}

impl<'a> TreeDp<'a> {
    /// Min over sel of cmin[v][state][sel], preferring sel = 1 on ties (the
    /// convention the parity counters are built on).
    fn child_choice(&self, v: usize, state: usize) -> (u64, usize) {
        let c0 = self.cmin[v][state][0];
        let c1 = self.cmin[v][state][1];
        if c1 <= c0 {
            (c1, 1)
        } else {
            (c0, 0)
        }
    }

    fn compute(&mut self, order: &[usize]) {
        for &u in order {
            let iu = self.inst.initial[u - 1] as usize;
            let cu = self.inst.costs[u - 1];
            if self.children[u].is_empty() {
                self.cmin[u][iu][0] = 0;
                self.cmin[u][1 - iu][1] = cu;
                continue;
            }
            for sel in 0..2usize {
                // Children must end at F (sel = 0) or at 1 - F, one flip away
                // (sel = 1, u's selection will flip them).
                let k = sel;
                let mut sum = 0u64;
                let mut num_sel_parity = 0usize;
                let mut dif_min = INF;
                let mut dif_argmin = None;
                for &v in &self.children[u] {
                    let need = ((self.inst.target[v - 1] as usize) + k) % 2;
                    let (best, choice) = self.child_choice(v, need);
                    sum = add(sum, best);
                    num_sel_parity ^= choice;
                    let c0 = self.cmin[v][need][0];
                    let c1 = self.cmin[v][need][1];
                    let dif = if c0 == INF || c1 == INF {
                        INF
                    } else {
                        c0.abs_diff(c1)
                    };
                    if dif < dif_min {
                        dif_min = dif;
                        dif_argmin = Some(v);
                    }
                }
                let natural = (iu + num_sel_parity + sel) % 2;
                let base_cost = if sel == 1 { add(sum, cu) } else { sum };
                if base_cost < self.cmin[u][natural][sel] {
                    self.cmin[u][natural][sel] = base_cost;
                    self.flip_son[u][natural][sel] = None;
                }
                let fixed = add(base_cost, dif_min);
                if fixed < self.cmin[u][1 - natural][sel] {
                    self.cmin[u][1 - natural][sel] = fixed;
                    self.flip_son[u][1 - natural][sel] = dif_argmin;
                }
            }
        }
    }

    fn reconstruct(&self, u: usize, state: usize, sel: usize, out: &mut Vec<u32>) {
        if sel == 1 {
            out.push(u as u32);
        }
        let flip = self.flip_son[u][state][sel];
        for &v in &self.children[u] {
            let need = ((self.inst.target[v - 1] as usize) + sel) % 2;
            let (_, mut choice) = self.child_choice(v, need);
            if flip == Some(v) {
                choice ^= 1;
            }
            self.reconstruct(v, need, choice, out);
        }
    }
}

/// Exact minimum over a tree or forest, O(p).
pub fn toggle_tree_min_cost(inst: &ToggleInstance) -> Result<ToggleResult> {
    inst.validate()?;
    if !inst.is_forest() {
        return Err(Error::validation("the tree solver needs an acyclic graph"));
    }
    let p = inst.p;
    let adj = inst.adjacency();

    let mut dp = TreeDp {
        inst,
        adj,
        cmin: vec![[[INF; 2]; 2]; p + 1],
        children: vec![Vec::new(); p + 1],
        flip_son: vec![[[None; 2]; 2]; p + 1],
    };

    let mut visited = vec![false; p + 1];
    let mut total = 0u64;
    let mut selection: Vec<u32> = Vec::new();
    for root in 1..=p {
        if visited[root] {
            continue;
        }
        // Iterative DFS: topological order from the leaves upward.
        let mut order = Vec::new();
        let mut stack = vec![(root, 0usize)];
        visited[root] = true;
        while let Some((u, parent)) = stack.pop() {
            order.push(u);
            for &v in &dp.adj[u] {
                if v != parent {
                    visited[v] = true;
                    dp.children[u].push(v);
                    stack.push((v, u));
                }
            }
        }
        order.reverse();
        dp.compute(&order);

        let fr = inst.target[root - 1] as usize;
        let (best, sel) = {
            let c0 = dp.cmin[root][fr][0];
            let c1 = dp.cmin[root][fr][1];
            if c1 <= c0 {
                (c1, 1)
            } else {
                (c0, 0)
            }
        };
        if best == INF {
            return Ok(ToggleResult::Infeasible);
        }
        total = add(total, best);
        dp.reconstruct(root, fr, sel, &mut selection);
    }
    selection.sort_unstable();
    Ok(ToggleResult::Feasible {
        min_cost: total,
        selection,
    })
}
