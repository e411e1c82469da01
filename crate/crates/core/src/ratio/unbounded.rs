//! Unconstrained maximum-weight path/cycle via the queue-based
//! Bellman-Ford-Moore relaxation with a positive-cycle insertion counter.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::WeightedEdge;

#[derive(Debug, Clone, PartialEq)]
pub enum UnboundedMax {
    /// A positive-total-weight cycle exists; both optima are unbounded.
    PlusInfinity,
    Finite { path_weight: f64, cycle_weight: f64 },
}

/// Decides whether a positive cycle exists and otherwise reports the
/// maximum-weight path (cycle weight is then 0, the empty cycle).
///
/// Every vertex starts with weight 0 and sits in the queue; a vertex inserted
/// more than `n` times certifies a positive cycle.
pub fn unbounded_max_weight(n: usize, edges: &[WeightedEdge]) -> Result<UnboundedMax> {
    if n == 0 {
        return Err(Error::validation("graph must have at least one vertex"));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, e) in edges.iter().enumerate() {
        if e.from < 1 || e.from as usize > n || e.to < 1 || e.to as usize > n {
            return Err(Error::validation(format!("edge {i}: endpoint out of range 1..={n}")));
        }
        if !e.w.is_finite() {
            return Err(Error::validation(format!("edge {i}: weight must be finite")));
        }
        adj[e.from as usize].push(i);
    }

    let mut best = vec![0.0f64; n + 1];
    let mut in_queue = vec![true; n + 1];
    let mut nin = vec![1u64; n + 1];
    let mut queue: VecDeque<usize> = (1..=n).collect();

    while let Some(u) = queue.pop_front() {
        in_queue[u] = false;
        for &ei in &adj[u] {
            let e = &edges[ei];
            let v = e.to as usize;
            if best[u] + e.w > best[v] {
                best[v] = best[u] + e.w;
                if !in_queue[v] {
                    in_queue[v] = true;
                    nin[v] += 1;
                    if nin[v] > n as u64 {
                        return Ok(UnboundedMax::PlusInfinity);
                    }
                    queue.push_back(v);
                }
            }
        }
    }

    let path_weight = best[1..=n].iter().fold(0.0f64, |a, &b| a.max(b));
    Ok(UnboundedMax::Finite {
        path_weight,
        cycle_weight: 0.0,
    })
}
