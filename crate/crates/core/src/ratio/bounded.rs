//! Pseudo-polynomial DP for the maximum-weight path/cycle with total length
//! in a window `[lmin, lmax]`. Paths may revisit vertices and edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub from: u32,
    pub to: u32,
    pub w: f64,
    /// Positive integer length.
    pub l: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LengthBoundedInstance {
    pub n: usize,
    pub edges: Vec<WeightedEdge>,
    pub lmin: u64,
    pub lmax: u64,
}

/// Best bounded path/cycle: its weight and edge indices in travel order.
/// `None` when no walk with a length in the window exists.
pub type BoundedBest = Option<(f64, Vec<usize>)>;

// Keeps the DP table size within memory on adversarial inputs.
const TABLE_CAP: u128 = 200_000_000;

impl LengthBoundedInstance {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::validation("graph must have at least one vertex"));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.from < 1 || e.from as usize > self.n || e.to < 1 || e.to as usize > self.n {
                return Err(Error::validation(format!(
                    "edge {i}: endpoint out of range 1..={}",
                    self.n
                )));
            }
            if e.l == 0 {
                return Err(Error::validation(format!("edge {i}: length must be positive")));
            }
            if !e.w.is_finite() {
                return Err(Error::validation(format!("edge {i}: weight must be finite")));
            }
        }
        if self.lmin > self.lmax {
            return Err(Error::validation("lmin must not exceed lmax"));
        }
        let cells = (self.n as u128 + self.edges.len() as u128 + 1) * (self.lmax as u128 + 1);
        if cells > TABLE_CAP {
            return Err(Error::capacity(format!(
                "(n + m) * lmax = {cells} exceeds the DP table cap"
            )));
        }
        Ok(())
    }
}

struct DpTables {
    /// best[k][i]: max weight of a walk of length exactly k ending at vertex i.
    best: Vec<Vec<Option<f64>>>,
    /// pred[k][i]: edge index used for the last step.
    pred: Vec<Vec<Option<usize>>>,
}

fn run_dp(inst: &LengthBoundedInstance, start: Option<usize>) -> DpTables {
    let n = inst.n;
    let u = inst.lmax as usize;
    let mut best: Vec<Vec<Option<f64>>> = vec![vec![None; n + 1]; u + 1];
    let mut pred: Vec<Vec<Option<usize>>> = vec![vec![None; n + 1]; u + 1];
    match start {
        Some(s) => best[0][s] = Some(0.0),
        None => {
            for i in 1..=n {
                best[0][i] = Some(0.0);
            }
        }
    }
    for k in 1..=u {
        for (idx, e) in inst.edges.iter().enumerate() {
            let l = e.l as usize;
            if l > k {
                continue;
            }
            if let Some(w) = best[k - l][e.from as usize] {
                let cand = w + e.w;
                let cell = &mut best[k][e.to as usize];
                if cell.map_or(true, |old| cand > old) {
                    *cell = Some(cand);
                    pred[k][e.to as usize] = Some(idx);
                }
            }
        }
    }
    DpTables { best, pred }
}

fn reconstruct(inst: &LengthBoundedInstance, tables: &DpTables, mut v: usize, mut k: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while k > 0 {
        let e = tables.pred[k][v].expect("predecessor missing on a reachable state");
        path.push(e);
        k -= inst.edges[e].l as usize;
        v = inst.edges[e].from as usize;
    }
    path.reverse();
    path
}

/// Maximum-weight (possibly self-intersecting) path with length in
/// `[lmin, lmax]`. Length 0 corresponds to the empty path of weight 0.
pub fn max_weight_path_bounded(inst: &LengthBoundedInstance) -> Result<BoundedBest> {
    inst.validate()?;
    let tables = run_dp(inst, None);
    let mut best: Option<(f64, usize, usize)> = None;
    for k in inst.lmin as usize..=inst.lmax as usize {
        for i in 1..=inst.n {
            if let Some(w) = tables.best[k][i] {
                if best.map_or(true, |(b, _, _)| w > b) {
                    best = Some((w, i, k));
                }
            }
        }
    }
    Ok(best.map(|(w, i, k)| (w, reconstruct(inst, &tables, i, k))))
}

/// Maximum-weight closed walk with length in `[lmin, lmax]`, found by trying
/// every start vertex with only that vertex seeded at length 0.
pub fn max_weight_cycle_bounded(inst: &LengthBoundedInstance) -> Result<BoundedBest> {
    inst.validate()?;
    let mut best: Option<(f64, Vec<usize>)> = None;
    for s in 1..=inst.n {
        let tables = run_dp(inst, Some(s));
        for k in inst.lmin as usize..=inst.lmax as usize {
            if let Some(w) = tables.best[k][s] {
                if best.as_ref().map_or(true, |(b, _)| w > *b) {
                    best = Some((w, reconstruct(inst, &tables, s, k)));
                }
            }
        }
    }
    Ok(best)
}
