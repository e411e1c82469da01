//! Minimum-cost spanning tree with at most one owner's special offer.
//!
//! Taking owner `i`'s offer prices all of `i`'s edges at `sp` instead of
//! `np`. Rather than re-running the MST over all edges per owner, the
//! restricted edge set `SE(i)` — owner `i`'s edges at special price plus the
//! normal-MST edges of other owners — suffices and keeps the total work at
//! `O((m + n*q) log n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::PlainDsu;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OfferEdge {
    pub a: u32,
    pub b: u32,
    /// Owner id in 1..=q.
    pub owner: u32,
    /// Normal price.
    pub np: u64,
    /// Special price, at most `np`.
    pub sp: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OfferGraph {
    pub n: usize,
    pub q: usize,
    pub edges: Vec<OfferEdge>,
}

impl OfferGraph {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::validation("graph must have at least one vertex"));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.a < 1 || e.a as usize > self.n || e.b < 1 || e.b as usize > self.n {
                return Err(Error::validation(format!(
                    "edge {i}: endpoint out of range 1..={}",
                    self.n
                )));
            }
            if e.a == e.b {
                return Err(Error::validation(format!("edge {i}: endpoints must differ")));
            }
            if e.owner < 1 || e.owner as usize > self.q {
                return Err(Error::validation(format!(
                    "edge {i}: owner out of range 1..={}",
                    self.q
                )));
            }
            if e.sp > e.np {
                return Err(Error::validation(format!(
                    "edge {i}: special price {} exceeds normal price {}",
                    e.sp, e.np
                )));
            }
        }
        Ok(())
    }
}

/// Result of the offer-aware MST search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OfferMstResult {
    Connected {
        best_cost: u64,
        /// `None` when the all-normal-prices tree wins (including ties).
        chosen_offer: Option<u32>,
        /// Edge indices of the winning tree.
        tree_edges: Vec<usize>,
    },
    Disconnected,
}

/// Kruskal over `(price, edge index)` pairs; prices are given per candidate
/// edge so callers control the pricing regime.
fn kruskal(n: usize, candidates: &[(u64, usize, u32, u32)]) -> Option<(u64, Vec<usize>)> {
    let mut sorted = candidates.to_vec();
    sorted.sort_unstable();
    let mut dsu = PlainDsu::new(n + 1);
    let mut cost = 0u64;
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    for &(price, idx, a, b) in &sorted {
        if dsu.union(a as usize, b as usize) {
            cost += price;
            tree.push(idx);
            if tree.len() == n - 1 {
                break;
            }
        }
    }
    if tree.len() == n.saturating_sub(1) {
        tree.sort_unstable();
        Some((cost, tree))
    } else {
        None
    }
}

/// Minimum spanning tree under normal prices.
pub fn mst_normal(g: &OfferGraph) -> Result<Option<(u64, Vec<usize>)>> {
    g.validate()?;
    let candidates: Vec<(u64, usize, u32, u32)> = g
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.np, i, e.a, e.b))
        .collect();
    Ok(kruskal(g.n, &candidates))
}

/// MST for owner `offer` over the restricted edge set `SE(offer)`: that
/// owner's edges at special price plus the normal-MST edges of other owners
/// at normal price. Any edge outside the set cannot enter the optimum.
pub fn offer_mst_restricted(
    g: &OfferGraph,
    offer: u32,
    normal_tree: &[usize],
) -> Option<(u64, Vec<usize>)> {
    let mut candidates: Vec<(u64, usize, u32, u32)> = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        if e.owner == offer {
            candidates.push((e.sp, i, e.a, e.b));
        }
    }
    for &i in normal_tree {
        let e = &g.edges[i];
        if e.owner != offer {
            candidates.push((e.np, i, e.a, e.b));
        }
    }
    kruskal(g.n, &candidates)
}

/// Best spanning tree over "no offer" and each single owner's offer.
pub fn best_offer_mst(g: &OfferGraph) -> Result<OfferMstResult> {
    g.validate()?;
    let Some((normal_cost, normal_tree)) = mst_normal(g)? else {
        return Ok(OfferMstResult::Disconnected);
    };

    let mut best = OfferMstResult::Connected {
        best_cost: normal_cost,
        chosen_offer: None,
        tree_edges: normal_tree.clone(),
    };
    for owner in 1..=g.q as u32 {
        // SE(owner) always contains a spanning tree when the normal MST exists.
        let (cost, tree) = offer_mst_restricted(g, owner, &normal_tree)
            .expect("restricted edge set covers the normal tree");
        let improves = match &best {
            OfferMstResult::Connected { best_cost, .. } => cost < *best_cost,
            OfferMstResult::Disconnected => unreachable!(),
        };
        if improves {
            best = OfferMstResult::Connected {
                best_cost: cost,
                chosen_offer: Some(owner),
                tree_edges: tree,
            };
        }
    }
    Ok(best)
}

/// MST cost over *all* edges under owner `offer`'s pricing; used by the
/// restriction-soundness checks.
pub fn full_mst_under_offer(g: &OfferGraph, offer: u32) -> Result<Option<(u64, Vec<usize>)>> {
    g.validate()?;
    let candidates: Vec<(u64, usize, u32, u32)> = g
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let price = if e.owner == offer { e.sp } else { e.np };
            (price, i, e.a, e.b)
        })
        .collect();
    Ok(kruskal(g.n, &candidates))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, q: usize, edges: Vec<(u32, u32, u32, u64, u64)>) -> OfferGraph {
        OfferGraph {
            n,
            q,
            edges: edges
                .into_iter()
                .map(|(a, b, owner, np, sp)| OfferEdge { a, b, owner, np, sp })
                .collect(),
        }
    }

    #[test]
    fn triangle_normal_mst() {
        let graph = g(3, 1, vec![(1, 2, 1, 5, 5), (2, 3, 1, 2, 2), (1, 3, 1, 10, 10)]);
        let (cost, tree) = mst_normal(&graph).unwrap().unwrap();
        assert_eq!(cost, 7);
        assert_eq!(tree, vec![0, 1]);
    }

    #[test]
    fn single_vertex_is_an_empty_tree() {
        let graph = g(1, 1, vec![]);
        let (cost, tree) = mst_normal(&graph).unwrap().unwrap();
        assert_eq!(cost, 0);
        assert!(tree.is_empty());
        assert!(matches!(
            best_offer_mst(&graph).unwrap(),
            OfferMstResult::Connected { best_cost: 0, chosen_offer: None, .. }
        ));
    }

    #[test]
    fn two_isolated_vertices_disconnected() {
        let graph = g(2, 1, vec![]);
        assert!(mst_normal(&graph).unwrap().is_none());
        assert_eq!(best_offer_mst(&graph).unwrap(), OfferMstResult::Disconnected);
    }

    #[test]
    fn offer_example_from_triangle() {
        let graph = g(
            3,
            2,
            vec![(1, 2, 1, 5, 1), (2, 3, 2, 2, 2), (1, 3, 1, 10, 3)],
        );
        match best_offer_mst(&graph).unwrap() {
            OfferMstResult::Connected {
                best_cost,
                chosen_offer,
                tree_edges,
            } => {
                assert_eq!(best_cost, 3);
                assert_eq!(chosen_offer, Some(1));
                assert_eq!(tree_edges, vec![0, 1]);
            }
            OfferMstResult::Disconnected => panic!("connected graph"),
        }
    }

    #[test]
    fn equal_prices_keep_the_normal_tree() {
        let graph = g(3, 2, vec![(1, 2, 1, 5, 5), (2, 3, 2, 2, 2), (1, 3, 1, 10, 10)]);
        match best_offer_mst(&graph).unwrap() {
            OfferMstResult::Connected {
                best_cost,
                chosen_offer,
                ..
            } => {
                assert_eq!(best_cost, 7);
                assert_eq!(chosen_offer, None);
            }
            OfferMstResult::Disconnected => panic!("connected graph"),
        }
    }

    #[test]
    fn single_owner_offer_prices_everything_special() {
        let graph = g(3, 1, vec![(1, 2, 1, 5, 1), (2, 3, 1, 2, 1), (1, 3, 1, 10, 9)]);
        match best_offer_mst(&graph).unwrap() {
            OfferMstResult::Connected { best_cost, chosen_offer, .. } => {
                assert_eq!(best_cost, 2);
                assert_eq!(chosen_offer, Some(1));
            }
            OfferMstResult::Disconnected => panic!("connected graph"),
        }
    }

    #[test]
    fn validation_rejects_bad_edges() {
        assert!(g(2, 1, vec![(1, 1, 1, 3, 3)]).validate().is_err());
        assert!(g(2, 1, vec![(1, 2, 2, 3, 3)]).validate().is_err());
        assert!(g(2, 1, vec![(1, 2, 1, 3, 4)]).validate().is_err());
        assert!(g(2, 0, vec![]).validate().is_ok());
    }
}
