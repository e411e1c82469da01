//! Minimum-waiting-time packet transfer over time-reserved edges.
//!
//! Every directed edge is a reservation: the packet can leave its tail only at
//! `tstart` and arrives at its head exactly at `tfinish`. Of the transmission
//! time, `twait` is spent in queues and counts as waiting; so does every idle
//! gap at a vertex, including the final gap up to the deadline `T`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A directed reservation edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimedEdge {
    pub from: u32,
    pub to: u32,
    pub tstart: u64,
    pub tfinish: u64,
    pub twait: u64,
}

/// Direction of an edge relative to the vertex whose adjacency holds it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSide {
    Incoming,
    Outgoing,
}

/// One entry of a vertex's merged adjacency order.
#[derive(Debug, Clone, Copy)]
pub struct AdjEntry {
    pub edge: usize,
    pub side: EdgeSide,
    /// Sort key: `tfinish` for incoming entries, `tstart` for outgoing ones.
    pub key: u64,
}

/// A directed graph of reservation edges with, per vertex, the merged
/// incoming/outgoing adjacency sorted by key (incoming first on ties) and a
/// constant-time edge-to-rank lookup.
#[derive(Debug, Clone)]
pub struct TimedGraph {
    n: usize,
    edges: Vec<TimedEdge>,
    adj: Vec<Vec<AdjEntry>>,
    /// rank[e] = (rank of e in from(e)'s order, rank of e in to(e)'s order),
    /// both 1-based.
    rank: Vec<(usize, usize)>,
}

/// Outcome of a transfer query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransferResult {
    Feasible {
        total_wait: u64,
        /// `(edge index, depart time, arrive time)` in travel order.
        itinerary: Vec<(usize, u64, u64)>,
    },
    Infeasible,
}

impl TransferResult {
    pub fn total_wait(&self) -> Option<u64> {
        match self {
            TransferResult::Feasible { total_wait, .. } => Some(*total_wait),
            TransferResult::Infeasible => None,
        }
    }
}

/// Keeps every accumulated wait below u64 overflow: total waiting is bounded
/// by the largest time in play, so capping times caps the arithmetic.
pub const TIME_CAP: u64 = 1 << 62;

/// Builds the per-vertex merged adjacency orders and rank lookups.
///
/// Vertex ids are 1-based. Rejects malformed edges and self-loops.
pub fn build_schedule(n: usize, edges: Vec<TimedEdge>) -> Result<TimedGraph> {
    for (idx, e) in edges.iter().enumerate() {
        if e.tfinish > TIME_CAP {
            return Err(Error::validation(format!(
                "edge {idx}: times must stay at or below 2^62"
            )));
        }
        if e.from < 1 || e.from as usize > n || e.to < 1 || e.to as usize > n {
            return Err(Error::validation(format!(
                "edge {idx}: endpoint out of range 1..={n}"
            )));
        }
        if e.from == e.to {
            return Err(Error::validation(format!("edge {idx}: self-loop")));
        }
        if e.tfinish <= e.tstart {
            return Err(Error::validation(format!(
                "edge {idx}: tfinish ({}) must exceed tstart ({})",
                e.tfinish, e.tstart
            )));
        }
        if e.twait > e.tfinish - e.tstart {
            return Err(Error::validation(format!(
                "edge {idx}: twait ({}) exceeds tfinish - tstart ({})",
                e.twait,
                e.tfinish - e.tstart
            )));
        }
    }

    let mut adj: Vec<Vec<AdjEntry>> = vec![Vec::new(); n + 1];
    for (idx, e) in edges.iter().enumerate() {
        adj[e.from as usize].push(AdjEntry {
            edge: idx,
            side: EdgeSide::Outgoing,
            key: e.tstart,
        });
        adj[e.to as usize].push(AdjEntry {
            edge: idx,
            side: EdgeSide::Incoming,
            key: e.tfinish,
        });
    }
    let mut rank = vec![(0usize, 0usize); edges.len()];
    for v in 1..=n {
        // Incoming precedes outgoing at equal key; edge index breaks the rest.
        adj[v].sort_by_key(|a| {
            let side = match a.side {
                EdgeSide::Incoming => 0u8,
                EdgeSide::Outgoing => 1u8,
            };
            (a.key, side, a.edge)
        });
        for (i, a) in adj[v].iter().enumerate() {
            match a.side {
                EdgeSide::Outgoing => rank[a.edge].0 = i + 1,
                EdgeSide::Incoming => rank[a.edge].1 = i + 1,
            }
        }
    }
    Ok(TimedGraph {
        n,
        edges,
        adj,
        rank,
    })
}

impl TimedGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[TimedEdge] {
        &self.edges
    }

    pub fn adjacency(&self, v: usize) -> &[AdjEntry] {
        &self.adj[v]
    }

    /// 1-based rank of edge `e` in the order of its tail vertex.
    pub fn rank_at_tail(&self, e: usize) -> usize {
        self.rank[e].0
    }

    /// 1-based rank of edge `e` in the order of its head vertex.
    pub fn rank_at_head(&self, e: usize) -> usize {
        self.rank[e].1
    }

    fn key(&self, v: usize, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.adj[v][i - 1].key
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pred {
    Start,
    Stay,
    Arrive { edge: usize, from: (usize, usize) },
}

fn check_endpoints(g: &TimedGraph, s: usize, d: usize, deadline: u64) -> Result<()> {
    if s < 1 || s > g.n || d < 1 || d > g.n {
        return Err(Error::validation(format!(
            "source/destination out of range 1..={}",
            g.n
        )));
    }
    if deadline > TIME_CAP {
        return Err(Error::validation("deadline must stay at or below 2^62"));
    }
    Ok(())
}

/// Minimum total waiting time for a packet that starts at `s` at time 0 and
/// must be at `d` by time `T`, with the itinerary that achieves it.
///
/// Sweeps the DP states `(vertex, adjacency rank)` in increasing key order.
pub fn min_wait_transfer(g: &TimedGraph, s: usize, d: usize, deadline: u64) -> Result<TransferResult> {
    check_endpoints(g, s, d, deadline)?;

    // tw[v][i], i = 0..=deg(v); None = unreachable.
    let mut tw: Vec<Vec<Option<u64>>> = (1..=g.n).map(|v| vec![None; g.adj[v].len() + 1]).collect();
    let mut pred: Vec<Vec<Pred>> = (1..=g.n)
        .map(|v| vec![Pred::Start; g.adj[v].len() + 1])
        .collect();
    tw[s - 1][0] = Some(0);

    let mut events: Vec<(u64, usize, usize)> = Vec::new();
    for v in 1..=g.n {
        for i in 1..=g.adj[v].len() {
            events.push((g.key(v, i), v, i));
        }
    }
    // Same-vertex equal keys must be processed in rank order.
    events.sort_unstable();

    for (key, v, i) in events {
        let stay = tw[v - 1][i - 1].map(|w| w + (key - g.key(v, i - 1)));
        let mut best = stay;
        let mut best_pred = Pred::Stay;
        if let EdgeSide::Incoming = g.adj[v][i - 1].side {
            let e = g.adj[v][i - 1].edge;
            let u = g.edges[e].from as usize;
            let j = g.rank_at_tail(e);
            if let Some(w) = tw[u - 1][j] {
                let via = w + g.edges[e].twait;
                let take = match best {
                    None => true,
                    Some(b) => {
                        via < b || (via == b && (u, j) < (v, i - 1))
                    }
                };
                if take {
                    best = Some(via);
                    best_pred = Pred::Arrive { edge: e, from: (u, j) };
                }
            }
        }
        tw[v - 1][i] = best;
        if best.is_some() {
            pred[v - 1][i] = best_pred;
        }
    }

    // Answer: min over states of d whose key is within the deadline.
    let mut best: Option<(u64, usize)> = None;
    for i in 0..=g.adj[d].len() {
        let key = g.key(d, i);
        if key > deadline {
            continue;
        }
        if let Some(w) = tw[d - 1][i] {
            let total = w + (deadline - key);
            if best.map_or(true, |(b, _)| total < b) {
                best = Some((total, i));
            }
        }
    }
    let Some((total_wait, mut i)) = best else {
        return Ok(TransferResult::Infeasible);
    };

    let mut itinerary = Vec::new();
    let mut v = d;
    loop {
        match pred[v - 1][i] {
            Pred::Start => break,
            Pred::Stay => i -= 1,
            Pred::Arrive { edge, from } => {
                let e = &g.edges[edge];
                itinerary.push((edge, e.tstart, e.tfinish));
                v = from.0;
                i = from.1;
            }
        }
    }
    itinerary.reverse();
    Ok(TransferResult::Feasible {
        total_wait,
        itinerary,
    })
}

/// Same answer as [`min_wait_transfer`], computed as a shortest path on the
/// explicit graph of `(vertex, rank)` pairs. Kept as an independent route for
/// cross-checking the sweep.
pub fn min_wait_transfer_pair_graph(
    g: &TimedGraph,
    s: usize,
    d: usize,
    deadline: u64,
) -> Result<TransferResult> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    check_endpoints(g, s, d, deadline)?;

    // Node numbering: offset[v] + i for state (v, i).
    let mut offset = vec![0usize; g.n + 2];
    for v in 1..=g.n {
        offset[v + 1] = offset[v] + g.adj[v].len() + 1;
    }
    let total = offset[g.n + 1];
    let mut vertex_of = vec![0usize; total];
    for v in 1..=g.n {
        for node in offset[v]..offset[v + 1] {
            vertex_of[node] = v;
        }
    }
    let mut dist: Vec<Option<u64>> = vec![None; total];
    let mut heap = BinaryHeap::new();
    let start = offset[s];
    dist[start] = Some(0);
    heap.push(Reverse((0u64, start)));

    while let Some(Reverse((w, node))) = heap.pop() {
        if dist[node] != Some(w) {
            continue;
        }
        let v = vertex_of[node];
        let i = node - offset[v];
        // Chain edge to the next rank at the same vertex.
        if i < g.adj[v].len() {
            let cost = g.key(v, i + 1) - g.key(v, i);
            let nd = w + cost;
            let nn = node + 1;
            if dist[nn].map_or(true, |old| nd < old) {
                dist[nn] = Some(nd);
                heap.push(Reverse((nd, nn)));
            }
        }
        // Departure edge, available only at the exact outgoing rank.
        if i > 0 {
            if let EdgeSide::Outgoing = g.adj[v][i - 1].side {
                let e = g.adj[v][i - 1].edge;
                let to = g.edges[e].to as usize;
                let j = g.rank_at_head(e);
                let nd = w + g.edges[e].twait;
                let nn = offset[to] + j;
                if dist[nn].map_or(true, |old| nd < old) {
                    dist[nn] = Some(nd);
                    heap.push(Reverse((nd, nn)));
                }
            }
        }
    }

    let mut best: Option<u64> = None;
    for i in 0..=g.adj[d].len() {
        let key = g.key(d, i);
        if key > deadline {
            continue;
        }
        if let Some(w) = dist[offset[d] + i] {
            let t = w + (deadline - key);
            if best.map_or(true, |b| t < b) {
                best = Some(t);
            }
        }
    }
    Ok(match best {
        Some(total_wait) => TransferResult::Feasible {
            total_wait,
            itinerary: Vec::new(),
        },
        None => TransferResult::Infeasible,
    })
}

/// Replays an itinerary from `(s, time 0)` and returns the accumulated wait,
/// checking every reservation constraint along the way.
pub fn replay_itinerary(
    g: &TimedGraph,
    s: usize,
    d: usize,
    deadline: u64,
    itinerary: &[(usize, u64, u64)],
) -> Result<u64> {
    let mut at = s;
    let mut now = 0u64;
    let mut wait = 0u64;
    for &(e, depart, arrive) in itinerary {
        let edge = g
            .edges
            .get(e)
            .ok_or_else(|| Error::validation(format!("itinerary references unknown edge {e}")))?;
        if edge.from as usize != at {
            return Err(Error::validation(format!(
                "edge {e} departs from {} but packet is at {at}",
                edge.from
            )));
        }
        if depart != edge.tstart || arrive != edge.tfinish {
            return Err(Error::validation(format!(
                "edge {e} times do not match its reservation"
            )));
        }
        if depart < now {
            return Err(Error::validation(format!(
                "edge {e} departs at {depart} before arrival time {now}"
            )));
        }
        wait += depart - now + edge.twait;
        now = arrive;
        at = edge.to as usize;
    }
    if at != d {
        return Err(Error::validation(format!(
            "itinerary ends at {at}, not at destination {d}"
        )));
    }
    if now > deadline {
        return Err(Error::validation(format!(
            "itinerary arrives at {now}, after deadline {deadline}"
        )));
    }
    Ok(wait + (deadline - now))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(from: u32, to: u32, tstart: u64, tfinish: u64, twait: u64) -> TimedEdge {
        TimedEdge {
            from,
            to,
            tstart,
            tfinish,
            twait,
        }
    }

    #[test]
    fn empty_graph_has_empty_adjacency() {
        let g = build_schedule(2, vec![]).unwrap();
        assert!(g.adjacency(1).is_empty());
        assert!(g.adjacency(2).is_empty());
    }

    #[test]
    fn single_edge_adjacency_keys() {
        let g = build_schedule(2, vec![edge(1, 2, 2, 5, 1)]).unwrap();
        let a1 = g.adjacency(1);
        assert_eq!(a1.len(), 1);
        assert_eq!(a1[0].key, 2);
        assert!(matches!(a1[0].side, EdgeSide::Outgoing));
        let a2 = g.adjacency(2);
        assert_eq!(a2[0].key, 5);
        assert!(matches!(a2[0].side, EdgeSide::Incoming));
    }

    #[test]
    fn incoming_before_outgoing_on_equal_key() {
        // Incoming edge with tfinish=3 and outgoing edge with tstart=3 at vertex 2.
        let g = build_schedule(3, vec![edge(1, 2, 1, 3, 0), edge(2, 3, 3, 4, 0)]).unwrap();
        let a = g.adjacency(2);
        assert!(matches!(a[0].side, EdgeSide::Incoming));
        assert!(matches!(a[1].side, EdgeSide::Outgoing));
        assert_eq!(g.rank_at_head(0), 1);
        assert_eq!(g.rank_at_tail(1), 2);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(
            build_schedule(2, vec![edge(1, 2, 5, 5, 0)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            build_schedule(2, vec![edge(1, 2, 2, 5, 4)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            build_schedule(2, vec![edge(1, 1, 2, 5, 1)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            build_schedule(2, vec![edge(1, 3, 2, 5, 1)]),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn source_equals_destination_waits_out_the_deadline() {
        let g = build_schedule(1, vec![]).unwrap();
        let r = min_wait_transfer(&g, 1, 1, 5).unwrap();
        assert_eq!(
            r,
            TransferResult::Feasible {
                total_wait: 5,
                itinerary: vec![]
            }
        );
    }

    #[test]
    fn single_edge_transfer() {
        let g = build_schedule(2, vec![edge(1, 2, 2, 5, 1)]).unwrap();
        let r = min_wait_transfer(&g, 1, 2, 6).unwrap();
        match r {
            TransferResult::Feasible {
                total_wait,
                itinerary,
            } => {
                assert_eq!(total_wait, 4);
                assert_eq!(itinerary, vec![(0, 2, 5)]);
                let replayed = replay_itinerary(&g, 1, 2, 6, &itinerary).unwrap();
                assert_eq!(replayed, 4);
            }
            TransferResult::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn deadline_before_arrival_is_infeasible() {
        let g = build_schedule(2, vec![edge(1, 2, 2, 5, 1)]).unwrap();
        assert_eq!(min_wait_transfer(&g, 1, 2, 4).unwrap(), TransferResult::Infeasible);
    }

    #[test]
    fn deadline_exactly_reached_is_feasible() {
        let g = build_schedule(2, vec![edge(1, 2, 2, 5, 1)]).unwrap();
        let r = min_wait_transfer(&g, 1, 2, 5).unwrap();
        assert_eq!(r.total_wait(), Some(3));
    }

    #[test]
    fn departure_at_arrival_time_is_allowed() {
        // Arrive at 2 at time 3, depart at exactly 3.
        let g = build_schedule(3, vec![edge(1, 2, 1, 3, 0), edge(2, 3, 3, 4, 0)]).unwrap();
        let r = min_wait_transfer(&g, 1, 3, 4).unwrap();
        assert_eq!(r.total_wait(), Some(1));
    }

    #[test]
    fn pair_graph_route_agrees_on_small_instance() {
        let edges = vec![
            edge(1, 2, 2, 5, 1),
            edge(1, 3, 0, 4, 2),
            edge(3, 2, 4, 7, 0),
            edge(2, 4, 7, 9, 1),
        ];
        let g = build_schedule(4, edges).unwrap();
        for t in 0..=12 {
            let a = min_wait_transfer(&g, 1, 4, t).unwrap().total_wait();
            let b = min_wait_transfer_pair_graph(&g, 1, 4, t).unwrap().total_wait();
            assert_eq!(a, b, "deadline {t}");
        }
    }
}
