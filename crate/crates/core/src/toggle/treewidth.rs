//! Toggle DP over a tree decomposition, O(n * 2^(3*tw)).
//!
//! Per decomposition node X the table `cmin[CSel][CState]` holds the cheapest
//! way to finish everything in X's subtree except possibly the bag vertices,
//! where CSel fixes which bag vertices are selected and CState records each
//! bag vertex's flip parity accumulated so far. Sons are folded in one at a
//! time through their projection onto the shared vertices; the double-counted
//! flips and costs of shared selected vertices are cancelled during the fold.

use serde::{Deserialize, Serialize};

use super::{ToggleInstance, ToggleResult};
use crate::error::{Error, Result};
use crate::sets::PlainDsu;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Bags of 1-based graph vertices, one per decomposition node.
    pub bags: Vec<Vec<u32>>,
    /// Undirected edges between decomposition nodes (0-based).
    pub tree_edges: Vec<(usize, usize)>,
    /// Declared width bound (max bag size); checked when present.
    pub width: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionViolation {
    NoNodes,
    NotATree,
    BagVertexOutOfRange { node: usize, vertex: u32 },
    DuplicateBagVertex { node: usize, vertex: u32 },
    BagTooLarge { node: usize, size: usize, width: usize },
    VertexNotCovered { vertex: u32 },
    EdgeNotCovered { a: u32, b: u32 },
    OccurrencesDisconnected { vertex: u32 },
}

impl std::fmt::Display for DecompositionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NoNodes => write!(f, "decomposition has no nodes"),
            Self::NotATree => write!(f, "tree_edges do not form a tree over the nodes"),
            Self::BagVertexOutOfRange { node, vertex } => {
                write!(f, "node {node}: bag vertex {vertex} out of range")
            }
            Self::DuplicateBagVertex { node, vertex } => {
                write!(f, "node {node}: bag vertex {vertex} repeated")
            }
            Self::BagTooLarge { node, size, width } => {
                write!(f, "node {node}: bag size {size} exceeds width {width}")
            }
            Self::VertexNotCovered { vertex } => write!(f, "vertex {vertex} appears in no bag"),
            Self::EdgeNotCovered { a, b } => {
                write!(f, "edge ({a}, {b}) appears together in no bag")
            }
            Self::OccurrencesDisconnected { vertex } => {
                write!(f, "nodes containing vertex {vertex} are not connected in the tree")
            }
        }
    }
}

/// Checks the three decomposition properties plus structural sanity; every
/// violation is reported, none is an error.
pub fn validate_decomposition(
    inst: &ToggleInstance,
    t: &TreeDecomposition,
) -> Vec<DecompositionViolation> {
    let mut violations = Vec::new();
    let n = t.bags.len();
    if n == 0 {
        violations.push(DecompositionViolation::NoNodes);
        return violations;
    }

    let mut tree_ok = t.tree_edges.len() == n - 1;
    let mut dsu = PlainDsu::new(n);
    for &(a, b) in &t.tree_edges {
        if a >= n || b >= n || a == b || !dsu.union(a, b) {
            tree_ok = false;
            break;
        }
    }
    if tree_ok && n > 1 {
        let r = dsu.find(0);
        tree_ok = (1..n).all(|i| dsu.find(i) == r);
    }
    if !tree_ok {
        violations.push(DecompositionViolation::NotATree);
    }

    for (node, bag) in t.bags.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for &v in bag {
            if v < 1 || v as usize > inst.p {
                violations.push(DecompositionViolation::BagVertexOutOfRange { node, vertex: v });
            } else if !seen.insert(v) {
                violations.push(DecompositionViolation::DuplicateBagVertex { node, vertex: v });
            }
        }
        if let Some(width) = t.width {
            if bag.len() > width {
                violations.push(DecompositionViolation::BagTooLarge {
                    node,
                    size: bag.len(),
                    width,
                });
            }
        }
    }

    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); inst.p + 1];
    for (node, bag) in t.bags.iter().enumerate() {
        for &v in bag {
            if v >= 1 && v as usize <= inst.p {
                containing[v as usize].push(node);
            }
        }
    }
    for v in 1..=inst.p {
        if containing[v].is_empty() {
            violations.push(DecompositionViolation::VertexNotCovered { vertex: v as u32 });
        }
    }

    for &(a, b) in &inst.edges {
        let covered = t
            .bags
            .iter()
            .any(|bag| bag.contains(&a) && bag.contains(&b));
        if !covered {
            violations.push(DecompositionViolation::EdgeNotCovered { a, b });
        }
    }

    if tree_ok {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &t.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for v in 1..=inst.p {
            if containing[v].len() <= 1 {
                continue;
            }
            let inside: std::collections::HashSet<usize> = containing[v].iter().copied().collect();
            let mut reached = std::collections::HashSet::new();
            let mut stack = vec![containing[v][0]];
            reached.insert(containing[v][0]);
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if inside.contains(&y) && reached.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if reached.len() != inside.len() {
                violations.push(DecompositionViolation::OccurrencesDisconnected { vertex: v as u32 });
            }
        }
    }

    violations
}

const INF: u64 = u64::MAX;
const WORK_CAP: u128 = 400_000_000;

/// Collect `bits` of `positions` into a compact mask.
fn gather(bits: usize, positions: &[usize]) -> usize {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (q, &p)| acc | (((bits >> p) & 1) << q))
}

/// Spread a compact mask back onto `positions`.
fn scatter(bits: usize, positions: &[usize]) -> usize {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (q, &p)| acc | (((bits >> q) & 1) << p))
}

struct NodeData {
    /// Bag vertices, ascending.
    bag: Vec<u32>,
    /// Per bag index, mask of bag-internal graph neighbors.
    adj_mask: Vec<usize>,
    children: Vec<usize>,
    /// Full table, indexed csel * (1 << num) + cstate; dropped once folded
    /// into the parent.
    table: Option<Vec<u64>>,
    /// Summary argmin per (csel', cstate') over the common set with the
    /// parent: the (cselY, cstateY) realizing the projected minimum.
    summary_argmin: Vec<(u32, u32)>,
    /// Positions of the parent-common vertices inside this bag.
    common_in_self: Vec<usize>,
    /// Backpointers per son fold: bp[j] maps csel * (1<<num) + cstate_after
    /// to (cstate_before, cstate_son_projected).
    bp: Vec<Vec<(u32, u32)>>,
}

/// Exact minimum over an arbitrary graph with the given tree decomposition.
pub fn toggle_treewidth_min_cost(
    inst: &ToggleInstance,
    t: &TreeDecomposition,
) -> Result<ToggleResult> {
    inst.validate()?;
    let violations = validate_decomposition(inst, t);
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::validation(format!(
            "invalid tree decomposition: {}",
            msgs.join("; ")
        )));
    }

    let n = t.bags.len();
    let adjacent: std::collections::HashSet<(u32, u32)> = inst
        .edges
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();

    // Root at node 0; BFS order so reversed order is bottom-up.
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &t.tree_edges {
        tree_adj[a].push(b);
        tree_adj[b].push(a);
    }
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    visited[0] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &tree_adj[x] {
            if !visited[y] {
                visited[y] = true;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }

    let mut nodes: Vec<NodeData> = t
        .bags
        .iter()
        .map(|bag| {
            let mut sorted = bag.clone();
            sorted.sort_unstable();
            let adj_mask = sorted
                .iter()
                .map(|&u| {
                    sorted
                        .iter()
                        .enumerate()
                        .filter(|&(_, &v)| v != u && adjacent.contains(&(u, v)))
                        .fold(0usize, |m, (j, _)| m | (1 << j))
                })
                .collect();
            NodeData {
                bag: sorted,
                adj_mask,
                children: Vec::new(),
                table: None,
                summary_argmin: Vec::new(),
                common_in_self: Vec::new(),
                bp: Vec::new(),
            }
        })
        .collect();
    for x in 0..n {
        if let Some(p) = parent[x] {
            nodes[p].children.push(x);
        }
    }

    // Work estimate against the cap before allocating anything big.
    let mut work: u128 = 0;
    for x in 0..n {
        let num = nodes[x].bag.len() as u32;
        work += 1u128 << (2 * num);
        for &c in &nodes[x].children {
            let numc = nodes[c].bag.len() as u32;
            let common = nodes[x]
                .bag
                .iter()
                .filter(|v| nodes[c].bag.contains(v))
                .count() as u32;
            work += 1u128 << (2 * numc);
            work += (1u128 << (2 * num)) << common;
        }
    }
    if work > WORK_CAP {
        return Err(Error::capacity(format!(
            "treewidth DP work estimate {work} exceeds the cap"
        )));
    }

    let bit = |x: u8| x as usize & 1;

    for &x in order.iter().rev() {
        let num = nodes[x].bag.len();
        let sz = 1usize << num;
        let mut table = vec![INF; sz * sz];
        let children = nodes[x].children.clone();
        let mut bp_all: Vec<Vec<(u32, u32)>> = vec![vec![(0, 0); sz * sz]; children.len()];

        // Shared vertex sets with each son (ascending) and where those
        // vertices sit inside X's bag.
        let son_common: Vec<(Vec<u32>, Vec<usize>)> = children
            .iter()
            .map(|&son| {
                let common: Vec<u32> = nodes[x]
                    .bag
                    .iter()
                    .filter(|v| nodes[son].bag.contains(v))
                    .copied()
                    .collect();
                let pos_in_x: Vec<usize> = common
                    .iter()
                    .map(|v| nodes[x].bag.iter().position(|w| w == v).unwrap())
                    .collect();
                (common, pos_in_x)
            })
            .collect();

        for csel in 0..sz {
            let sum_csel: u64 = (0..num)
                .filter(|i| csel >> i & 1 == 1)
                .map(|i| inst.costs[nodes[x].bag[i] as usize - 1])
                .sum();
            // Flip parity of each bag vertex from bag-internal selections.
            let mut cstate0 = 0usize;
            for i in 0..num {
                let flips = (nodes[x].adj_mask[i] & csel).count_ones() as usize + (csel >> i & 1);
                cstate0 |= (flips & 1) << i;
            }
            let mut cur = vec![INF; sz];
            cur[cstate0] = sum_csel;

            for (j, &son) in children.iter().enumerate() {
                let (common, pos_in_x) = &son_common[j];
                let szc = 1usize << common.len();
                let cselp = gather(csel, pos_in_x);
                let sum_common: u64 = (0..common.len())
                    .filter(|q| cselp >> q & 1 == 1)
                    .map(|q| inst.costs[common[q] as usize - 1])
                    .sum();
                // Parity correction per shared vertex: its flips from shared
                // selected vertices in its closed neighborhood were counted
                // both at X and inside the son.
                let mut nsel_vec = 0usize;
                for q in 0..common.len() {
                    let closed: usize = (0..common.len())
                        .filter(|&r| r == q || adjacent.contains(&(common[q], common[r])))
                        .fold(0, |m, r| m | (1 << r));
                    nsel_vec |= ((closed & cselp).count_ones() as usize & 1) << q;
                }

                let summary = &nodes[son].summary_argmin;
                let son_num = nodes[son].bag.len();
                let son_table = nodes[son].table.as_ref().expect("children fold before parents");
                let mut next = vec![INF; sz];
                for cstatep in 0..szc {
                    let (scsel, scstate) = summary[cselp * szc + cstatep];
                    if scsel == u32::MAX {
                        continue;
                    }
                    let cost = son_table[scsel as usize * (1 << son_num) + scstate as usize];
                    debug_assert_ne!(cost, INF);
                    let addv = cost - sum_common;
                    let corr = scatter(cstatep ^ nsel_vec, pos_in_x);
                    for cstate in 0..sz {
                        if cur[cstate] == INF {
                            continue;
                        }
                        let ns = cstate ^ corr;
                        let cand = cur[cstate] + addv;
                        if cand < next[ns] {
                            next[ns] = cand;
                            bp_all[j][csel * sz + ns] = (cstate as u32, cstatep as u32);
                        }
                    }
                }
                cur = next;
            }
            table[csel * sz..(csel + 1) * sz].copy_from_slice(&cur);
        }
        nodes[x].bp = bp_all;
        nodes[x].table = Some(table);

        // Summarize toward the parent.
        if let Some(par) = parent[x] {
            let common: Vec<u32> = nodes[par]
                .bag
                .iter()
                .filter(|v| nodes[x].bag.contains(v))
                .copied()
                .collect();
            let pos_in_self: Vec<usize> = common
                .iter()
                .map(|v| nodes[x].bag.iter().position(|w| w == v).unwrap())
                .collect();
            let szc = 1usize << common.len();
            let noncommon_mask: usize = (0..num)
                .filter(|i| !pos_in_self.contains(i))
                .fold(0, |m, i| m | (1 << i));
            let forced: usize = (0..num)
                .map(|i| {
                    let v = nodes[x].bag[i] as usize - 1;
                    ((bit(inst.initial[v]) ^ bit(inst.target[v])) & 1) << i
                })
                .sum();

            let table = nodes[x].table.as_ref().unwrap();
            let mut summary = vec![INF; szc * szc];
            let mut argmin = vec![(u32::MAX, u32::MAX); szc * szc];
            for csel in 0..sz {
                let cselp = gather(csel, &pos_in_self);
                for cstate in 0..sz {
                    let cost = table[csel * sz + cstate];
                    if cost == INF {
                        continue;
                    }
                    // Vertices leaving scope must have reached final parity.
                    if (cstate ^ forced) & noncommon_mask != 0 {
                        continue;
                    }
                    let cstatep = gather(cstate, &pos_in_self);
                    let idx = cselp * szc + cstatep;
                    if cost < summary[idx] {
                        summary[idx] = cost;
                        argmin[idx] = (csel as u32, cstate as u32);
                    }
                }
            }
            nodes[x].summary_argmin = argmin;
            nodes[x].common_in_self = pos_in_self;
        }
    }

    // Root: every bag vertex must carry final parity.
    let root = 0usize;
    let rnum = nodes[root].bag.len();
    let rsz = 1usize << rnum;
    let forced_root: usize = (0..rnum)
        .map(|i| {
            let v = nodes[root].bag[i] as usize - 1;
            ((bit(inst.initial[v]) ^ bit(inst.target[v])) & 1) << i
        })
        .sum();
    let root_table = nodes[root].table.as_ref().unwrap();
    let mut best = INF;
    let mut best_csel = 0usize;
    for csel in 0..rsz {
        let cost = root_table[csel * rsz + forced_root];
        if cost < best {
            best = cost;
            best_csel = csel;
        }
    }
    if best == INF {
        return Ok(ToggleResult::Infeasible);
    }

    // Walk the backpointers to recover the selection.
    let mut selected = vec![false; inst.p + 1];
    let mut stack = vec![(root, best_csel, forced_root)];
    while let Some((x, csel, mut cstate)) = stack.pop() {
        let num = nodes[x].bag.len();
        let sz = 1usize << num;
        for i in 0..num {
            if csel >> i & 1 == 1 {
                selected[nodes[x].bag[i] as usize] = true;
            }
        }
        for (j, &son) in nodes[x].children.iter().enumerate().rev() {
            let (prev_cstate, cstatep) = nodes[x].bp[j][csel * sz + cstate];
            let szc = 1usize << nodes[son].common_in_self.len();
            let (scsel, scstate) =
                nodes[son].summary_argmin[gatherc(csel, x, son, &nodes) * szc + cstatep as usize];
            stack.push((son, scsel as usize, scstate as usize));
            cstate = prev_cstate as usize;
        }
    }
    let selection: Vec<u32> = (1..=inst.p as u32)
        .filter(|&v| selected[v as usize])
        .collect();
    let min_cost = best;
    Ok(ToggleResult::Feasible {
        min_cost,
        selection,
    })
}

/// Projection of a parent's csel onto the common set with `son`.
fn gatherc(csel: usize, x: usize, son: usize, nodes: &[NodeData]) -> usize {
    let common: Vec<u32> = nodes[x]
        .bag
        .iter()
        .filter(|v| nodes[son].bag.contains(v))
        .copied()
        .collect();
    let pos_in_x: Vec<usize> = common
        .iter()
        .map(|v| nodes[x].bag.iter().position(|w| w == v).unwrap())
        .collect();
    gather(csel, &pos_in_x)
}
