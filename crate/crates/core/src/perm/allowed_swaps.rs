//! Sorting a permutation when only certain position pairs may be swapped.
//!
//! Positions and allowed pairs form a graph. Element i travels to position i
//! along a spanning-forest path: forward swaps carry it there, and replaying
//! the inner swaps backwards restores everything else, so earlier elements
//! stay sorted. Sorting is possible iff every element's current and target
//! positions share a component.

use super::{OpScript, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwapSortOutcome {
    Possible(OpScript),
    Impossible,
}

/// Spanning forest as parent pointers via BFS from every unvisited vertex.
fn spanning_forest(n: usize, adj: &[Vec<usize>]) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut component = vec![usize::MAX; n + 1];
    let mut parent: Vec<Option<usize>> = vec![None; n + 1];
    let mut queue = std::collections::VecDeque::new();
    for start in 1..=n {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = start;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if component[v] == usize::MAX {
                    component[v] = start;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
    }
    (component, parent)
}

/// Path between two positions through the spanning forest.
fn forest_path(from: usize, to: usize, parent: &[Option<usize>]) -> Vec<usize> {
    let chain = |mut v: usize| {
        let mut up = vec![v];
        while let Some(p) = parent[v] {
            up.push(p);
            v = p;
        }
        up
    };
    let a = chain(from);
    let b = chain(to);
    // Strip the shared suffix; a[ai] == b[bi] is then the lowest common
    // ancestor (both chains end at the same root).
    let mut ai = a.len();
    let mut bi = b.len();
    while ai > 0 && bi > 0 && a[ai - 1] == b[bi - 1] {
        ai -= 1;
        bi -= 1;
    }
    let mut path: Vec<usize> = a[..ai].to_vec();
    path.push(a[ai]);
    for i in (0..bi).rev() {
        path.push(b[i]);
    }
    path
}

/// Sorts `p` using only the allowed position swaps, or reports IMPOSSIBLE.
pub fn sort_by_allowed_swaps(
    p: &Permutation,
    allowed: &[(usize, usize)],
) -> Result<SwapSortOutcome> {
    let n = p.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(i, j) in allowed {
        if i < 1 || j < 1 || i > n || j > n {
            return Err(Error::validation(format!("allowed pair ({i}, {j}) out of range 1..={n}")));
        }
        if i == j {
            continue;
        }
        adj[i].push(j);
        adj[j].push(i);
    }
    let (component, parent) = spanning_forest(n, &adj);

    for (idx, &v) in p.values().iter().enumerate() {
        let cur = idx + 1;
        let target = v as usize;
        if component[cur] != component[target] {
            return Ok(SwapSortOutcome::Impossible);
        }
    }

    let mut cur = p.values().to_vec();
    let mut pos = p.positions();
    let mut swaps: Vec<(usize, usize)> = Vec::new();
    let do_swap = |cur: &mut Vec<u32>, pos: &mut Vec<usize>, a: usize, b: usize, out: &mut Vec<(usize, usize)>| {
        let (x, y) = (cur[a - 1], cur[b - 1]);
        cur.swap(a - 1, b - 1);
        pos[x as usize - 1] = b;
        pos[y as usize - 1] = a;
        out.push((a.min(b), a.max(b)));
    };

    for value in 1..=n as u32 {
        let target = value as usize;
        let at = pos[value as usize - 1];
        if at == target {
            continue;
        }
        let path = forest_path(at, target, &parent);
        for w in path.windows(2) {
            do_swap(&mut cur, &mut pos, w[0], w[1], &mut swaps);
        }
        // Undo the inner moves so only `value` and the displaced element
        // changed places.
        for j in (1..path.len() - 1).rev() {
            do_swap(&mut cur, &mut pos, path[j], path[j - 1], &mut swaps);
        }
    }
    debug_assert!(cur.iter().enumerate().all(|(i, &v)| v as usize == i + 1));
    Ok(SwapSortOutcome::Possible(OpScript::Swap(swaps)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_allowed_swap_sorts() {
        let p = Permutation::new(vec![2, 1, 3]).unwrap();
        match sort_by_allowed_swaps(&p, &[(1, 2)]).unwrap() {
            SwapSortOutcome::Possible(script) => {
                assert_eq!(script, OpScript::Swap(vec![(1, 2)]));
            }
            SwapSortOutcome::Impossible => panic!(),
        }
    }

    #[test]
    fn no_moves_means_impossible() {
        let p = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(
            sort_by_allowed_swaps(&p, &[]).unwrap(),
            SwapSortOutcome::Impossible
        );
    }

    #[test]
    fn chain_of_swaps_sorts_a_reversal() {
        let p = Permutation::new(vec![3, 2, 1]).unwrap();
        match sort_by_allowed_swaps(&p, &[(1, 2), (2, 3)]).unwrap() {
            SwapSortOutcome::Possible(script) => {
                let out = script.apply_to(p.values()).unwrap();
                assert_eq!(out, vec![1, 2, 3]);
                if let OpScript::Swap(steps) = &script {
                    for &(a, b) in steps {
                        let pair = (a.min(b), a.max(b));
                        assert!(pair == (1, 2) || pair == (2, 3));
                    }
                }
            }
            SwapSortOutcome::Impossible => panic!(),
        }
    }

    #[test]
    fn identity_is_already_sorted() {
        let p = Permutation::identity(4);
        match sort_by_allowed_swaps(&p, &[]).unwrap() {
            SwapSortOutcome::Possible(script) => assert_eq!(script.step_count(), 0),
            SwapSortOutcome::Impossible => panic!(),
        }
    }
}
