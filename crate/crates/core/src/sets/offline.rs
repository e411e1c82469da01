//! Offline ordered union-find: two passes over the operation script.
//!
//! Pass 1 runs the unions only, recording a chain edge
//! `rightmost(left row) -> leftmost(right row)` per union. The chain graph is
//! a union of vertex-disjoint directed paths whose concatenation is the final
//! row order; a 1-D range structure over that order then answers every query
//! in pass 2 on the range `[pos(leftmost(set)), pos(x) - 1]`.

use crate::error::{Error, Result};

use super::{Aggregation, PlainDsu, SetOp, Side};

enum RangeStructure<V> {
    /// prefix[i] holds the aggregate of the first i linearized weights.
    Prefix(Vec<V>),
    /// Sparse table for idempotent aggregations.
    Sparse(Vec<Vec<V>>),
    SegTree { size: usize, tree: Vec<V> },
}

struct RangeAgg<'a, A: Aggregation> {
    agg: &'a A,
    structure: RangeStructure<A::Value>,
}

impl<'a, A: Aggregation> RangeAgg<'a, A> {
    fn build(values: &[A::Value], agg: &'a A) -> Self {
        let n = values.len();
        // Prefix aggregates need every prefix to stay invertible (a single
        // zero under mod-p multiplication poisons everything after it).
        let fully_invertible = agg.inverse(agg.neutral()).is_some()
            && values.iter().all(|&v| agg.inverse(v).is_some());
        let structure = if fully_invertible {
            let mut prefix = Vec::with_capacity(n + 1);
            prefix.push(agg.neutral());
            for (i, &v) in values.iter().enumerate() {
                let prev = prefix[i];
                prefix.push(agg.combine(prev, v));
            }
            RangeStructure::Prefix(prefix)
        } else if agg.idempotent() {
            let levels = (usize::BITS - n.max(1).leading_zeros()) as usize;
            let mut table: Vec<Vec<A::Value>> = vec![values.to_vec()];
            for j in 1..levels {
                let half = 1usize << (j - 1);
                let prev = &table[j - 1];
                if prev.len() < half + 1 {
                    break;
                }
                let row: Vec<A::Value> = (0..prev.len() - half)
                    .map(|i| agg.combine(prev[i], prev[i + half]))
                    .collect();
                table.push(row);
            }
            RangeStructure::Sparse(table)
        } else {
            let size = n.max(1);
            let mut tree = vec![agg.neutral(); 2 * size];
            tree[size..size + n].copy_from_slice(values);
            for i in (1..size).rev() {
                tree[i] = agg.combine(tree[2 * i], tree[2 * i + 1]);
            }
            RangeStructure::SegTree { size, tree }
        };
        RangeAgg { agg, structure }
    }

    /// Aggregate over 0-based half-open `[lo, hi)`; empty range is neutral.
    fn query(&self, lo: usize, hi: usize) -> A::Value {
        if lo >= hi {
            return self.agg.neutral();
        }
        match &self.structure {
            RangeStructure::Prefix(prefix) => {
                let inv = self
                    .agg
                    .inverse(prefix[lo])
                    .expect("prefix structure only built for invertible aggregations");
                self.agg.combine(prefix[hi], inv)
            }
            RangeStructure::Sparse(table) => {
                let len = hi - lo;
                let j = (usize::BITS - 1 - len.leading_zeros()) as usize;
                self.agg
                    .combine(table[j][lo], table[j][hi - (1usize << j)])
            }
            RangeStructure::SegTree { size, tree } => {
                let mut acc = self.agg.neutral();
                let (mut l, mut r) = (lo + size, hi + size);
                while l < r {
                    if l & 1 == 1 {
                        acc = self.agg.combine(acc, tree[l]);
                        l += 1;
                    }
                    if r & 1 == 1 {
                        r -= 1;
                        acc = self.agg.combine(acc, tree[r]);
                    }
                    l >>= 1;
                    r >>= 1;
                }
                acc
            }
        }
    }
}

/// DSU that also tracks the leftmost/rightmost element of each row.
struct EndpointDsu {
    dsu: PlainDsu,
    leftmost: Vec<usize>,
    rightmost: Vec<usize>,
}

impl EndpointDsu {
    fn new(n: usize) -> Self {
        EndpointDsu {
            dsu: PlainDsu::new(n + 1),
            leftmost: (0..=n).collect(),
            rightmost: (0..=n).collect(),
        }
    }

    /// Returns the chain edge `(rightmost of left row, leftmost of right row)`
    /// when a merge happened.
    fn union(&mut self, x: usize, y: usize, side: Side) -> Option<(usize, usize)> {
        let rx = self.dsu.find(x);
        let ry = self.dsu.find(y);
        if rx == ry {
            return None;
        }
        let (lroot, rroot) = match side {
            Side::Left => (rx, ry),
            Side::Right => (ry, rx),
        };
        let tail = self.rightmost[lroot];
        let head = self.leftmost[rroot];
        let ll = self.leftmost[lroot];
        let rr = self.rightmost[rroot];
        self.dsu.union(rx, ry);
        let root = self.dsu.find(rx);
        self.leftmost[root] = ll;
        self.rightmost[root] = rr;
        Some((tail, head))
    }
}

/// Runs a union/query script offline and returns one answer per query.
///
/// Elements are 1-based; `weights[i]` belongs to element `i + 1`.
pub fn offline_solve<A: Aggregation>(
    weights: &[A::Value],
    ops: &[SetOp],
    agg: &A,
) -> Result<Vec<A::Value>> {
    let n = weights.len();
    let check = |x: usize| -> Result<()> {
        if x < 1 || x > n {
            Err(Error::validation(format!("element {x} out of range 1..={n}")))
        } else {
            Ok(())
        }
    };

    // Pass 1: unions only; record chain edges between row endpoints.
    let mut ends = EndpointDsu::new(n);
    let mut next_in_row: Vec<Option<usize>> = vec![None; n + 1];
    let mut has_pred = vec![false; n + 1];
    for op in ops {
        match *op {
            SetOp::Union { x, y, side } => {
                check(x)?;
                check(y)?;
                if let Some((tail, head)) = ends.union(x, y, side) {
                    next_in_row[tail] = Some(head);
                    has_pred[head] = true;
                }
            }
            SetOp::Query { x } => check(x)?,
        }
    }

    // Concatenate the chains into the final linearization.
    let mut order = Vec::with_capacity(n);
    let mut pos = vec![0usize; n + 1];
    for start in 1..=n {
        if has_pred[start] {
            continue;
        }
        let mut cur = Some(start);
        while let Some(v) = cur {
            pos[v] = order.len();
            order.push(v);
            cur = next_in_row[v];
        }
    }
    debug_assert_eq!(order.len(), n, "chain graph must cover every element");

    let linearized: Vec<A::Value> = order.iter().map(|&v| weights[v - 1]).collect();
    let ds = RangeAgg::build(&linearized, agg);

    // Pass 2: replay, answering queries from the range structure.
    let mut ends = EndpointDsu::new(n);
    let mut answers = Vec::new();
    for op in ops {
        match *op {
            SetOp::Union { x, y, side } => {
                ends.union(x, y, side);
            }
            SetOp::Query { x } => {
                let r = ends.dsu.find(x);
                let left = ends.leftmost[r];
                answers.push(ds.query(pos[left], pos[x]));
            }
        }
    }
    Ok(answers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{MaxAgg, SumAgg};

    #[test]
    fn mirrors_the_online_examples() {
        let weights = [10u64, 20, 30];
        let ops = [
            SetOp::Union { x: 1, y: 2, side: Side::Left },
            SetOp::Union { x: 3, y: 2, side: Side::Left },
            SetOp::Query { x: 2 },
            SetOp::Query { x: 3 },
        ];
        let answers = offline_solve(&weights, &ops, &SumAgg).unwrap();
        assert_eq!(answers, vec![40, 0]);
        let answers = offline_solve(&weights, &ops, &MaxAgg).unwrap();
        assert_eq!(answers, vec![30, 0]);
    }

    #[test]
    fn empty_script_no_answers() {
        let answers = offline_solve::<SumAgg>(&[1, 2, 3], &[], &SumAgg).unwrap();
        assert!(answers.is_empty());
    }

    #[test]
    fn mulmod_with_zero_weight_falls_back_to_the_segment_tree() {
        use crate::oracle::oracle_ordered_sets;
        use crate::sets::MulModAgg;
        let agg = MulModAgg::new(1_000_000_007);
        let weights = [0u64, 20, 30];
        let ops = [
            SetOp::Union { x: 1, y: 2, side: Side::Left },
            SetOp::Union { x: 3, y: 2, side: Side::Left },
            SetOp::Query { x: 2 },
            SetOp::Query { x: 1 },
        ];
        let answers = offline_solve(&weights, &ops, &agg).unwrap();
        assert_eq!(answers, oracle_ordered_sets(&weights, &ops, &agg).unwrap());
        assert_eq!(answers, vec![0, 30]);
    }

    #[test]
    fn out_of_range_element_rejected() {
        let ops = [SetOp::Query { x: 9 }];
        assert!(offline_solve(&[1u64], &ops, &SumAgg).is_err());
    }
}
