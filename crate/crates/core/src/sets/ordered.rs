//! The two online ordered union-find variants.
//!
//! Both maintain rows of elements under directed unions and answer prefix
//! queries (aggregate weight strictly left of an element in its row).
//!
//! * [`InvertibleDsu`] needs a group-like aggregation. Every element carries
//!   `wp(x)`; the aggregate of `wp` over the ancestor chain of `x` *including
//!   both ends* equals the prefix answer. Union by size plus path compression
//!   give the inverse-Ackermann bound.
//! * [`CommutativeDsu`] needs only commutativity and associativity. Each tree
//!   edge `(u, parent(u))` carries `wskip(u)`; the aggregate over the edges on
//!   the path from `x` to its root equals the prefix answer. Unions always
//!   hang the right row under the left row's root; path compression rewrites
//!   `wskip` along the walked path.

use crate::error::{Error, Result};

use super::{Aggregation, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCompression {
    Enabled,
    Disabled,
}

pub struct InvertibleDsu<A: Aggregation> {
    agg: A,
    parent: Vec<Option<usize>>,
    wp: Vec<A::Value>,
    wagg: Vec<A::Value>,
    size: Vec<usize>,
    compression: PathCompression,
    /// Parent-pointer dereferences, for amortized-cost measurements.
    pub hops: u64,
}

impl<A: Aggregation> InvertibleDsu<A> {
    /// `weights[i]` is the weight of element `i + 1`; elements are 1-based.
    pub fn new(weights: &[A::Value], agg: A) -> Result<Self> {
        Self::with_compression(weights, agg, PathCompression::Enabled)
    }

    pub fn with_compression(
        weights: &[A::Value],
        agg: A,
        compression: PathCompression,
    ) -> Result<Self> {
        if agg.inverse(agg.neutral()).is_none() {
            return Err(Error::validation(
                "the invertible ordered union-find needs an aggregation with an inverse",
            ));
        }
        // Every weight must be a group element; e.g. 0 has no inverse under
        // multiplication mod p.
        for (i, &w) in weights.iter().enumerate() {
            if agg.inverse(w).is_none() {
                return Err(Error::validation(format!(
                    "weight of element {} has no inverse under this aggregation",
                    i + 1
                )));
            }
        }
        let n = weights.len();
        Ok(InvertibleDsu {
            parent: vec![None; n + 1],
            wp: vec![agg.neutral(); n + 1],
            wagg: std::iter::once(agg.neutral())
                .chain(weights.iter().copied())
                .collect(),
            size: vec![1; n + 1],
            agg,
            compression,
            hops: 0,
        })
    }

    fn inv(&self, v: A::Value) -> A::Value {
        self.agg.inverse(v).expect("inverse checked at construction")
    }

    /// Root of `x`'s tree, compressing the walked path and rewriting `wp` so
    /// that each reattached node keeps its chain aggregate.
    pub fn find(&mut self, x: usize) -> usize {
        let mut chain = Vec::new();
        let mut cur = x;
        while let Some(p) = self.parent[cur] {
            self.hops += 1;
            chain.push(cur);
            cur = p;
        }
        let root = cur;
        if matches!(self.compression, PathCompression::Enabled) && chain.len() > 1 {
            // Suffix aggregates of wp over the chain, root excluded.
            let mut suffix = self.agg.neutral();
            for &node in chain.iter().rev() {
                suffix = self.agg.combine(self.wp[node], suffix);
                self.parent[node] = Some(root);
                self.wp[node] = suffix;
            }
        }
        root
    }

    /// Aggregate weight of the elements strictly left of `x` in its row.
    pub fn prefix_query(&mut self, x: usize) -> A::Value {
        let root = self.find(x);
        if x == root {
            self.wp[x]
        } else {
            self.agg.combine(self.wp[x], self.wp[root])
        }
    }

    /// Merges the rows of `x` and `y`; `side` says where `x`'s row goes.
    /// A same-set union is a no-op. Returns the new root.
    pub fn union(&mut self, x: usize, y: usize, side: Side) -> usize {
        let rx = self.find(x);
        let ry = self.find(y);
        if rx == ry {
            return rx;
        }
        let x_under_y = self.size[rx] <= self.size[ry];
        if x_under_y {
            self.parent[rx] = Some(ry);
            self.size[ry] += self.size[rx];
        } else {
            self.parent[ry] = Some(rx);
            self.size[rx] += self.size[ry];
        }
        match (side, x_under_y) {
            (Side::Left, true) => {
                self.wp[ry] = self.agg.combine(self.wp[ry], self.wagg[rx]);
                self.wp[rx] = self.agg.combine(self.wp[rx], self.inv(self.wp[ry]));
            }
            (Side::Left, false) => {
                let v = self.agg.combine(self.wp[ry], self.wagg[rx]);
                self.wp[ry] = self.agg.combine(v, self.inv(self.wp[rx]));
            }
            (Side::Right, true) => {
                let v = self.agg.combine(self.wp[rx], self.wagg[ry]);
                self.wp[rx] = self.agg.combine(v, self.inv(self.wp[ry]));
            }
            (Side::Right, false) => {
                self.wp[rx] = self.agg.combine(self.wp[rx], self.wagg[ry]);
                self.wp[ry] = self.agg.combine(self.wp[ry], self.inv(self.wp[rx]));
            }
        }
        if x_under_y {
            self.wagg[ry] = self.agg.combine(self.wagg[ry], self.wagg[rx]);
            ry
        } else {
            self.wagg[rx] = self.agg.combine(self.wagg[rx], self.wagg[ry]);
            rx
        }
    }

    /// Height of the tree containing `x` (edges on the longest root-leaf
    /// path), measured without mutating the structure.
    pub fn tree_height(&self, x: usize) -> usize {
        let mut root = x;
        while let Some(p) = self.parent[root] {
            root = p;
        }
        let n = self.parent.len() - 1;
        let mut height = 0;
        for v in 1..=n {
            let mut depth = 0;
            let mut cur = v;
            while let Some(p) = self.parent[cur] {
                depth += 1;
                cur = p;
            }
            if cur == root {
                height = height.max(depth);
            }
        }
        height
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

pub struct CommutativeDsu<A: Aggregation> {
    agg: A,
    parent: Vec<Option<usize>>,
    wskip: Vec<A::Value>,
    wagg: Vec<A::Value>,
    pub hops: u64,
}

impl<A: Aggregation> CommutativeDsu<A> {
    pub fn new(weights: &[A::Value], agg: A) -> Self {
        let n = weights.len();
        CommutativeDsu {
            parent: vec![None; n + 1],
            wskip: vec![agg.neutral(); n + 1],
            wagg: std::iter::once(agg.neutral())
                .chain(weights.iter().copied())
                .collect(),
            agg,
            hops: 0,
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut chain = Vec::new();
        let mut cur = x;
        while let Some(p) = self.parent[cur] {
            self.hops += 1;
            chain.push(cur);
            cur = p;
        }
        let root = cur;
        // wskipagg(y) = wskip(y) combined with everything above y.
        let mut above = self.agg.neutral();
        for &node in chain.iter().rev() {
            above = self.agg.combine(self.wskip[node], above);
            self.parent[node] = Some(root);
            self.wskip[node] = above;
        }
        root
    }

    pub fn union(&mut self, x: usize, y: usize, side: Side) -> usize {
        let rx = self.find(x);
        let ry = self.find(y);
        if rx == ry {
            return rx;
        }
        let (left, right) = match side {
            Side::Left => (rx, ry),
            Side::Right => (ry, rx),
        };
        self.parent[right] = Some(left);
        self.wskip[right] = self.wagg[left];
        self.wagg[left] = self.agg.combine(self.wagg[left], self.wagg[right]);
        left
    }

    pub fn prefix_query(&mut self, x: usize) -> A::Value {
        let root = self.find(x);
        if x == root {
            self.agg.neutral()
        } else {
            self.wskip[x]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{MaxAgg, SumAgg};

    #[test]
    fn spec_row_example_sum() {
        // weights 10, 20, 30 for elements 1, 2, 3
        let mut d = InvertibleDsu::new(&[10, 20, 30], SumAgg).unwrap();
        d.union(1, 2, Side::Left); // row [1, 2]
        d.union(3, 2, Side::Left); // row [3, 1, 2]
        assert_eq!(d.prefix_query(2), 40);
        assert_eq!(d.prefix_query(3), 0);
        assert_eq!(d.prefix_query(1), 30);
    }

    #[test]
    fn spec_row_example_max() {
        let mut d = CommutativeDsu::new(&[10, 20, 30], MaxAgg);
        d.union(1, 2, Side::Left);
        d.union(3, 2, Side::Left);
        assert_eq!(d.prefix_query(2), 30);
        assert_eq!(d.prefix_query(3), 0); // neutral of max over u64
        assert_eq!(d.prefix_query(1), 30);
    }

    #[test]
    fn same_set_union_is_noop() {
        let mut d = InvertibleDsu::new(&[1, 2], SumAgg).unwrap();
        let r1 = d.union(1, 2, Side::Left);
        let r2 = d.union(2, 1, Side::Right);
        assert_eq!(r1, r2);
        assert_eq!(d.prefix_query(2), 1);
    }

    #[test]
    fn invertible_rejects_max() {
        assert!(InvertibleDsu::new(&[1u64, 2], MaxAgg).is_err());
    }

    #[test]
    fn invertible_rejects_non_group_weights() {
        use crate::sets::MulModAgg;
        let agg = MulModAgg::new(1_000_000_007);
        assert!(InvertibleDsu::new(&[0u64, 20, 30], agg).is_err());
        assert!(InvertibleDsu::new(&[1u64, 20, 30], agg).is_ok());
    }

    #[test]
    fn right_direction_places_row_after() {
        let mut d = InvertibleDsu::new(&[10, 20, 30], SumAgg).unwrap();
        d.union(1, 2, Side::Right); // row [2, 1]
        assert_eq!(d.prefix_query(1), 20);
        d.union(3, 1, Side::Right); // row [2, 1, 3]
        assert_eq!(d.prefix_query(3), 30);
    }
}
