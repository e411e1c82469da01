//! Ordered union-find with positional prefix aggregation (online invertible,
//! online commutative, offline) and constant-time split-find with colored
//! undo.
//!
//! Sets carry a left-to-right row order; a union places one whole row to the
//! left or right of another, and a prefix query aggregates the weights of the
//! elements strictly left of an element within its row.

mod offline;
mod ordered;
mod split_find;

pub use offline::offline_solve;
pub use ordered::{CommutativeDsu, InvertibleDsu, PathCompression};
pub use split_find::{SplitFind, SplitFindError};

use serde::{Deserialize, Serialize};

/// Which side the row of `x` takes relative to the row of `y` in a union.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// One operation of a union/query script.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union { x: usize, y: usize, side: Side },
    Query { x: usize },
}

/// An aggregation over element weights: a commutative, associative `combine`
/// with a neutral element. `inverse` is present exactly for group-like
/// aggregations, and `idempotent` marks min/max-like ones; the offline solver
/// picks its range structure from these capabilities.
pub trait Aggregation {
    type Value: Copy + PartialEq + std::fmt::Debug;

    fn neutral(&self) -> Self::Value;
    fn combine(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn inverse(&self, _v: Self::Value) -> Option<Self::Value> {
        None
    }
    fn idempotent(&self) -> bool {
        false
    }
}

/// Addition in the wrapping group of u64.
#[derive(Debug, Clone, Copy, Default)]
pub struct SumAgg;

impl Aggregation for SumAgg {
    type Value = u64;
    fn neutral(&self) -> u64 {
        0
    }
    fn combine(&self, a: u64, b: u64) -> u64 {
        a.wrapping_add(b)
    }
    fn inverse(&self, v: u64) -> Option<u64> {
        Some(v.wrapping_neg())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct XorAgg;

impl Aggregation for XorAgg {
    type Value = u64;
    fn neutral(&self) -> u64 {
        0
    }
    fn combine(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }
    fn inverse(&self, v: u64) -> Option<u64> {
        Some(v)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MaxAgg;

impl Aggregation for MaxAgg {
    type Value = u64;
    fn neutral(&self) -> u64 {
        0
    }
    fn combine(&self, a: u64, b: u64) -> u64 {
        a.max(b)
    }
    fn idempotent(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MinAgg;

impl Aggregation for MinAgg {
    type Value = u64;
    fn neutral(&self) -> u64 {
        u64::MAX
    }
    fn combine(&self, a: u64, b: u64) -> u64 {
        a.min(b)
    }
    fn idempotent(&self) -> bool {
        true
    }
}

/// Multiplication modulo a prime; the inverse comes from Fermat's little
/// theorem, so a composite modulus breaks the invertible variants.
#[derive(Debug, Clone, Copy)]
pub struct MulModAgg {
    pub modulus: u64,
}

impl MulModAgg {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        MulModAgg { modulus }
    }

    fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let m = self.modulus as u128;
        let mut acc: u128 = 1;
        let mut b = base as u128 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        acc as u64
    }
}

impl Aggregation for MulModAgg {
    type Value = u64;
    fn neutral(&self) -> u64 {
        1
    }
    fn combine(&self, a: u64, b: u64) -> u64 {
        ((a as u128 % self.modulus as u128) * (b as u128 % self.modulus as u128)
            % self.modulus as u128) as u64
    }
    fn inverse(&self, v: u64) -> Option<u64> {
        if v % self.modulus == 0 {
            return None;
        }
        Some(self.pow(v, self.modulus - 2))
    }
}

/// Minimal union-find (union by size, path compression) for algorithms that
/// only need connectivity, such as the Kruskal kernel.
#[derive(Debug, Clone)]
pub struct PlainDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl PlainDsu {
    pub fn new(n: usize) -> Self {
        PlainDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    /// Returns false when `x` and `y` were already in the same set.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (big, small) = if self.size[rx] >= self.size[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}
