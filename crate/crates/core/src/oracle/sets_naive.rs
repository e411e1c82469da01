//! Naive ordered-set and interval-partition references.

use crate::error::{Error, Result};
use crate::sets::{Aggregation, SetOp, Side};

/// Rows kept as explicit vectors; unions concatenate, queries scan.
pub fn oracle_ordered_sets<A: Aggregation>(
    weights: &[A::Value],
    ops: &[SetOp],
    agg: &A,
) -> Result<Vec<A::Value>> {
    let n = weights.len();
    let mut row_of: Vec<usize> = (0..n).collect();
    let mut rows: Vec<Option<Vec<usize>>> = (0..n).map(|i| Some(vec![i])).collect();
    let mut answers = Vec::new();
    for op in ops {
        match *op {
            SetOp::Union { x, y, side } => {
                if x < 1 || x > n || y < 1 || y > n {
                    return Err(Error::validation("element out of range"));
                }
                let (rx, ry) = (row_of[x - 1], row_of[y - 1]);
                if rx == ry {
                    continue;
                }
                let xs = rows[rx].take().expect("live row");
                let ys = rows[ry].take().expect("live row");
                let merged = match side {
                    Side::Left => xs.iter().chain(ys.iter()).copied().collect::<Vec<_>>(),
                    Side::Right => ys.iter().chain(xs.iter()).copied().collect::<Vec<_>>(),
                };
                for &e in &merged {
                    row_of[e] = rx;
                }
                rows[rx] = Some(merged);
            }
            SetOp::Query { x } => {
                if x < 1 || x > n {
                    return Err(Error::validation("element out of range"));
                }
                let row = rows[row_of[x - 1]].as_ref().expect("live row");
                let mut acc = agg.neutral();
                for &e in row {
                    if e == x - 1 {
                        break;
                    }
                    acc = agg.combine(acc, weights[e]);
                }
                answers.push(acc);
            }
        }
    }
    Ok(answers)
}

/// Mirror of the split-find op set for the interval-list reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaiveSplitOp<C> {
    Split { i: usize, k: usize, left: C, right: C },
    Undo { k: usize, color: Option<C> },
    Query { i: usize },
}

/// Interval list plus a per-position record of the last split, exactly the
/// state any correct implementation must remember to undo.
pub struct NaiveSplitFind<C: Clone> {
    intervals: Vec<(usize, usize, C)>,
    last_split: Vec<Option<(usize, usize, C)>>,
}

impl<C: Clone + PartialEq> NaiveSplitFind<C> {
    pub fn new(n: usize, c0: C) -> Self {
        NaiveSplitFind {
            intervals: vec![(1, n, c0)],
            last_split: vec![None; n + 1],
        }
    }

    pub fn split(&mut self, i: usize, k: usize, left: C, right: C) -> Result<()> {
        let idx = self
            .intervals
            .iter()
            .position(|&(a, _, _)| a == i)
            .ok_or_else(|| Error::validation(format!("no interval starts at {i}")))?;
        let (a, b, color) = self.intervals[idx].clone();
        if k < a || k >= b {
            return Err(Error::validation(format!("split at {k} outside [{a}, {b})")));
        }
        self.last_split[k] = Some((a, b, color.clone()));
        self.intervals[idx] = (a, k, left);
        self.intervals.insert(idx + 1, (k + 1, b, right));
        Ok(())
    }

    pub fn undo(&mut self, k: usize, recolor: Option<C>) -> Result<()> {
        let Some((a, b, old_color)) = self.last_split.get(k).cloned().flatten() else {
            return Err(Error::validation(format!("nothing to undo at {k}")));
        };
        let left = self.intervals.iter().position(|&(x, y, _)| (x, y) == (a, k));
        let right = self
            .intervals
            .iter()
            .position(|&(x, y, _)| (x, y) == (k + 1, b));
        let (Some(li), Some(ri)) = (left, right) else {
            return Err(Error::validation(format!(
                "the intervals produced by the split at {k} no longer exist"
            )));
        };
        debug_assert_eq!(ri, li + 1);
        let color = recolor.unwrap_or(old_color);
        self.intervals[li] = (a, b, color);
        self.intervals.remove(ri);
        Ok(())
    }

    pub fn query(&self, i: usize) -> Option<C> {
        self.intervals
            .iter()
            .find(|&&(a, _, _)| a == i)
            .map(|(_, _, c)| c.clone())
    }

    pub fn intervals(&self) -> &[(usize, usize, C)] {
        &self.intervals
    }
}

/// Runs a split-find script against the interval list; query answers in
/// order, `None` for undefined.
pub fn oracle_split_find<C: Clone + PartialEq>(
    n: usize,
    c0: C,
    ops: &[NaiveSplitOp<C>],
) -> Result<Vec<Option<C>>> {
    let mut sf = NaiveSplitFind::new(n, c0);
    let mut answers = Vec::new();
    for op in ops {
        match op {
            NaiveSplitOp::Split { i, k, left, right } => {
                sf.split(*i, *k, left.clone(), right.clone())?
            }
            NaiveSplitOp::Undo { k, color } => sf.undo(*k, color.clone())?,
            NaiveSplitOp::Query { i } => answers.push(sf.query(*i)),
        }
    }
    Ok(answers)
}
