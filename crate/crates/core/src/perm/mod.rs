//! Construction and sorting of permutations and multi-permutations.
//!
//! Every sorter returns an [`OpScript`]: an ordered list of operations in its
//! own move model. Applying the script through the matching interpreter must
//! reproduce the declared output — replay is the universal postcondition.

mod adjacent;
mod allowed_swaps;
mod avg_free;
mod circular;
mod cycle_sort;
mod grouping;
mod move_sort;
mod rotations;

pub use adjacent::{
    count_inversions, min_adjacent_swap_script, min_adjacent_swaps, occurrence_matching,
    InversionMethod,
};
pub use allowed_swaps::{sort_by_allowed_swaps, SwapSortOutcome};
pub use avg_free::{avg_free_permutation, AvgFreeScheme};
pub use circular::{circular_multiperm_sort, CircularSortResult};
pub use cycle_sort::min_cost_cycle_sort;
pub use grouping::{check_sjt_incremental, group_identical_min_swaps, GroupingMethod};
pub use move_sort::move_sort_min_cost;
pub use rotations::{sort_by_rotations_v1, sort_by_rotations_v2, RotationCase};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scripts above this many steps are not materialized.
pub const SCRIPT_STEP_CAP: u64 = 10_000_000;

/// A permutation of 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v < 1 || v as usize > n || seen[v as usize] {
                return Err(Error::validation(format!(
                    "not a permutation of 1..={n}: value {v}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn is_sorted(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// positions[v - 1] = 1-based position of value v.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v as usize - 1] = i + 1;
        }
        pos
    }
}

/// A sequence over 1..=k in which every value occurs at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPermutation {
    values: Vec<u32>,
    k: u32,
}

impl MultiPermutation {
    pub fn new(values: Vec<u32>, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::validation("k must be at least 1"));
        }
        let mut counts = vec![0usize; k as usize + 1];
        for &v in &values {
            if v < 1 || v > k {
                return Err(Error::validation(format!("value {v} out of range 1..={k}")));
            }
            counts[v as usize] += 1;
        }
        if let Some(missing) = (1..=k as usize).find(|&v| counts[v] == 0) {
            return Err(Error::validation(format!("value {missing} never occurs")));
        }
        Ok(MultiPermutation { values, k })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.k as usize + 1];
        for &v in &self.values {
            counts[v as usize] += 1;
        }
        counts
    }

    /// Ascending occurrence lists: `lists[v - 1]` holds the 1-based positions
    /// of value v.
    pub fn occurrence_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.k as usize];
        for (i, &v) in self.values.iter().enumerate() {
            lists[v as usize - 1].push(i + 1);
        }
        lists
    }
}

/// Which half of a split-rotation step rotates which way is fixed: the left
/// side rotates left, the right side rotates right; negative shifts reverse
/// the direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationStep {
    /// Split position `i` of the operation.
    pub split: usize,
    /// Leftward rotation amount of the left side.
    pub left: i64,
    /// Rightward rotation amount of the right side.
    pub right: i64,
}

/// A sorting strategy in one of the five operation models.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "steps", rename_all = "kebab-case")]
pub enum OpScript {
    /// Split rotations; `case` 1 keeps no element fixed, case 2 pins the
    /// element at the split position.
    RotationV1 {
        case: RotationCase,
        rotations: Vec<RotationStep>,
    },
    /// Steps are positions q: reverse prefix 1..q-1 and suffix q+1..n.
    RotationV2(Vec<usize>),
    /// Steps are unordered position pairs to swap.
    Swap(Vec<(usize, usize)>),
    /// Steps are left positions i of adjacent swaps (i, i+1).
    AdjacentSwap(Vec<usize>),
    /// Steps are `(from, to)` remove/insert moves.
    Move(Vec<(usize, usize)>),
}

fn rotate_left(seg: &mut [u32], by: usize) {
    if seg.len() > 1 {
        seg.rotate_left(by % seg.len());
    }
}

fn rotate_right(seg: &mut [u32], by: usize) {
    if seg.len() > 1 {
        seg.rotate_right(by % seg.len());
    }
}

fn apply_signed_left(seg: &mut [u32], by: i64) {
    if by >= 0 {
        rotate_left(seg, by as usize);
    } else {
        rotate_right(seg, (-by) as usize);
    }
}

fn apply_signed_right(seg: &mut [u32], by: i64) {
    if by >= 0 {
        rotate_right(seg, by as usize);
    } else {
        rotate_left(seg, (-by) as usize);
    }
}

impl OpScript {
    pub fn step_count(&self) -> usize {
        match self {
            OpScript::RotationV1 { rotations, .. } => rotations.len(),
            OpScript::RotationV2(steps) => steps.len(),
            OpScript::Swap(steps) => steps.len(),
            OpScript::AdjacentSwap(steps) => steps.len(),
            OpScript::Move(steps) => steps.len(),
        }
    }

    /// Number of elementary operations the script stands for (compressed
    /// rotations expand to their shift amounts).
    pub fn elementary_count(&self) -> u64 {
        match self {
            OpScript::RotationV1 { rotations, .. } => rotations
                .iter()
                .map(|s| (s.left.unsigned_abs()).max(s.right.unsigned_abs()))
                .sum(),
            _ => self.step_count() as u64,
        }
    }

    /// Applies the script to `start` and returns the resulting arrangement.
    pub fn apply_to(&self, start: &[u32]) -> Result<Vec<u32>> {
        let n = start.len();
        let mut cur = start.to_vec();
        match self {
            OpScript::RotationV1 { case, rotations } => {
                for step in rotations {
                    let (left_end, right_start) = match case {
                        RotationCase::Case1 => {
                            if step.split > n {
                                return Err(Error::validation(format!(
                                    "case-1 split {} out of 0..={n}",
                                    step.split
                                )));
                            }
                            (step.split, step.split)
                        }
                        RotationCase::Case2 => {
                            if step.split > n + 1 {
                                return Err(Error::validation(format!(
                                    "case-2 split {} out of 0..={}",
                                    step.split,
                                    n + 1
                                )));
                            }
                            (step.split.saturating_sub(1), step.split.min(n))
                        }
                    };
                    apply_signed_left(&mut cur[..left_end], step.left);
                    apply_signed_right(&mut cur[right_start..], step.right);
                }
            }
            OpScript::RotationV2(steps) => {
                for &q in steps {
                    if q > n + 1 {
                        return Err(Error::validation(format!("position {q} out of 0..={}", n + 1)));
                    }
                    cur[..q.saturating_sub(1)].reverse();
                    cur[q.min(n)..].reverse();
                }
            }
            OpScript::Swap(steps) => {
                for &(i, j) in steps {
                    if i < 1 || j < 1 || i > n || j > n {
                        return Err(Error::validation(format!("swap ({i}, {j}) out of range")));
                    }
                    cur.swap(i - 1, j - 1);
                }
            }
            OpScript::AdjacentSwap(steps) => {
                for &i in steps {
                    if i < 1 || i + 1 > n {
                        return Err(Error::validation(format!("adjacent swap at {i} out of range")));
                    }
                    cur.swap(i - 1, i);
                }
            }
            OpScript::Move(steps) => {
                for &(from, to) in steps {
                    if from < 1 || from > n || to < 1 || to > n {
                        return Err(Error::validation(format!("move ({from}, {to}) out of range")));
                    }
                    let v = cur.remove(from - 1);
                    cur.insert(to - 1, v);
                }
            }
        }
        Ok(cur)
    }

    /// Replays a swap script, accumulating `c(x) + c(y)` per swap, where the
    /// costs are per *value* (1-based).
    pub fn replay_swap_cost(&self, start: &[u32], costs: &[u64]) -> Result<(Vec<u32>, u64)> {
        let OpScript::Swap(steps) = self else {
            return Err(Error::validation("not a swap script"));
        };
        let mut cur = start.to_vec();
        let mut total = 0u64;
        for &(i, j) in steps {
            if i < 1 || j < 1 || i > cur.len() || j > cur.len() {
                return Err(Error::validation(format!("swap ({i}, {j}) out of range")));
            }
            let (x, y) = (cur[i - 1], cur[j - 1]);
            total += costs[x as usize - 1] + costs[y as usize - 1];
            cur.swap(i - 1, j - 1);
        }
        Ok((cur, total))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![2, 2, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn multi_permutation_requires_every_value() {
        assert!(MultiPermutation::new(vec![1, 2, 1], 2).is_ok());
        assert!(MultiPermutation::new(vec![1, 1], 2).is_err());
        assert!(MultiPermutation::new(vec![3], 2).is_err());
    }

    #[test]
    fn rotation_v2_step_semantics() {
        // Choosing q reverses prefix 1..q-1 and suffix q+1..n.
        let script = OpScript::RotationV2(vec![3]);
        let out = script.apply_to(&[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(out, vec![2, 1, 3, 5, 4]);
        let whole = OpScript::RotationV2(vec![0]).apply_to(&[1, 2, 3]).unwrap();
        assert_eq!(whole, vec![3, 2, 1]);
    }

    #[test]
    fn move_step_semantics() {
        let script = OpScript::Move(vec![(1, 2)]);
        assert_eq!(script.apply_to(&[2, 1]).unwrap(), vec![1, 2]);
    }

    #[test]
    fn rotation_v1_case1_split_semantics() {
        // split i: positions 1..i rotate left, i+1..n rotate right.
        let script = OpScript::RotationV1 {
            case: RotationCase::Case1,
            rotations: vec![RotationStep { split: 2, left: 1, right: 1 }],
        };
        assert_eq!(script.apply_to(&[1, 2, 3, 4]).unwrap(), vec![2, 1, 4, 3]);
    }

    #[test]
    fn rotation_v1_case2_keeps_the_pivot() {
        // split i: positions 1..i-1 rotate left, i+1..n rotate right.
        let script = OpScript::RotationV1 {
            case: RotationCase::Case2,
            rotations: vec![RotationStep { split: 3, left: 1, right: 1 }],
        };
        assert_eq!(script.apply_to(&[1, 2, 3, 4, 5]).unwrap(), vec![2, 1, 3, 5, 4]);
    }
}
