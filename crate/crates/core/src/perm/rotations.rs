//! The two rotation-based sorting strategies.
//!
//! Version 1 splits the permutation at a position i and rotates both sides one
//! step per operation (left side leftward, right side rightward); case 2 pins
//! the element at the split. Consecutive operations at the same split are
//! compressed into one multi-step rotation, which keeps the sorter at O(n^2)
//! total work with O(1) compressed rotations per incremental step.
//!
//! Version 2 picks a position q and reverses both the prefix 1..q-1 and the
//! suffix q+1..n; the strategy sorts with at most 2n operations.

use serde::{Deserialize, Serialize};

use super::{OpScript, Permutation, RotationStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RotationCase {
    #[serde(rename = "1")]
    Case1,
    #[serde(rename = "2")]
    Case2,
}

struct RotSorter {
    cur: Vec<u32>,
    pos: Vec<usize>, // 1-based position per value
    steps: Vec<RotationStep>,
    case: RotationCase,
}

impl RotSorter {
    fn new(p: &Permutation, case: RotationCase) -> Self {
        RotSorter {
            cur: p.values().to_vec(),
            pos: p.positions(),
            steps: Vec::new(),
            case,
        }
    }

    fn n(&self) -> usize {
        self.cur.len()
    }

    fn position_of(&self, value: u32) -> usize {
        self.pos[value as usize - 1]
    }

    fn emit(&mut self, split: usize, count: u64) {
        if count == 0 {
            return;
        }
        let n = self.n();
        let (left_end, right_start) = match self.case {
            RotationCase::Case1 => (split, split),
            RotationCase::Case2 => (split.saturating_sub(1), split.min(n)),
        };
        let step = RotationStep {
            split,
            left: count as i64,
            right: count as i64,
        };
        self.steps.push(step);
        if left_end > 1 {
            self.cur[..left_end].rotate_left(count as usize % left_end);
        }
        let right_len = n - right_start;
        if right_len > 1 {
            self.cur[right_start..].rotate_right(count as usize % right_len);
        }
        for (i, &v) in self.cur.iter().enumerate() {
            self.pos[v as usize - 1] = i + 1;
        }
    }

    /// Rotate-left amount that moves a block starting at `q` to start `r`
    /// inside a part covering positions 1..=s.
    fn left_shift(q: usize, r: usize, s: usize) -> u64 {
        if q >= r {
            (q - r) as u64
        } else {
            (q + s - r) as u64
        }
    }

    fn finish(self) -> OpScript {
        OpScript::RotationV1 {
            case: self.case,
            rotations: self.steps,
        }
    }
}

/// Sorts by split rotations, using only case-1 or case-2 operations.
pub fn sort_by_rotations_v1(p: &Permutation, case: RotationCase) -> OpScript {
    let n = p.len();
    let mut s = RotSorter::new(p, case);
    if n <= 1 {
        return s.finish();
    }

    // Bring 1 to the front by rotating the whole permutation leftward. The
    // full-array split is n for case 1 and n+1 for case 2.
    let whole = match case {
        RotationCase::Case1 => n,
        RotationCase::Case2 => n + 1,
    };
    s.emit(whole, (s.position_of(1) - 1) as u64);

    for k in 2..=n as u32 {
        if s.position_of(k) == k as usize {
            continue;
        }
        // Rotate the whole permutation rightward (split 0) until k sits last.
        s.emit(0, (n - s.position_of(k)) as u64);
        // Rotate positions 1..n-1 leftward until 1..k-1 occupy n-k+1..n-1;
        // the split is n-1 for case 1 and n for case 2.
        let sub = match case {
            RotationCase::Case1 => n - 1,
            RotationCase::Case2 => n,
        };
        let q = s.position_of(1);
        let r = n - k as usize + 1;
        s.emit(sub, RotSorter::left_shift(q, r, n - 1));
        // Rotate the whole permutation leftward until 1..k occupy 1..k.
        s.emit(whole, RotSorter::left_shift(s.position_of(1), 1, n));
    }
    debug_assert!(s.cur.iter().enumerate().all(|(i, &v)| v as usize == i + 1));
    s.finish()
}

/// Sorts by prefix+suffix reversals around a chosen position.
pub fn sort_by_rotations_v2(p: &Permutation) -> OpScript {
    let n = p.len();
    let mut cur = p.values().to_vec();
    let mut steps = Vec::new();
    if n <= 1 {
        return OpScript::RotationV2(steps);
    }
    let apply = |cur: &mut Vec<u32>, q: usize, steps: &mut Vec<usize>| {
        // Skip literal no-ops (both reversed segments shorter than 2).
        let prefix_len = q.saturating_sub(1);
        let suffix_len = n - q.min(n);
        if prefix_len < 2 && suffix_len < 2 {
            return;
        }
        cur[..prefix_len].reverse();
        cur[q.min(n)..].reverse();
        steps.push(q);
    };
    let position_of = |cur: &[u32], v: u32| cur.iter().position(|&x| x == v).unwrap() + 1;

    // One operation to move 1 to the front.
    let p1 = position_of(&cur, 1);
    apply(&mut cur, p1 + 1, &mut steps);
    // Invariant entering step k: 1..k-1 occupy the first k-1 positions in
    // reverse order.
    for k in 2..=n as u32 {
        let pk = position_of(&cur, k);
        apply(&mut cur, pk, &mut steps);
        apply(&mut cur, pk + 1, &mut steps);
    }
    // The loop leaves 1..n in reverse order; one whole reversal finishes.
    apply(&mut cur, 0, &mut steps);
    debug_assert!(cur.iter().enumerate().all(|(i, &v)| v as usize == i + 1));
    OpScript::RotationV2(steps)
}
