//! Interval split-find with colored undo, O(1) worst case per operation.
//!
//! The elements 1..n start as one interval of color `c0`. `split(i, k, a, b)`
//! cuts the interval starting at `i` after position `k`; `undo(k)` reverses
//! the last split at `k`, restoring (or replacing) the pre-split color.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitFindError {
    #[error("no interval starts at position {0}")]
    NoIntervalAt(usize),
    #[error("split position {k} outside [{i}, {j})")]
    SplitOutOfRange { i: usize, k: usize, j: usize },
    #[error("the two intervals produced by the last split at {0} no longer exist")]
    UndoUnavailable(usize),
    #[error("position {0} out of range 1..={1}")]
    OutOfRange(usize, usize),
}

#[derive(Debug, Clone)]
pub struct SplitFind<C: Clone> {
    start: Vec<bool>,
    col: Vec<Option<C>>,
    jj: Vec<usize>,
    isplit: Vec<usize>,
    jsplit: Vec<usize>,
    csplit: Vec<Option<C>>,
    /// Array cells read or written, for O(1)-per-op instrumentation.
    pub cell_touches: u64,
}

impl<C: Clone> SplitFind<C> {
    pub fn new(n: usize, c0: C) -> Self {
        assert!(n >= 1, "need at least one element");
        let mut sf = SplitFind {
            start: vec![false; n + 1],
            col: vec![None; n + 1],
            jj: vec![0; n + 1],
            isplit: vec![0; n + 1],
            jsplit: vec![0; n + 1],
            csplit: vec![None; n + 1],
            cell_touches: 0,
        };
        sf.start[1] = true;
        sf.jj[1] = n;
        sf.col[1] = Some(c0);
        sf
    }

    pub fn len(&self) -> usize {
        self.start.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn touch(&mut self, cells: u64) {
        self.cell_touches += cells;
    }

    fn check_pos(&self, i: usize) -> Result<(), SplitFindError> {
        if i < 1 || i > self.len() {
            Err(SplitFindError::OutOfRange(i, self.len()))
        } else {
            Ok(())
        }
    }

    /// Splits the interval `[i, jj(i)]` into `[i, k]` (colored `c_left`) and
    /// `[k+1, jj(i)]` (colored `c_right`).
    pub fn split(&mut self, i: usize, k: usize, c_left: C, c_right: C) -> Result<(), SplitFindError> {
        self.check_pos(i)?;
        self.check_pos(k)?;
        self.touch(2);
        if !self.start[i] {
            return Err(SplitFindError::NoIntervalAt(i));
        }
        let j = self.jj[i];
        if k < i || k >= j {
            return Err(SplitFindError::SplitOutOfRange { i, k, j });
        }
        self.touch(7);
        self.isplit[k] = i;
        self.jsplit[k] = j;
        self.csplit[k] = self.col[i].clone();
        self.start[k + 1] = true;
        self.col[i] = Some(c_left);
        self.col[k + 1] = Some(c_right);
        self.jj[i] = k;
        self.jj[k + 1] = j;
        Ok(())
    }

    /// Color of the interval starting at `i`, or `None` when no interval
    /// starts there (the paper's "undefined").
    pub fn query(&mut self, i: usize) -> Result<Option<C>, SplitFindError> {
        self.check_pos(i)?;
        self.touch(2);
        if self.start[i] {
            Ok(self.col[i].clone())
        } else {
            Ok(None)
        }
    }

    fn undo_checked(&mut self, k: usize, color: Option<C>) -> Result<(), SplitFindError> {
        self.check_pos(k)?;
        self.touch(5);
        let i = self.isplit[k];
        // The two intervals [isplit(k), k] and [k+1, jsplit(k)] must both
        // currently exist for the undo to be defined.
        if i == 0
            || k + 1 > self.len()
            || !self.start[k + 1]
            || !self.start[i]
            || self.jj[i] != k
            || self.jj[k + 1] != self.jsplit[k]
        {
            return Err(SplitFindError::UndoUnavailable(k));
        }
        self.touch(3);
        self.start[k + 1] = false;
        self.col[i] = match color {
            Some(c) => Some(c),
            None => self.csplit[k].clone(),
        };
        self.jj[i] = self.jsplit[k];
        Ok(())
    }

    /// Reverses the last split at `k`; the rejoined interval takes its
    /// pre-split color.
    pub fn undo(&mut self, k: usize) -> Result<(), SplitFindError> {
        self.undo_checked(k, None)
    }

    /// Like [`SplitFind::undo`] but recolors the rejoined interval with `c`.
    pub fn undo_with_color(&mut self, k: usize, c: C) -> Result<(), SplitFindError> {
        self.undo_checked(k, Some(c))
    }

    /// Undo addressed by the *start* of the left interval: equivalent to
    /// `undo(jj(i))`.
    pub fn undo_at_start(&mut self, i: usize, c: Option<C>) -> Result<(), SplitFindError> {
        self.check_pos(i)?;
        self.touch(1);
        if !self.start[i] {
            return Err(SplitFindError::NoIntervalAt(i));
        }
        let k = self.jj[i];
        self.undo_checked(k, c)
    }

    /// Current partition as `(start, end, color)` triples, for verification.
    pub fn intervals(&self) -> Vec<(usize, usize, C)> {
        let mut out = Vec::new();
        let mut i = 1;
        while i <= self.len() {
            debug_assert!(self.start[i], "partition must cover every position");
            let j = self.jj[i];
            out.push((i, j, self.col[i].clone().expect("started interval has a color")));
            i = j + 1;
        }
        out
    }
}
