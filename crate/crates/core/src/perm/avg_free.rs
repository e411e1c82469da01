//! Permutations in which no average of two same-parity values sits between
//! them.
//!
//! The recursion places all even values (twice a smaller solution) before all
//! odd values (twice a smaller solution minus one): a same-parity pair inside
//! one block reduces to the smaller instance, and a cross-parity pair inside a
//! block has its integer average in the *other* block.

use super::Permutation;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AvgFreeScheme {
    /// Solve the next power of two and drop the values above n; O(n).
    #[default]
    PowerOfTwo,
    /// Memoized divide and conquer over the O(log n) distinct sizes; O(n).
    Memoized,
}

fn double_up(half: &[u32]) -> Vec<u32> {
    // evens block, then odds block
    let mut out = Vec::with_capacity(half.len() * 2);
    out.extend(half.iter().map(|&q| 2 * q));
    out.extend(half.iter().map(|&q| 2 * q - 1));
    out
}

fn pow2_solution(m: usize) -> Vec<u32> {
    debug_assert!(m.is_power_of_two());
    let mut cur = vec![1u32];
    while cur.len() < m {
        cur = double_up(&cur);
    }
    cur
}

fn memoized_solution(n: usize, memo: &mut std::collections::HashMap<usize, Vec<u32>>) -> Vec<u32> {
    if let Some(hit) = memo.get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![1u32]
    } else {
        let evens = memoized_solution(n / 2, memo);
        let odds = memoized_solution(n - n / 2, memo);
        let mut out = Vec::with_capacity(n);
        out.extend(evens.iter().map(|&q| 2 * q));
        out.extend(odds.iter().map(|&q| 2 * q - 1));
        out
    };
    memo.insert(n, result.clone());
    result
}

/// Builds an average-free permutation of 1..=n.
pub fn avg_free_permutation(n: usize, scheme: AvgFreeScheme) -> Result<Permutation> {
    if n == 0 {
        return Permutation::new(vec![]);
    }
    let values = match scheme {
        AvgFreeScheme::PowerOfTwo => {
            let m = n.next_power_of_two();
            pow2_solution(m)
                .into_iter()
                .filter(|&v| v as usize <= n)
                .collect()
        }
        AvgFreeScheme::Memoized => {
            let mut memo = std::collections::HashMap::new();
            memoized_solution(n, &mut memo)
        }
    };
    Permutation::new(values)
}
