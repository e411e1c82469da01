//! Grouping identical values with the minimum number of adjacent swaps.
//!
//! `num(a, b)` counts position pairs with value a before value b. For a value
//! order q the swap count is the sum of `num(q(j), q(i))` over ordered pairs
//! i < j; both the k!-enumeration (over the Steinhaus-Johnson-Trotter order,
//! with O(1) updates per adjacent transposition) and the subset DP minimize
//! that sum.

use super::MultiPermutation;
use crate::error::{Error, Result};


#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupingMethod {
    /// Enumerate all k! orders via adjacent transpositions; k <= 10.
    Sjt,
    /// Subset DP over value sets; k <= 20.
    Bitmask,
}

const SJT_CAP: u32 = 10;
const BITMASK_CAP: u32 = 20;

/// num[a][b] = pairs (i < j) with p(i) = a + 1, p(j) = b + 1; O(n * k).
fn pair_matrix(p: &MultiPermutation) -> Vec<Vec<u64>> {
    let k = p.k() as usize;
    let mut num = vec![vec![0u64; k]; k];
    let mut cnt = vec![0u64; k];
    for &v in p.values() {
        let b = v as usize - 1;
        for a in 0..k {
            num[a][b] += cnt[a];
        }
        cnt[b] += 1;
    }
    num
}

fn order_cost(order: &[u32], num: &[Vec<u64>]) -> u64 {
    let mut cost = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            cost += num[order[j] as usize - 1][order[i] as usize - 1];
        }
    }
    cost
}

/// Steinhaus-Johnson-Trotter successor: directed values, largest mobile
/// swaps toward its direction, larger values flip. Returns the 0-based left
/// position of the swapped pair, or None when the enumeration is done.
fn sjt_step(order: &mut [u32], dir: &mut [i8]) -> Option<usize> {
    let k = order.len();
    let mut mobile: Option<usize> = None;
    for i in 0..k {
        let target = i as i64 + dir[order[i] as usize - 1] as i64;
        if target < 0 || target >= k as i64 {
            continue;
        }
        if order[target as usize] < order[i]
            && mobile.map_or(true, |m| order[i] > order[m])
        {
            mobile = Some(i);
        }
    }
    let i = mobile?;
    let moving = order[i];
    let j = (i as i64 + dir[moving as usize - 1] as i64) as usize;
    order.swap(i, j);
    for d in 1..=k as u32 {
        if d > moving {
            dir[d as usize - 1] = -dir[d as usize - 1];
        }
    }
    Some(i.min(j))
}

fn solve_sjt(p: &MultiPermutation, num: &[Vec<u64>]) -> (u64, Vec<u32>) {
    let k = p.k();
    let mut order: Vec<u32> = (1..=k).collect();
    let mut dir: Vec<i8> = vec![-1; k as usize];
    let mut value = order_cost(&order, num);
    let mut best = value;
    let mut best_order = order.clone();
    while let Some(i) = sjt_step(&mut order, &mut dir) {
        // Adjacent transposition at (i, i+1): only that pair's contribution
        // changes.
        let (a, b) = (order[i] as usize - 1, order[i + 1] as usize - 1);
        value = value + num[b][a] - num[a][b];
        if value < best || (value == best && order < best_order) {
            best = value;
            best_order = order.clone();
        }
    }
    (best, best_order)
}

fn solve_bitmask(p: &MultiPermutation, num: &[Vec<u64>]) -> (u64, Vec<u32>) {
    let k = p.k() as usize;
    let full = (1usize << k) - 1;

    // sum[mask * k + i] = total num(i+1, j+1) over j in mask.
    let mut sum = vec![0u64; (full + 1) * k];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        for i in 0..k {
            sum[mask * k + i] = sum[rest * k + i] + num[i][low];
        }
    }

    // nmin[mask]: fewest swaps to group the values of `mask` in some order
    // in front of everything else, ignoring values outside the mask.
    let mut nmin = vec![u64::MAX; full + 1];
    nmin[0] = 0;
    for mask in 1..=full {
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = mask & !(1 << i);
            let cand = nmin[rest] + sum[rest * k + i];
            if cand < nmin[mask] {
                nmin[mask] = cand;
            }
        }
    }

    // Lexicographically smallest optimal order, rebuilt front-first: putting
    // value v first costs the pairs num(j, v) over the remaining set.
    let mut order = Vec::with_capacity(k);
    let mut mask = full;
    while mask != 0 {
        let i = (0..k)
            .filter(|&i| mask & (1 << i) != 0)
            .find(|&i| {
                let rest = mask & !(1 << i);
                let front_cost: u64 = (0..k)
                    .filter(|&j| rest & (1 << j) != 0)
                    .map(|j| num[j][i])
                    .sum();
                front_cost + nmin[rest] == nmin[mask]
            })
            .expect("the front-first recurrence always has a witness");
        order.push(i as u32 + 1);
        mask &= !(1 << i);
    }
    (nmin[full], order)
}

/// Walks the full SJT enumeration for `p`, comparing the incremental update
/// `V' = V + num(q(i+1), q(i)) - num(q(i), q(i+1))` against a fresh
/// recomputation at every step.
#[doc(hidden)]
pub fn check_sjt_incremental(p: &MultiPermutation) -> Result<()> {
    let k = p.k();
    if k > SJT_CAP {
        return Err(Error::capacity(format!("k must be <= {SJT_CAP}")));
    }
    let num = pair_matrix(p);
    let mut order: Vec<u32> = (1..=k).collect();
    let mut dir: Vec<i8> = vec![-1; k as usize];
    let mut value = order_cost(&order, &num);
    while let Some(i) = sjt_step(&mut order, &mut dir) {
        let (a, b) = (order[i] as usize - 1, order[i + 1] as usize - 1);
        value = value + num[b][a] - num[a][b];
        let fresh = order_cost(&order, &num);
        if value != fresh {
            return Err(Error::validation(format!(
                "incremental count {value} != recomputed {fresh} at order {order:?}"
            )));
        }
    }
    Ok(())
}

/// Minimum adjacent swaps to make all equal values contiguous, plus a value
/// order witnessing it (lexicographically smallest on ties).
pub fn group_identical_min_swaps(
    p: &MultiPermutation,
    method: GroupingMethod,
) -> Result<(u64, Vec<u32>)> {
    let k = p.k();
    match method {
        GroupingMethod::Sjt if k > SJT_CAP => Err(Error::capacity(format!(
            "sjt enumerates k! orders and needs k <= {SJT_CAP} (got {k}); use the bitmask method"
        ))),
        GroupingMethod::Bitmask if k > BITMASK_CAP => Err(Error::capacity(format!(
            "bitmask DP needs k <= {BITMASK_CAP} (got {k})"
        ))),
        GroupingMethod::Sjt => {
            let num = pair_matrix(p);
            Ok(solve_sjt(p, &num))
        }
        GroupingMethod::Bitmask => {
            let num = pair_matrix(p);
            Ok(solve_bitmask(p, &num))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(values: Vec<u32>, k: u32, method: GroupingMethod) -> (u64, Vec<u32>) {
        let p = MultiPermutation::new(values, k).unwrap();
        group_identical_min_swaps(&p, method).unwrap()
    }

    #[test]
    fn already_grouped() {
        for m in [GroupingMethod::Sjt, GroupingMethod::Bitmask] {
            assert_eq!(solve(vec![1, 1, 2, 2], 2, m).0, 0);
        }
    }

    #[test]
    fn alternating_pair() {
        for m in [GroupingMethod::Sjt, GroupingMethod::Bitmask] {
            let (count, order) = solve(vec![1, 2, 1, 2], 2, m);
            assert_eq!(count, 1);
            assert_eq!(order, vec![1, 2]);
        }
    }

    #[test]
    fn three_values() {
        for m in [GroupingMethod::Sjt, GroupingMethod::Bitmask] {
            let (count, order) = solve(vec![1, 2, 3, 1], 3, m);
            assert_eq!(count, 2);
            assert_eq!(order, vec![1, 2, 3]);
        }
    }

    #[test]
    fn methods_agree_and_orders_match() {
        let cases = [
            (vec![3, 1, 2, 1, 3, 2, 1], 3u32),
            (vec![2, 1, 2, 1, 2, 1], 2),
            (vec![4, 3, 2, 1, 4, 3, 2], 4),
        ];
        for (values, k) in cases {
            let a = solve(values.clone(), k, GroupingMethod::Sjt);
            let b = solve(values, k, GroupingMethod::Bitmask);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn capacity_errors_suggest_the_alternative() {
        let values: Vec<u32> = (1..=11).collect();
        let p = MultiPermutation::new(values, 11).unwrap();
        let err = group_identical_min_swaps(&p, GroupingMethod::Sjt).unwrap_err();
        assert!(err.to_string().contains("bitmask"));
    }

    #[test]
    fn single_value() {
        for m in [GroupingMethod::Sjt, GroupingMethod::Bitmask] {
            assert_eq!(solve(vec![1, 1, 1], 1, m), (0, vec![1]));
        }
    }
}
