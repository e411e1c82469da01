//! Maximum-sum segment of a sequence, unbounded or with a length window.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `bounds` of a segment are 1-based inclusive positions; `None` is the empty
/// segment (only possible in the unbounded variant).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentResult {
    pub sum: f64,
    pub bounds: Option<(usize, usize)>,
}

/// Maximum-sum segment. Without bounds the empty segment (sum 0) is allowed;
/// with `[lmin, lmax]` the segment length must lie in the window.
///
/// Uses prefix sums and, for the bounded case, a sliding-window minimum.
pub fn max_sum_segment(seq: &[f64], bounds: Option<(usize, usize)>) -> Result<SegmentResult> {
    if seq.is_empty() {
        return Err(Error::validation("sequence must be non-empty"));
    }
    if seq.iter().any(|x| !x.is_finite()) {
        return Err(Error::validation("sequence values must be finite"));
    }
    let n = seq.len();
    let mut prefix = vec![0.0f64; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] + seq[i];
    }

    match bounds {
        None => {
            // Empty segment allowed: best over j of prefix[j] - min prefix[i <= j].
            let mut best = SegmentResult {
                sum: 0.0,
                bounds: None,
            };
            let mut min_idx = 0usize;
            for j in 1..=n {
                if prefix[j - 1] < prefix[min_idx] {
                    min_idx = j - 1;
                }
                let sum = prefix[j] - prefix[min_idx];
                if sum > best.sum {
                    best = SegmentResult {
                        sum,
                        bounds: Some((min_idx + 1, j)),
                    };
                }
            }
            Ok(best)
        }
        Some((lmin, lmax)) => {
            if lmin < 1 || lmin > lmax || lmax > n {
                return Err(Error::validation(format!(
                    "segment bounds must satisfy 1 <= lmin <= lmax <= {n}"
                )));
            }
            // For end j, start index i ranges over [j - lmax, j - lmin];
            // maximize prefix[j] - prefix[i] with a monotone deque over i.
            let mut deque: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
            let mut best: Option<SegmentResult> = None;
            for j in lmin..=n {
                let enter = j - lmin;
                // Strict comparison keeps the earliest index among equal
                // minima, matching the unbounded scan's witness choice.
                while let Some(&back) = deque.back() {
                    if prefix[back] > prefix[enter] {
                        deque.pop_back();
                    } else {
                        break;
                    }
                }
                deque.push_back(enter);
                while let Some(&front) = deque.front() {
                    if front + lmax < j {
                        deque.pop_front();
                    } else {
                        break;
                    }
                }
                let i = *deque.front().expect("window never empty");
                let sum = prefix[j] - prefix[i];
                if best.map_or(true, |b| sum > b.sum) {
                    best = Some(SegmentResult {
                        sum,
                        bounds: Some((i + 1, j)),
                    });
                }
            }
            Ok(best.expect("window [lmin, n] is non-empty"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_unbounded() {
        let r = max_sum_segment(&[1.0, -2.0, 3.0, 4.0, -1.0], None).unwrap();
        assert_eq!(r.sum, 7.0);
        assert_eq!(r.bounds, Some((3, 4)));
    }

    #[test]
    fn all_negative_unbounded_is_empty() {
        let r = max_sum_segment(&[-3.0, -1.0, -2.0], None).unwrap();
        assert_eq!(r.sum, 0.0);
        assert_eq!(r.bounds, None);
    }

    #[test]
    fn bounded_window() {
        let r = max_sum_segment(&[1.0, -2.0, 3.0, 4.0, -1.0], Some((2, 2))).unwrap();
        assert_eq!(r.sum, 7.0);
        assert_eq!(r.bounds, Some((3, 4)));
    }

    #[test]
    fn bounded_must_take_something() {
        let r = max_sum_segment(&[-3.0, -1.0, -2.0], Some((1, 1))).unwrap();
        assert_eq!(r.sum, -1.0);
        assert_eq!(r.bounds, Some((2, 2)));
    }

    #[test]
    fn invalid_bounds_rejected() {
        assert!(max_sum_segment(&[1.0], Some((0, 1))).is_err());
        assert!(max_sum_segment(&[1.0], Some((1, 2))).is_err());
        assert!(max_sum_segment(&[1.0, 2.0], Some((2, 1))).is_err());
    }
}
