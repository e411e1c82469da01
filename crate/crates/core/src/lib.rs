//! Offline combinatorial optimization solvers with independent brute-force
//! oracles.
//!
//! The crate covers six problem families:
//!
//! * [`transfer`] - deadline-constrained packet routing over time-reserved
//!   edges, minimizing total waiting time.
//! * [`ratio`] - maximum/minimum-ratio subset search by parametric binary
//!   search, with bounded path/cycle DP, Bellman-Ford-Moore positive-cycle
//!   detection, and max-sum segment solvers as inner optimizers.
//! * [`mst_offers`] - minimum spanning tree when at most one owner's special
//!   price offer may be taken.
//! * [`perm`] - seven permutation / multi-permutation construction and
//!   sorting strategies plus a move-cost DP, each returning a replayable
//!   operation script.
//! * [`sets`] - ordered union-find with positional prefix aggregation (online
//!   invertible, online commutative, offline) and O(1) split-find with
//!   colored undo.
//! * [`toggle`] - minimum-cost resource toggling (select a vertex to flip it
//!   and its neighbors) on trees and on bounded-treewidth graphs.
//!
//! The [`oracle`] module holds the deliberately slow reference
//! implementations the test suites certify the fast paths against.

pub mod error;
pub mod mst_offers;
pub mod oracle;
pub mod perm;
pub mod ratio;
pub mod sets;
pub mod toggle;
pub mod transfer;

pub use error::{Error, Result};
