//! Exact computations in the group ring of `Q/Z`.
//!
//! The crate is split along the lines of the underlying mathematics:
//!
//! - [`numtheory`]: smallest-prime-factor sieves (flat and segmented), factorizations,
//!   the classical arithmetic functions and `lcm{1, ..., Q}`.
//! - [`group_ring`]: Farey fractions, finitely supported elements of `Z(Q/Z)`,
//!   class sums `F_q` and the closed-form product of two class sums.
//! - [`sumsets`]: exact cardinalities of the k-fold Farey sumsets
//!   `F_Q + ... + F_Q`, computed from the pairwise-coprime order characterization,
//!   together with a brute-force enumeration oracle.
//! - [`clustering`]: the divisor-clustering set `L(a)`, its measure, the weighted
//!   sum over squarefree `a`, the `A_Q` construction and ratio tables.

pub mod clustering;
pub mod error;
pub mod format;
pub mod group_ring;
pub mod numtheory;
pub mod sumsets;

pub use error::{Error, Result};
