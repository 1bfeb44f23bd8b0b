//! Divisor clustering.
//!
//! `L(a)` is the union over divisors `d | a` of `[log d - log 2, log d)`; its
//! Lebesgue measure grows when the divisors of `a` are spread out and stays
//! small when they cluster. This module evaluates `|L(a)|`, the weighted sum
//! `sum_{a <= Q, a squarefree} phi(a) |L(a)| / a^2`, the divisor counts
//! `tau(n; y, z)`, membership in the `A_Q` family of integers `n = a p q`, and
//! the normalized tables comparing exact sumset sizes with
//! `Q^4 / ((log Q)^delta (log log Q)^(3/2))`.

mod aq;
mod ford;
mod interval;
mod lset;
mod table;

pub use aq::{aq_member, aq_scan, aq_witnesses, tau_interval, AqConfig, AqWitness};
pub use ford::{delta, ford_ratio, ford_sum, ford_sums, ford_normalizer};
pub use interval::{IntervalSet, TOUCH_TOLERANCE};
pub use lset::{l_measure, l_set};
pub use table::{theorem1_ratio, theorem1_table, theorem1_table_with, RatioRow, RATIO_CSV_HEADER};
