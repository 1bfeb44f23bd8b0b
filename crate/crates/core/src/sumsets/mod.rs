//! Cardinalities of the k-fold Farey sumsets `F_Q + ... + F_Q`.
//!
//! A point of `Q/Z` lies in the k-fold sumset iff its order factors as
//! `n_1 ... n_k` with every `n_i <= Q` and the `n_i` pairwise coprime, so
//! `I_Q(k)` is the sum of `phi(n)` over such orders `n`. Pairwise coprime
//! factors are unions of whole prime-power components of `n`, which turns the
//! membership test into packing those components into `k` bins of capacity `Q`.

mod brute;
mod count;
mod representable;
mod scan;

pub use brute::{brute_force_sumset, farey_set, FareySet, BRUTE_FORCE_MAX_PAIRS};
pub use count::{
    sumset_cardinality, CountMethod, SumsetLimits, SumsetOptions, SumsetReport, SUMSET_CSV_HEADER,
};
pub use representable::{representable, tau_star, Representability};
pub use scan::{gq_log_order, min_k_scan, ScanStep, MinKScan};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Natural log of a big integer (through its leading 64 bits).
pub fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
