use num_bigint::BigUint;
use serde::Serialize;

use super::{big_ln, sumset_cardinality, CountMethod, SumsetOptions};
use crate::numtheory::{chebyshev_psi, prime_count};
use crate::{Error, Result};

/// `log |G_Q| = psi(Q)`, where `G_Q` is the subgroup generated by `F_Q`.
pub fn gq_log_order(q: u64) -> f64 {
    chebyshev_psi(q)
}

/// One step of [`min_k_scan`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanStep {
    pub k: u32,
    #[serde(serialize_with = "as_decimal")]
    pub cardinality: BigUint,
    pub log_cardinality: f64,
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinKScan {
    #[serde(rename = "Q")]
    pub q: u64,
    pub c: f64,
    pub log_gq: f64,
    /// Smallest `k` with `log I_Q(k) >= c log |G_Q|`, if reached by `k = pi(Q)`.
    pub k: Option<u32>,
    pub trace: Vec<ScanStep>,
}

/// Relative slack when comparing `log I_Q(k)` against `c psi(Q)`; the two logs
/// are computed along different routes and agree only to rounding.
const LOG_SLACK: f64 = 1e-12;

/// Scans `k = 1 ..= max(pi(Q), 1)` for the smallest `k` whose sumset reaches
/// `|G_Q|^c`, reporting the full trace.
pub fn min_k_scan(q: u64, c: f64, opts: &SumsetOptions) -> Result<MinKScan> {
    if q == 0 {
        return Err(Error::invalid("Q must be >= 1"));
    }
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::invalid(format!("c must lie in (0, 1], got {c}")));
    }
    let log_gq = gq_log_order(q);
    let target = c * log_gq;
    let last = prime_count(q).max(1) as u32;
    let opts = SumsetOptions {
        method: CountMethod::Lattice,
        ..*opts
    };
    let mut trace = Vec::new();
    let mut found = None;
    for k in 1..=last {
        let report = sumset_cardinality(q, k, &opts)?;
        let log_cardinality = big_ln(&report.cardinality);
        if found.is_none() && log_cardinality >= target - LOG_SLACK * target.max(1.0) {
            found = Some(k);
        }
        trace.push(ScanStep {
            k,
            cardinality: report.cardinality,
            log_cardinality,
        });
    }
    Ok(MinKScan {
        q,
        c,
        log_gq,
        k: found,
        trace,
    })
}
