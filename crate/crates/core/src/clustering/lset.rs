use std::f64::consts::LN_2;

use super::IntervalSet;
use crate::numtheory::Factorizer;
use crate::Result;

/// `L(a) = union_{d | a} [log d - log 2, log d)`.
///
/// Endpoints are computed from each integer divisor directly.
pub fn l_set(a: u64, factorizer: &impl Factorizer) -> Result<IntervalSet> {
    let divisors = factorizer.factorize(a)?.divisors()?;
    Ok(l_set_from_divisors(&divisors))
}

/// `|L(a)|`, which always lies in `[log 2, tau(a) log 2]`.
pub fn l_measure(a: u64, factorizer: &impl Factorizer) -> Result<f64> {
    Ok(l_set(a, factorizer)?.measure())
}

/// `divisors` must be increasing.
pub(crate) fn l_set_from_divisors(divisors: &[u64]) -> IntervalSet {
    IntervalSet::from_sorted(
        divisors
            .iter()
            .map(|&d| {
                let ld = (d as f64).ln();
                (ld - LN_2, ld)
            })
            .collect(),
    )
}
