use std::f64::consts::LN_2;

use super::lset::l_set_from_divisors;
use crate::numtheory::{spf_sieve, SpfTable};
use crate::{Error, Result};

/// The multiplication-table exponent `delta = 1 - (1 + log log 2) / log 2`.
pub fn delta() -> f64 {
    1.0 - (1.0 + LN_2.ln()) / LN_2
}

/// `sum_{a <= Q, mu(a) != 0} phi(a) |L(a)| / a^2`, terms added in increasing `a`.
pub fn ford_sum(q: u64) -> Result<f64> {
    if q == 0 {
        return Err(Error::invalid("Q must be >= 1"));
    }
    let table = spf_sieve(q.max(2))?;
    Ok(ford_sums(&[q], &table)?[0])
}

/// The partial sums at every requested `Q` from one pass over `a`.
///
/// Results follow the order of `qs`; the table must reach `max(qs)`.
pub fn ford_sums(qs: &[u64], table: &SpfTable) -> Result<Vec<f64>> {
    let Some(&top) = qs.iter().max() else {
        return Ok(Vec::new());
    };
    if qs.contains(&0) {
        return Err(Error::invalid("Q must be >= 1"));
    }
    if top > table.limit() {
        return Err(Error::OutOfRange {
            value: top,
            limit: table.limit(),
        });
    }
    let mut order: Vec<usize> = (0..qs.len()).collect();
    order.sort_by_key(|&i| qs[i]);
    let mut out = vec![0.0; qs.len()];
    let mut next = order.iter().peekable();
    let mut sum = 0.0f64;
    for a in 1..=top {
        let f = table.factorize(a)?;
        if f.is_squarefree() {
            let measure = l_set_from_divisors(&f.divisors()?).measure();
            let af = a as f64;
            sum += f.euler_phi() as f64 * measure / (af * af);
        }
        while let Some(&&i) = next.peek() {
            if qs[i] != a {
                break;
            }
            out[i] = sum;
            next.next();
        }
    }
    Ok(out)
}

/// `(log Q)^(2 - delta) / (log log Q)^(3/2)`, defined for `Q > e`.
pub fn ford_normalizer(q: u64) -> Result<f64> {
    let lq = (q as f64).ln();
    if lq <= 1.0 {
        return Err(Error::invalid(format!(
            "log log Q must be positive, got Q = {q}"
        )));
    }
    Ok(lq.powf(2.0 - delta()) / lq.ln().powf(1.5))
}

/// [`ford_sum`] divided by [`ford_normalizer`].
pub fn ford_ratio(q: u64) -> Result<f64> {
    let norm = ford_normalizer(q)?;
    Ok(ford_sum(q)? / norm)
}
