use num_bigint::BigUint;

use crate::{Error, Result};

/// Default cap on `Q` for [`lcm_big`]. The result has about `1.44 Q` bits.
pub const LCM_CAP: u64 = 10_000_000;

/// Primes `<= n` in increasing order (sieve of Eratosthenes).
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut m = i.saturating_mul(i);
        while m <= n {
            composite[m] = true;
            m += i;
        }
    }
    primes
}

pub fn prime_count(n: u64) -> usize {
    primes_up_to(n).len()
}

/// Largest power of `p` not exceeding `q`, for prime `p <= q`.
fn max_power(p: u64, q: u64) -> (u64, u32) {
    let mut pk = p;
    let mut e = 1;
    while let Some(next) = pk.checked_mul(p).filter(|&v| v <= q) {
        pk = next;
        e += 1;
    }
    (pk, e)
}

/// Chebyshev's function `psi(Q) = sum_{p^k <= Q} log p = log lcm{1, ..., Q}`.
///
/// Exponents are determined exactly per prime; the logs are added in
/// increasing prime order.
pub fn chebyshev_psi(q: u64) -> f64 {
    primes_up_to(q)
        .into_iter()
        .map(|p| f64::from(max_power(p, q).1) * (p as f64).ln())
        .sum()
}

/// `lcm{1, ..., Q}` as an exact big integer, with the default [`LCM_CAP`].
pub fn lcm_big(q: u64) -> Result<BigUint> {
    lcm_big_with_cap(q, LCM_CAP)
}

pub fn lcm_big_with_cap(q: u64, cap: u64) -> Result<BigUint> {
    if q == 0 {
        return Err(Error::invalid("lcm{1..Q} needs Q >= 1"));
    }
    if q > cap {
        return Err(Error::resource(format!("lcm{{1..{q}}} exceeds cap Q <= {cap}")));
    }
    // multiply word-sized blocks first to keep the big multiplications few
    let mut acc = BigUint::from(1u32);
    let mut block: u64 = 1;
    for p in primes_up_to(q) {
        let (pk, _) = max_power(p, q);
        match block.checked_mul(pk) {
            Some(b) => block = b,
            None => {
                acc *= block;
                block = pk;
            }
        }
    }
    acc *= block;
    Ok(acc)
}
