use super::{Factorization, Factorizer};
use crate::{Error, Result};

/// Largest limit accepted by [`spf_sieve`]. Entries are `u32`, so this caps the
/// table at 512 MiB; larger ranges go through [`super::SegmentedSieve`].
pub const FLAT_SIEVE_MAX: u64 = 1 << 27;

/// Smallest-prime-factor table for `2 <= n <= limit`.
///
/// `spf[0]` and `spf[1]` are stored as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpfTable {
    spf: Vec<u32>,
}

/// Builds the smallest-prime-factor table with a linear sieve.
pub fn spf_sieve(limit: u64) -> Result<SpfTable> {
    if limit < 2 {
        return Err(Error::invalid(format!("sieve limit must be >= 2, got {limit}")));
    }
    if limit > FLAT_SIEVE_MAX {
        return Err(Error::resource(format!(
            "flat sieve limit {limit} exceeds {FLAT_SIEVE_MAX}; use the segmented sieve"
        )));
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let si = spf[i];
        for &p in &primes {
            if p > si {
                break;
            }
            let m = i * p as usize;
            if m > n {
                break;
            }
            spf[m] = p;
        }
    }
    Ok(SpfTable { spf })
}

impl SpfTable {
    pub(crate) fn from_raw(spf: Vec<u32>) -> Self {
        SpfTable { spf }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.spf
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of `n`, for `2 <= n <= limit`.
    pub fn spf(&self, n: u64) -> Option<u64> {
        match self.spf.get(n as usize) {
            Some(&p) if n >= 2 => Some(u64::from(p)),
            _ => None,
        }
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.spf(n) == Some(n)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.spf
            .iter()
            .enumerate()
            .skip(2)
            .filter(|&(i, &p)| i == p as usize)
            .map(|(i, _)| i as u64)
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(Error::invalid("cannot factorize 0"));
        }
        if n > self.limit() {
            return Err(Error::OutOfRange {
                value: n,
                limit: self.limit(),
            });
        }
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut rest = n as usize;
        while rest > 1 {
            let p = self.spf[rest] as usize;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        Ok(Factorization::from_parts_unchecked(n, factors))
    }
}

impl Factorizer for SpfTable {
    fn limit(&self) -> u64 {
        SpfTable::limit(self)
    }

    fn factorize(&self, n: u64) -> Result<Factorization> {
        SpfTable::factorize(self, n)
    }
}
