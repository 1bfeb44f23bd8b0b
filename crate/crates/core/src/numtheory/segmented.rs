use super::{primes_up_to, Factorization, Factorizer};
use crate::{Error, Result};

/// Largest range end supported by the segmented sieve (values are stored as `u32`).
pub const SEGMENTED_MAX: u64 = u32::MAX as u64;

/// Factors the integers `1..=limit` window by window.
///
/// Only the primes up to `sqrt(limit)` are held in memory. Each window is
/// reconstructed from them: every prime marks its multiples, higher prime
/// powers bump the exponent of the entry just pushed, and whatever is left of
/// `n` after dividing by the marked part is a single prime above the basis.
#[derive(Debug, Clone)]
pub struct SegmentedSieve {
    limit: u64,
    window: usize,
    basis: Vec<u32>,
}

/// Factorizations of one window `[start, start + len)` of a [`SegmentedSieve`].
///
/// Storage is a fixed stride of `max_omega` slots per integer: about
/// `9 * max_omega + 5` bytes per entry.
#[derive(Debug, Clone, Default)]
pub struct FactorWindow {
    start: u64,
    len: usize,
    stride: usize,
    count: Vec<u8>,
    primes: Vec<u32>,
    powers: Vec<u32>,
    marked: Vec<u32>,
}

/// Maximum number of distinct prime factors of an integer `<= n`.
fn max_omega(n: u64) -> usize {
    let mut prod: u64 = 1;
    let mut k = 0;
    for p in primes_up_to(64) {
        match prod.checked_mul(p) {
            Some(v) if v <= n => {
                prod = v;
                k += 1;
            }
            _ => break,
        }
    }
    k.max(1)
}

impl SegmentedSieve {
    pub fn new(limit: u64, window: usize) -> Result<Self> {
        if limit < 1 {
            return Err(Error::invalid("segmented sieve limit must be >= 1"));
        }
        if limit > SEGMENTED_MAX {
            return Err(Error::resource(format!(
                "segmented sieve limit {limit} exceeds {SEGMENTED_MAX}"
            )));
        }
        if window == 0 {
            return Err(Error::invalid("window width must be positive"));
        }
        let root = num_integer::Roots::sqrt(&limit);
        let basis = primes_up_to(root).into_iter().map(|p| p as u32).collect();
        Ok(SegmentedSieve {
            limit,
            window,
            basis,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn window_width(&self) -> usize {
        self.window
    }

    /// The primes up to `sqrt(limit)`.
    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn window_count(&self) -> usize {
        self.limit.div_ceil(self.window as u64) as usize
    }

    /// Half-open range `[lo, hi)` covered by window `idx`.
    pub fn window_range(&self, idx: usize) -> (u64, u64) {
        let lo = 1 + idx as u64 * self.window as u64;
        let hi = (lo + self.window as u64).min(self.limit + 1);
        (lo, hi)
    }

    /// Fills `buf` with the factorizations of window `idx`, reusing its allocations.
    pub fn sieve_window(&self, idx: usize, buf: &mut FactorWindow) {
        let (lo, hi) = self.window_range(idx);
        let len = (hi - lo) as usize;
        let stride = max_omega(hi - 1);
        buf.start = lo;
        buf.len = len;
        buf.stride = stride;
        buf.count.clear();
        buf.count.resize(len, 0);
        buf.marked.clear();
        buf.marked.resize(len, 1);
        buf.primes.resize(len * stride, 0);
        buf.powers.resize(len * stride, 0);

        for &p in &self.basis {
            let p64 = u64::from(p);
            if p64 * p64 >= hi {
                break;
            }
            let first = lo.div_ceil(p64) * p64;
            let mut i = (first - lo) as usize;
            while i < len {
                let slot = i * stride + buf.count[i] as usize;
                buf.primes[slot] = p;
                buf.powers[slot] = p;
                buf.count[i] += 1;
                buf.marked[i] *= p;
                i += p as usize;
            }
            let mut pk = p64 * p64;
            while pk < hi {
                let first = lo.div_ceil(pk) * pk;
                let mut i = (first - lo) as usize;
                while i < len {
                    let slot = i * stride + buf.count[i] as usize - 1;
                    buf.powers[slot] *= p;
                    buf.marked[i] *= p;
                    i += pk as usize;
                }
                pk *= p64;
            }
        }
        for i in 0..len {
            let n = (lo + i as u64) as u32;
            let rest = n / buf.marked[i];
            if rest > 1 {
                let slot = i * stride + buf.count[i] as usize;
                buf.primes[slot] = rest;
                buf.powers[slot] = rest;
                buf.count[i] += 1;
            }
        }
    }

    /// Trial division by the basis primes, for a single `n <= limit`.
    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(Error::invalid("cannot factorize 0"));
        }
        if n > self.limit {
            return Err(Error::OutOfRange {
                value: n,
                limit: self.limit,
            });
        }
        let mut rest = n;
        let mut factors = Vec::new();
        for &p in &self.basis {
            let p = u64::from(p);
            if p * p > rest {
                break;
            }
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(Factorization::from_parts_unchecked(n, factors))
    }
}

impl Factorizer for SegmentedSieve {
    fn limit(&self) -> u64 {
        self.limit
    }

    fn factorize(&self, n: u64) -> Result<Factorization> {
        SegmentedSieve::factorize(self, n)
    }
}

impl FactorWindow {
    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Distinct primes of `start + i`, increasing.
    pub fn primes(&self, i: usize) -> &[u32] {
        let base = i * self.stride;
        &self.primes[base..base + self.count[i] as usize]
    }

    /// Prime-power components `p^e || start + i`, aligned with [`Self::primes`].
    pub fn prime_powers(&self, i: usize) -> &[u32] {
        let base = i * self.stride;
        &self.powers[base..base + self.count[i] as usize]
    }

    pub fn euler_phi(&self, i: usize) -> u64 {
        self.primes(i)
            .iter()
            .zip(self.prime_powers(i))
            .map(|(&p, &pe)| u64::from(pe / p) * u64::from(p - 1))
            .product()
    }

    pub fn factorization(&self, i: usize) -> Factorization {
        let factors = self
            .primes(i)
            .iter()
            .zip(self.prime_powers(i))
            .map(|(&p, &pe)| {
                let mut e = 0;
                let mut v = pe;
                while v > 1 {
                    v /= p;
                    e += 1;
                }
                (u64::from(p), e)
            })
            .collect();
        Factorization::from_parts_unchecked(self.start + i as u64, factors)
    }
}
