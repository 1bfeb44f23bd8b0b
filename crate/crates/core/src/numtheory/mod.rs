//! Sieves and arithmetic functions.
//!
//! Two factorization backends are provided. [`SpfTable`] is a flat
//! smallest-prime-factor table (4 bytes per entry) for moderate limits;
//! [`SegmentedSieve`] factors fixed-width windows of a range from the primes up
//! to the square root of its end, which keeps memory bounded for ranges
//! reaching `~10^9`. Both implement [`Factorizer`], as does the unbounded
//! [`TrialDivision`] backend used for small isolated arguments.

mod cache;
mod factor;
mod psi;
mod segmented;
mod sieve;

pub use cache::{load_spf_cache, save_spf_cache, SPF_CACHE_MAGIC};
pub use factor::{Factorization, MAX_DIVISOR_OMEGA};
pub use psi::{chebyshev_psi, lcm_big, lcm_big_with_cap, prime_count, primes_up_to, LCM_CAP};
pub use segmented::{FactorWindow, SegmentedSieve, SEGMENTED_MAX};
pub use sieve::{spf_sieve, SpfTable, FLAT_SIEVE_MAX};

use crate::Result;

/// Something that can produce prime factorizations up to a limit.
pub trait Factorizer {
    /// Largest `n` accepted by [`Factorizer::factorize`].
    fn limit(&self) -> u64;

    fn factorize(&self, n: u64) -> Result<Factorization>;
}

/// Plain trial division. Adequate for arguments up to roughly `10^12`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrialDivision;

impl Factorizer for TrialDivision {
    fn limit(&self) -> u64 {
        u64::MAX
    }

    fn factorize(&self, n: u64) -> Result<Factorization> {
        Factorization::trial(n)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}
