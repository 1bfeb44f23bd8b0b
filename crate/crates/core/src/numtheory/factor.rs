use crate::{Error, Result};

/// Divisor lists are only materialized for integers with at most this many
/// distinct prime factors.
pub const MAX_DIVISOR_OMEGA: usize = 25;

/// Prime factorization `n = p1^e1 * ... * pk^ek` with `p1 < ... < pk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The empty factorization of 1.
    pub fn one() -> Self {
        Factorization {
            n: 1,
            factors: Vec::new(),
        }
    }

    /// Builds a factorization from prime/exponent pairs, checking the ordering
    /// and exponent invariants. Primality of the bases is the caller's
    /// responsibility.
    pub fn from_factors(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut n: u64 = 1;
        let mut prev = 1;
        for &(p, e) in &factors {
            if p <= prev || e == 0 {
                return Err(Error::invalid(format!(
                    "factor list must have increasing primes and positive exponents, got {factors:?}"
                )));
            }
            prev = p;
            let pe = p
                .checked_pow(e)
                .ok_or(Error::Overflow("Factorization::from_factors"))?;
            n = n
                .checked_mul(pe)
                .ok_or(Error::Overflow("Factorization::from_factors"))?;
        }
        Ok(Factorization { n, factors })
    }

    pub(crate) fn from_parts_unchecked(n: u64, factors: Vec<(u64, u32)>) -> Self {
        debug_assert_eq!(
            factors
                .iter()
                .map(|&(p, e)| p.pow(e))
                .product::<u64>(),
            n
        );
        Factorization { n, factors }
    }

    /// Factorizes by trial division.
    pub fn trial(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cannot factorize 0"));
        }
        let mut rest = n;
        let mut factors = Vec::new();
        let mut push = |rest: &mut u64, p: u64| {
            let mut e = 0;
            while *rest % p == 0 {
                *rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        };
        push(&mut rest, 2);
        push(&mut rest, 3);
        let mut p = 5u64;
        while p.saturating_mul(p) <= rest {
            push(&mut rest, p);
            push(&mut rest, p + 2);
            p += 6;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(Factorization { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// The prime-power components `p^e` exactly dividing `n`.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Number of divisors.
    pub fn tau(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    /// Euler's totient, `prod p^(e-1) (p-1)`.
    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    /// The Moebius function: 0 unless squarefree, else `(-1)^omega`.
    pub fn moebius(&self) -> i8 {
        if !self.is_squarefree() {
            0
        } else if self.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All divisors in increasing order.
    pub fn divisors(&self) -> Result<Vec<u64>> {
        if self.omega() > MAX_DIVISOR_OMEGA {
            return Err(Error::resource(format!(
                "divisor list of {} has {} prime factors (max {MAX_DIVISOR_OMEGA})",
                self.n,
                self.omega()
            )));
        }
        let mut divs = Vec::with_capacity(self.tau() as usize);
        divs.push(1u64);
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        Ok(divs)
    }

    /// All ordered pairs `(d, n/d)` with `gcd(d, n/d) = 1`, sorted by `d`.
    ///
    /// There are exactly `2^omega(n)` of them.
    pub fn unitary_splits(&self) -> Result<Vec<(u64, u64)>> {
        if self.omega() > MAX_DIVISOR_OMEGA {
            return Err(Error::resource(format!(
                "unitary split list of {} has {} prime factors (max {MAX_DIVISOR_OMEGA})",
                self.n,
                self.omega()
            )));
        }
        let powers: Vec<u64> = self.prime_powers().collect();
        let mut splits: Vec<(u64, u64)> = (0u64..1 << powers.len())
            .map(|mask| {
                let d: u64 = powers
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &pe)| pe)
                    .product();
                (d, self.n / d)
            })
            .collect();
        splits.sort_unstable();
        Ok(splits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&a| num_integer::gcd(a, n) == 1).count() as u64
    }

    fn brute_divisors(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n % d == 0).collect()
    }

    #[test]
    fn trial_factorization() {
        let f = Factorization::trial(12).unwrap();
        assert_eq!(f.factors(), &[(2, 2), (3, 1)]);
        assert!(Factorization::trial(1).unwrap().factors().is_empty());
        assert!(Factorization::trial(0).is_err());
        let big = Factorization::trial(600_851_475_143).unwrap();
        assert_eq!(big.factors(), &[(71, 1), (839, 1), (1471, 1), (6857, 1)]);
    }

    #[test]
    fn from_factors_validates() {
        assert_eq!(Factorization::from_factors(vec![(2, 2), (3, 1)]).unwrap().n(), 12);
        assert!(Factorization::from_factors(vec![(3, 1), (2, 1)]).is_err());
        assert!(Factorization::from_factors(vec![(2, 0)]).is_err());
        assert!(Factorization::from_factors(vec![(2, 64)]).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(Factorization::trial(12).unwrap().euler_phi(), 4);
        assert_eq!(Factorization::one().euler_phi(), 1);
        assert_eq!(Factorization::trial(36).unwrap().euler_phi(), brute_phi(36));
        assert_eq!(brute_phi(36), 12);
    }

    #[test]
    fn moebius_examples() {
        let mu = |n| Factorization::trial(n).unwrap().moebius();
        assert_eq!(mu(6), 1);
        assert_eq!(mu(4), 0);
        assert_eq!(mu(30), -1);
        assert_eq!(mu(1), 1);
    }

    #[test]
    fn divisor_examples() {
        let divs = |n| Factorization::trial(n).unwrap().divisors().unwrap();
        assert_eq!(divs(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divs(1), vec![1]);
        assert_eq!(divs(60).len(), 12);
        assert_eq!(divs(60), brute_divisors(60));
    }

    #[test]
    fn unitary_split_examples() {
        let splits = |n| Factorization::trial(n).unwrap().unitary_splits().unwrap();
        assert_eq!(splits(12), vec![(1, 12), (3, 4), (4, 3), (12, 1)]);
        assert_eq!(splits(1), vec![(1, 1)]);
        assert_eq!(splits(30).len(), 8);
        // brute force: coprime complementary divisor pairs
        for n in 1..=500u64 {
            let expected: Vec<(u64, u64)> = brute_divisors(n)
                .into_iter()
                .filter(|&d| num_integer::gcd(d, n / d) == 1)
                .map(|d| (d, n / d))
                .collect();
            assert_eq!(splits(n), expected, "n = {n}");
        }
    }

    #[test]
    fn too_many_primes_for_divisors() {
        let primes = [
            2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
            79, 83, 89, 97, 101,
        ];
        // n itself would overflow; construct unchecked with a dummy n
        let f = Factorization {
            n: 0,
            factors: primes.iter().map(|&p| (p, 1)).collect(),
        };
        assert!(matches!(f.divisors(), Err(Error::ResourceLimit(_))));
        assert!(matches!(f.unitary_splits(), Err(Error::ResourceLimit(_))));
    }
}
