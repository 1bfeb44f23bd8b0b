use num_rational::Ratio;

use crate::numtheory::Factorizer;
use crate::{Error, Result};

/// `tau(n; y, z)`: the number of divisors `d` of `n` with `y < d <= z`.
pub fn tau_interval(n: u64, y: f64, z: f64, factorizer: &impl Factorizer) -> Result<u64> {
    if !(y < z) {
        return Err(Error::invalid(format!("need y < z, got y = {y}, z = {z}")));
    }
    let divisors = factorizer.factorize(n)?.divisors()?;
    Ok(divisors
        .into_iter()
        .filter(|&d| y < d as f64 && d as f64 <= z)
        .count() as u64)
}

/// Scale parameters of the `A_Q` family: `n <= x`, windows around `y`.
///
/// All membership conditions are decided in exact rational arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AqConfig {
    pub y: Ratio<u64>,
    pub x: Ratio<u64>,
}

impl AqConfig {
    /// `y = Q/2`, `x = Q^2/2`.
    pub fn for_q(q: u64) -> Result<Self> {
        if q < 4 {
            return Err(Error::invalid(format!("A_Q needs Q >= 4, got {q}")));
        }
        let q2 = q.checked_mul(q).ok_or(Error::Overflow("AqConfig::for_q"))?;
        Ok(AqConfig {
            y: Ratio::new(q, 2),
            x: Ratio::new(q2, 2),
        })
    }

    /// Largest integer `<= x`.
    pub fn x_floor(&self) -> u64 {
        self.x.to_integer()
    }

    fn below_x(&self, n: u64) -> bool {
        u128::from(n) * u128::from(*self.x.denom()) <= u128::from(*self.x.numer())
    }

    /// `t^8 <= y`
    fn eighth_power_at_most_y(&self, t: u64) -> bool {
        match u128::from(t).checked_pow(8) {
            Some(t8) => t8 * u128::from(*self.y.denom()) <= u128::from(*self.y.numer()),
            None => false,
        }
    }

    /// `log(y/p)` lies in `[log d - log 2, log d)`, i.e. `y/d < p <= 2y/d`.
    fn in_window(&self, p: u64, d: u64) -> bool {
        let pd = u128::from(p) * u128::from(d) * u128::from(*self.y.denom());
        let y = u128::from(*self.y.numer());
        pd > y && pd <= 2 * y
    }
}

/// A factorization `n = a * p * q` certifying membership in `A_Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct AqWitness {
    pub a: u64,
    pub p: u64,
    pub q: u64,
}

/// Every qualifying `(a, p, q)` for `n`, in increasing `(a, p)` order.
///
/// Conditions: `n <= x` squarefree, `a^8 <= y`, `p` prime with
/// `log(y/p) in L(a)`, `q` prime with `q^8 > y`.
pub fn aq_witnesses(
    n: u64,
    config: &AqConfig,
    factorizer: &impl Factorizer,
) -> Result<Vec<AqWitness>> {
    if !config.below_x(n) {
        return Err(Error::OutOfRange {
            value: n,
            limit: config.x_floor(),
        });
    }
    let f = factorizer.factorize(n)?;
    if !f.is_squarefree() || f.omega() < 2 {
        return Ok(Vec::new());
    }
    let primes: Vec<u64> = f.primes().collect();
    let mut out = Vec::new();
    for a in f.divisors()? {
        if !config.eighth_power_at_most_y(a) {
            break;
        }
        let a_divisors = crate::numtheory::Factorization::trial(a)?.divisors()?;
        for &p in primes.iter().filter(|&&p| a % p != 0) {
            if !a_divisors.iter().any(|&d| config.in_window(p, d)) {
                continue;
            }
            let q = n / (a * p);
            if q != p && primes.binary_search(&q).is_ok() && !config.eighth_power_at_most_y(q) {
                out.push(AqWitness { a, p, q });
            }
        }
    }
    Ok(out)
}

/// Membership in `A_Q` with the first witness found (smallest `a`, then `p`).
pub fn aq_member(n: u64, q: u64, factorizer: &impl Factorizer) -> Result<Option<AqWitness>> {
    let config = AqConfig::for_q(q)?;
    Ok(aq_witnesses(n, &config, factorizer)?.into_iter().next())
}

/// All members of `A_Q` up to `x`, each with its first witness.
pub fn aq_scan(q: u64, factorizer: &impl Factorizer) -> Result<Vec<(u64, AqWitness)>> {
    let config = AqConfig::for_q(q)?;
    let mut out = Vec::new();
    for n in 1..=config.x_floor() {
        if let Some(w) = aq_witnesses(n, &config, factorizer)?.into_iter().next() {
            out.push((n, w));
        }
    }
    Ok(out)
}
