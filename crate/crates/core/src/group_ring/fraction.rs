use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::numtheory::gcd;
use crate::{Error, Result};

/// A point of `Q/Z` written as the reduced fraction `a/q` with `0 <= a < q`.
///
/// Zero is `0/1`. The denominator is the additive order of the point.
/// Ordering is by numeric value in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FareyFraction {
    num: u64,
    den: u64,
}

impl FareyFraction {
    pub const ZERO: FareyFraction = FareyFraction { num: 0, den: 1 };

    /// Strict constructor: `a/q` must already be reduced with `0 <= a < q`.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::invalid("denominator must be positive"));
        }
        if num >= den || gcd(num, den) != 1 {
            return Err(Error::invalid(format!("{num}/{den} is not a reduced residue")));
        }
        Ok(FareyFraction { num, den })
    }

    /// The class of `num/den` in `Q/Z`, reduced.
    pub fn reduced(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::invalid("denominator must be positive"));
        }
        let num = num % den;
        let g = gcd(num, den);
        Ok(FareyFraction {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    /// The additive order `h(beta)`.
    pub fn order(&self) -> u64 {
        self.den
    }

    /// Sum in `Q/Z`, reduced.
    pub fn checked_add(self, other: Self) -> Result<Self> {
        let g = gcd(self.den, other.den);
        let (ad, bd) = (self.den / g, other.den / g);
        let l = u128::from(ad) * u128::from(other.den);
        let s = (u128::from(self.num) * u128::from(bd) + u128::from(other.num) * u128::from(ad)) % l;
        let g2 = num_integer::gcd(s, l);
        let (num, den) = (s / g2, l / g2);
        let den = u64::try_from(den).map_err(|_| Error::Overflow("FareyFraction::checked_add"))?;
        Ok(FareyFraction {
            num: num as u64,
            den,
        })
    }
}

impl Ord for FareyFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = u128::from(self.num) * u128::from(other.den);
        let rhs = u128::from(other.num) * u128::from(self.den);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for FareyFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FareyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for FareyFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, q) = s
            .split_once('/')
            .ok_or_else(|| Error::invalid(format!("expected a/q, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| Error::invalid(format!("bad integer {t:?} in {s:?}: {e}")))
        };
        FareyFraction::new(parse(a)?, parse(q)?)
    }
}
