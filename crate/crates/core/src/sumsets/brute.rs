use std::collections::{BTreeSet, HashSet};

use crate::group_ring::FareyFraction;
use crate::numtheory::gcd;
use crate::{Error, Result};

/// Cap on the number of pairwise sums a brute-force enumeration may form.
pub const BRUTE_FORCE_MAX_PAIRS: u64 = 50_000_000;

/// A set of points of `Q/Z`, e.g. `F_Q` or one of its sumsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareySet {
    pub q: u64,
    pub elements: BTreeSet<FareyFraction>,
}

impl FareySet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Distinct additive orders of the elements.
    pub fn orders(&self) -> BTreeSet<u64> {
        self.elements.iter().map(|f| f.order()).collect()
    }
}

/// `F_Q`: every reduced `a/q` with `q <= Q`.
pub fn farey_set(q: u64) -> Result<FareySet> {
    if q == 0 {
        return Err(Error::invalid("Q must be >= 1"));
    }
    let mut elements = BTreeSet::new();
    elements.insert(FareyFraction::ZERO);
    for den in 2..=q {
        for num in (1..den).filter(|&a| gcd(a, den) == 1) {
            elements.insert(FareyFraction::new(num, den)?);
        }
    }
    Ok(FareySet { q, elements })
}

/// The k-fold sumset of `F_Q` by direct enumeration of sums mod 1.
pub fn brute_force_sumset(q: u64, k: u32) -> Result<FareySet> {
    if k == 0 {
        return Err(Error::invalid("k must be >= 1"));
    }
    let base = farey_set(q)?;
    let base: Vec<FareyFraction> = base.elements.into_iter().collect();
    let mut current: HashSet<FareyFraction> = base.iter().copied().collect();
    for _ in 1..k {
        let pairs = current.len() as u64 * base.len() as u64;
        if pairs > BRUTE_FORCE_MAX_PAIRS {
            return Err(Error::resource(format!(
                "brute-force sumset step needs {pairs} sums (max {BRUTE_FORCE_MAX_PAIRS})"
            )));
        }
        let mut next = HashSet::with_capacity(current.len() * 2);
        for &x in &current {
            for &b in &base {
                next.insert(x.checked_add(b)?);
            }
        }
        current = next;
    }
    Ok(FareySet {
        q,
        elements: current.into_iter().collect(),
    })
}
