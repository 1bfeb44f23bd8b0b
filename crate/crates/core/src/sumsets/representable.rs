use std::collections::HashMap;

use crate::numtheory::{Factorization, Factorizer};
use crate::{Error, Result};

fn check_q(q: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::invalid("Q must be >= 1"));
    }
    Ok(())
}

/// `tau*_Q(n)`: ordered splits `n = d * (n/d)` with `gcd(d, n/d) = 1` and both
/// parts `<= Q`.
pub fn tau_star(n: u64, q: u64, factorizer: &impl Factorizer) -> Result<u64> {
    check_q(q)?;
    let f = factorizer.factorize(n)?;
    Ok(f
        .unitary_splits()?
        .into_iter()
        .filter(|&(d, e)| d <= q && e <= q)
        .count() as u64)
}

/// Whether `n` is the order of some element of the k-fold sumset of `F_Q`:
/// `n = n_1 ... n_k` with all `n_i <= Q` pairwise coprime (`n_i = 1` allowed).
pub fn representable(n: u64, q: u64, k: u32, factorizer: &impl Factorizer) -> Result<bool> {
    let mut r = Representability::new(q, k)?;
    let f = factorizer.factorize(n)?;
    Ok(r.check(&f))
}

/// Memoizing representability test for fixed `(Q, k)`.
///
/// The answer depends only on the multiset of prime-power components of `n`,
/// which is the memo key.
#[derive(Debug, Clone)]
pub struct Representability {
    q: u64,
    k: u32,
    memo: HashMap<Vec<u64>, bool>,
}

impl Representability {
    pub fn new(q: u64, k: u32) -> Result<Self> {
        check_q(q)?;
        if k == 0 {
            return Err(Error::invalid("k must be >= 1"));
        }
        Ok(Representability {
            q,
            k,
            memo: HashMap::new(),
        })
    }

    pub fn check(&mut self, f: &Factorization) -> bool {
        let comps: Vec<u64> = f.prime_powers().collect();
        self.check_components(comps)
    }

    /// `components` are the prime-power parts of `n`, in any order.
    pub fn check_components(&mut self, mut components: Vec<u64>) -> bool {
        if components.iter().any(|&c| c > self.q) {
            return false;
        }
        if components.len() <= self.k as usize {
            return true;
        }
        components.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(&hit) = self.memo.get(&components) {
            return hit;
        }
        let mut bins = Vec::with_capacity(self.k as usize);
        let hit = pack(&components, &mut bins, self.k as usize, self.q);
        self.memo.insert(components, hit);
        hit
    }
}

/// Depth-first packing of `items` (sorted descending) into at most `k` bins
/// whose products stay `<= cap`.
fn pack(items: &[u64], bins: &mut Vec<u64>, k: usize, cap: u64) -> bool {
    let Some((&c, rest)) = items.split_first() else {
        return true;
    };
    for i in 0..bins.len() {
        // bins holding equal products are interchangeable
        if bins[..i].contains(&bins[i]) {
            continue;
        }
        if bins[i] <= cap / c {
            bins[i] *= c;
            let ok = pack(rest, bins, k, cap);
            bins[i] /= c;
            if ok {
                return true;
            }
        }
    }
    if bins.len() < k {
        bins.push(c);
        let ok = pack(rest, bins, k, cap);
        bins.pop();
        if ok {
            return true;
        }
    }
    false
}

/// Fast `k = 2` test on prime-power components: is there a sub-product `P`
/// with `n / Q <= P <= Q`?
pub(crate) fn two_fold(n: u64, components: &[u32], q: u64) -> bool {
    if n <= q {
        return true;
    }
    if components.iter().any(|&c| u64::from(c) > q) {
        return false;
    }
    let m = components.len();
    // a split and its complement both qualify, so one component can be pinned
    let (&last, others) = components.split_last().expect("n > 1 has components");
    let last = u64::from(last);
    for mask in 0u32..1 << (m - 1) {
        let mut p = last;
        for (i, &c) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                p *= u64::from(c);
            }
        }
        if p <= q && n <= p * q {
            return true;
        }
    }
    false
}
