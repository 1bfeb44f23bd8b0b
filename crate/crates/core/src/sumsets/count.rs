use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::representable::two_fold;
use super::Representability;
use crate::numtheory::{primes_up_to, FactorWindow, SegmentedSieve, SEGMENTED_MAX};
use crate::{Error, Result};

pub const SUMSET_CSV_HEADER: &str = "Q,k,cardinality,representable_count,elapsed_seconds";

/// How [`sumset_cardinality`] enumerates candidate orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountMethod {
    /// Streaming for `k = 2`, divisor lattice otherwise.
    #[default]
    Auto,
    /// Factor every `n <= Q^k` with the segmented sieve.
    Stream,
    /// Walk the divisors of `lcm{1..Q}` that are `<= Q^k`. Every representable
    /// order divides that lcm since each of its prime-power parts is `<= Q`.
    Lattice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumsetLimits {
    /// Largest `Q^k` the streaming count will cover.
    pub max_stream: u64,
    /// Largest number of divisor-lattice nodes visited.
    pub max_lattice_nodes: u64,
}

impl Default for SumsetLimits {
    fn default() -> Self {
        SumsetLimits {
            // Q = 2^14 at k = 2
            max_stream: 1 << 28,
            max_lattice_nodes: 1 << 24,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumsetOptions {
    pub shards: usize,
    pub window: usize,
    pub method: CountMethod,
    pub limits: SumsetLimits,
}

impl Default for SumsetOptions {
    fn default() -> Self {
        SumsetOptions {
            shards: 1,
            window: 1 << 15,
            method: CountMethod::Auto,
            limits: SumsetLimits::default(),
        }
    }
}

/// Result of [`sumset_cardinality`]. Big integers serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumsetReport {
    #[serde(rename = "Q")]
    pub q: u64,
    pub k: u32,
    #[serde(serialize_with = "as_decimal")]
    pub cardinality: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub representable_count: BigUint,
    #[serde(rename = "elapsed_seconds", serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

fn as_seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SumsetReport {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.6}",
            self.q,
            self.k,
            self.cardinality,
            self.representable_count,
            self.elapsed.as_secs_f64()
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `I_Q(k) = |F_Q + ... + F_Q|` (k summands), as the exact sum of `phi(n)` over
/// representable orders `n`.
///
/// The streaming path splits `[1, Q^k]` into windows handed to `shards`
/// workers round-robin; partial sums are exact integers reduced in shard
/// order, so the result does not depend on the shard count.
pub fn sumset_cardinality(q: u64, k: u32, opts: &SumsetOptions) -> Result<SumsetReport> {
    if q == 0 {
        return Err(Error::invalid("Q must be >= 1"));
    }
    if k == 0 {
        return Err(Error::invalid("k must be >= 1"));
    }
    if opts.shards == 0 {
        return Err(Error::invalid("shard count must be >= 1"));
    }
    let started = Instant::now();
    let method = match opts.method {
        CountMethod::Auto if k == 2 => CountMethod::Stream,
        CountMethod::Auto => CountMethod::Lattice,
        m => m,
    };
    let (cardinality, representable_count) = match method {
        CountMethod::Stream => stream(q, k, opts)?,
        _ => lattice(q, k, &opts.limits)?,
    };
    Ok(SumsetReport {
        q,
        k,
        cardinality,
        representable_count,
        elapsed: started.elapsed(),
    })
}

/// Exact `u128` partial sums, spilled into a big integer on overflow.
#[derive(Default)]
struct Tally {
    big: BigUint,
    small: u128,
    count: u64,
}

impl Tally {
    fn add(&mut self, phi: u128) {
        self.count += 1;
        match self.small.checked_add(phi) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = phi;
            }
        }
    }

    fn total(self) -> (BigUint, BigUint) {
        (self.big + self.small, BigUint::from(self.count))
    }
}

fn stream_top(q: u64, k: u32, limits: &SumsetLimits) -> Result<u64> {
    let top = q
        .checked_pow(k)
        .filter(|&t| t <= limits.max_stream && t <= SEGMENTED_MAX)
        .ok_or_else(|| {
            Error::resource(format!(
                "streaming Q^k = {q}^{k} exceeds the budget of {}",
                limits.max_stream.min(SEGMENTED_MAX)
            ))
        })?;
    Ok(top)
}

fn stream(q: u64, k: u32, opts: &SumsetOptions) -> Result<(BigUint, BigUint)> {
    let top = stream_top(q, k, &opts.limits)?;
    let sieve = SegmentedSieve::new(top, opts.window)?;
    let windows = sieve.window_count();
    let shards = opts.shards.min(windows).max(1);

    let run_shard = |shard: usize| -> Tally {
        let mut tally = Tally::default();
        let mut buf = FactorWindow::default();
        let mut general = (k != 2).then(|| Representability::new(q, k).expect("validated"));
        for w in (shard..windows).step_by(shards) {
            sieve.sieve_window(w, &mut buf);
            for i in 0..buf.len() {
                let n = buf.start() + i as u64;
                let hit = match general.as_mut() {
                    None => two_fold(n, buf.prime_powers(i), q),
                    Some(r) => r.check_components(
                        buf.prime_powers(i).iter().map(|&c| u64::from(c)).collect(),
                    ),
                };
                if hit {
                    tally.add(u128::from(buf.euler_phi(i)));
                }
            }
        }
        tally
    };

    let tallies: Vec<Tally> = if shards == 1 {
        vec![run_shard(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..shards)
                .map(|s| scope.spawn(move || run_shard(s)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("shard worker panicked"))
                .collect()
        })
    };
    Ok(tallies.into_iter().map(Tally::total).fold(
        (BigUint::zero(), BigUint::zero()),
        |(c, r), (c2, r2)| (c + c2, r + r2),
    ))
}

fn lattice(q: u64, k: u32, limits: &SumsetLimits) -> Result<(BigUint, BigUint)> {
    // (p, largest power p^e <= Q, e)
    let mut parts: Vec<(u128, u32)> = Vec::new();
    for p in primes_up_to(q) {
        let mut e = 1;
        let mut pk = p;
        while pk * p <= q {
            pk *= p;
            e += 1;
        }
        parts.push((u128::from(p), e));
    }
    // larger primes first keeps the bound check effective early
    parts.reverse();
    let bound = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(q)));

    struct Walk<'a> {
        parts: &'a [(u128, u32)],
        bound: Option<u128>,
        rep: Representability,
        comps: Vec<u64>,
        tally: Tally,
        nodes: u64,
        max_nodes: u64,
    }

    impl Walk<'_> {
        fn go(&mut self, idx: usize, n: u128, phi: u128) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Error::resource(format!(
                    "divisor lattice walk exceeds {} nodes",
                    self.max_nodes
                )));
            }
            if idx == self.parts.len() {
                if self.rep.check_components(self.comps.clone()) {
                    self.tally.add(phi);
                }
                return Ok(());
            }
            self.go(idx + 1, n, phi)?;
            let (p, e) = self.parts[idx];
            let mut pk = 1u128;
            for i in 1..=e {
                pk *= p;
                let Some(m) = n.checked_mul(pk) else { break };
                if self.bound.is_some_and(|b| m > b) {
                    break;
                }
                let phi_pk = if i == 1 { p - 1 } else { pk / p * (p - 1) };
                self.comps.push(pk as u64);
                self.go(idx + 1, m, phi * phi_pk)?;
                self.comps.pop();
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        parts: &parts,
        bound,
        rep: Representability::new(q, k)?,
        comps: Vec::new(),
        tally: Tally::default(),
        nodes: 0,
        max_nodes: limits.max_lattice_nodes,
    };
    walk.go(0, 1, 1)?;
    Ok(walk.tally.total())
}
