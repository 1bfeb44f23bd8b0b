use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FareyFraction;
use crate::numtheory::gcd;
use crate::{Error, Result};

/// Largest common denominator for which [`dense_multiply`] accumulates into a
/// flat array of residues instead of a map.
const FLAT_ACCUMULATOR_MAX: u64 = 1 << 22;

/// A finitely supported function `Q/Z -> Z`, i.e. an element of `Z(G)`.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DenseElement {
    terms: BTreeMap<FareyFraction, i64>,
}

impl DenseElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Sums the given terms, dropping whatever cancels to zero.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FareyFraction, i64)>,
    {
        let mut out = BTreeMap::new();
        for (x, c) in terms {
            let slot = out.entry(x).or_insert(0i64);
            *slot = slot
                .checked_add(c)
                .ok_or(Error::Overflow("DenseElement::from_terms"))?;
        }
        out.retain(|_, c| *c != 0);
        Ok(DenseElement { terms: out })
    }

    pub fn coeff(&self, x: &FareyFraction) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order of the fraction.
    pub fn iter(&self) -> impl Iterator<Item = (&FareyFraction, &i64)> {
        self.terms.iter()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("dense element serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad dense JSON: {e}")))
    }
}

/// The class sum `F_q`: coefficient 1 on every `a/q` with `gcd(a, q) = 1`.
pub fn class_sum(q: u64) -> Result<DenseElement> {
    if q == 0 {
        return Err(Error::invalid("class sums need q >= 1"));
    }
    if q == 1 {
        return DenseElement::from_terms([(FareyFraction::ZERO, 1)]);
    }
    let terms = (1..q)
        .filter(|&a| gcd(a, q) == 1)
        .map(|a| (FareyFraction::new(a, q).expect("reduced residue"), 1));
    DenseElement::from_terms(terms)
}

/// Convolution product: the coefficient of `c` is the sum of `x(a) y(b)` over
/// `a + b = c (mod 1)`.
pub fn dense_multiply(x: &DenseElement, y: &DenseElement) -> Result<DenseElement> {
    if x.is_empty() || y.is_empty() {
        return Ok(DenseElement::zero());
    }
    match common_denominator(x, y) {
        Some(l) if l <= FLAT_ACCUMULATOR_MAX => multiply_flat(x, y, l),
        _ => multiply_pairwise(x, y),
    }
}

fn common_denominator(x: &DenseElement, y: &DenseElement) -> Option<u64> {
    x.terms
        .keys()
        .chain(y.terms.keys())
        .try_fold(1u64, |l, f| {
            let q = f.order();
            (l / gcd(l, q)).checked_mul(q)
        })
}

fn lift(terms: &BTreeMap<FareyFraction, i64>, l: u64) -> Vec<(u64, i64)> {
    terms
        .iter()
        .map(|(f, &c)| (f.numerator() * (l / f.order()), c))
        .collect()
}

/// Works with numerators over the common denominator `l`.
fn multiply_flat(x: &DenseElement, y: &DenseElement, l: u64) -> Result<DenseElement> {
    let overflow = || Error::Overflow("dense_multiply");
    let xs = lift(&x.terms, l);
    let ys = lift(&y.terms, l);
    let mut acc = vec![0i64; l as usize];
    for &(a, ca) in &xs {
        for &(b, cb) in &ys {
            let mut s = a + b;
            if s >= l {
                s -= l;
            }
            let t = ca.checked_mul(cb).ok_or_else(overflow)?;
            let slot = &mut acc[s as usize];
            *slot = slot.checked_add(t).ok_or_else(overflow)?;
        }
    }
    let terms = acc
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .map(|(s, c)| {
            let g = gcd(s as u64, l);
            let f = FareyFraction::new(s as u64 / g, l / g).expect("reduced by gcd");
            (f, c)
        })
        .collect();
    Ok(DenseElement { terms })
}

/// Term-by-term addition of reduced fractions.
fn multiply_pairwise(x: &DenseElement, y: &DenseElement) -> Result<DenseElement> {
    let overflow = || Error::Overflow("dense_multiply");
    let mut out: BTreeMap<FareyFraction, i64> = BTreeMap::new();
    for (&a, &ca) in &x.terms {
        for (&b, &cb) in &y.terms {
            let s = a.checked_add(b)?;
            let t = ca.checked_mul(cb).ok_or_else(overflow)?;
            let slot = out.entry(s).or_insert(0);
            *slot = slot.checked_add(t).ok_or_else(overflow)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(DenseElement { terms: out })
}

impl Serialize for DenseElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<FareyFraction, i64>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (f, c) in self.0 {
                    map.serialize_entry(&f.to_string(), c)?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("dense", &Terms(&self.terms))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for DenseElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            dense: BTreeMap<String, i64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let terms = raw
            .dense
            .iter()
            .map(|(k, &c)| k.parse::<FareyFraction>().map(|f| (f, c)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        DenseElement::from_terms(terms).map_err(D::Error::custom)
    }
}
