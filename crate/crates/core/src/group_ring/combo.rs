use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{class_sum, DenseElement};
use crate::numtheory::Factorization;
use crate::{Error, Result};

/// An integer combination `sum c(q) F_q` of class sums, keyed by the order `q`.
///
/// Zero coefficients are never stored, so equality is map equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClassSumCombo {
    terms: BTreeMap<u64, i64>,
}

impl ClassSumCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let mut out = BTreeMap::new();
        for (q, c) in terms {
            if q == 0 {
                return Err(Error::invalid("class sum orders start at 1"));
            }
            let slot = out.entry(q).or_insert(0i64);
            *slot = slot
                .checked_add(c)
                .ok_or(Error::Overflow("ClassSumCombo::from_terms"))?;
        }
        out.retain(|_, c| *c != 0);
        Ok(ClassSumCombo { terms: out })
    }

    pub fn coeff(&self, q: u64) -> i64 {
        self.terms.get(&q).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order of `q`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&q, &c)| (q, c))
    }

    /// `sum c(q) phi(q)`: the value of the element at the trivial character.
    pub fn mass(&self) -> Result<i128> {
        self.terms.iter().try_fold(0i128, |acc, (&q, &c)| {
            let phi = Factorization::trial(q)?.euler_phi();
            Ok(acc + i128::from(c) * i128::from(phi))
        })
    }

    /// Expands every class sum into its fractions.
    pub fn expand(&self) -> Result<DenseElement> {
        let mut terms = Vec::new();
        for (&q, &c) in &self.terms {
            for (&f, _) in class_sum(q)?.iter() {
                terms.push((f, c));
            }
        }
        DenseElement::from_terms(terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("combo serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad class-sum JSON: {e}")))
    }
}

/// Rewrites `x` in class-sum coordinates.
///
/// Succeeds iff `x` is constant on every order class, i.e. each denominator
/// `q` present carries all `phi(q)` reduced residues with one common coefficient.
pub fn collapse(x: &DenseElement) -> Result<ClassSumCombo> {
    let mut by_order: BTreeMap<u64, (i64, u64)> = BTreeMap::new();
    for (f, &c) in x.iter() {
        let q = f.order();
        match by_order.get_mut(&q) {
            None => {
                by_order.insert(q, (c, 1));
            }
            Some((c0, n)) if *c0 == c => *n += 1,
            Some(_) => return Err(Error::NotClassConstant(q)),
        }
    }
    for (&q, &(_, n)) in &by_order {
        if n != Factorization::trial(q)?.euler_phi() {
            return Err(Error::NotClassConstant(q));
        }
    }
    Ok(ClassSumCombo {
        terms: by_order.into_iter().map(|(q, (c, _))| (q, c)).collect(),
    })
}

impl Serialize for ClassSumCombo {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<u64, i64>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (q, c) in self.0 {
                    map.serialize_entry(&q.to_string(), c)?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("classsum", &Terms(&self.terms))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for ClassSumCombo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            classsum: BTreeMap<String, i64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let terms = raw
            .classsum
            .iter()
            .map(|(k, &c)| {
                k.parse::<u64>()
                    .map(|q| (q, c))
                    .map_err(|e| D::Error::custom(format!("bad order {k:?}: {e}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        ClassSumCombo::from_terms(terms).map_err(D::Error::custom)
    }
}
