use crate::{Error, Result};

/// Gaps narrower than this between consecutive intervals are treated as
/// touching. Endpoints here are logs of integers `<= 2^32`, whose genuine gaps
/// are orders of magnitude wider.
pub const TOUCH_TOLERANCE: f64 = 1e-9;

/// Sorted, pairwise disjoint, non-touching half-open intervals `[lo, hi)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct IntervalSet {
    parts: Vec<(f64, f64)>,
}

impl IntervalSet {
    /// Normalizes an arbitrary collection of intervals by sorting and merging.
    pub fn from_intervals<I>(intervals: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut raw: Vec<(f64, f64)> = intervals.into_iter().collect();
        for &(lo, hi) in &raw {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::invalid(format!("bad interval [{lo}, {hi})")));
            }
        }
        raw.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self::merge_sorted(raw))
    }

    /// Merges intervals already sorted by left endpoint.
    fn merge_sorted(sorted: Vec<(f64, f64)>) -> Self {
        let mut parts: Vec<(f64, f64)> = Vec::with_capacity(sorted.len());
        for (lo, hi) in sorted {
            match parts.last_mut() {
                Some(last) if lo <= last.1 + TOUCH_TOLERANCE => last.1 = last.1.max(hi),
                _ => parts.push((lo, hi)),
            }
        }
        IntervalSet { parts }
    }

    pub(crate) fn from_sorted(sorted: Vec<(f64, f64)>) -> Self {
        debug_assert!(sorted.windows(2).all(|w| w[0].0 <= w[1].0));
        Self::merge_sorted(sorted)
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Lebesgue measure.
    pub fn measure(&self) -> f64 {
        self.parts.iter().map(|&(lo, hi)| hi - lo).sum()
    }

    pub fn contains(&self, x: f64) -> bool {
        let idx = self.parts.partition_point(|&(lo, _)| lo <= x);
        idx > 0 && x < self.parts[idx - 1].1
    }
}
