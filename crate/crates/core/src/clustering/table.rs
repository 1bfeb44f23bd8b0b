use num_bigint::BigUint;
use serde::Serialize;

use super::{delta, ford_normalizer, ford_sums};
use crate::format::sig_digits;
use crate::numtheory::{spf_sieve, SpfTable};
use crate::sumsets::{big_ln, sumset_cardinality, SumsetOptions};
use crate::Result;

pub const RATIO_CSV_HEADER: &str = "Q,I_Q,ratio,ford_sum,ford_ratio";

/// One row of [`theorem1_table`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    #[serde(rename = "Q")]
    pub q: u64,
    #[serde(rename = "I_Q", serialize_with = "as_decimal")]
    pub i_q: BigUint,
    pub ratio: f64,
    pub ford_sum: f64,
    pub ford_ratio: f64,
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

impl RatioRow {
    /// CSV row with floats at 12 significant digits.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.q,
            self.i_q,
            sig_digits(self.ratio, 12),
            sig_digits(self.ford_sum, 12),
            sig_digits(self.ford_ratio, 12)
        )
    }
}

/// `I_Q (log Q)^delta (log log Q)^(3/2) / Q^4`, for `Q > e`.
pub fn theorem1_ratio(q: u64, i_q: &BigUint) -> Result<f64> {
    // reuse the domain check of the normalizer
    ford_normalizer(q)?;
    let lq = (q as f64).ln();
    let log_ratio = big_ln(i_q) + delta() * lq.ln() + 1.5 * lq.ln().ln() - 4.0 * lq;
    Ok(log_ratio.exp())
}

/// Rows for every `Q > e` in `qs`, in input order; smaller `Q` are skipped.
pub fn theorem1_table(qs: &[u64], opts: &SumsetOptions) -> Result<Vec<RatioRow>> {
    let top = qs.iter().copied().max().unwrap_or(2).max(2);
    theorem1_table_with(qs, opts, &spf_sieve(top)?)
}

/// [`theorem1_table`] reusing a prebuilt table reaching `max(qs)`.
pub fn theorem1_table_with(
    qs: &[u64],
    opts: &SumsetOptions,
    table: &SpfTable,
) -> Result<Vec<RatioRow>> {
    let qs: Vec<u64> = qs.iter().copied().filter(|&q| q >= 3).collect();
    if qs.is_empty() {
        return Ok(Vec::new());
    }
    let sums = ford_sums(&qs, table)?;
    qs.iter()
        .zip(sums)
        .map(|(&q, ford_sum)| {
            let i_q = sumset_cardinality(q, 2, opts)?.cardinality;
            Ok(RatioRow {
                q,
                ratio: theorem1_ratio(q, &i_q)?,
                ford_ratio: ford_sum / ford_normalizer(q)?,
                ford_sum,
                i_q,
            })
        })
        .collect()
}
