use std::fmt::Write as _;

use serde_json::json;

use farey_ring::clustering::{
    aq_scan, aq_witnesses, ford_normalizer, ford_sums, l_set, theorem1_table_with, AqConfig,
    RATIO_CSV_HEADER,
};
use farey_ring::format::sig_digits;
use farey_ring::group_ring::{class_sum, collapse, dense_multiply, fq_product};
use farey_ring::numtheory::TrialDivision;
use farey_ring::sumsets::{
    brute_force_sumset, min_k_scan, sumset_cardinality, SumsetOptions, SUMSET_CSV_HEADER,
};
use farey_ring::Error;

use crate::cache::spf_table;
use crate::{Cli, Command, Failure, Format};

/// Largest sweep accepted by `ring-verify`.
pub const RING_VERIFY_MAX: u64 = 500;

type Outcome = Result<String, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let common = &cli.common;
    if common.shards == 0 {
        return Err(Error::InvalidArgument("--shards must be >= 1".into()).into());
    }
    let opts = SumsetOptions {
        shards: common.shards,
        ..Default::default()
    };
    let fmt = common.format;
    let cache = common.cache.as_deref();
    match &cli.command {
        Command::RingMul { q, r } => ring_mul(*q, *r, fmt),
        Command::RingVerify { limit } => ring_verify(*limit, fmt),
        Command::SumsetCount { big_q, k } => {
            let report = sumset_cardinality(*big_q, *k, &opts)?;
            Ok(match fmt {
                Format::Csv => format!("{SUMSET_CSV_HEADER}\n{}\n", report.to_csv_row()),
                Format::Json => format!("{}\n", report.to_json()),
            })
        }
        Command::SumsetBrute { big_q, k } => sumset_brute(*big_q, *k, fmt),
        Command::ScanK { big_q, c } => scan_k(*big_q, *c, &opts, fmt),
        Command::ClusterMeasure { a } => cluster_measure(*a, fmt),
        Command::FordSum { big_q } => ford_sum(*big_q, cache, fmt),
        Command::Theorem1Table { big_q } => {
            let top = big_q.iter().copied().max().unwrap_or(2);
            let table = spf_table(cache, top)?;
            let rows = theorem1_table_with(big_q, &opts, &table)?;
            Ok(match fmt {
                Format::Csv => {
                    let mut out = format!("{RATIO_CSV_HEADER}\n");
                    for row in &rows {
                        writeln!(out, "{}", row.to_csv_row()).unwrap();
                    }
                    out
                }
                Format::Json => format!("{}\n", serde_json::to_string(&rows).unwrap()),
            })
        }
        Command::AqScan { big_q, n } => aq(*big_q, *n, cache, fmt),
    }
}

fn ring_mul(q: u64, r: u64, fmt: Format) -> Outcome {
    let combo = fq_product(q, r)?;
    Ok(match fmt {
        Format::Json => format!("{}\n", combo.to_json()),
        Format::Csv => {
            let mut out = String::from("q,r,order,coeff\n");
            for (order, c) in combo.iter() {
                writeln!(out, "{q},{r},{order},{c}").unwrap();
            }
            out
        }
    })
}

fn ring_verify(limit: u64, fmt: Format) -> Outcome {
    if limit == 0 {
        return Err(Error::InvalidArgument("--limit must be >= 1".into()).into());
    }
    if limit > RING_VERIFY_MAX {
        return Err(Error::ResourceLimit(format!(
            "ring-verify limit {limit} exceeds {RING_VERIFY_MAX}"
        ))
        .into());
    }
    let mut pairs = 0u64;
    let mut mismatch = None;
    'sweep: for q in 1..=limit {
        for r in 1..=limit {
            pairs += 1;
            let closed = fq_product(q, r)?;
            let dense = collapse(&dense_multiply(&class_sum(q)?, &class_sum(r)?)?)?;
            if closed != dense {
                mismatch = Some(format!(
                    "(q, r) = ({q}, {r}): closed form {} vs convolution {}",
                    closed.to_json(),
                    dense.to_json()
                ));
                break 'sweep;
            }
        }
    }
    let noun = if pairs == 1 { "pair" } else { "pairs" };
    if let Some(msg) = mismatch {
        return Err(Failure::Mismatch(format!("after {pairs} {noun}: {msg}")));
    }
    eprintln!("{pairs} {noun} OK");
    Ok(match fmt {
        Format::Csv => format!("pairs,status\n{pairs},OK\n"),
        Format::Json => format!("{}\n", json!({ "pairs": pairs, "status": "OK" })),
    })
}

fn sumset_brute(q: u64, k: u32, fmt: Format) -> Outcome {
    let set = brute_force_sumset(q, k)?;
    Ok(match fmt {
        Format::Csv => {
            let mut out = String::from("numerator,denominator\n");
            for f in &set.elements {
                writeln!(out, "{},{}", f.numerator(), f.order()).unwrap();
            }
            out
        }
        Format::Json => {
            let elements: Vec<String> = set.elements.iter().map(|f| f.to_string()).collect();
            format!(
                "{}\n",
                json!({
                    "Q": q,
                    "k": k,
                    "cardinality": set.len().to_string(),
                    "elements": elements,
                })
            )
        }
    })
}

fn scan_k(q: u64, c: f64, opts: &SumsetOptions, fmt: Format) -> Outcome {
    let scan = min_k_scan(q, c, opts)?;
    Ok(match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(&scan).unwrap()),
        Format::Csv => {
            let mut out = String::from("Q,c,k,cardinality,log_cardinality,log_gq,reached\n");
            for step in &scan.trace {
                let reached = scan.k.is_some_and(|k| step.k >= k);
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    q,
                    sig_digits(c, 12),
                    step.k,
                    step.cardinality,
                    sig_digits(step.log_cardinality, 12),
                    sig_digits(scan.log_gq, 12),
                    reached
                )
                .unwrap();
            }
            out
        }
    })
}

fn cluster_measure(a: u64, fmt: Format) -> Outcome {
    let set = l_set(a, &TrialDivision)?;
    let measure = set.measure();
    Ok(match fmt {
        Format::Csv => {
            let mut out = String::from("a,lo,hi,measure\n");
            for &(lo, hi) in set.intervals() {
                writeln!(
                    out,
                    "{a},{},{},{}",
                    sig_digits(lo, 12),
                    sig_digits(hi, 12),
                    sig_digits(measure, 12)
                )
                .unwrap();
            }
            out
        }
        Format::Json => format!(
            "{}\n",
            json!({ "a": a, "measure": measure, "intervals": set.intervals() })
        ),
    })
}

fn ford_sum(q: u64, cache: Option<&std::path::Path>, fmt: Format) -> Outcome {
    if q == 0 {
        return Err(Error::InvalidArgument("Q must be >= 1".into()).into());
    }
    let table = spf_table(cache, q)?;
    let sum = ford_sums(&[q], &table)?[0];
    let ratio = ford_normalizer(q).ok().map(|norm| sum / norm);
    Ok(match fmt {
        Format::Csv => format!(
            "Q,ford_sum,ford_ratio\n{q},{},{}\n",
            sig_digits(sum, 12),
            ratio.map(|r| sig_digits(r, 12)).unwrap_or_default()
        ),
        Format::Json => format!(
            "{}\n",
            json!({ "Q": q, "ford_sum": sum, "ford_ratio": ratio })
        ),
    })
}

fn aq(q: u64, n: Option<u64>, cache: Option<&std::path::Path>, fmt: Format) -> Outcome {
    let config = AqConfig::for_q(q)?;
    let table = spf_table(cache, config.x_floor())?;
    let rows: Vec<(u64, u64, u64, u64)> = match n {
        Some(n) => aq_witnesses(n, &config, &table)?
            .into_iter()
            .map(|w| (n, w.a, w.p, w.q))
            .collect(),
        None => aq_scan(q, &table)?
            .into_iter()
            .map(|(n, w)| (n, w.a, w.p, w.q))
            .collect(),
    };
    Ok(match fmt {
        Format::Csv => {
            let mut out = String::from("n,a,p,q\n");
            for (n, a, p, qq) in &rows {
                writeln!(out, "{n},{a},{p},{qq}").unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|&(n, a, p, qq)| json!({ "n": n, "a": a, "p": p, "q": qq }))
                .collect();
            format!("{}\n", json!({ "Q": q, "members": rows }))
        }
    })
}
