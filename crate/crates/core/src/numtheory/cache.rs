//! Binary cache for [`SpfTable`]s.
//!
//! Layout: the 6 magic bytes `FRSPF1`, the limit as a little-endian `u64`,
//! then `limit + 1` little-endian `u32` entries (`spf[0] = spf[1] = 0`).

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::SpfTable;
use crate::numtheory::FLAT_SIEVE_MAX;
use crate::{Error, Result};

pub const SPF_CACHE_MAGIC: &[u8; 6] = b"FRSPF1";

pub fn save_spf_cache(table: &SpfTable, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    out.write_all(SPF_CACHE_MAGIC)?;
    out.write_all(&table.limit().to_le_bytes())?;
    for &entry in table.raw() {
        out.write_all(&entry.to_le_bytes())?;
    }
    out.flush()?;
    Ok(())
}

/// Loads a cached table. When `expected_limit` is given the stored limit must
/// be at least that large.
pub fn load_spf_cache(path: &Path, expected_limit: Option<u64>) -> Result<SpfTable> {
    let mut input = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 6];
    input
        .read_exact(&mut magic)
        .map_err(|_| Error::Cache("file too short for header".into()))?;
    if &magic != SPF_CACHE_MAGIC {
        return Err(Error::Cache(format!("bad magic {magic:?}")));
    }
    let mut word = [0u8; 8];
    input
        .read_exact(&mut word)
        .map_err(|_| Error::Cache("file too short for header".into()))?;
    let limit = u64::from_le_bytes(word);
    if !(2..=FLAT_SIEVE_MAX).contains(&limit) {
        return Err(Error::Cache(format!("stored limit {limit} is not valid")));
    }
    if let Some(expected) = expected_limit {
        if limit < expected {
            return Err(Error::Cache(format!(
                "stored limit {limit} is below the required {expected}"
            )));
        }
    }
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    let entries = limit as usize + 1;
    if bytes.len() != entries * 4 {
        return Err(Error::Cache(format!(
            "expected {} entry bytes for limit {limit}, found {}",
            entries * 4,
            bytes.len()
        )));
    }
    let spf: Vec<u32> = bytes
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect();
    let consistent = spf[0] == 0
        && spf[1] == 0
        && spf.iter().enumerate().skip(2).all(|(n, &p)| {
            let p = p as usize;
            p >= 2 && n % p == 0 && (p == n || (spf[p] as usize == p && n / p >= p && spf[n / p] as usize >= p))
        });
    if !consistent {
        return Err(Error::Cache("entries are not a smallest-prime-factor table".into()));
    }
    Ok(SpfTable::from_raw(spf))
}
