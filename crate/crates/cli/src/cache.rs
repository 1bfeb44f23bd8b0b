use std::path::{Path, PathBuf};

use farey_ring::numtheory::{load_spf_cache, save_spf_cache, spf_sieve, SpfTable};
use farey_ring::Result;

/// Directory override used when no `--cache` path is given.
const CACHE_DIR_ENV: &str = "FAREY_RING_CACHE_DIR";

fn cache_path(explicit: Option<&Path>, limit: u64) -> Option<PathBuf> {
    match explicit {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(CACHE_DIR_ENV)
            .map(|dir| PathBuf::from(dir).join(format!("spf-{limit}.bin"))),
    }
}

/// A table reaching at least `limit`, read from the cache when it is valid and
/// large enough, otherwise built and written back.
pub fn spf_table(explicit: Option<&Path>, limit: u64) -> Result<SpfTable> {
    let limit = limit.max(2);
    let Some(path) = cache_path(explicit, limit) else {
        return spf_sieve(limit);
    };
    if path.exists() {
        match load_spf_cache(&path, Some(limit)) {
            Ok(table) => return Ok(table),
            Err(e) => eprintln!("warning: ignoring cache {}: {e}", path.display()),
        }
    }
    let table = spf_sieve(limit)?;
    save_spf_cache(&table, &path)?;
    Ok(table)
}
