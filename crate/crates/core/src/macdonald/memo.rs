//! Process-wide memo of `H̃_μ`, one table per degree.

use super::construct::{default_order, modified_h_gram_schmidt};
use crate::error::{Error, Result};
use crate::symfunc::{Partition, SymFunc};
use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

pub type MacTable = Arc<BTreeMap<Partition, SymFunc>>;

static MAX_DEGREE: AtomicU32 = AtomicU32::new(9);

struct Memo {
    tables: RwLock<HashMap<u32, MacTable>>,
    writer: Mutex<()>,
}

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| Memo { tables: RwLock::new(HashMap::new()), writer: Mutex::new(()) })
}

/// Largest degree for which `H̃_μ` may be computed.
pub fn max_degree() -> u32 {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_degree(n: u32) {
    MAX_DEGREE.store(n, Ordering::Relaxed);
}

/// All `H̃_μ` with `μ ⊢ n`.
pub fn modified_h_degree(n: u32) -> Result<MacTable> {
    if let Some(t) = memo().tables.read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    if n > max_degree() {
        return Err(Error::OutOfRange(format!("degree {n} exceeds the Macdonald degree cap {}", max_degree())));
    }
    let _w = memo().writer.lock().unwrap();
    if let Some(t) = memo().tables.read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let table: MacTable = if n == 0 {
        Arc::new(BTreeMap::from([(Partition::empty(), SymFunc::one())]))
    } else {
        Arc::new(modified_h_gram_schmidt(&default_order(n)))
    };
    memo().tables.write().unwrap().insert(n, table.clone());
    Ok(table)
}

/// `H̃_μ` in the power-sum basis.
pub fn modified_h(mu: &Partition) -> Result<SymFunc> {
    Ok(modified_h_degree(mu.size())?[mu].clone())
}

/// Degrees currently memoized.
pub fn memoized_degrees() -> Vec<u32> {
    let mut v: Vec<u32> = memo().tables.read().unwrap().keys().copied().collect();
    v.sort_unstable();
    v
}

/// Installs a complete table for degree `n` unless one is already present.
/// Returns whether the table was installed.
pub fn install(n: u32, table: BTreeMap<Partition, SymFunc>) -> bool {
    let expected = Partition::all(n);
    if table.len() != expected.len() || !expected.iter().all(|p| table.contains_key(p)) {
        return false;
    }
    let _w = memo().writer.lock().unwrap();
    let mut t = memo().tables.write().unwrap();
    if t.contains_key(&n) {
        return false;
    }
    t.insert(n, Arc::new(table));
    true
}
