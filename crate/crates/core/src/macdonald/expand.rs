use super::memo::modified_h_degree;
use super::stats::stats;
use crate::error::Result;
use crate::qfield::Rat;
use crate::symfunc::{star, Partition, SymFunc};
use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

type Coeffs = BTreeMap<Partition, Rat>;

const MEMO_LIMIT: usize = 50_000;

/// A bounded process-wide memo; it is emptied when full.
struct Memo<K, V> {
    map: OnceLock<Mutex<HashMap<K, V>>>,
}

impl<K: Hash + Eq, V: Clone> Memo<K, V> {
    const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    fn get_or(&self, key: K, compute: impl FnOnce() -> Result<V>) -> Result<V> {
        let map = self.map.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = map.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = compute()?;
        let mut m = map.lock().unwrap();
        if m.len() >= MEMO_LIMIT {
            m.clear();
        }
        m.insert(key, v.clone());
        Ok(v)
    }

    fn clear(&self) {
        if let Some(m) = self.map.get() {
            m.lock().unwrap().clear();
        }
    }
}

static EXPANSIONS: Memo<SymFunc, Coeffs> = Memo::new();
static RESUMS: Memo<Coeffs, SymFunc> = Memo::new();

/// Drops memoized expansions, e.g. after installing a different `H̃` table.
pub fn clear_expansion_memo() {
    EXPANSIONS.clear();
    RESUMS.clear();
}

/// Coefficients `c_μ = ⟨f, H̃_μ⟩_* / w_μ` with `f = Σ c_μ H̃_μ`.
pub fn mac_expand(f: &SymFunc) -> Result<Coeffs> {
    let mut out = BTreeMap::new();
    for n in f.degrees() {
        let fn_ = f.component(n);
        let part = EXPANSIONS.get_or(fn_.clone(), || {
            let mut c = BTreeMap::new();
            for (mu, h) in modified_h_degree(n)?.iter() {
                let x = star(&fn_, h);
                if !x.is_zero() {
                    c.insert(mu.clone(), x / stats(mu).w);
                }
            }
            Ok(c)
        })?;
        out.extend(part);
    }
    Ok(out)
}

/// `Σ c_μ H̃_μ`.
pub fn mac_resum(c: &Coeffs) -> Result<SymFunc> {
    RESUMS.get_or(c.clone(), || {
        let mut hs = Vec::with_capacity(c.len());
        for (mu, x) in c {
            hs.push((x.clone(), modified_h_degree(mu.size())?[mu].clone()));
        }
        Ok(SymFunc::lincomb(hs.iter().map(|(x, h)| (x.clone(), h))))
    })
}

/// Applies the operator that is diagonal on `H̃_μ` with eigenvalue `spec(μ)`.
pub fn apply_diagonal(f: &SymFunc, spec: impl Fn(&Partition) -> Result<Rat>) -> Result<SymFunc> {
    let mut c = mac_expand(f)?;
    for (mu, x) in c.iter_mut() {
        *x = &*x * &spec(mu)?;
    }
    mac_resum(&c)
}
