//! Character tables and basis transitions, built once per degree.

use super::partition::Partition;
use super::sf::SymFunc;
use crate::qfield::{Int, Rat};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

/// The classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    E,
    H,
    P,
    M,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::M => 'm',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        Some(match c {
            'e' => Basis::E,
            'h' => Basis::H,
            'p' => Basis::P,
            'm' => Basis::M,
            's' => Basis::S,
            _ => return None,
        })
    }
}

/// Per-degree data: partitions, characters and the monomial basis.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `chi[λ][ρ]`, the irreducible character at cycle type `ρ`.
    chi: Vec<Vec<i64>>,
    /// `m_λ` expanded in power sums.
    m_basis: Vec<SymFunc>,
}

impl DegreeTables {
    pub fn idx(&self, l: &Partition) -> usize {
        self.index[l]
    }

    pub fn chi(&self, l: &Partition, r: &Partition) -> i64 {
        self.chi[self.idx(l)][self.idx(r)]
    }

    pub fn m(&self, l: &Partition) -> &SymFunc {
        &self.m_basis[self.idx(l)]
    }
}

type TableMap = RwLock<HashMap<u32, Arc<DegreeTables>>>;

fn tables_store() -> &'static (TableMap, Mutex<()>) {
    static S: OnceLock<(TableMap, Mutex<()>)> = OnceLock::new();
    S.get_or_init(|| (RwLock::new(HashMap::new()), Mutex::new(())))
}

/// Tables for degree `n`, built on first use. Construction is serialized.
pub fn tables(n: u32) -> Arc<DegreeTables> {
    let (map, lock) = tables_store();
    if let Some(t) = map.read().unwrap().get(&n) {
        return t.clone();
    }
    let _g = lock.lock().unwrap();
    if let Some(t) = map.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_tables(n));
    map.write().unwrap().insert(n, t.clone());
    t
}

fn build_tables(n: u32) -> DegreeTables {
    let parts = Partition::all(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut memo = HashMap::new();
    let chi: Vec<Vec<i64>> = parts.iter().map(|l| parts.iter().map(|r| character(l, r, &mut memo)).collect()).collect();
    let m_basis = monomial_basis(&parts);
    DegreeTables { parts, index, chi, m_basis }
}

fn beta_set(l: &Partition) -> Vec<i64> {
    let len = l.len() as i64;
    l.parts().enumerate().map(|(i, p)| p as i64 + len - 1 - i as i64).collect()
}

fn from_beta(mut b: Vec<i64>) -> Partition {
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len() as i64;
    let parts: Vec<u32> = b.iter().enumerate().map(|(i, x)| (x - (len - 1 - i as i64)) as u32).collect();
    Partition::new(&parts)
}

/// Murnaghan–Nakayama rule via beta-sets.
fn character(l: &Partition, r: &Partition, memo: &mut HashMap<(Partition, Partition), i64>) -> i64 {
    if r.is_empty() {
        return if l.is_empty() { 1 } else { 0 };
    }
    if l.size() != r.size() {
        return 0;
    }
    if let Some(&v) = memo.get(&(l.clone(), r.clone())) {
        return v;
    }
    let k = r.part(0) as i64;
    let rest = Partition::new(&r.parts().skip(1).collect::<Vec<_>>());
    let beta = beta_set(l);
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - k;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > nb && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        total += sign * character(&from_beta(nbeta), &rest, memo);
    }
    memo.insert((l.clone(), r.clone()), total);
    total
}

/// Number of ways to distribute the parts of `r` into rows with sums `l`.
fn p_to_m_coeff(r: &Partition, l: &Partition) -> i64 {
    fn go(parts: &[u32], rem: &mut Vec<u32>) -> i64 {
        match parts.split_first() {
            None => rem.iter().all(|&x| x == 0) as i64,
            Some((&p, rest)) => {
                let mut c = 0;
                for j in 0..rem.len() {
                    if rem[j] >= p {
                        rem[j] -= p;
                        c += go(rest, rem);
                        rem[j] += p;
                    }
                }
                c
            }
        }
    }
    let parts: Vec<u32> = r.parts().collect();
    let mut rem: Vec<u32> = l.parts().collect();
    go(&parts, &mut rem)
}

/// Inverts `p_ρ = Σ_λ L[ρ][λ] m_λ`, processing partitions in dominance order refined lexicographically.
fn monomial_basis(parts: &[Partition]) -> Vec<SymFunc> {
    let n = parts.len();
    let l: Vec<Vec<i64>> = parts.iter().map(|r| parts.iter().map(|x| p_to_m_coeff(r, x)).collect()).collect();
    let mut a: Vec<Vec<Rat>> = l.iter().map(|row| row.iter().map(|&x| Rat::int(x)).collect()).collect();
    let mut inv: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| Rat::int((i == j) as i64)).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("p-to-m transition is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let pv = a[col][col].inv().unwrap();
        for j in 0..n {
            a[col][j] = &a[col][j] * &pv;
            inv[col][j] = &inv[col][j] * &pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    // p = L m  ⇒  m = L^{-1} p, so m_λ = Σ_ρ inv[λ][ρ] p_ρ.
    (0..n)
        .map(|li| {
            let c: BTreeMap<Partition, Rat> = (0..n).map(|ri| (parts[ri].clone(), inv[li][ri].clone())).collect();
            SymFunc::from_map(c)
        })
        .collect()
}

fn z_rat(l: &Partition) -> Rat {
    Rat::from_int(l.z())
}

/// `h_n`; zero for negative `n`.
pub fn h(n: i64) -> SymFunc {
    if n < 0 {
        return SymFunc::zero();
    }
    let parts = Partition::all(n as u32);
    SymFunc::from_map(parts.into_iter().map(|r| (r.clone(), Rat::one() / z_rat(&r))).collect())
}

/// `e_n`; zero for negative `n`.
pub fn e(n: i64) -> SymFunc {
    if n < 0 {
        return SymFunc::zero();
    }
    let parts = Partition::all(n as u32);
    SymFunc::from_map(parts.into_iter().map(|r| (r.clone(), Rat::int(r.sign()) / z_rat(&r))).collect())
}

/// `p_n`; zero for negative `n`.
pub fn p(n: i64) -> SymFunc {
    if n < 0 {
        SymFunc::zero()
    } else {
        SymFunc::p_n(n as u32)
    }
}

pub fn s(l: &Partition) -> SymFunc {
    let n = l.size();
    let t = tables(n);
    SymFunc::from_map(t.parts.iter().map(|r| (r.clone(), Rat::int(t.chi(l, r)) / z_rat(r))).collect())
}

pub fn m(l: &Partition) -> SymFunc {
    tables(l.size()).m(l).clone()
}

/// Basis element indexed by a partition; products for `e`, `h`, `p`.
pub fn basis_element(b: Basis, l: &Partition) -> SymFunc {
    match b {
        Basis::P => SymFunc::p(l),
        Basis::S => s(l),
        Basis::M => m(l),
        Basis::E => l.parts().fold(SymFunc::one(), |acc, k| acc.mul(&e(k as i64))),
        Basis::H => l.parts().fold(SymFunc::one(), |acc, k| acc.mul(&h(k as i64))),
    }
}

/// Expansion in the requested basis, ordered by partition.
pub fn to_basis(f: &SymFunc, b: Basis) -> BTreeMap<Partition, Rat> {
    let mut out = BTreeMap::new();
    if b == Basis::P {
        for (l, r) in f.terms() {
            out.insert(l.clone(), r.clone());
        }
        return out;
    }
    let src = if b == Basis::E { f.omega() } else { f.clone() };
    for n in src.degrees() {
        let comp = src.component(n);
        let t = tables(n);
        for l in &t.parts {
            let c = match b {
                Basis::S => {
                    let v: Vec<Rat> = comp.terms().map(|(r, x)| x.mul_int(&Int::from(t.chi(l, r)))).collect();
                    Rat::sum(&v)
                }
                Basis::M => hall_local(&comp, &basis_element(Basis::H, l)),
                Basis::H | Basis::E => hall_local(&comp, t.m(l)),
                Basis::P => unreachable!(),
            };
            if !c.is_zero() {
                out.insert(l.clone(), c);
            }
        }
    }
    out
}

pub fn from_basis(b: Basis, coeffs: &BTreeMap<Partition, Rat>) -> SymFunc {
    let elems: Vec<(Rat, SymFunc)> = coeffs.iter().map(|(l, c)| (c.clone(), basis_element(b, l))).collect();
    SymFunc::lincomb(elems.iter().map(|(c, f)| (c.clone(), f)))
}

pub fn to_schur(f: &SymFunc) -> BTreeMap<Partition, Rat> {
    to_basis(f, Basis::S)
}

fn hall_local(f: &SymFunc, g: &SymFunc) -> Rat {
    let v: Vec<Rat> = f
        .terms()
        .filter_map(|(l, a)| {
            let b = g.coeff(l);
            (!b.is_zero()).then(|| (a * &b).mul_int(&l.z()))
        })
        .collect();
    Rat::sum(&v)
}

/// Renders an expansion as `b[λ] : c` lines.
pub fn render_basis(f: &SymFunc, b: Basis) -> String {
    let m = to_basis(f, b);
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .map(|(l, c)| format!("{}[{}] : {}", b.letter(), l.parts().map(|p| p.to_string()).collect::<Vec<_>>().join(","), c))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: &[u32]) -> Partition {
        Partition::new(x)
    }

    #[test]
    fn character_table_degree_three() {
        let t = tables(3);
        assert_eq!(t.chi(&pt(&[2, 1]), &pt(&[1, 1, 1])), 2);
        assert_eq!(t.chi(&pt(&[2, 1]), &pt(&[3])), -1);
        assert_eq!(t.chi(&pt(&[1, 1, 1]), &pt(&[2, 1])), -1);
        assert_eq!(t.chi(&pt(&[3]), &pt(&[2, 1])), 1);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let t = tables(n);
            for r in &t.parts {
                let s: i64 = t.parts.iter().map(|l| t.chi(l, r) * t.chi(l, r)).sum();
                assert_eq!(Int::from(s), r.z(), "degree {n}, class {r}");
            }
        }
    }

    #[test]
    fn newton_h2() {
        let expect = SymFunc::lincomb([(Rat::frac(1, 2), &SymFunc::p(&pt(&[1, 1]))), (Rat::frac(1, 2), &SymFunc::p_n(2))]);
        assert_eq!(h(2), expect);
        assert_eq!(e(0), SymFunc::one());
        assert_eq!(h(-1), SymFunc::zero());
    }

    #[test]
    fn schur_round_trip_and_examples() {
        let p11 = SymFunc::p(&pt(&[1, 1]));
        let sc = to_schur(&p11);
        assert_eq!(sc.len(), 2);
        assert!(sc.values().all(|c| c.is_one()));
        assert_eq!(to_schur(&e(2)), BTreeMap::from([(pt(&[1, 1]), Rat::one())]));
        for l in Partition::up_to(5) {
            for b in [Basis::S, Basis::M, Basis::E, Basis::H] {
                let f = basis_element(b, &l);
                let back = to_basis(&f, b);
                assert_eq!(back, BTreeMap::from([(l.clone(), Rat::one())]), "{b:?} {l}");
            }
        }
    }

    #[test]
    fn monomial_in_low_degree() {
        // m_{11} = (p_1^2 - p_2)/2
        let expect = SymFunc::lincomb([(Rat::frac(1, 2), &SymFunc::p(&pt(&[1, 1]))), (Rat::frac(-1, 2), &SymFunc::p_n(2))]);
        assert_eq!(m(&pt(&[1, 1])), expect);
    }
}
