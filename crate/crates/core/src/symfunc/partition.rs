//! Integer partitions and their cell geometry.

use crate::error::{Error, Result};
use crate::qfield::Int;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Weakly decreasing positive parts. Ordered by size, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(SmallVec<[u8; 16]>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(SmallVec::new())
    }

    pub fn new(parts: &[u32]) -> Partition {
        let mut v: SmallVec<[u8; 16]> = parts
            .iter()
            .filter(|&&p| p > 0)
            .map(|&p| u8::try_from(p).expect("part too large"))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Partition {
        Partition::new(&[n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Partition {
        Partition::new(&vec![1; n as usize])
    }

    /// The hook `(n-k, 1^k)`.
    pub fn hook(n: u32, k: u32) -> Partition {
        let mut p = vec![n - k];
        p.extend(std::iter::repeat_n(1, k as usize));
        Partition::new(&p)
    }

    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&p| p as u32)
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).map(|&p| p as u32).unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_hook(&self) -> bool {
        self.part(1) <= 1
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        let parts: Vec<u32> = (0..m).map(|j| self.parts().filter(|&p| p > j).count() as u32).collect();
        Partition::new(&parts)
    }

    /// `m_k` for `k = 1..=max part`, indexed by `k`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.part(0) as usize + 1];
        for p in self.parts() {
            m[p as usize] += 1;
        }
        m
    }

    /// `z_λ = ∏ k^{m_k} m_k!`.
    pub fn z(&self) -> Int {
        let mut acc = Int::ONE;
        for (k, &mk) in self.multiplicities().iter().enumerate().skip(1) {
            for i in 1..=mk {
                acc = acc.mul(&Int::from((k as i64) * i as i64));
            }
        }
        acc
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u32 {
        self.parts().enumerate().map(|(i, p)| i as u32 * p).sum()
    }

    /// Cells `(row, col)`, both zero based.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts().enumerate().flat_map(|(i, p)| (0..p).map(move |j| (i as u32, j)))
    }

    pub fn arm(&self, i: u32, j: u32) -> u32 {
        self.part(i as usize) - j - 1
    }

    pub fn leg(&self, i: u32, j: u32) -> u32 {
        self.parts().skip(i as usize + 1).filter(|&p| p > j).count() as u32
    }

    /// Co-arm of a cell: cells strictly to the left.
    pub fn coarm(&self, _i: u32, j: u32) -> u32 {
        j
    }

    /// Co-leg of a cell: cells strictly below (French notation).
    pub fn coleg(&self, i: u32, _j: u32) -> u32 {
        i
    }

    /// `(-1)^{|λ| - ℓ(λ)}`.
    pub fn sign(&self) -> i64 {
        if (self.size() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiset union (the index of `p_λ p_μ`).
    pub fn union(&self, o: &Partition) -> Partition {
        let mut v: Vec<u32> = self.parts().chain(o.parts()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v)
    }

    /// Multiset difference, if `o` is a sub-multiset.
    pub fn minus(&self, o: &Partition) -> Option<Partition> {
        let mut v: Vec<u32> = self.parts().collect();
        for p in o.parts() {
            let pos = v.iter().position(|&x| x == p)?;
            v.remove(pos);
        }
        Some(Partition::new(&v))
    }

    /// Diagram containment `o ⊆ self`.
    pub fn contains(&self, o: &Partition) -> bool {
        o.len() <= self.len() && o.parts().zip(self.parts()).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ≥ o` (same size assumed).
    pub fn dominates(&self, o: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(o.len()) {
            a += self.part(i);
            b += o.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, ascending in the crate order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen(n, n, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of size at most `n`, ascending.
    pub fn up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// Parts joined with `sep`; the empty partition renders as `0`.
    pub fn join(&self, sep: &str) -> String {
        if self.is_empty() {
            return "0".into();
        }
        self.parts().map(|p| p.to_string()).collect::<Vec<_>>().join(sep)
    }

    /// Parses `3,1`, `3.1`, `3-1`, `(3,1)`, `[3 1]`; `0`, `()` and the empty string give `∅`.
    pub fn parse(s: &str) -> Result<Partition> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let mut parts = Vec::new();
        for tok in t.split([',', '.', '-', ' ']).filter(|x| !x.is_empty()) {
            let p: u32 = tok.parse().map_err(|_| Error::Parse(format!("bad partition '{s}'")))?;
            if p > 255 {
                return Err(Error::Parse(format!("part too large in '{s}'")));
            }
            parts.push(p);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts must be weakly decreasing: '{s}'")));
        }
        Ok(Partition::new(&parts))
    }
}

fn gen(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::new(cur));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        gen(n - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, o: &Self) -> Ordering {
        self.size().cmp(&o.size()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.parts().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let p3 = Partition::all(3);
        assert_eq!(p3[0], Partition::new(&[1, 1, 1]));
        assert_eq!(p3[2], Partition::new(&[3]));
    }

    #[test]
    fn statistics() {
        let l = Partition::new(&[3, 1]);
        assert_eq!(l.z(), Int::from(3));
        assert_eq!(Partition::new(&[2, 2]).z(), Int::from(8));
        assert_eq!(l.conjugate(), Partition::new(&[2, 1, 1]));
        assert_eq!(l.n_stat(), 1);
        assert_eq!(l.arm(0, 0), 2);
        assert_eq!(l.leg(0, 0), 1);
        assert!(Partition::new(&[4]).dominates(&l));
        assert!(!Partition::new(&[2, 2, 2]).dominates(&Partition::new(&[3, 1, 1, 1])));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("3-1").unwrap(), Partition::new(&[3, 1]));
        assert_eq!(Partition::parse("(2,1,1)").unwrap(), Partition::new(&[2, 1, 1]));
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert_eq!(Partition::new(&[3, 1]).join("-"), "3-1");
    }
}
