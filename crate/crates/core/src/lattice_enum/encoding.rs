//! Recording tuples: a point `a ∈ P_σ` is stored by writing the prefix sum
//! `a_1 + ⋯ + a_i` at every position `i` with `a_i ≥ 1`, and `0` elsewhere.

use crate::composition::Composition;
use crate::error::{Error, Result};

use super::points::LatticePoint;

/// A tuple of zeros and strictly increasing positive entries. `S` is the set
/// of (1-based) positions of the nonzero entries, `T` the set of their values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HTuple(Vec<usize>);

impl HTuple {
    /// Validates the tuple shape and membership in `H_σ`.
    pub fn new(sigma: &Composition, entries: Vec<usize>) -> Result<Self> {
        let bad = |reason: String| Error::InvalidHTuple {
            tuple: entries.clone(),
            reason,
        };
        let n = sigma.n();
        if entries.len() != n {
            return Err(bad(format!("length {} but n = {n}", entries.len())));
        }
        let caps = sigma.prefix_caps();
        let mut prev = 0;
        for (j, &p) in entries.iter().enumerate() {
            if p == 0 {
                continue;
            }
            if p <= prev {
                return Err(bad(format!(
                    "nonzero entries must strictly increase (position {})",
                    j + 1
                )));
            }
            if p > caps[j] {
                return Err(bad(format!(
                    "entry {p} at position {} exceeds the bound {}",
                    j + 1,
                    caps[j]
                )));
            }
            prev = p;
        }
        Ok(HTuple(entries))
    }

    /// Builds the tuple with values `T` placed in increasing order at the
    /// positions `S` (both 1-based, any order), validated against `H_σ`.
    pub fn from_sets(sigma: &Composition, positions: &[usize], values: &[usize]) -> Result<Self> {
        let n = sigma.n();
        let mut s = positions.to_vec();
        let mut t = values.to_vec();
        s.sort_unstable();
        t.sort_unstable();
        let invalid = |reason: &str| Error::InvalidHTuple {
            tuple: Vec::new(),
            reason: format!("S = {s:?}, T = {t:?}: {reason}"),
        };
        if s.len() != t.len() {
            return Err(invalid("|S| != |T|"));
        }
        if s.windows(2).any(|w| w[0] == w[1]) || t.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("repeated element"));
        }
        if s.iter().chain(&t).any(|&v| v == 0 || v > n) {
            return Err(invalid("element outside [n]"));
        }
        let mut entries = vec![0; n];
        for (&pos, &val) in s.iter().zip(&t) {
            entries[pos - 1] = val;
        }
        HTuple::new(sigma, entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `|S| = |T|`.
    pub fn size(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// `S`, 1-based and increasing.
    pub fn positions(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// `T`, increasing.
    pub fn values(&self) -> Vec<usize> {
        self.0.iter().copied().filter(|&p| p > 0).collect()
    }

    /// `S` as a bitmask, bit `i - 1` for position `i`. Requires `n ≤ 64`.
    pub fn position_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .fold(0, |m, (j, _)| m | 1 << j)
    }

    /// `T` as a bitmask, bit `v - 1` for value `v`. Requires `n ≤ 64`.
    pub fn value_mask(&self) -> u64 {
        self.0
            .iter()
            .filter(|&&p| p > 0)
            .fold(0, |m, &p| m | 1 << (p - 1))
    }
}

pub(crate) fn encode_unchecked(a: &[usize]) -> HTuple {
    let mut acc = 0;
    HTuple(
        a.iter()
            .map(|&x| {
                acc += x;
                if x > 0 {
                    acc
                } else {
                    0
                }
            })
            .collect(),
    )
}

pub fn encode(sigma: &Composition, x: &LatticePoint) -> Result<HTuple> {
    x.ensure_in(sigma, 1)?;
    Ok(encode_unchecked(x.coords()))
}

pub fn decode(sigma: &Composition, h: &HTuple) -> Result<LatticePoint> {
    // Re-validate: an HTuple may have been built for a different composition.
    let h = HTuple::new(sigma, h.0.clone())?;
    let mut prev = 0;
    let coords = h
        .0
        .iter()
        .map(|&p| {
            if p == 0 {
                0
            } else {
                let a = p - prev;
                prev = p;
                a
            }
        })
        .collect();
    Ok(LatticePoint::new(coords))
}

/// Whether `(S, T)` is the position/value pair of some tuple in `H_σ`.
pub fn realize(sigma: &Composition, positions: &[usize], values: &[usize]) -> Option<HTuple> {
    HTuple::from_sets(sigma, positions, values).ok()
}

fn mask_to_set(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Exhaustively searches for triples `(S, T, R)` with `|S| = |T|`,
/// `R ≠ ∅` disjoint from `S ∪ T`, where realizability of `(S, T)` and of
/// `(S ∪ R, T ∪ R)` differ. Returns every counterexample as bitmasks.
pub fn closure_violations(sigma: &Composition) -> Vec<(u32, u32, u32)> {
    let n = sigma.n();
    assert!(n <= 16, "closure search is exponential in n");
    let full: u32 = (1u32 << n) - 1;
    let ok = |s: u32, t: u32| realize(sigma, &mask_to_set(s), &mask_to_set(t)).is_some();
    let mut bad = Vec::new();
    for s in 0..=full {
        for t in 0..=full {
            if s.count_ones() != t.count_ones() {
                continue;
            }
            let base = ok(s, t);
            let free = full & !(s | t);
            // Nonempty submasks of `free`.
            let mut r = free;
            while r != 0 {
                if ok(s | r, t | r) != base {
                    bad.push((s, t, r));
                }
                r = (r - 1) & free;
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_enum::enumerate_points;
    use crate::limits::Limits;
    use std::collections::HashSet;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn encode_running_example() {
        let c = comp(&[3, 4, 2]);
        let x = LatticePoint::new(vec![0, 0, 2, 0, 4, 0, 0, 3, 0]);
        let h = encode(&c, &x).unwrap();
        assert_eq!(h.entries(), &[0, 0, 2, 0, 6, 0, 0, 9, 0]);
        assert_eq!(h.positions(), vec![3, 5, 8]);
        assert_eq!(h.values(), vec![2, 6, 9]);
        assert_eq!(decode(&c, &h).unwrap(), x);
    }

    #[test]
    fn encode_zero_and_full() {
        let c = comp(&[2, 1]);
        let z = encode(&c, &LatticePoint::zero(3)).unwrap();
        assert_eq!(z.entries(), &[0, 0, 0]);
        assert_eq!(decode(&c, &z).unwrap(), LatticePoint::zero(3));
        let h = encode(&c, &LatticePoint::new(vec![1, 1, 1])).unwrap();
        assert_eq!(h.entries(), &[1, 2, 3]);
        assert_eq!(
            decode(&c, &HTuple::new(&c, vec![1, 2, 3]).unwrap()).unwrap(),
            LatticePoint::new(vec![1, 1, 1])
        );
    }

    #[test]
    fn encode_rejects_outside() {
        let c = comp(&[1, 1]);
        assert!(matches!(
            encode(&c, &LatticePoint::new(vec![2, 0])),
            Err(Error::NotInPolytope { .. })
        ));
    }

    #[test]
    fn htuple_validation() {
        let c = comp(&[2, 1]);
        assert!(HTuple::new(&c, vec![2, 1, 0]).is_err());
        assert!(HTuple::new(&c, vec![0, 3, 0]).is_err());
        assert!(HTuple::new(&c, vec![1, 1, 0]).is_err());
        assert!(HTuple::new(&c, vec![1, 2]).is_err());
        assert!(HTuple::new(&c, vec![0, 2, 3]).is_ok());
        // A tuple valid for (2,1) is not valid for (1,2).
        let h = HTuple::new(&c, vec![2, 0, 0]).unwrap();
        assert!(decode(&comp(&[1, 2]), &h).is_err());
    }

    #[test]
    fn from_sets_places_sorted_values() {
        let c = comp(&[3, 4, 2]);
        let h = HTuple::from_sets(&c, &[8, 3, 5], &[9, 2, 6]).unwrap();
        assert_eq!(h.entries(), &[0, 0, 2, 0, 6, 0, 0, 9, 0]);
        assert!(HTuple::from_sets(&c, &[1], &[4]).is_err());
        assert!(HTuple::from_sets(&c, &[1, 2], &[1]).is_err());
    }

    #[test]
    fn bijection_small() {
        let l = Limits::default();
        for n in 1..=7 {
            for c in crate::all_compositions(n).unwrap() {
                let pts = enumerate_points(&c, &l).unwrap();
                let mut seen = HashSet::new();
                for x in &pts {
                    let h = encode(&c, x).unwrap();
                    assert_eq!(h.size(), x.nonzero_count());
                    assert_eq!(decode(&c, &h).unwrap(), *x);
                    assert!(seen.insert(h));
                }
            }
        }
    }

    #[test]
    fn encode_is_onto_h_sigma() {
        // Brute-force H_σ over all tuples in {0..n}^n and compare sizes.
        for c in crate::all_compositions(4).unwrap() {
            let n = c.n();
            let mut count = 0;
            let mut t = vec![0usize; n];
            loop {
                if HTuple::new(&c, t.clone()).is_ok() {
                    count += 1;
                }
                let mut i = 0;
                while i < n && t[i] == n {
                    t[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                t[i] += 1;
            }
            assert_eq!(count, enumerate_points(&c, &Limits::default()).unwrap().len());
        }
    }

    #[test]
    fn closure_holds_small() {
        for n in 1..=4 {
            for c in crate::all_compositions(n).unwrap() {
                assert!(closure_violations(&c).is_empty(), "{c}");
            }
        }
    }
}
