use std::ops::Index;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::encoding::encode_unchecked;

/// A point `(a_1, …, a_n) ∈ ℕⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<usize>);

impl LatticePoint {
    pub fn new(coords: Vec<usize>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(n: usize) -> Self {
        LatticePoint(vec![0; n])
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<usize> {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&a| a > 0).count()
    }

    /// Coordinatewise order of `ℕⁿ`.
    pub fn precedes(&self, other: &LatticePoint) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Membership in the `m`-th dilate: `a_1 + ⋯ + a_{s_i} ≤ m·s_i` for all `i`.
    pub fn in_dilate(&self, sigma: &Composition, m: usize) -> bool {
        if self.0.len() != sigma.n() {
            return false;
        }
        let mut acc = 0;
        let mut next = 0;
        let cuts = sigma.cuts();
        for (j, &a) in self.0.iter().enumerate() {
            acc += a;
            if j + 1 == cuts[next] {
                if acc > m * cuts[next] {
                    return false;
                }
                next += 1;
            }
        }
        true
    }

    /// Membership in `P_σ`.
    pub fn in_polytope(&self, sigma: &Composition) -> bool {
        self.in_dilate(sigma, 1)
    }

    pub(crate) fn ensure_in(&self, sigma: &Composition, m: usize) -> Result<()> {
        if self.in_dilate(sigma, m) {
            Ok(())
        } else {
            Err(Error::NotInPolytope {
                point: self.0.clone(),
                what: if m == 1 {
                    format!("the prefix constraints of P_({sigma})")
                } else {
                    format!("the prefix constraints of the {m}-dilate of Q_({sigma})")
                },
            })
        }
    }
}

impl Index<usize> for LatticePoint {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl From<Vec<usize>> for LatticePoint {
    fn from(v: Vec<usize>) -> Self {
        LatticePoint(v)
    }
}

/// Visits every `a ∈ ℕⁿ` with `a_1 + ⋯ + a_j ≤ caps[j-1]` for all `j`, in
/// lexicographic order. `caps` must be nondecreasing.
pub(crate) fn visit_capped(caps: &[usize], mut f: impl FnMut(&[usize])) {
    fn rec(caps: &[usize], depth: usize, sum: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if depth == caps.len() {
            f(buf);
            return;
        }
        for a in 0..=(caps[depth] - sum) {
            buf.push(a);
            rec(caps, depth + 1, sum + a, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(caps.len());
    rec(caps, 0, 0, &mut buf, &mut f);
}

/// Visits the points of `P_σ` in lexicographic order without materializing
/// them. Unguarded.
pub fn for_each_point(sigma: &Composition, f: impl FnMut(&[usize])) {
    visit_capped(&sigma.prefix_caps(), f);
}

/// Visits the points of the `m`-th dilate of `Q_σ` in lexicographic order.
/// Unguarded.
pub fn for_each_dilate_point(sigma: &Composition, m: usize, f: impl FnMut(&[usize])) {
    let caps: Vec<usize> = sigma.prefix_caps().into_iter().map(|c| c * m).collect();
    visit_capped(&caps, f);
}

pub fn enumerate_points(sigma: &Composition, limits: &Limits) -> Result<Vec<LatticePoint>> {
    Limits::check("enumerate_points", "n", sigma.n(), limits.enumerate_n)?;
    let mut out = Vec::new();
    for_each_point(sigma, |a| out.push(LatticePoint(a.to_vec())));
    Ok(out)
}

/// `h_i(σ)`: the number of points of `P_σ` with exactly `i` nonzero coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(pub Vec<u64>);

impl HVector {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// `γ_i(σ)` for `0 ≤ i ≤ ⌊n/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector(pub Vec<i64>);

impl GammaVector {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&g| g >= 0)
    }
}

fn bump(slot: &mut u64, overflow: &mut bool) {
    match slot.checked_add(1) {
        Some(v) => *slot = v,
        None => *overflow = true,
    }
}

pub fn h_vector(sigma: &Composition, limits: &Limits) -> Result<HVector> {
    Limits::check("h_vector", "n", sigma.n(), limits.enumerate_n)?;
    let mut h = vec![0u64; sigma.n() + 1];
    let mut overflow = false;
    for_each_point(sigma, |a| {
        let i = a.iter().filter(|&&x| x > 0).count();
        bump(&mut h[i], &mut overflow);
    });
    if overflow {
        return Err(Error::CountOverflow("h_vector"));
    }
    Ok(HVector(h))
}

/// γ-vector by filtering the recording tuples: `γ_i` counts those whose
/// position set and value set are disjoint and of size `i`.
pub fn gamma_direct(sigma: &Composition, limits: &Limits) -> Result<GammaVector> {
    Limits::check("gamma_direct", "n", sigma.n(), limits.enumerate_n.min(64))?;
    let n = sigma.n();
    let mut gamma = vec![0u64; n / 2 + 1];
    let mut overflow = false;
    for_each_point(sigma, |a| {
        let h = encode_unchecked(a);
        if h.position_mask() & h.value_mask() == 0 {
            bump(&mut gamma[h.size()], &mut overflow);
        }
    });
    if overflow {
        return Err(Error::CountOverflow("gamma_direct"));
    }
    gamma
        .into_iter()
        .map(|g| i64::try_from(g).map_err(|_| Error::CountOverflow("gamma_direct")))
        .collect::<Result<Vec<_>>>()
        .map(GammaVector)
}
