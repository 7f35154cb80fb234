//! Prefix-sum profiles of dilate points.
//!
//! For `a` in the `m`-th dilate of `Q_σ`, `b_j` counts the indices `i` with
//! `a_1 + ⋯ + a_i = j`, for `j = 1..mn`. The slack `b_0 = n - Σ b_j` is
//! implicit.

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::lattice_enum::LatticePoint;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BProfile {
    b: Vec<usize>,
    m: usize,
}

impl BProfile {
    /// Validates `b_{s_i m + 1} + ⋯ + b_{mn} ≤ n - s_i` for `i < k` and
    /// `b_1 + ⋯ + b_{mn} ≤ n`.
    pub fn new(sigma: &Composition, m: usize, b: Vec<usize>) -> Result<Self> {
        let n = sigma.n();
        let bad = |reason: String| Error::InvalidBProfile {
            profile: b.clone(),
            reason,
        };
        if m == 0 {
            return Err(Error::NonPositive("m"));
        }
        if b.len() != m * n {
            return Err(bad(format!("length {} but m·n = {}", b.len(), m * n)));
        }
        if b.iter().sum::<usize>() > n {
            return Err(bad(format!("total exceeds n = {n}")));
        }
        for &s in &sigma.cuts()[..sigma.len() - 1] {
            let tail: usize = b[s * m..].iter().sum();
            if tail > n - s {
                return Err(bad(format!("b_{}.. sums to {tail} > {}", s * m + 1, n - s)));
            }
        }
        Ok(BProfile { b, m })
    }

    /// `(b_1, …, b_{mn})`.
    pub fn values(&self) -> &[usize] {
        &self.b
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn slack(&self) -> usize {
        self.b.len() / self.m - self.b.iter().sum::<usize>()
    }
}

pub fn dilate_to_bprofile(sigma: &Composition, m: usize, a: &LatticePoint) -> Result<BProfile> {
    if m == 0 {
        return Err(Error::NonPositive("m"));
    }
    a.ensure_in(sigma, m)?;
    let mut b = vec![0usize; m * sigma.n()];
    let mut acc = 0;
    for &x in a.coords() {
        acc += x;
        if acc > 0 {
            b[acc - 1] += 1;
        }
    }
    BProfile::new(sigma, m, b)
}

/// Rebuilds the nondecreasing prefix sums from the profile and differences
/// them.
pub fn bprofile_to_dilate(sigma: &Composition, m: usize, b: &BProfile) -> Result<LatticePoint> {
    let b = BProfile::new(sigma, m, b.b.clone())?;
    let mut sums = vec![0usize; b.slack()];
    for (j, &count) in b.b.iter().enumerate() {
        sums.extend(std::iter::repeat_n(j + 1, count));
    }
    let mut prev = 0;
    let coords = sums
        .into_iter()
        .map(|s| {
            let a = s - prev;
            prev = s;
            a
        })
        .collect();
    let point = LatticePoint::new(coords);
    point.ensure_in(sigma, m)?;
    Ok(point)
}

/// Every solution of the profile inequalities, found by searching `ℕ^{mn}`
/// directly (not through the dilate).
pub fn enumerate_bprofiles(sigma: &Composition, m: usize, limits: &Limits) -> Result<Vec<BProfile>> {
    Limits::check("enumerate_bprofiles", "n", sigma.n(), limits.oracle_n)?;
    Limits::check("enumerate_bprofiles", "m", m, limits.oracle_m)?;
    if m == 0 {
        return Err(Error::NonPositive("m"));
    }
    let n = sigma.n();
    let len = m * n;
    let mut out = Vec::new();
    let mut buf = vec![0usize; len];
    fn rec(
        sigma: &Composition,
        m: usize,
        j: usize,
        left: usize,
        buf: &mut Vec<usize>,
        out: &mut Vec<BProfile>,
    ) {
        if j == buf.len() {
            if let Ok(p) = BProfile::new(sigma, m, buf.clone()) {
                out.push(p);
            }
            return;
        }
        for v in 0..=left {
            buf[j] = v;
            rec(sigma, m, j + 1, left - v, buf, out);
        }
        buf[j] = 0;
    }
    rec(sigma, m, 0, n, &mut buf, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::all_compositions;
    use crate::ehrhart_zeta::ehrhart_count_oracle;
    use crate::lattice_enum::enumerate_points;
    use std::collections::BTreeSet;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn forward_examples() {
        let c = comp(&[1, 1]);
        let b = dilate_to_bprofile(&c, 1, &LatticePoint::new(vec![1, 1])).unwrap();
        assert_eq!(b.values(), &[1, 1]);
        assert_eq!(b.slack(), 0);
        let z = dilate_to_bprofile(&c, 2, &LatticePoint::zero(2)).unwrap();
        assert_eq!(z.values(), &[0, 0, 0, 0]);
        assert_eq!(z.slack(), 2);
        assert!(dilate_to_bprofile(&c, 1, &LatticePoint::new(vec![2, 0])).is_err());
        assert!(dilate_to_bprofile(&c, 0, &LatticePoint::zero(2)).is_err());
    }

    #[test]
    fn one_one_exhaustive() {
        let c = comp(&[1, 1]);
        let l = Limits::default();
        let image: BTreeSet<BProfile> = enumerate_points(&c, &l)
            .unwrap()
            .iter()
            .map(|a| dilate_to_bprofile(&c, 1, a).unwrap())
            .collect();
        let all: BTreeSet<BProfile> = enumerate_bprofiles(&c, 1, &l).unwrap().into_iter().collect();
        assert_eq!(image.len(), 5);
        assert_eq!(image, all);
    }

    #[test]
    fn validation() {
        let c = comp(&[1, 1]);
        // b_2 ≤ n - s_1 = 1.
        assert!(BProfile::new(&c, 1, vec![0, 2]).is_err());
        assert!(BProfile::new(&c, 1, vec![2, 0]).is_ok());
        assert!(BProfile::new(&c, 1, vec![2, 1]).is_err());
        assert!(BProfile::new(&c, 1, vec![1]).is_err());
    }

    #[test]
    fn bijection_small() {
        let l = Limits::default();
        for n in 1..=4 {
            for c in all_compositions(n).unwrap() {
                for m in 1..=2 {
                    let mut dilate = Vec::new();
                    crate::lattice_enum::for_each_dilate_point(&c, m, |a| dilate.push(LatticePoint::new(a.to_vec())));
                    let image: BTreeSet<BProfile> = dilate
                        .iter()
                        .map(|a| {
                            let b = dilate_to_bprofile(&c, m, a).unwrap();
                            assert_eq!(&bprofile_to_dilate(&c, m, &b).unwrap(), a);
                            b
                        })
                        .collect();
                    assert_eq!(image.len(), dilate.len());
                    let all = enumerate_bprofiles(&c, m, &l).unwrap();
                    for b in &all {
                        assert_eq!(dilate_to_bprofile(&c, m, &bprofile_to_dilate(&c, m, b).unwrap()).unwrap(), *b);
                    }
                    assert_eq!(all.into_iter().collect::<BTreeSet<_>>(), image);
                    assert_eq!(
                        num_bigint::BigInt::from(dilate.len()),
                        ehrhart_count_oracle(&c, m, &l).unwrap()
                    );
                }
            }
        }
    }
}
