use num_bigint::BigInt;
use num_traits::One;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::lattice_enum::{enumerate_points, for_each_point, LatticePoint};
use crate::limits::Limits;
use crate::polynomial::interpolate::interpolate_consecutive;
use crate::polynomial::{binomial, ExactPolynomial};

/// `Z(P_σ, m + 1)`, the number of `m`-element multichains of `P_σ`.
///
/// `P_σ` is a downset of `ℕⁿ`, so the multichains with top element `a` are
/// all multichains of `ℕⁿ` below `a`: `∏ C(a_i + m - 1, m - 1)` of them.
pub fn zeta_value(sigma: &Composition, m: usize, limits: &Limits) -> Result<BigInt> {
    Limits::check("zeta_value", "n", sigma.n(), limits.enumerate_n)?;
    if m == 0 {
        return Ok(BigInt::one());
    }
    let n = sigma.n();
    let below: Vec<BigInt> = (0..=n)
        .map(|a| binomial(&BigInt::from(a + m - 1), (m - 1) as i64))
        .collect();
    let mut total = BigInt::from(0);
    for_each_point(sigma, |a| {
        total += a.iter().map(|&x| &below[x]).product::<BigInt>();
    });
    Ok(total)
}

/// Counts `m`-multichains `p_1 ⪯ ⋯ ⪯ p_m` by explicit enumeration over
/// `P_σ` with coordinatewise comparison.
pub fn zeta_brute(sigma: &Composition, m: usize, limits: &Limits) -> Result<BigInt> {
    Limits::check("zeta_brute", "n", sigma.n(), limits.brute_zeta_n)?;
    Limits::check("zeta_brute", "m", m, limits.brute_zeta_m)?;
    let points = enumerate_points(sigma, limits)?;

    fn extend(points: &[LatticePoint], last: Option<&LatticePoint>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        points
            .iter()
            .filter(|q| last.is_none_or(|p| p.precedes(q)))
            .map(|q| extend(points, Some(q), left - 1))
            .sum()
    }
    Ok(BigInt::from(extend(&points, None, m)))
}

/// `Z(P_σ, t)`, interpolated at `t = 1, …, n + 2` from `zeta_value` at
/// `m = 0, …, n + 1`. The extra sample must not raise the degree above `n`.
pub fn zeta_polynomial(sigma: &Composition, limits: &Limits) -> Result<ExactPolynomial> {
    let n = sigma.n();
    let values = (0..=n + 1)
        .map(|m| zeta_value(sigma, m, limits))
        .collect::<Result<Vec<_>>>()?;
    let poly = interpolate_consecutive(1, values);
    if poly.degree() != Some(n) {
        return Err(Error::Internal(format!(
            "zeta polynomial of P_({sigma}) has degree {:?}, expected {n}",
            poly.degree()
        )));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::all_compositions;
    use crate::ehrhart_zeta::ehrhart_polynomial;
    use crate::polynomial::{rat, ratio};

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn value_examples() {
        let l = Limits::default();
        let c = comp(&[1, 1]);
        assert_eq!(zeta_value(&c, 0, &l).unwrap(), big(1));
        assert_eq!(zeta_value(&c, 1, &l).unwrap(), big(5));
        // Σ ∏ (a_i + 1) over (0,0),(0,1),(0,2),(1,0),(1,1).
        assert_eq!(1 + 2 + 3 + 2 + 4, 12);
        assert_eq!(zeta_value(&c, 2, &l).unwrap(), big(12));
        assert_eq!(zeta_value(&comp(&[3, 1]), 0, &l).unwrap(), big(1));
    }

    #[test]
    fn brute_examples() {
        let l = Limits::default();
        assert_eq!(zeta_brute(&comp(&[1, 1]), 2, &l).unwrap(), big(12));
        assert_eq!(zeta_brute(&comp(&[1]), 2, &l).unwrap(), big(3));
        assert_eq!(zeta_brute(&comp(&[2, 1]), 1, &l).unwrap(), big(16));
        assert_eq!(zeta_brute(&comp(&[2, 1]), 0, &l).unwrap(), big(1));
        assert!(zeta_brute(&comp(&[6]), 1, &l).is_err());
        assert!(zeta_brute(&comp(&[2]), 4, &l).is_err());
    }

    #[test]
    fn routes_agree() {
        let l = Limits::default();
        for n in 1..=5 {
            for c in all_compositions(n).unwrap() {
                for m in 0..=3 {
                    assert_eq!(zeta_value(&c, m, &l).unwrap(), zeta_brute(&c, m, &l).unwrap(), "{c} m={m}");
                }
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        let l = Limits::default();
        let z = zeta_polynomial(&comp(&[1, 1]), &l).unwrap();
        // Z(P, m + 1) = (m + 1)(3m + 2)/2.
        let shifted = z.shift(&rat(1));
        assert_eq!(shifted.coeffs(), &[rat(1), ratio(5, 2), ratio(3, 2)]);
        let z1 = zeta_polynomial(&comp(&[1]), &l).unwrap();
        assert_eq!(z1.shift(&rat(1)), ExactPolynomial::from_i64s(&[1, 1]));
        let lhs = zeta_polynomial(&comp(&[2, 1]), &l).unwrap().shift(&rat(1));
        let rhs = ehrhart_polynomial(&comp(&[1, 2]), &l).unwrap();
        assert_eq!(lhs, rhs);
    }
}
