//! Palindromicity, unimodality and the γ-expansion.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactPolynomial;
use crate::error::{Error, Result};

/// `c_i = c_{n-i}` for `0 ≤ i ≤ n`. False when `deg p > n`.
pub fn is_palindromic(p: &ExactPolynomial, n: usize) -> bool {
    if p.degree().is_some_and(|d| d > n) {
        return false;
    }
    (0..=n / 2).all(|i| p.coeff(i) == p.coeff(n - i))
}

/// Coefficients `c_0, …, c_deg` weakly rise, then weakly fall.
pub fn is_unimodal(p: &ExactPolynomial) -> bool {
    let c = p.coeffs();
    let mut i = 1;
    while i < c.len() && c[i - 1] <= c[i] {
        i += 1;
    }
    while i < c.len() && c[i - 1] >= c[i] {
        i += 1;
    }
    i >= c.len()
}

fn gamma_term(g: &BigRational, i: usize, n: usize) -> ExactPolynomial {
    let one_plus_t = ExactPolynomial::new(vec![BigRational::one(), BigRational::one()]);
    &ExactPolynomial::monomial(g.clone(), i) * &one_plus_t.pow((n - 2 * i) as u32)
}

/// `(γ_0, …, γ_⌊n/2⌋)` with `p = Σ γ_i t^i (1+t)^{n-2i}`. Peels one term at
/// a time: `γ_i` is the `t^i` coefficient of what remains. Entries may be
/// negative or fractional; positivity is checked by callers.
pub fn gamma_expand(p: &ExactPolynomial, n: usize) -> Result<Vec<BigRational>> {
    if !is_palindromic(p, n) {
        return Err(Error::NotPalindromic(n));
    }
    let mut residual = p.clone();
    let mut gamma = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let g = residual.coeff(i);
        if !g.is_zero() {
            residual = &residual - &gamma_term(&g, i, n);
        }
        gamma.push(g);
    }
    if !residual.is_zero() {
        return Err(Error::Internal(format!(
            "γ-expansion left residual {residual} for palindromic input"
        )));
    }
    Ok(gamma)
}

/// `Σ γ_i t^i (1+t)^{n-2i}`.
pub fn gamma_rebuild(gamma: &[BigRational], n: usize) -> ExactPolynomial {
    gamma
        .iter()
        .enumerate()
        .filter(|(i, _)| 2 * i <= n)
        .fold(ExactPolynomial::zero(), |acc, (i, g)| &acc + &gamma_term(g, i, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&p(&[1, 7, 7, 1]), 3));
        assert!(is_unimodal(&p(&[1, 7, 7, 1])));
        assert!(!is_palindromic(&p(&[1, 2, 0]), 2));
        assert!(is_palindromic(&p(&[1]), 0));
        assert!(is_unimodal(&p(&[1])));
        assert!(!is_palindromic(&p(&[1, 1]), 0));
        // Palindromic about a larger center.
        assert!(is_palindromic(&p(&[0, 1, 1]), 3));
    }

    #[test]
    fn unimodal_examples() {
        assert!(is_unimodal(&p(&[1, 3, 3, 2, 2, 1])));
        assert!(!is_unimodal(&p(&[1, 0, 1])));
        assert!(!is_unimodal(&p(&[2, 1, 2])));
        assert!(is_unimodal(&ExactPolynomial::zero()));
        assert!(is_unimodal(&p(&[5, 4, 3])));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_expand(&p(&[1, 4, 1]), 2).unwrap(), ints(&[1, 2]));
        assert_eq!(gamma_expand(&p(&[1, 7, 7, 1]), 3).unwrap(), ints(&[1, 4]));
        for n in 0..7usize {
            let b = p(&[1, 1]).pow(n as u32);
            let mut expect = vec![0; n / 2 + 1];
            expect[0] = 1;
            assert_eq!(gamma_expand(&b, n).unwrap(), ints(&expect));
        }
        assert!(matches!(
            gamma_expand(&p(&[1, 2, 0]), 2),
            Err(Error::NotPalindromic(2))
        ));
        // Not γ-positive, but still expandable.
        assert_eq!(gamma_expand(&p(&[1, 1, 1]), 2).unwrap(), ints(&[1, -1]));
    }

    proptest! {
        #[test]
        fn expand_inverts_rebuild(g in prop::collection::vec(-20i64..20, 1..5), extra in 0usize..3) {
            let n = 2 * (g.len() - 1) + extra;
            let gamma = ints(&g);
            let poly = gamma_rebuild(&gamma, n);
            prop_assert!(is_palindromic(&poly, n));
            prop_assert_eq!(gamma_rebuild(&gamma_expand(&poly, n).unwrap(), n), poly.clone());
            let mut padded = gamma.clone();
            padded.resize(n / 2 + 1, rat(0));
            prop_assert_eq!(gamma_expand(&poly, n).unwrap(), padded);
        }
    }
}
