use num_bigint::BigInt;
use num_traits::Signed;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polynomial::{binomial, ExactPolynomial};

use super::ehrhart::ehrhart_values;

/// `h*_i = Σ_{j=0}^{i} (-1)^j C(n+1, j) Ehr(i - j)` for `i = 0..=n`.
///
/// Fails loudly if any coefficient is negative or `h*_0 ≠ 1`; for a lattice
/// polytope either signals a bug upstream.
pub fn hstar_from_series(sigma: &Composition, limits: &Limits) -> Result<ExactPolynomial> {
    let n = sigma.n();
    let ehr = ehrhart_values(sigma, n, limits)?;
    let top = BigInt::from(n + 1);
    let coeffs: Vec<BigInt> = (0..=n)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let term = binomial(&top, j as i64) * &ehr[i - j];
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    if let Some(bad) = coeffs.iter().find(|c| c.is_negative()) {
        return Err(Error::Internal(format!(
            "h*-polynomial of Q_({sigma}) has negative coefficient {bad}"
        )));
    }
    if coeffs[0] != BigInt::from(1) {
        return Err(Error::Internal(format!("h*_0 of Q_({sigma}) is {}", coeffs[0])));
    }
    Ok(ExactPolynomial::from_bigints(coeffs))
}

/// A word `(w_1, …, w_n) ∈ [n]^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    /// Indices `i ∈ [n]` with `w_{i-1} < w_i`, where `w_0 = 1`.
    pub fn ascents(&self) -> usize {
        let mut prev = 1;
        self.0
            .iter()
            .filter(|&&w| {
                let up = w > prev;
                prev = w;
                up
            })
            .count()
    }
}

/// At least `s_i` letters are `≤ s_i`, for every cut `s_i` of `σ`.
pub fn word_is_admissible(sigma: &Composition, w: &Word) -> bool {
    let n = sigma.n();
    w.0.len() == n
        && w.0.iter().all(|&x| (1..=n).contains(&x))
        && sigma
            .cuts()
            .iter()
            .all(|&s| w.0.iter().filter(|&&x| x <= s).count() >= s)
}

/// `Σ_w t^asc(w)` over admissible words, walking `[n]^n` depth first and
/// cutting a branch as soon as some cut `s_i` can no longer collect `s_i`
/// small letters in the positions left.
pub fn hstar_words(sigma: &Composition, limits: &Limits) -> Result<ExactPolynomial> {
    let n = sigma.n();
    Limits::check("hstar_words", "n", n, limits.words_n)?;
    let cuts = sigma.cuts();

    struct Walk<'a> {
        n: usize,
        cuts: &'a [usize],
        small: Vec<usize>,
        hist: Vec<u64>,
    }

    impl Walk<'_> {
        fn go(&mut self, depth: usize, prev: usize, asc: usize) {
            let left = self.n - depth;
            if self.cuts.iter().zip(&self.small).any(|(&s, &c)| c + left < s) {
                return;
            }
            if left == 0 {
                self.hist[asc] += 1;
                return;
            }
            for v in 1..=self.n {
                for (c, &s) in self.small.iter_mut().zip(self.cuts) {
                    if v <= s {
                        *c += 1;
                    }
                }
                self.go(depth + 1, v, asc + usize::from(v > prev));
                for (c, &s) in self.small.iter_mut().zip(self.cuts) {
                    if v <= s {
                        *c -= 1;
                    }
                }
            }
        }
    }

    let mut walk = Walk {
        n,
        cuts,
        small: vec![0; cuts.len()],
        hist: vec![0; n + 1],
    };
    walk.go(0, 1, 0);
    Ok(ExactPolynomial::from_bigints(walk.hist.into_iter().map(BigInt::from)))
}
