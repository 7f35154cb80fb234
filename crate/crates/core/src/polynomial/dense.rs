use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense coefficient vector, index = degree. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `t`.
    pub fn t() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    /// `c · t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// `∏ (t - r)` over the given roots.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), BigRational::one()])
        })
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `p(t + c)`.
    pub fn shift(&self, c: &BigRational) -> Self {
        let lin = Self::new(vec![c.clone(), BigRational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &lin) + &Self::constant(a.clone())
        })
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&top| top >= d) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); top - d + 1];
        for k in (0..=top - d).rev() {
            let q = &rem[k + d] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Coefficients as integers, if all are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Canonical strings `"p/q"` or `"p"`, low degree first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Human-readable rendering in the variable `var`, e.g. `1 + 7t + t^2`.
    pub fn pretty(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}{mono}"));
            } else {
                out.push_str(&format!("({mag}){mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("t"))
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_i64s(c)
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(&a * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&a - &a, ExactPolynomial::zero());
        assert_eq!(p(&[1, 3, 3, 1]).derivative(), p(&[3, 6, 3]));
        assert_eq!(p(&[0, 0, 1]).shift(&rat(1)), p(&[1, 2, 1]));
    }

    #[test]
    fn division_and_gcd() {
        let f = p(&[-1, 0, 0, 1]); // t³ - 1
        let g = p(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let sq = &p(&[1, 1]).pow(3) * &p(&[2, 1]);
        assert_eq!(sq.squarefree_part().monic(), p(&[2, 3, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), p(&[ 1, 2]).monic());
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(p(&[1, 7, 7, 1]).pretty("t"), "1 + 7t + 7t^2 + t^3");
        assert_eq!(p(&[0, -1, 2]).pretty("t"), "-t + 2t^2");
        assert_eq!(ExactPolynomial::zero().pretty("t"), "0");
        let q = ExactPolynomial::new(vec![rat(1), ratio(5, 2), ratio(3, 2)]);
        assert_eq!(q.pretty("t"), "1 + (5/2)t + (3/2)t^2");
        assert_eq!(q.coeff_strings(), vec!["1", "5/2", "3/2"]);
    }

    fn arb_poly() -> impl Strategy<Value = ExactPolynomial> {
        prop::collection::vec(-9i64..9, 0..6).prop_map(|c| ExactPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()) || r.is_zero());
        }

        #[test]
        fn shift_is_evaluation_shift(a in arb_poly(), c in -5i64..5, x in -5i64..5) {
            prop_assert_eq!(a.shift(&rat(c)).eval_int(x), a.eval_int(x + c));
        }
    }
}
