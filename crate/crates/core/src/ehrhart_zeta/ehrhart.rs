use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::lattice_enum::for_each_point;
use crate::limits::Limits;
use crate::polynomial::interpolate::interpolate_consecutive;
use crate::polynomial::{binomial, ExactPolynomial};

/// Counts `a ∈ ℕⁿ` with `a_1 + ⋯ + a_{s_i} ≤ m·s_i` by pruned depth-first
/// search. The innermost coordinate is counted in closed form.
pub fn ehrhart_count_oracle(sigma: &Composition, m: usize, limits: &Limits) -> Result<BigInt> {
    Limits::check("ehrhart_count_oracle", "n", sigma.n(), limits.oracle_n)?;
    Limits::check("ehrhart_count_oracle", "m", m, limits.oracle_m)?;
    let caps: Vec<usize> = sigma.prefix_caps().into_iter().map(|c| c * m).collect();

    fn rec(caps: &[usize], sum: usize) -> u128 {
        match caps {
            [last] => (last - sum + 1) as u128,
            [cap, rest @ ..] => (0..=cap - sum).map(|a| rec(rest, sum + a)).sum(),
            [] => 1,
        }
    }
    Ok(BigInt::from(rec(&caps, 0)))
}

/// `(κ_1, …, κ_n) ∈ ℕⁿ` with total `n` and `κ_1 + ⋯ + κ_{s_i} ≥ s_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KTuple(pub Vec<usize>);

impl KTuple {
    pub fn kappas(&self) -> &[usize] {
        &self.0
    }

    /// `C(m+κ_1, κ_1) · ∏_{i≥2} C(m+κ_i-1, κ_i)`.
    pub fn weight(&self, m: &BigInt) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let top = if i == 0 { m + k } else { m + k - 1usize };
                binomial(&top, k as i64)
            })
            .product()
    }
}

/// All tuples of `K_σ`, lexicographically increasing.
pub fn enumerate_k(sigma: &Composition, limits: &Limits) -> Result<Vec<KTuple>> {
    Limits::check("enumerate_K", "n", sigma.n(), limits.enumerate_n)?;
    let n = sigma.n();
    // floor[j] = lower bound on κ_1 + ⋯ + κ_{j+1}: s_i at a cut, 0 elsewhere.
    let mut floor = vec![0usize; n];
    for &s in sigma.cuts() {
        floor[s - 1] = s;
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    fn rec(floor: &[usize], n: usize, sum: usize, buf: &mut Vec<usize>, out: &mut Vec<KTuple>) {
        let j = buf.len();
        if j == n {
            if sum == n {
                out.push(KTuple(buf.clone()));
            }
            return;
        }
        let (lo, hi) = if j + 1 == n {
            (n - sum, n - sum)
        } else {
            (floor[j].saturating_sub(sum), n - sum)
        };
        for k in lo..=hi {
            buf.push(k);
            rec(floor, n, sum + k, buf, out);
            buf.pop();
        }
    }
    rec(&floor, n, 0, &mut buf, &mut out);
    Ok(out)
}

fn sp_sum(kappas: &[KTuple], m: usize) -> BigInt {
    let m = BigInt::from(m);
    kappas.iter().map(|k| k.weight(&m)).sum()
}

/// `Ehr(Q_σ, m)` as the closed sum over `K_σ`.
pub fn ehrhart_sp(sigma: &Composition, m: usize, limits: &Limits) -> Result<BigInt> {
    Ok(sp_sum(&enumerate_k(sigma, limits)?, m))
}

/// `Ehr(Q_σ, m)` for `m = 0..=max_m` from the closed sum, sharing one
/// enumeration of `K_σ`.
pub fn ehrhart_values(sigma: &Composition, max_m: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    let kappas = enumerate_k(sigma, limits)?;
    Ok((0..=max_m).map(|m| sp_sum(&kappas, m)).collect())
}

/// Interpolates the closed sum at `m = 0..=n`, then checks it against the
/// brute-force count at `m ≤ 3` (when `n` is within the oracle guard) and at
/// `m = 1` against the enumeration of `P_σ`.
pub fn ehrhart_polynomial(sigma: &Composition, limits: &Limits) -> Result<ExactPolynomial> {
    let n = sigma.n();
    let values = ehrhart_values(sigma, n, limits)?;
    if !values[0].is_one() {
        return Err(Error::Internal(format!(
            "Ehr(Q_({sigma}), 0) = {} from the closed sum",
            values[0]
        )));
    }
    let poly = interpolate_consecutive(0, values);
    if poly.degree() != Some(n) || !poly.leading().is_some_and(Signed::is_positive) {
        return Err(Error::Internal(format!(
            "Ehrhart polynomial of ({sigma}) has degree {:?}, leading {:?}",
            poly.degree(),
            poly.leading().map(ToString::to_string)
        )));
    }
    if n <= limits.oracle_n {
        for m in 0..=limits.oracle_m.min(3) {
            let brute = ehrhart_count_oracle(sigma, m, limits)?;
            let from_poly = poly.eval_int(m as i64);
            if from_poly != num_rational::BigRational::from_integer(brute.clone()) {
                return Err(Error::Internal(format!(
                    "Ehr(Q_({sigma}), {m}): polynomial gives {from_poly}, brute force {brute}"
                )));
            }
        }
    } else if n <= limits.enumerate_n {
        let mut count = BigInt::zero();
        for_each_point(sigma, |_| count += 1);
        if poly.eval_int(1) != num_rational::BigRational::from_integer(count.clone()) {
            return Err(Error::Internal(format!(
                "Ehr(Q_({sigma}), 1) disagrees with |P_σ| = {count}"
            )));
        }
    }
    Ok(poly)
}
