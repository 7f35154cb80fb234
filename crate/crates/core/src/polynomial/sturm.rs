//! Real-root counting with Sturm sequences over exact rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactPolynomial;
use crate::error::{Error, Result};

/// Real-root summary of a polynomial.
///
/// Counts refer to *distinct* roots: everything is computed on the squarefree
/// part, so a real-rooted polynomial with repeated roots still reports
/// `all_real`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootReport {
    pub degree: usize,
    pub squarefree_degree: usize,
    pub all_real: bool,
    pub distinct_root_count: usize,
    /// Closed interval `[lo, hi]` the interval count refers to.
    pub interval: (BigRational, BigRational),
    pub roots_in_interval: usize,
    /// Half-open `(a, b]`, one distinct real root each, increasing.
    pub isolating_intervals: Vec<(BigRational, BigRational)>,
}

impl RealRootReport {
    /// Every root is real and lies in the closed interval.
    pub fn real_and_inside(&self) -> bool {
        self.all_real && self.roots_in_interval == self.distinct_root_count
    }
}

struct SturmChain(Vec<ExactPolynomial>);

impl SturmChain {
    fn new(p: &ExactPolynomial) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmChain(chain)
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn sign(r: &BigRational) -> i8 {
        if r.is_zero() {
            0
        } else if r.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign variations at `x`. For a squarefree chain head, a root at `x`
    /// does not disturb the count, so `V(a) - V(b)` counts roots in `(a, b]`.
    fn at(&self, x: &BigRational) -> usize {
        Self::variations(self.0.iter().map(|p| Self::sign(&p.eval(x))))
    }

    fn at_infinity(&self, negative: bool) -> usize {
        Self::variations(self.0.iter().map(|p| {
            let s = Self::sign(p.leading().unwrap());
            if negative && p.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.at(lo) - self.at(hi)
    }
}

/// `1 + max |a_i / a_d|`: every root has absolute value below this.
fn cauchy_bound(p: &ExactPolynomial) -> BigRational {
    let lead = p.leading().unwrap().abs();
    let d = p.degree().unwrap();
    let max = p.coeffs()[..d]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

fn isolate(chain: &SturmChain, lo: BigRational, hi: BigRational, out: &mut Vec<(BigRational, BigRational)>) {
    match chain.count(&lo, &hi) {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            isolate(chain, lo, mid.clone(), out);
            isolate(chain, mid, hi, out);
        }
    }
}

pub fn sturm_report(p: &ExactPolynomial, lo: &BigRational, hi: &BigRational) -> Result<RealRootReport> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let sqf = p.squarefree_part();
    let squarefree_degree = sqf.degree().unwrap();
    let interval = (lo.clone(), hi.clone());
    if squarefree_degree == 0 {
        return Ok(RealRootReport {
            degree,
            squarefree_degree,
            all_real: true,
            distinct_root_count: 0,
            interval,
            roots_in_interval: 0,
            isolating_intervals: Vec::new(),
        });
    }
    let chain = SturmChain::new(&sqf);
    let distinct_root_count = chain.at_infinity(true) - chain.at_infinity(false);
    let at_lo = usize::from(sqf.eval(lo).is_zero());
    let roots_in_interval = chain.count(lo, hi) + at_lo;
    let bound = cauchy_bound(&sqf);
    let mut isolating_intervals = Vec::with_capacity(distinct_root_count);
    isolate(&chain, -bound.clone(), bound, &mut isolating_intervals);
    debug_assert_eq!(isolating_intervals.len(), distinct_root_count);
    Ok(RealRootReport {
        degree,
        squarefree_degree,
        all_real: distinct_root_count == squarefree_degree,
        distinct_root_count,
        interval,
        roots_in_interval,
        isolating_intervals,
    })
}
