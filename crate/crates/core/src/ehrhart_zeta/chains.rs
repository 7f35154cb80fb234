//! Maximal chains of `P̂_σ = P_σ ∪ {1̂}` and their descent statistic.
//!
//! A cover in `P_σ` raises one coordinate by one. Coordinate `i` is labeled
//! `n + 1 - i`, and every step into `1̂` is labeled `1`. Under this labeling
//! the descent generating function of the maximal chains is the
//! h-polynomial of the order complex of `P_σ`, which is `h*(Q_rev(σ), t)`.
//!
//! Labeling the raw coordinate index instead does not work here: `P_σ`
//! bounds prefix sums, and the coordinate that only meets the total
//! constraint is the last one, so it is the one that must carry label `1`.

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::Result;
use crate::lattice_enum::LatticePoint;
use crate::limits::Limits;
use crate::polynomial::ExactPolynomial;

/// Label sequences of all maximal chains from the origin to `1̂`, in the
/// order the depth-first search meets them.
pub fn maximal_chain_labels(sigma: &Composition, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let n = sigma.n();
    Limits::check("el_chain_h", "n", n, limits.chains_n)?;

    fn walk(
        sigma: &Composition,
        point: &mut LatticePoint,
        coords: &mut Vec<usize>,
        labels: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = coords.len();
        let mut extended = false;
        for i in 0..n {
            coords[i] += 1;
            *point = LatticePoint::new(coords.clone());
            if point.in_polytope(sigma) {
                extended = true;
                labels.push(n - i);
                walk(sigma, point, coords, labels, out);
                labels.pop();
            }
            coords[i] -= 1;
        }
        if !extended {
            let mut chain = labels.clone();
            chain.push(1);
            out.push(chain);
        }
    }

    let mut out = Vec::new();
    let mut coords = vec![0; n];
    let mut point = LatticePoint::zero(n);
    walk(sigma, &mut point, &mut coords, &mut Vec::with_capacity(n + 1), &mut out);
    Ok(out)
}

fn descents(labels: &[usize]) -> usize {
    labels.windows(2).filter(|w| w[0] > w[1]).count()
}

/// `Σ_C t^des(C)` over the maximal chains of `P̂_σ`.
pub fn el_chain_h(sigma: &Composition, limits: &Limits) -> Result<ExactPolynomial> {
    let chains = maximal_chain_labels(sigma, limits)?;
    let mut hist = vec![0u64; sigma.n() + 1];
    for c in &chains {
        hist[descents(c)] += 1;
    }
    Ok(ExactPolynomial::from_bigints(hist.into_iter().map(BigInt::from)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::all_compositions;
    use crate::ehrhart_zeta::hstar_from_series;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_part_one() {
        let l = Limits::default();
        assert_eq!(maximal_chain_labels(&comp(&[1]), &l).unwrap(), vec![vec![1, 1]]);
        assert_eq!(el_chain_h(&comp(&[1]), &l).unwrap(), ExactPolynomial::one());
    }

    #[test]
    fn one_one() {
        let l = Limits::default();
        let mut chains = maximal_chain_labels(&comp(&[1, 1]), &l).unwrap();
        chains.sort();
        assert_eq!(chains, vec![vec![1, 1, 1], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(el_chain_h(&comp(&[1, 1]), &l).unwrap(), ExactPolynomial::from_i64s(&[1, 2]));
    }

    #[test]
    fn matches_series_of_reverse() {
        let l = Limits::default();
        for n in 1..=4 {
            for c in all_compositions(n).unwrap() {
                assert_eq!(
                    el_chain_h(&c.reverse(), &l).unwrap(),
                    hstar_from_series(&c, &l).unwrap(),
                    "{c}"
                );
            }
        }
        assert_eq!(
            el_chain_h(&comp(&[2, 1]), &l).unwrap(),
            hstar_from_series(&comp(&[1, 2]), &l).unwrap()
        );
    }

    #[test]
    fn chain_count_one_part() {
        // Maximal chains of P_(n) are words in [n]^n: n^n of them.
        let l = Limits::default();
        assert_eq!(maximal_chain_labels(&comp(&[3]), &l).unwrap().len(), 27);
        assert!(el_chain_h(&comp(&[6]), &l).is_err());
    }
}
