use num_rational::BigRational;

use super::ExactPolynomial;
use crate::error::{Error, Result};

/// The unique polynomial of degree `< points.len()` through the given points,
/// via Newton divided differences.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<ExactPolynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateAbscissa(xi.to_string()));
        }
    }
    let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    // table[i] becomes f[x_0, …, x_i] after the sweep.
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            let num = &table[i] - &table[i - 1];
            table[i] = num / (xs[i] - xs[i - level]);
        }
    }
    // Nested form c_0 + (t - x_0)(c_1 + (t - x_1)(c_2 + …)).
    let mut acc = ExactPolynomial::zero();
    for i in (0..points.len()).rev() {
        let lin = ExactPolynomial::new(vec![-xs[i].clone(), BigRational::from_integer(1.into())]);
        acc = &(&acc * &lin) + &ExactPolynomial::constant(table[i].clone());
    }
    Ok(acc)
}

/// Interpolates integer samples at `x = start, start + 1, …`.
pub(crate) fn interpolate_consecutive<I>(start: i64, values: I) -> ExactPolynomial
where
    I: IntoIterator<Item = num_bigint::BigInt>,
{
    let pts: Vec<_> = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            (
                BigRational::from_integer((start + i as i64).into()),
                BigRational::from_integer(v),
            )
        })
        .collect();
    if pts.is_empty() {
        return ExactPolynomial::zero();
    }
    interpolate(&pts).expect("consecutive abscissae are distinct")
}
