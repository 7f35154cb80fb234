//! Lattice paths from `(-1, 0)` to `(n, n + 1)`.
//!
//! A point with coordinate sum at most `n` is drawn as the path whose height
//! over the strip `j - 1 ≤ x ≤ j` is `a_1 + ⋯ + a_j`. The path always opens
//! with an east step and closes with a north step.

use std::fmt;

use crate::composition::Composition;
use crate::error::{Error, Result};

use super::points::LatticePoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    /// Validates a step word: `n + 1` of each letter, first `E`, last `N`.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        if steps.len() < 2 || !steps.len().is_multiple_of(2) {
            return Err(Error::InvalidPath(format!("length {}", steps.len())));
        }
        let east = steps.iter().filter(|&&s| s == Step::E).count();
        if east * 2 != steps.len() {
            return Err(Error::InvalidPath("unequal east and north counts".into()));
        }
        if steps[0] != Step::E || steps[steps.len() - 1] != Step::N {
            return Err(Error::InvalidPath("must start with E and end with N".into()));
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn n(&self) -> usize {
        self.steps.len() / 2 - 1
    }

    /// Number of `EN` factors in the step word.
    pub fn en_corners(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::E && w[1] == Step::N)
            .count()
    }

    /// Heights over the strips `j - 1 ≤ x ≤ j`, `j = 1..n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        let mut y = 0;
        // Skip the opening step to (0, 0); each later east step closes a strip.
        for &s in &self.steps[1..] {
            match s {
                Step::N => y += 1,
                Step::E => out.push(y),
            }
        }
        out
    }

    /// The point this path represents.
    pub fn to_point(&self) -> LatticePoint {
        let mut prev = 0;
        LatticePoint::new(
            self.heights()
                .into_iter()
                .map(|h| {
                    let a = h - prev;
                    prev = h;
                    a
                })
                .collect(),
        )
    }

    /// Orthogonal reflection in the line `x + y = n`, traversed from
    /// `(-1, 0)` again: reverse the word and swap `E` with `N`.
    pub fn reflect(&self) -> LatticePath {
        LatticePath {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| match s {
                    Step::E => Step::N,
                    Step::N => Step::E,
                })
                .collect(),
        }
    }

    /// Vertices from `(-1, 0)` to `(n, n + 1)`, for drawing.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut v = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (-1i64, 0i64);
        v.push((x, y));
        for s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::N => y += 1,
            }
            v.push((x, y));
        }
        v
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::E => "E",
                Step::N => "N",
            })?;
        }
        Ok(())
    }
}

fn path_from_coords(coords: &[usize]) -> LatticePath {
    let n = coords.len();
    let mut steps = Vec::with_capacity(2 * n + 2);
    steps.push(Step::E);
    let mut sum = 0;
    for &a in coords {
        steps.extend(std::iter::repeat_n(Step::N, a));
        steps.push(Step::E);
        sum += a;
    }
    steps.extend(std::iter::repeat_n(Step::N, n + 1 - sum));
    LatticePath { steps }
}

pub fn to_path(x: &LatticePoint) -> Result<LatticePath> {
    let (sum, n) = (x.sum(), x.n());
    if sum > n {
        return Err(Error::PathOverflow { sum, n });
    }
    Ok(path_from_coords(x.coords()))
}

/// The staircase `Γ_σ`: one east step, then `r_i` north and `r_i` east steps
/// for each part, then the closing north step.
pub fn gamma_path(sigma: &Composition) -> LatticePath {
    let mut coords = vec![0; sigma.n()];
    for (w, &r) in sigma.partial_sums().windows(2).zip(sigma.parts()) {
        coords[w[0]] = r;
    }
    path_from_coords(&coords)
}

/// `p` never rises above `q`. Both paths share their endpoints, so this is
/// the prefix condition on north-step counts.
pub fn lies_weakly_below(p: &LatticePath, q: &LatticePath) -> bool {
    if p.steps.len() != q.steps.len() {
        return false;
    }
    let (mut np, mut nq) = (0usize, 0usize);
    for (a, b) in p.steps.iter().zip(&q.steps) {
        np += usize::from(*a == Step::N);
        nq += usize::from(*b == Step::N);
        if np > nq {
            return false;
        }
    }
    true
}
