//! Integer compositions and their partial-sum profiles.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A composition `(r_1, …, r_k)` of `n` with cached partial sums
/// `(s_0 = 0, s_1, …, s_k = n)`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    partial_sums: Vec<usize>,
}

impl Composition {
    /// Builds a composition under the default construction guard.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Self::with_limits(parts, &Limits::default())
    }

    pub fn with_limits(parts: Vec<usize>, limits: &Limits) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse {
                position: 0,
                token: String::new(),
                reason: "composition needs at least one part".into(),
            });
        }
        if let Some(pos) = parts.iter().position(|&r| r == 0) {
            return Err(Error::Parse {
                position: pos,
                token: "0".into(),
                reason: "part must be at least 1".into(),
            });
        }
        let mut partial_sums = Vec::with_capacity(parts.len() + 1);
        partial_sums.push(0usize);
        let mut acc = 0usize;
        for &r in &parts {
            acc = acc.checked_add(r).ok_or(Error::GuardExceeded {
                operation: "composition",
                param: "n",
                value: usize::MAX,
                limit: limits.composition_n,
            })?;
            partial_sums.push(acc);
        }
        Limits::check("composition", "n", acc, limits.composition_n)?;
        Ok(Composition {
            parts,
            partial_sums,
        })
    }

    /// Parses `"r1,r2,…,rk"` under the default guard.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, &Limits::default())
    }

    pub fn parse_with(text: &str, limits: &Limits) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse {
                position: 0,
                token: text.to_string(),
                reason: "empty input".into(),
            });
        }
        let mut parts = Vec::new();
        let mut total = 0usize;
        for (position, raw) in text.split(',').enumerate() {
            let token = raw.trim();
            let err = |reason: &str| Error::Parse {
                position,
                token: token.to_string(),
                reason: reason.to_string(),
            };
            if token.is_empty() {
                return Err(err("is empty"));
            }
            if !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("is not a positive decimal integer"));
            }
            let value: usize = token
                .parse()
                .map_err(|_| err("overflows the size bound"))?;
            if value == 0 {
                return Err(err("part must be at least 1"));
            }
            total = total.saturating_add(value);
            if total > limits.composition_n {
                return Err(err(&format!(
                    "pushes n past the size guard {} (raise it with --max-n or COMPOLY_MAX_N)",
                    limits.composition_n
                )));
            }
            parts.push(value);
        }
        Self::with_limits(parts, limits)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `k`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The integer being composed.
    pub fn n(&self) -> usize {
        self.partial_sums[self.parts.len()]
    }

    /// `(s_0, s_1, …, s_k)` with `s_0 = 0`.
    pub fn partial_sums(&self) -> &[usize] {
        &self.partial_sums
    }

    /// `(s_1, …, s_k)`: the positions at which a prefix constraint applies.
    pub fn cuts(&self) -> &[usize] {
        &self.partial_sums[1..]
    }

    /// For each position `j ∈ [n]` (0-based index `j - 1`), the tightest prefix
    /// bound `min { s_i : s_i ≥ j }`.
    pub fn prefix_caps(&self) -> Vec<usize> {
        let mut caps = Vec::with_capacity(self.n());
        for w in self.partial_sums.windows(2) {
            caps.extend(std::iter::repeat_n(w[1], w[1] - w[0]));
        }
        caps
    }

    pub fn reverse(&self) -> Composition {
        let parts: Vec<usize> = self.parts.iter().rev().copied().collect();
        let mut partial_sums = Vec::with_capacity(parts.len() + 1);
        partial_sums.push(0);
        for &r in &parts {
            partial_sums.push(partial_sums.last().unwrap() + r);
        }
        Composition {
            parts,
            partial_sums,
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::parse(s)
    }
}

/// All `2^(n-1)` compositions of `n`, in decreasing lexicographic order of
/// their parts: `(n)` first, `(1, …, 1)` last.
pub fn all_compositions(n: usize) -> Result<Vec<Composition>> {
    all_compositions_with(n, &Limits::default())
}

pub fn all_compositions_with(n: usize, limits: &Limits) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    Limits::check("all_compositions", "n", n, limits.composition_n)?;
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=rest).rev() {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::with_capacity(1 << (n - 1));
    rec(n, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|parts| Composition::with_limits(parts, limits))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_running_example() {
        let c = Composition::parse("3,4,2").unwrap();
        assert_eq!(c.parts(), &[3, 4, 2]);
        assert_eq!(c.n(), 9);
        assert_eq!(c.partial_sums(), &[0, 3, 7, 9]);
        assert_eq!(c.prefix_caps(), vec![3, 3, 3, 7, 7, 7, 7, 9, 9]);
    }

    #[test]
    fn parse_single_part() {
        let c: Composition = "1".parse().unwrap();
        assert_eq!(c.parts(), &[1]);
        assert_eq!(c.n(), 1);
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        match Composition::parse("0,2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        match Composition::parse("2,-1") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        match Composition::parse("1,2,x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        assert!(Composition::parse("").is_err());
        assert!(Composition::parse("1,,2").is_err());
        assert!(Composition::parse("1.5").is_err());
    }

    #[test]
    fn parse_respects_guard() {
        assert!(Composition::parse("16").is_ok());
        match Composition::parse("10,7") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        let raised = Limits::default().with_max_n(40);
        assert_eq!(Composition::parse_with("10,7", &raised).unwrap().n(), 17);
        assert!(Composition::parse("99999999999999999999999").is_err());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(comp(&[3, 4, 2]).reverse(), comp(&[2, 4, 3]));
        assert_eq!(comp(&[5]).reverse(), comp(&[5]));
        assert_eq!(comp(&[1, 2]).reverse(), comp(&[2, 1]));
        assert_eq!(comp(&[1, 2]).reverse().partial_sums(), &[0, 2, 3]);
    }

    #[test]
    fn all_compositions_small() {
        let c3: Vec<Vec<usize>> = all_compositions(3)
            .unwrap()
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(c3, vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
        assert_eq!(all_compositions(1).unwrap(), vec![comp(&[1])]);
        assert_eq!(all_compositions(5).unwrap().len(), 16);
        assert!(all_compositions(0).is_err());
    }

    #[test]
    fn all_compositions_counts_and_distinct() {
        for n in 1..=10 {
            let all = all_compositions(n).unwrap();
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(|c| c.n() == n));
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
        }
    }

    proptest! {
        #[test]
        fn reverse_is_involution(parts in prop::collection::vec(1usize..5, 1..5)) {
            let c = Composition::new(parts).unwrap();
            prop_assert_eq!(c.reverse().reverse(), c.clone());
            prop_assert_eq!(c.reverse().n(), c.n());
        }

        #[test]
        fn display_parse_roundtrip(parts in prop::collection::vec(1usize..5, 1..4)) {
            let c = Composition::new(parts).unwrap();
            prop_assert_eq!(Composition::parse(&c.to_string()).unwrap(), c);
        }
    }
}
