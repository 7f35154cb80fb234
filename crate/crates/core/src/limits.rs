//! Size guards for the exhaustive enumerations.
//!
//! `P_(n)` alone has `C(2n, n)` points, and several oracles grow like `n^n` or
//! `n!`, so every enumerating operation refuses inputs above its guard unless
//! the caller raises it.

use crate::error::{Error, Result};

/// Environment variable that raises every `n` guard.
pub const MAX_N_ENV: &str = "COMPOLY_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted when constructing a composition.
    pub composition_n: usize,
    /// Enumeration of `P_σ` and everything derived from it.
    pub enumerate_n: usize,
    /// Brute-force dilate counting.
    pub oracle_n: usize,
    pub oracle_m: usize,
    /// Explicit multichain enumeration.
    pub brute_zeta_n: usize,
    pub brute_zeta_m: usize,
    /// Word enumeration over `[n]^n`.
    pub words_n: usize,
    /// Maximal-chain enumeration.
    pub chains_n: usize,
    /// Exhaustive subset search for the augmentation closure of recording
    /// tuples (`8^n` work).
    pub closure_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            composition_n: 16,
            enumerate_n: 12,
            oracle_n: 8,
            oracle_m: 4,
            brute_zeta_n: 5,
            brute_zeta_m: 3,
            words_n: 8,
            chains_n: 5,
            closure_n: 5,
        }
    }
}

impl Limits {
    /// Raises every `n` guard to at least `max_n`. Guards on the dilation
    /// factor are left alone.
    pub fn with_max_n(mut self, max_n: usize) -> Self {
        for guard in [
            &mut self.composition_n,
            &mut self.enumerate_n,
            &mut self.oracle_n,
            &mut self.brute_zeta_n,
            &mut self.words_n,
            &mut self.chains_n,
            &mut self.closure_n,
        ] {
            *guard = (*guard).max(max_n);
        }
        self
    }

    /// Defaults, raised by `COMPOLY_MAX_N` when it is set to a valid integer.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Limits::default().with_max_n(n),
            None => Limits::default(),
        }
    }

    pub(crate) fn check(
        operation: &'static str,
        param: &'static str,
        value: usize,
        limit: usize,
    ) -> Result<()> {
        if value > limit {
            Err(Error::GuardExceeded {
                operation,
                param,
                value,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
