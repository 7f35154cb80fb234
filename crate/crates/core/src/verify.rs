//! Identity sweeps over every composition of `n`.
//!
//! Each [`Check`] compares two independent computations (or a computation
//! against a structural property) for one composition. A check whose inputs
//! exceed a size guard is reported as skipped rather than failed.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::composition::{all_compositions_with, Composition};
use crate::ehrhart_zeta::{
    bprofile_to_dilate, dilate_to_bprofile, ehrhart_count_oracle, ehrhart_polynomial, ehrhart_values,
    el_chain_h, enumerate_bprofiles, hstar_from_series, hstar_words, zeta_brute, zeta_polynomial,
    zeta_value,
};
use crate::error::{Error, Result};
use crate::lattice_enum::{
    closure_violations, decode, encode, enumerate_points, for_each_dilate_point, gamma_direct,
    gamma_path, h_vector, lies_weakly_below, to_path, HVector, LatticePoint,
};
use crate::limits::Limits;
use crate::polynomial::{
    gamma_expand, gamma_rebuild, is_palindromic, is_unimodal, sturm_report, ExactPolynomial,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// encode/decode are inverse and encode is injective.
    Bijection,
    /// `Σ γ_i t^i (1+t)^{n-2i}` with the filtered γ equals `h(σ, t)`, and the
    /// polynomial peel recovers the same γ.
    Sieve,
    /// γ nonnegative, h palindromic and unimodal with `h_0 = h_n = 1`.
    GammaPositive,
    /// `h(σ) = h(rev σ)`.
    Reversal,
    /// Membership below `Γ_σ`, the corner statistic, and the reflection onto
    /// the paths of `rev σ`.
    Paths,
    /// Realizability of `(S, T)` is unchanged by adding `R` to both.
    Closure,
    /// Brute dilate counts equal the closed sum over `K_σ`.
    EhrhartRoutes,
    /// Product-formula multichain counts equal explicit enumeration.
    ZetaRoutes,
    /// `Ehr(Q_σ, m) = Z(P_rev σ, m + 1)`.
    EhrhartZeta,
    /// h* from the Ehrhart series equals the word count.
    HstarWords,
    /// h* from the Ehrhart series equals the chain-descent count on `rev σ`.
    ElChains,
    /// Dilate points and prefix-sum profiles are in bijection.
    BProfile,
    /// `h*_0 = 1`, `h*_i ≥ 0`, `Σ h*_i = n!·lead(Ehr)`, `Ehr(1) = Σ h_i`.
    CrossModule,
    /// All roots of `Ehr(Q_σ, t)` real and inside `[-1, 0]`.
    Roots,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Bijection,
        Check::Sieve,
        Check::GammaPositive,
        Check::Reversal,
        Check::Paths,
        Check::Closure,
        Check::EhrhartRoutes,
        Check::ZetaRoutes,
        Check::EhrhartZeta,
        Check::HstarWords,
        Check::ElChains,
        Check::BProfile,
        Check::CrossModule,
        Check::Roots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bijection => "bijection",
            Check::Sieve => "sieve",
            Check::GammaPositive => "gamma-positive",
            Check::Reversal => "reversal",
            Check::Paths => "paths",
            Check::Closure => "closure",
            Check::EhrhartRoutes => "ehrhart-routes",
            Check::ZetaRoutes => "zeta-routes",
            Check::EhrhartZeta => "ehrhart-zeta",
            Check::HstarWords => "hstar-words",
            Check::ElChains => "el-chains",
            Check::BProfile => "bprofile",
            Check::CrossModule => "cross-module",
            Check::Roots => "roots",
        }
    }

    pub fn run(self, sigma: &Composition, limits: &Limits) -> Status {
        let outcome = match self {
            Check::Bijection => check_bijection(sigma, limits),
            Check::Sieve => check_sieve(sigma, limits),
            Check::GammaPositive => check_gamma_positive(sigma, limits),
            Check::Reversal => check_reversal(sigma, limits),
            Check::Paths => check_paths(sigma, limits),
            Check::Closure => check_closure(sigma, limits),
            Check::EhrhartRoutes => check_ehrhart_routes(sigma, limits),
            Check::ZetaRoutes => check_zeta_routes(sigma, limits),
            Check::EhrhartZeta => check_ehrhart_zeta(sigma, limits),
            Check::HstarWords => check_hstar_words(sigma, limits),
            Check::ElChains => check_el_chains(sigma, limits),
            Check::BProfile => check_bprofile(sigma, limits),
            Check::CrossModule => check_cross_module(sigma, limits),
            Check::Roots => check_roots(sigma, limits),
        };
        match outcome {
            Ok(()) => Status::Pass,
            Err(e @ Error::GuardExceeded { .. }) => Status::Skipped(e.to_string()),
            Err(e) => Status::Fail(e.to_string()),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail(_) => "fail",
            Status::Skipped(_) => "skipped",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Status::Pass => None,
            Status::Fail(d) | Status::Skipped(d) => Some(d),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub check: Check,
    pub composition: Composition,
    pub status: Status,
}

/// Runs `checks` on every composition of `n`. With the `parallel` feature
/// compositions are processed concurrently; results come back ordered by
/// composition, then by check.
pub fn sweep(n: usize, checks: &[Check], limits: &Limits) -> Result<Vec<CheckResult>> {
    let comps = all_compositions_with(n, limits)?;
    #[cfg(feature = "parallel")]
    let iter = comps.par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = comps.iter();
    let nested: Vec<Vec<CheckResult>> = iter
        .map(|sigma| {
            checks
                .iter()
                .map(|&check| CheckResult {
                    check,
                    composition: sigma.clone(),
                    status: check.run(sigma, limits),
                })
                .collect()
        })
        .collect();
    Ok(nested.into_iter().flatten().collect())
}

fn fail(msg: String) -> Result<()> {
    Err(Error::Internal(msg))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        fail(msg())
    }
}

pub fn h_polynomial(h: &HVector) -> ExactPolynomial {
    ExactPolynomial::from_bigints(h.values().iter().map(|&v| BigInt::from(v)))
}

fn int(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

fn check_bijection(sigma: &Composition, limits: &Limits) -> Result<()> {
    let points = enumerate_points(sigma, limits)?;
    let mut seen = HashSet::with_capacity(points.len());
    for x in &points {
        let h = encode(sigma, x)?;
        ensure(h.size() == x.nonzero_count(), || format!("{x:?}: size mismatch"))?;
        let back = decode(sigma, &h)?;
        ensure(&back == x, || format!("decode(encode({x:?})) = {back:?}"))?;
        ensure(seen.insert(h), || format!("encode not injective at {x:?}"))?;
    }
    Ok(())
}

fn check_sieve(sigma: &Composition, limits: &Limits) -> Result<()> {
    let n = sigma.n();
    let h = h_polynomial(&h_vector(sigma, limits)?);
    let direct: Vec<BigRational> = gamma_direct(sigma, limits)?
        .values()
        .iter()
        .map(|&g| BigRational::from_integer(g.into()))
        .collect();
    let rebuilt = gamma_rebuild(&direct, n);
    ensure(rebuilt == h, || format!("Σ γ t^i (1+t)^(n-2i) = {rebuilt}, h = {h}"))?;
    let expanded = gamma_expand(&h, n)?;
    ensure(expanded == direct, || "γ by peeling differs from γ by filtering".into())
}

fn check_gamma_positive(sigma: &Composition, limits: &Limits) -> Result<()> {
    let n = sigma.n();
    let hv = h_vector(sigma, limits)?;
    let gamma = gamma_direct(sigma, limits)?;
    ensure(gamma.is_nonnegative(), || format!("negative γ {:?}", gamma.values()))?;
    ensure(gamma.values()[0] == 1, || "γ_0 != 1".into())?;
    ensure(hv.values()[0] == 1 && hv.values()[n] == 1, || "h_0 or h_n != 1".into())?;
    let h = h_polynomial(&hv);
    ensure(is_palindromic(&h, n), || format!("h = {h} not palindromic"))?;
    ensure(is_unimodal(&h), || format!("h = {h} not unimodal"))
}

fn check_reversal(sigma: &Composition, limits: &Limits) -> Result<()> {
    let a = h_vector(sigma, limits)?;
    let b = h_vector(&sigma.reverse(), limits)?;
    ensure(a == b, || format!("h(σ) = {:?}, h(rev σ) = {:?}", a.values(), b.values()))
}

fn check_paths(sigma: &Composition, limits: &Limits) -> Result<()> {
    let n = sigma.n();
    let gamma = gamma_path(sigma);
    let rev = sigma.reverse();
    ensure(gamma.reflect() == gamma_path(&rev), || "Γ_σ does not reflect to Γ_rev(σ)".into())?;
    let mut ours = HashSet::new();
    for x in enumerate_points(sigma, limits)? {
        let p = to_path(&x)?;
        ensure(lies_weakly_below(&p, &gamma), || format!("{x:?} above Γ_σ"))?;
        ensure(p.en_corners() == x.nonzero_count() + 1, || format!("corner count at {x:?}"))?;
        let r = p.reflect();
        ensure(r.en_corners() == p.en_corners(), || format!("reflection changes corners at {x:?}"))?;
        ours.insert(r);
    }
    let mut theirs = HashSet::new();
    for y in enumerate_points(&rev, limits)? {
        theirs.insert(to_path(&y)?);
    }
    ensure(ours == theirs, || "reflected paths differ from paths of rev σ".into())?;
    // Points of the simplex outside P_σ must lie strictly above somewhere.
    let mut stray = None;
    for_each_dilate_point(&Composition::new(vec![n]).expect("n ≥ 1"), 1, |a| {
        let x = LatticePoint::new(a.to_vec());
        if !x.in_polytope(sigma) && stray.is_none() {
            let p = to_path(&x).expect("sum ≤ n");
            if lies_weakly_below(&p, &gamma) {
                stray = Some(x);
            }
        }
    });
    ensure(stray.is_none(), || format!("{stray:?} ∉ P_σ lies below Γ_σ"))
}

fn check_closure(sigma: &Composition, limits: &Limits) -> Result<()> {
    Limits::check("closure", "n", sigma.n(), limits.closure_n)?;
    let bad = closure_violations(sigma);
    ensure(bad.is_empty(), || format!("{} violations, first (S,T,R) = {:?}", bad.len(), bad[0]))
}

fn check_ehrhart_routes(sigma: &Composition, limits: &Limits) -> Result<()> {
    for m in 0..=limits.oracle_m.min(3) {
        let a = ehrhart_count_oracle(sigma, m, limits)?;
        let b = crate::ehrhart_zeta::ehrhart_sp(sigma, m, limits)?;
        ensure(a == b, || format!("m = {m}: oracle {a}, closed sum {b}"))?;
    }
    Ok(())
}

fn check_zeta_routes(sigma: &Composition, limits: &Limits) -> Result<()> {
    for m in 0..=limits.brute_zeta_m.min(3) {
        let a = zeta_value(sigma, m, limits)?;
        let b = zeta_brute(sigma, m, limits)?;
        ensure(a == b, || format!("m = {m}: product {a}, brute {b}"))?;
    }
    Ok(())
}

fn check_ehrhart_zeta(sigma: &Composition, limits: &Limits) -> Result<()> {
    let n = sigma.n();
    let rev = sigma.reverse();
    let ehr = ehrhart_values(sigma, n + 1, limits)?;
    for (m, e) in ehr.iter().enumerate() {
        let z = zeta_value(&rev, m, limits)?;
        ensure(*e == z, || format!("m = {m}: Ehr {e}, Z(P_rev, m+1) {z}"))?;
    }
    let ep = ehrhart_polynomial(sigma, limits)?;
    let zp = zeta_polynomial(&rev, limits)?.shift(&BigRational::from_integer(1.into()));
    ensure(ep == zp, || format!("Ehr(t) = {ep}, Z(P_rev, t+1) = {zp}"))
}

fn check_hstar_words(sigma: &Composition, limits: &Limits) -> Result<()> {
    let a = hstar_from_series(sigma, limits)?;
    let b = hstar_words(sigma, limits)?;
    ensure(a == b, || format!("series {a}, words {b}"))
}

fn check_el_chains(sigma: &Composition, limits: &Limits) -> Result<()> {
    let b = el_chain_h(&sigma.reverse(), limits)?;
    let a = hstar_from_series(sigma, limits)?;
    ensure(a == b, || format!("series {a}, chains of rev σ {b}"))
}

fn check_bprofile(sigma: &Composition, limits: &Limits) -> Result<()> {
    for m in 1..=limits.oracle_m.min(2) {
        let mut images = HashSet::new();
        let mut count = 0usize;
        let mut err = None;
        for_each_dilate_point(sigma, m, |a| {
            if err.is_some() {
                return;
            }
            count += 1;
            let x = LatticePoint::new(a.to_vec());
            match dilate_to_bprofile(sigma, m, &x).and_then(|b| {
                let back = bprofile_to_dilate(sigma, m, &b)?;
                Ok((b, back))
            }) {
                Ok((b, back)) if back == x => {
                    images.insert(b);
                }
                Ok((_, back)) => err = Some(format!("round trip {x:?} -> {back:?}")),
                Err(e) => err = Some(e.to_string()),
            }
        });
        if let Some(e) = err {
            return fail(e);
        }
        ensure(images.len() == count, || "profile map not injective".into())?;
        let all: HashSet<_> = enumerate_bprofiles(sigma, m, limits)?.into_iter().collect();
        ensure(all == images, || format!("m = {m}: image is not every valid profile"))?;
        let ehr = ehrhart_count_oracle(sigma, m, limits)?;
        ensure(BigInt::from(all.len()) == ehr, || format!("m = {m}: {} profiles, Ehr {ehr}", all.len()))?;
    }
    Ok(())
}

fn check_cross_module(sigma: &Composition, limits: &Limits) -> Result<()> {
    let n = sigma.n();
    let ehr = ehrhart_polynomial(sigma, limits)?;
    let h = h_vector(sigma, limits)?;
    let total = BigRational::from_integer(BigInt::from(h.total()));
    ensure(ehr.eval_int(1) == total, || format!("Ehr(1) = {}, Σ h_i = {total}", ehr.eval_int(1)))?;
    let hstar = hstar_from_series(sigma, limits)?;
    ensure(hstar.coeff(0) == int(&BigInt::from(1)), || "h*_0 != 1".into())?;
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    let volume = ehr.leading().expect("degree n") * int(&fact);
    ensure(hstar.eval_int(1) == volume, || format!("Σ h*_i = {}, n!·lead = {volume}", hstar.eval_int(1)))
}

fn check_roots(sigma: &Composition, limits: &Limits) -> Result<()> {
    let ehr = ehrhart_polynomial(sigma, limits)?;
    let lo = BigRational::from_integer((-1).into());
    let hi = BigRational::from_integer(0.into());
    let r = sturm_report(&ehr, &lo, &hi)?;
    ensure(r.real_and_inside(), || {
        format!(
            "counterexample candidate: {} distinct real roots of {} (degree {}), {} in [-1, 0]",
            r.distinct_root_count, ehr, r.squarefree_degree, r.roots_in_interval
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn sweep_small_all_pass() {
        let results = sweep(4, &Check::ALL, &Limits::default()).unwrap();
        assert_eq!(results.len(), 8 * Check::ALL.len());
        for r in &results {
            assert_eq!(r.status, Status::Pass, "{} on {}", r.check, r.composition);
        }
    }

    #[test]
    fn sweep_skips_beyond_guard() {
        let results = sweep(6, &[Check::ElChains, Check::Closure], &Limits::default()).unwrap();
        assert!(results.iter().all(|r| matches!(r.status, Status::Skipped(_))));
    }

    #[test]
    fn sweep_is_ordered() {
        let results = sweep(3, &[Check::Reversal, Check::Sieve], &Limits::default()).unwrap();
        let order: Vec<(String, &str)> = results
            .iter()
            .map(|r| (r.composition.to_string(), r.check.name()))
            .collect();
        assert_eq!(
            order,
            vec![
                ("3".to_string(), "reversal"),
                ("3".to_string(), "sieve"),
                ("2,1".to_string(), "reversal"),
                ("2,1".to_string(), "sieve"),
                ("1,2".to_string(), "reversal"),
                ("1,2".to_string(), "sieve"),
                ("1,1,1".to_string(), "reversal"),
                ("1,1,1".to_string(), "sieve"),
            ]
        );
    }
}
