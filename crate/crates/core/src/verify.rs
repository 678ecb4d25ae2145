//! Property suites run over families of small contexts.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::flags::{ExhaustionSpec, Family, FiniteTypeDescriptor, FlagType};
use crate::orbits::{
    degeneracy_order, enumerate_orbits_with, invariant, random_flag, random_form_element, slh_grassmannian_count, slr_grassmannian_count,
    stable_grassmannian_count, su_grassmannian_count, EnumerateOptions,
};
use crate::stabilization::{check_injectivity, trace_counts, TraceOptions};
use crate::structures::{standard_slh, standard_slr, standard_su, RealFormStructure};

const MAX_REPORTED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Invariance,
    Counts,
    DimensionBound,
    Injectivity,
    Poset,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Invariance, Suite::Counts, Suite::DimensionBound, Suite::Injectivity, Suite::Poset];

    /// Largest ambient dimension swept when none is given.
    pub fn default_max_n(&self) -> usize {
        match self {
            Suite::Invariance => 4,
            Suite::Counts | Suite::Injectivity => 8,
            Suite::DimensionBound | Suite::Poset => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Invariance => "invariance",
            Suite::Counts => "counts",
            Suite::DimensionBound => "dimension-bound",
            Suite::Injectivity => "injectivity",
            Suite::Poset => "poset",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.to_string() == s).ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random group elements per context; ten times as many random flags.
    pub trials: usize,
    pub max_n: Option<usize>,
    pub enumerate: EnumerateOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 0, trials: 100, max_n: None, enumerate: EnumerateOptions::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub max_n: usize,
    pub checks: usize,
    pub failure_count: usize,
    /// The first few counterexamples.
    pub failures: Vec<Value>,
}

struct Tally {
    checks: usize,
    failure_count: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn new() -> Self {
        Self { checks: 0, failure_count: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(detail());
            }
        }
    }

    fn finish(self, suite: Suite, max_n: usize) -> SuiteReport {
        SuiteReport { suite, passed: self.failure_count == 0, max_n, checks: self.checks, failure_count: self.failure_count, failures: self.failures }
    }
}

/// Every real form of ambient dimension `n` in standard coordinates.
pub fn forms_of_dim(n: usize) -> Vec<RealFormStructure> {
    let mut out: Vec<RealFormStructure> = (0..=n).filter_map(|p| standard_su(p, n - p).ok()).collect();
    out.extend(standard_slr(n).ok());
    out.extend(standard_slh(n).ok());
    out
}

/// All (flag type, form) pairs with `2 ≤ n ≤ max_n`.
pub fn all_contexts(max_n: usize) -> Vec<(FlagType, RealFormStructure)> {
    (2..=max_n).flat_map(|n| FlagType::all(n).into_iter().flat_map(move |t| forms_of_dim(n).into_iter().map(move |r| (t.clone(), r)))).collect()
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let max_n = cfg.max_n.unwrap_or(suite.default_max_n());
    let tally = match suite {
        Suite::Invariance => invariance(cfg, max_n)?,
        Suite::Counts => counts(cfg, max_n)?,
        Suite::DimensionBound => dimension_bound(cfg, max_n)?,
        Suite::Injectivity => injectivity(cfg, max_n)?,
        Suite::Poset => poset(cfg, max_n)?,
    };
    Ok(tally.finish(suite, max_n))
}

fn no_dims(cfg: &VerifyConfig) -> EnumerateOptions {
    EnumerateOptions { dimensions: false, ..cfg.enumerate.clone() }
}

fn invariance(cfg: &VerifyConfig, max_n: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (ty, r) in all_contexts(max_n) {
        let set = enumerate_orbits_with(&ty, &r, &no_dims(cfg))?;
        for _ in 0..cfg.trials {
            let seed: u64 = rng.gen();
            let g = random_form_element(&r, seed)?;
            for rec in &set.records {
                let moved = rec.witness.image(&g)?;
                t.check(invariant(&moved, &r)? == rec.invariant, || json!({"check": "invariance", "context": set.context(), "seed": seed, "orbit": rec.invariant}));
            }
        }
        for _ in 0..cfg.trials * 10 {
            let f = random_flag(&ty, &mut rng)?;
            let inv = invariant(&f, &r)?;
            t.check(set.find(&inv).is_some(), || json!({"check": "completeness", "context": set.context(), "invariant": inv}));
        }
    }
    Ok(t)
}

fn counts(cfg: &VerifyConfig, max_n: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let opts = no_dims(cfg);
    for n in 2..=max_n {
        for k in 1..n {
            let ty = FlagType::grassmannian(k, n)?;
            for p in 0..=n {
                let set = enumerate_orbits_with(&ty, &standard_su(p, n - p)?, &opts)?;
                let l = p.min(n - p);
                let expected = su_grassmannian_count(n, k, p)?;
                t.check(set.len() == expected, || json!({"check": "su count", "n": n, "k": k, "p": p, "found": set.len(), "expected": expected}));
                // Open orbits are the nondegenerate signatures a + b = k with a ≤ p, b ≤ n − p.
                let open = k.min(p) + 1 - k.saturating_sub(n - p);
                t.check(set.open_count() == open, || json!({"check": "su open count", "n": n, "k": k, "p": p, "found": set.open_count(), "expected": open}));
                // The nullity is bounded by k, by l and by dim U^⊥ = n − k.
                let c = set.closed_index().map(|i| set.records[i].invariant.signatures[0].c);
                let expected_c = k.min(l).min(n - k);
                t.check(c == Some(expected_c), || json!({"check": "su closed nullity", "n": n, "k": k, "p": p, "found": c, "expected": expected_c}));
            }
            for (r, expected) in [(standard_slr(n).ok(), slr_grassmannian_count(n, k).ok()), (standard_slh(n).ok(), slh_grassmannian_count(n, k).ok())] {
                let (Some(r), Some(expected)) = (r, expected) else { continue };
                let found = enumerate_orbits_with(&ty, &r, &opts)?.len();
                t.check(found == expected, || json!({"check": "count", "form": r.spec(), "k": k, "found": found, "expected": expected}));
            }
        }
    }
    // Stable values once the level is large enough for the limit formula.
    for family in [Family::SuInf, Family::SuP(0), Family::SuP(1), Family::SuP(2), Family::Slr, Family::Slh] {
        for k in 1..=4 {
            let Some(n) = (1..=max_n).rev().find(|&n| family.admits_level(n) && stable_enough(family, k, n)) else { continue };
            let found = enumerate_orbits_with(&FlagType::grassmannian(k, n)?, &family.structure_at(n)?, &opts)?.len();
            let expected = stable_grassmannian_count(family, k);
            t.check(found == expected, || json!({"check": "stable count", "family": family.to_string(), "k": k, "n": n, "found": found, "expected": expected}));
        }
    }
    Ok(t)
}

/// Level from which the grassmannian count equals its limit value.
pub fn stable_enough(family: Family, k: usize, n: usize) -> bool {
    match family {
        Family::SuInf => n >= 2 * k,
        Family::SuP(p) => n >= 2 * p && n >= p + k && n > k,
        Family::Slr => n > 2 * k,
        Family::Slh => n >= 2 * k + 2,
    }
}

fn dimension_bound(cfg: &VerifyConfig, max_n: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let opts = EnumerateOptions { dimensions: true, ..cfg.enumerate.clone() };
    for (ty, r) in all_contexts(max_n) {
        let set = enumerate_orbits_with(&ty, &r, &opts)?;
        let cdim = ty.complex_dim();
        for rec in &set.records {
            let d = rec.real_dim.expect("dimensions requested");
            t.check(d >= cdim, || json!({"check": "lower bound", "context": set.context(), "orbit": rec.invariant, "real_dim": d, "complex_dim": cdim}));
            t.check((d == 2 * cdim) == rec.is_open, || json!({"check": "open iff full dimension", "context": set.context(), "orbit": rec.invariant, "real_dim": d}));
        }
    }
    Ok(t)
}

/// Descriptors swept by the injectivity suite.
pub fn injectivity_descriptors() -> Vec<FiniteTypeDescriptor> {
    let mut v: Vec<_> = (1..=3).map(FiniteTypeDescriptor::grassmannian).collect();
    v.push(FiniteTypeDescriptor::chain());
    v
}

pub fn trace_families() -> Vec<Family> {
    vec![Family::SuInf, Family::SuP(0), Family::SuP(1), Family::SuP(2), Family::Slr, Family::Slh]
}

fn injectivity(cfg: &VerifyConfig, max_n: usize) -> Result<Tally> {
    let mut t = Tally::new();
    let opts = TraceOptions { enumerate: no_dims(cfg) };
    for d in injectivity_descriptors() {
        for family in trace_families() {
            let Ok(ex) = ExhaustionSpec::in_range(family, 1, max_n) else { continue };
            if !ex.level_dims.iter().any(|&n| d.is_valid_at(n)) {
                continue;
            }
            let (trace, _) = trace_counts(&d, &ex, &opts)?;
            let cert = check_injectivity(&trace);
            t.check(cert.injective, || json!({"check": "injective", "family": family.to_string(), "descriptor": d.to_string(), "certificate": cert}));
        }
    }
    Ok(t)
}

/// Descriptors whose posets must stabilize, with the level range used.
pub fn stabilizing_descriptors() -> Vec<FiniteTypeDescriptor> {
    ["dims=1", "dims=1,2", "dims=1;codims=1"].iter().map(|s| s.parse().expect("valid descriptor")).collect()
}

pub const STABILIZATION_MAX_LEVEL: usize = 10;

fn poset(cfg: &VerifyConfig, max_n: usize) -> Result<Tally> {
    let mut t = Tally::new();
    for (ty, r) in all_contexts(max_n) {
        let set = enumerate_orbits_with(&ty, &r, &no_dims(cfg))?;
        let res = degeneracy_order(&set);
        t.check(res.is_ok(), || json!({"check": "partial order", "context": set.context(), "error": res.as_ref().err().map(ToString::to_string)}));
    }
    let opts = TraceOptions { enumerate: no_dims(cfg) };
    for d in stabilizing_descriptors() {
        for family in trace_families() {
            let ex = ExhaustionSpec::in_range(family, 1, STABILIZATION_MAX_LEVEL)?;
            let (trace, verdict) = trace_counts(&d, &ex, &opts)?;
            t.check(verdict.stabilization_level.is_some(), || {
                json!({"check": "stabilization", "family": family.to_string(), "descriptor": d.to_string(), "counts": trace.counts()})
            });
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_counts_suite_passes() {
        let rep = run_suite(Suite::Counts, &VerifyConfig { max_n: Some(4), ..VerifyConfig::default() }).unwrap();
        assert!(rep.passed, "{:?}", rep.failures);
        assert!(rep.checks > 30);
    }
}
