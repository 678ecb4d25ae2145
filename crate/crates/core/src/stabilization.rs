//! Orbit sets along an exhaustion: transition maps, injectivity, stabilization
//! of the degeneracy posets, and predictions for the limit.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flags::{embed_levels, ExhaustionSpec, Family, FiniteTypeDescriptor};
use crate::orbits::{degeneracy_order, enumerate_orbits_with, invariant, EnumerateOptions, OrbitPoset, OrbitSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Finiteness {
    Finite,
    Infinite,
}

#[derive(Clone, Debug)]
pub struct LevelData {
    pub n: usize,
    pub orbits: OrbitSet,
    pub poset: OrbitPoset,
}

/// Map from the records at one level to the records at the next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
}

impl Transition {
    /// First pair of source orbits sharing a target, if any.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let mut seen = vec![None; self.map.iter().max().map_or(0, |m| m + 1)];
        for (i, &t) in self.map.iter().enumerate() {
            if let Some(j) = seen[t] {
                return Some((j, i));
            }
            seen[t] = Some(i);
        }
        None
    }
}

#[derive(Clone, Debug)]
pub struct LevelTrace {
    pub descriptor: FiniteTypeDescriptor,
    pub exhaustion: ExhaustionSpec,
    pub levels: Vec<LevelData>,
    pub transitions: Vec<Transition>,
}

impl LevelTrace {
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbits.len()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub from: usize,
    pub to: usize,
    pub first: usize,
    pub second: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityCertificate {
    pub injective: bool,
    pub transitions_checked: usize,
    pub collision: Option<Collision>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LimitVerdict {
    pub finiteness: Finiteness,
    /// `None` when the descriptor shape is outside the known case analyses.
    pub has_open: Option<bool>,
    pub has_closed: Option<bool>,
    pub stabilization_level: Option<usize>,
    /// Whether the observed counts agree with `finiteness`.
    pub growth_consistent: bool,
}

/// For every record at `from`, the index at `to` of the orbit through its
/// embedded witness.
pub fn orbit_map(from: &OrbitSet, to: &OrbitSet, d: &FiniteTypeDescriptor) -> Result<Vec<usize>> {
    from.records
        .iter()
        .map(|rec| {
            let image = embed_levels(&rec.witness, d, to.flag_type.n)?;
            let inv = invariant(&image, &to.form)?;
            to.find(&inv).ok_or_else(|| Error::Validation(format!("embedded witness lands outside the orbit set of {}", to.context())))
        })
        .collect()
}

pub fn check_injectivity(trace: &LevelTrace) -> InjectivityCertificate {
    for t in &trace.transitions {
        if let Some((first, second)) = t.collision() {
            return InjectivityCertificate {
                injective: false,
                transitions_checked: trace.transitions.len(),
                collision: Some(Collision { from: t.from, to: t.to, first, second, target: t.map[first] }),
            };
        }
    }
    InjectivityCertificate { injective: true, transitions_checked: trace.transitions.len(), collision: None }
}

pub fn predict_finiteness(d: &FiniteTypeDescriptor, family: Family) -> Finiteness {
    let finite = match family {
        Family::SuP(0) => true,
        // Finitely many members suffice; a growing middle member is allowed.
        Family::SuP(_) => !d.is_chain(),
        Family::SuInf | Family::Slr | Family::Slh => d.is_finite_type(),
    };
    if finite {
        Finiteness::Finite
    } else {
        Finiteness::Infinite
    }
}

/// Existence of open and closed orbits on the limit variety in standard
/// coordinates. `None` means the shape is not covered.
pub fn limit_open_closed(d: &FiniteTypeDescriptor, family: Family) -> Option<(bool, bool)> {
    if d.is_finite_type() || family == Family::SuP(0) {
        return Some((true, true));
    }
    match (family, d.is_chain()) {
        (Family::Slr, _) => Some((false, true)),
        (Family::SuP(_), true) => Some((true, false)),
        (Family::SuP(_), false) => Some((true, true)),
        (Family::SuInf, _) => Some((true, false)),
        (Family::Slh, true) => Some((false, true)),
        (Family::Slh, false) => None,
    }
}

/// Whether `t` is a bijection that is an order isomorphism.
fn is_isomorphism(t: &Transition, a: &LevelData, b: &LevelData) -> bool {
    if a.orbits.len() != b.orbits.len() || t.collision().is_some() {
        return false;
    }
    let n = a.orbits.len();
    (0..n).all(|i| (0..n).all(|j| a.poset.leq(i, j) == b.poset.leq(t.map[i], t.map[j])))
}

/// First level from which every later transition is a poset isomorphism.
pub fn stabilization_level(trace: &LevelTrace) -> Option<usize> {
    let iso: Vec<bool> = trace.transitions.iter().enumerate().map(|(k, t)| is_isomorphism(t, &trace.levels[k], &trace.levels[k + 1])).collect();
    let tail = iso.iter().rev().take_while(|&&x| x).count();
    if tail == 0 {
        return None;
    }
    Some(trace.levels[iso.len() - tail].n)
}

#[derive(Clone, Debug)]
pub struct TraceOptions {
    pub enumerate: EnumerateOptions,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self { enumerate: EnumerateOptions { dimensions: false, ..EnumerateOptions::default() } }
    }
}

/// Orbit sets, posets and transition maps over the admissible levels of
/// `exhaustion` where `d` induces a valid type, plus the limit verdict.
pub fn trace_counts(d: &FiniteTypeDescriptor, exhaustion: &ExhaustionSpec, opts: &TraceOptions) -> Result<(LevelTrace, LimitVerdict)> {
    let family = exhaustion.family;
    let usable: Vec<usize> = exhaustion.level_dims.iter().copied().filter(|&n| d.is_valid_at(n)).collect();
    if usable.is_empty() {
        let last = exhaustion.level_dims.last().copied().unwrap_or(0);
        return Err(Error::LevelTooSmall { level: last, descriptor: d.to_string() });
    }
    let mut levels = Vec::with_capacity(usable.len());
    for &n in &usable {
        let orbits = enumerate_orbits_with(&d.induced_type(n)?, &family.structure_at(n)?, &opts.enumerate)?;
        let poset = degeneracy_order(&orbits)?;
        levels.push(LevelData { n, orbits, poset });
    }
    let transitions = levels
        .windows(2)
        .map(|w| Ok(Transition { from: w[0].n, to: w[1].n, map: orbit_map(&w[0].orbits, &w[1].orbits, d)? }))
        .collect::<Result<Vec<_>>>()?;
    let trace = LevelTrace { descriptor: d.clone(), exhaustion: exhaustion.clone(), levels, transitions };
    let finiteness = predict_finiteness(d, family);
    let stab = stabilization_level(&trace);
    let counts = trace.counts();
    let growth_consistent = match finiteness {
        Finiteness::Finite => stab.is_some(),
        Finiteness::Infinite => counts.windows(2).all(|w| w[0] <= w[1]) && counts.len() >= 2 && counts.last() > counts.first(),
    };
    let oc = limit_open_closed(d, family);
    let verdict = LimitVerdict {
        finiteness,
        has_open: oc.map(|x| x.0),
        has_closed: oc.map(|x| x.1),
        stabilization_level: stab,
        growth_consistent,
    };
    Ok((trace, verdict))
}
