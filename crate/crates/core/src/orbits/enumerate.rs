//! Orbit normal forms built from disjoint coordinate blocks.
//!
//! A pattern places basis vectors at levels `0..s` (level `s-1` is the whole
//! space). Besides single vectors it uses linked pairs, one vector opening
//! at level `a` and its partner closing at a later level `b`:
//!
//! * SU: `e₊ + e₋` at `a`, `e₊ − e₋` at `b`; singles are `e₊` or `e₋`.
//! * SLR: `e_r + i·e_t` at `a`, `e_r − i·e_t` at `b`; singles are real `e_r`.
//! * SLH: `e_{2r-1}` at `a`, `e_{2r}` at `b`; singles are whole blocks
//!   `⟨e_{2r-1}, e_{2r}⟩` at one level.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{unit, Scalar, Subspace};
use crate::flags::{Flag, FlagType};
use crate::structures::RealFormStructure;

use super::invariant::{invariant, OrbitInvariant};

pub const DEFAULT_MAX_CANDIDATES: usize = 100_000;
pub const MAX_CANDIDATES_ENV: &str = "ORBITFLAG_MAX_CANDIDATES";

/// The candidate bound from the environment, or the default.
pub fn max_candidates_from_env() -> usize {
    std::env::var(MAX_CANDIDATES_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_CANDIDATES)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pattern {
    /// `(a, b)` per linked pair, `a < b`.
    pairs: Vec<(usize, usize)>,
    /// Singles per level: SU `(plus, minus)`, SLR `(count, 0)`, SLH `(blocks, 0)`.
    singles: Vec<(usize, usize)>,
}

struct Search<'a> {
    r: &'a RealFormStructure,
    need: Vec<usize>,
    slots: Vec<(usize, usize)>,
    limit: usize,
    out: Vec<Pattern>,
}

impl Search<'_> {
    fn push(&mut self, p: Pattern) -> Result<()> {
        if self.out.len() >= self.limit {
            return Err(Error::ResourceLimit(format!(
                "more than {} candidate patterns (raise {MAX_CANDIDATES_ENV} to allow more)",
                self.limit
            )));
        }
        self.out.push(p);
        Ok(())
    }

    fn pair_budget(&self) -> usize {
        let n = self.r.n();
        match self.r {
            RealFormStructure::Su(h) => h.p().min(h.q()),
            _ => n / 2,
        }
    }

    fn pairs(&mut self, slot: usize, left: &mut [usize], budget: usize, chosen: &mut Vec<(usize, usize)>) -> Result<()> {
        if slot == self.slots.len() {
            return self.singles(left, chosen);
        }
        let (a, b) = self.slots[slot];
        let most = left[a].min(left[b]).min(budget);
        for c in 0..=most {
            left[a] -= c;
            left[b] -= c;
            chosen.extend(std::iter::repeat_n((a, b), c));
            let res = self.pairs(slot + 1, left, budget - c, chosen);
            chosen.truncate(chosen.len() - c);
            left[a] += c;
            left[b] += c;
            res?;
        }
        Ok(())
    }

    fn singles(&mut self, left: &[usize], chosen: &[(usize, usize)]) -> Result<()> {
        match self.r {
            RealFormStructure::Slr(_) => self.push(Pattern { pairs: chosen.to_vec(), singles: left.iter().map(|&x| (x, 0)).collect() }),
            RealFormStructure::Slh(_) => {
                if left.iter().any(|x| x % 2 == 1) {
                    return Ok(());
                }
                self.push(Pattern { pairs: chosen.to_vec(), singles: left.iter().map(|&x| (x / 2, 0)).collect() })
            }
            RealFormStructure::Su(h) => {
                let plus = h.p() - chosen.len();
                let mut split = Vec::with_capacity(left.len());
                self.split_signs(left, 0, plus, &mut split, chosen)
            }
        }
    }

    fn split_signs(&mut self, left: &[usize], i: usize, plus: usize, split: &mut Vec<(usize, usize)>, chosen: &[(usize, usize)]) -> Result<()> {
        if i == left.len() {
            return if plus == 0 { self.push(Pattern { pairs: chosen.to_vec(), singles: split.clone() }) } else { Ok(()) };
        }
        let rest: usize = left[i + 1..].iter().sum();
        for x in 0..=left[i].min(plus) {
            if plus - x > rest {
                continue;
            }
            split.push((x, left[i] - x));
            let res = self.split_signs(left, i + 1, plus - x, split, chosen);
            split.pop();
            res?;
        }
        Ok(())
    }
}

fn patterns(ty: &FlagType, r: &RealFormStructure, limit: usize) -> Result<Vec<Pattern>> {
    let need = ty.blocks();
    let s = need.len();
    let slots = (0..s).flat_map(|a| (a + 1..s).map(move |b| (a, b))).collect();
    let mut search = Search { r, need: need.clone(), slots, limit, out: Vec::new() };
    let budget = search.pair_budget();
    let mut left = search.need.clone();
    search.pairs(0, &mut left, budget, &mut Vec::new())?;
    Ok(search.out)
}

/// Vectors of the witness flag tagged by level.
fn witness_vectors(p: &Pattern, r: &RealFormStructure) -> Vec<(usize, Vec<Scalar>)> {
    let n = r.n();
    let mut out = Vec::with_capacity(n);
    match r {
        RealFormStructure::Su(h) => {
            let (pos, neg) = (h.positive_coords(), h.negative_coords());
            for (k, &(a, b)) in p.pairs.iter().enumerate() {
                let (ep, en) = (unit(n, pos[k]), unit(n, neg[k]));
                out.push((a, ep.iter().zip(&en).map(|(x, y)| x + y).collect()));
                out.push((b, ep.iter().zip(&en).map(|(x, y)| x - y).collect()));
            }
            let (mut ip, mut ineg) = (p.pairs.len(), p.pairs.len());
            for (level, &(plus, minus)) in p.singles.iter().enumerate() {
                for _ in 0..plus {
                    out.push((level, unit(n, pos[ip])));
                    ip += 1;
                }
                for _ in 0..minus {
                    out.push((level, unit(n, neg[ineg])));
                    ineg += 1;
                }
            }
        }
        RealFormStructure::Slr(_) => {
            for (k, &(a, b)) in p.pairs.iter().enumerate() {
                let (er, et) = (unit(n, 2 * k), unit(n, 2 * k + 1));
                out.push((a, er.iter().zip(&et).map(|(x, y)| x + &y.mul_i()).collect()));
                out.push((b, er.iter().zip(&et).map(|(x, y)| x - &y.mul_i()).collect()));
            }
            let mut next = 2 * p.pairs.len();
            for (level, &(count, _)) in p.singles.iter().enumerate() {
                for _ in 0..count {
                    out.push((level, unit(n, next)));
                    next += 1;
                }
            }
        }
        RealFormStructure::Slh(_) => {
            for (k, &(a, b)) in p.pairs.iter().enumerate() {
                out.push((a, unit(n, 2 * k)));
                out.push((b, unit(n, 2 * k + 1)));
            }
            let mut block = p.pairs.len();
            for (level, &(count, _)) in p.singles.iter().enumerate() {
                for _ in 0..count {
                    out.push((level, unit(n, 2 * block)));
                    out.push((level, unit(n, 2 * block + 1)));
                    block += 1;
                }
            }
        }
    }
    out
}

fn witness(ty: &FlagType, p: &Pattern, r: &RealFormStructure) -> Result<Flag> {
    let vecs = witness_vectors(p, r);
    let spaces = (0..ty.len())
        .map(|i| Subspace::from_vectors(vecs.iter().filter(|(l, _)| *l <= i).map(|(_, v)| v.clone()).collect(), ty.n))
        .collect::<Result<Vec<_>>>()?;
    Flag::new(ty.n, spaces)
}

/// One witness per orbit, keyed and sorted by invariant. Among witnesses with
/// equal invariants the smallest canonical form is kept.
pub fn witnesses(ty: &FlagType, r: &RealFormStructure, limit: usize) -> Result<BTreeMap<OrbitInvariant, Flag>> {
    r.check_ambient(ty.n)?;
    let mut out: BTreeMap<OrbitInvariant, Flag> = BTreeMap::new();
    for p in patterns(ty, r, limit)? {
        let w = witness(ty, &p, r)?;
        let inv = invariant(&w, r)?;
        match out.get_mut(&inv) {
            Some(old) if *old <= w => {}
            Some(old) => *old = w,
            None => {
                out.insert(inv, w);
            }
        }
    }
    Ok(out)
}

/// Number of candidate patterns, without building witnesses.
pub fn candidate_count(ty: &FlagType, r: &RealFormStructure, limit: usize) -> Result<usize> {
    Ok(patterns(ty, r, limit)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{standard_slh, standard_slr, standard_su};

    #[test]
    fn small_counts() {
        let t = FlagType::grassmannian(1, 2).unwrap();
        assert_eq!(witnesses(&t, &standard_su(1, 1).unwrap(), 1000).unwrap().len(), 3);
        let t = FlagType::grassmannian(1, 3).unwrap();
        assert_eq!(witnesses(&t, &standard_slr(3).unwrap(), 1000).unwrap().len(), 2);
        let t = FlagType::grassmannian(2, 4).unwrap();
        assert_eq!(witnesses(&t, &standard_slh(4).unwrap(), 1000).unwrap().len(), 2);
    }

    #[test]
    fn full_flag_patterns_are_distinct_orbits() {
        for r in [standard_su(2, 2).unwrap(), standard_su(1, 3).unwrap(), standard_slh(4).unwrap()] {
            let t = FlagType::full(4);
            assert_eq!(candidate_count(&t, &r, 10_000).unwrap(), witnesses(&t, &r, 10_000).unwrap().len());
        }
        let t = FlagType::full(5);
        let r = standard_slr(5).unwrap();
        assert_eq!(candidate_count(&t, &r, 10_000).unwrap(), witnesses(&t, &r, 10_000).unwrap().len());
    }

    #[test]
    fn limit_is_enforced() {
        let t = FlagType::full(6);
        let r = standard_su(3, 3).unwrap();
        assert!(matches!(witnesses(&t, &r, 10), Err(Error::ResourceLimit(_))));
    }
}
