//! Orbit classification on a single flag variety.

mod count;
mod dimension;
mod enumerate;
mod invariant;
mod poset;
mod sample;

pub use count::{slh_grassmannian_count, slr_grassmannian_count, stable_grassmannian_count, su_grassmannian_count};
pub use dimension::{orbit_dimension, RealLieAlgebra};
pub use enumerate::{candidate_count, max_candidates_from_env, witnesses, DEFAULT_MAX_CANDIDATES, MAX_CANDIDATES_ENV};
pub use invariant::{invariant, same_orbit, OrbitInvariant};
pub use poset::{degeneracy_order, dominated, OrbitPoset};
pub use sample::{random_flag, random_form_element};

use crate::error::{Error, Result};
use crate::flags::{Flag, FlagType};
use crate::structures::{FormKind, RealFormStructure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub invariant: OrbitInvariant,
    pub witness: Flag,
    pub is_open: bool,
    pub is_closed: bool,
    /// Real dimension, unless skipped via [`EnumerateOptions::dimensions`].
    pub real_dim: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct OrbitSet {
    pub flag_type: FlagType,
    pub form: RealFormStructure,
    /// Sorted by invariant; invariants pairwise distinct.
    pub records: Vec<OrbitRecord>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn find(&self, inv: &OrbitInvariant) -> Option<usize> {
        self.records.binary_search_by(|r| r.invariant.cmp(inv)).ok()
    }

    pub fn closed_index(&self) -> Option<usize> {
        self.records.iter().position(|r| r.is_closed)
    }

    pub fn open_count(&self) -> usize {
        self.records.iter().filter(|r| r.is_open).count()
    }

    pub fn context(&self) -> String {
        format!("{} on {}", self.form, self.flag_type)
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub max_candidates: usize,
    pub dimensions: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { max_candidates: max_candidates_from_env(), dimensions: true }
    }
}

/// Componentwise maximum of the intersection matrices.
fn max_matrix(invs: &[&OrbitInvariant]) -> Vec<Vec<usize>> {
    let mut m = invs[0].matrix.clone();
    for inv in &invs[1..] {
        for (row, other) in m.iter_mut().zip(&inv.matrix) {
            for (x, &y) in row.iter_mut().zip(other) {
                *x = (*x).max(y);
            }
        }
    }
    m
}

/// Closed-orbit test of `rec` within the complete set `set`: all members
/// τ-stable for SLR, and maximal intersection data otherwise.
pub fn is_closed(rec: &OrbitRecord, set: &OrbitSet) -> bool {
    closed_test(&rec.invariant, &set.records.iter().map(|r| &r.invariant).collect::<Vec<_>>())
}

fn closed_test(inv: &OrbitInvariant, all: &[&OrbitInvariant]) -> bool {
    match inv.kind {
        FormKind::Slr => inv.is_real(),
        FormKind::Su | FormKind::Slh => inv.matrix == max_matrix(all),
    }
}

pub fn is_open(f: &Flag, r: &RealFormStructure) -> Result<bool> {
    Ok(invariant(f, r)?.is_open())
}

pub fn enumerate_orbits(ty: &FlagType, r: &RealFormStructure) -> Result<OrbitSet> {
    enumerate_orbits_with(ty, r, &EnumerateOptions::default())
}

/// One record per orbit, validated to have exactly one closed orbit and at
/// least one open orbit.
pub fn enumerate_orbits_with(ty: &FlagType, r: &RealFormStructure, opts: &EnumerateOptions) -> Result<OrbitSet> {
    let found = witnesses(ty, r, opts.max_candidates)?;
    let algebra = opts.dimensions.then(|| RealLieAlgebra::new(r));
    let invs: Vec<&OrbitInvariant> = found.keys().collect();
    let records: Vec<OrbitRecord> = found
        .iter()
        .map(|(inv, w)| OrbitRecord {
            invariant: inv.clone(),
            witness: w.clone(),
            is_open: inv.is_open(),
            is_closed: closed_test(inv, &invs),
            real_dim: algebra.as_ref().map(|a| a.orbit_dimension(w)),
        })
        .collect();
    let set = OrbitSet { flag_type: ty.clone(), form: r.clone(), records };
    let closed = set.records.iter().filter(|r| r.is_closed).count();
    if closed != 1 {
        return Err(Error::Validation(format!("{} closed orbits found on {}", closed, set.context())));
    }
    if set.open_count() == 0 {
        return Err(Error::Validation(format!("no open orbit found on {}", set.context())));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{standard_slh, standard_slr, standard_su};

    #[test]
    fn su11_line_orbits() {
        let set = enumerate_orbits(&FlagType::grassmannian(1, 2).unwrap(), &standard_su(1, 1).unwrap()).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(set.open_count(), 2);
        let closed = &set.records[set.closed_index().unwrap()];
        assert_eq!(closed.invariant.signatures[0].c, 1);
        assert_eq!(closed.real_dim, Some(1));
        let poset = degeneracy_order(&set).unwrap();
        assert_eq!(poset.covers().len(), 2);
    }

    #[test]
    fn slr_and_slh_examples() {
        let set = enumerate_orbits(&FlagType::grassmannian(1, 3).unwrap(), &standard_slr(3).unwrap()).unwrap();
        assert_eq!(set.len(), 2);
        let poset = degeneracy_order(&set).unwrap();
        assert_eq!(poset.covers().len(), 1);
        let set = enumerate_orbits(&FlagType::grassmannian(2, 4).unwrap(), &standard_slh(4).unwrap()).unwrap();
        let diag: Vec<usize> = set.records.iter().map(|r| r.invariant.matrix[0][0]).collect();
        assert_eq!(diag, vec![0, 2]);
        assert!(set.records[1].is_closed);
    }

    #[test]
    fn single_point_variety() {
        let set = enumerate_orbits(&FlagType::new(3, vec![]).unwrap(), &standard_su(2, 1).unwrap()).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.records[0].is_open && set.records[0].is_closed);
        assert!(degeneracy_order(&set).unwrap().covers().is_empty());
    }
}
