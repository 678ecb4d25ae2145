use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::structures::FormKind;

use super::{OrbitInvariant, OrbitSet};

/// `a ≤ b` in the semicontinuity order: every intersection dimension of `a`
/// is at least that of `b`, and for SU the positive and negative indices of
/// every member of `a` are at most those of `b`.
pub fn dominated(a: &OrbitInvariant, b: &OrbitInvariant) -> bool {
    let ints = a.matrix.iter().flatten().zip(b.matrix.iter().flatten()).all(|(x, y)| x >= y);
    ints && (a.kind != FormKind::Su || a.signatures.iter().zip(&b.signatures).all(|(s, t)| s.a <= t.a && s.b <= t.b))
}

/// Degeneracy order on an orbit set, indices referring to `base.records`.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    /// `up[i]` holds every `j` with `i ≤ j`.
    up: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| (0..self.len()).all(|i| i == j || !self.leq(i, j))).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].count_ones(..) == 1).collect()
    }

    /// Builds the order from a reflexive relation and checks it is a partial order.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if i == j || rel(i, j) {
                    row.insert(j);
                }
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if i != j && up[j].contains(i) {
                    return Err(Error::Validation(format!("order is not antisymmetric on orbits {i} and {j}")));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::Validation(format!("order is not transitive through orbits {i} and {j}")));
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in up[i].ones() {
                if i == j {
                    continue;
                }
                // Nothing strictly between i and j.
                if up[i].intersection(&down[j]).count() == 2 {
                    covers.push((i, j));
                }
            }
        }
        Ok(Self { up, covers })
    }
}

/// Dominance order on `set`, validated: the closed orbit must be the unique
/// minimum and the open orbits exactly the maximal elements.
pub fn degeneracy_order(set: &OrbitSet) -> Result<OrbitPoset> {
    let recs = &set.records;
    let poset = OrbitPoset::from_relation(recs.len(), |i, j| dominated(&recs[i].invariant, &recs[j].invariant))?;
    let closed: Vec<usize> = (0..recs.len()).filter(|&i| recs[i].is_closed).collect();
    if poset.minimal() != closed || closed.len() != 1 || (0..recs.len()).any(|j| !poset.leq(closed[0], j)) {
        return Err(Error::Validation(format!("closed orbit {closed:?} is not the unique minimum of the order on {}", set.context())));
    }
    let open: Vec<usize> = (0..recs.len()).filter(|&i| recs[i].is_open).collect();
    if poset.maximal() != open {
        return Err(Error::Validation(format!("open orbits {open:?} differ from maximal elements {:?} on {}", poset.maximal(), set.context())));
    }
    Ok(poset)
}
