use super::{elim, Mat, Scalar};
use crate::error::Error;

/// A subspace of ℂⁿ (over ℚ(i)), stored by the reduced echelon basis.
///
/// The basis vectors are the rows of the RREF of any spanning set, so two
/// subspaces are equal exactly when their stored vectors are equal. Viewed
/// as columns this is the column-reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, vectors: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the standard basis vectors with the given 0-based indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vecs = indices.into_iter().map(|i| unit(ambient, i)).collect();
        Self::from_vectors(vecs, ambient).expect("coordinate index out of range")
    }

    /// Span of the columns of `m`.
    pub fn canonicalize(m: &Mat) -> Self {
        let ambient = m.rows();
        Self::from_vectors(m.columns(), ambient).expect("columns have matching length")
    }

    pub fn from_vectors(mut vecs: Vec<Vec<Scalar>>, ambient: usize) -> Result<Self, Error> {
        if let Some(bad) = vecs.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, found: bad.len() });
        }
        elim::rref(&mut vecs, ambient);
        Ok(Self { ambient, vectors: vecs })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis vectors.
    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// `ambient × dim` matrix whose columns are the canonical basis.
    pub fn basis(&self) -> Mat {
        Mat::from_columns(&self.vectors, self.ambient).expect("basis vectors have ambient length")
    }

    fn check(&self, o: &Subspace) -> Result<(), Error> {
        if self.ambient != o.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: o.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace, Error> {
        self.check(o)?;
        let vecs = self.vectors.iter().chain(&o.vectors).cloned().collect();
        Subspace::from_vectors(vecs, self.ambient)
    }

    /// `self ∩ o`, from the kernel of `[U | −W]`.
    pub fn intersect(&self, o: &Subspace) -> Result<Subspace, Error> {
        self.check(o)?;
        let (du, dw) = (self.dim(), o.dim());
        if du == 0 || dw == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let rows: Vec<Vec<Scalar>> = (0..self.ambient)
            .map(|r| self.vectors.iter().map(|v| v[r].clone()).chain(o.vectors.iter().map(|v| -&v[r])).collect())
            .collect();
        let ker = elim::kernel(rows, du + dw);
        let vecs = ker
            .iter()
            .map(|x| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (coef, basis) in x[..du].iter().zip(&self.vectors) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (acc, b) in v.iter_mut().zip(basis) {
                        *acc += &(coef * b);
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(vecs, self.ambient)
    }

    /// Residual of `v` after reduction against the echelon basis.
    fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for row in &self.vectors {
            let p = row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero");
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && self.residual(v).iter().all(Scalar::is_zero)
    }

    /// True iff `o ⊆ self`.
    pub fn contains(&self, o: &Subspace) -> Result<bool, Error> {
        self.check(o)?;
        Ok(o.dim() <= self.dim() && o.vectors.iter().all(|v| self.contains_vector(v)))
    }

    /// Image under the linear map `m` (an `ambient × ambient` matrix).
    pub fn image(&self, m: &Mat) -> Result<Subspace, Error> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: m.cols() });
        }
        let vecs = self.vectors.iter().map(|v| m.mul_vec(v)).collect::<Result<_, _>>()?;
        Subspace::from_vectors(vecs, m.rows())
    }

    /// Entrywise conjugate subspace.
    pub fn conj(&self) -> Subspace {
        let vecs = self.vectors.iter().map(|v| v.iter().map(Scalar::conj).collect()).collect();
        Subspace::from_vectors(vecs, self.ambient).expect("same ambient")
    }

    /// The same vectors viewed inside ℂᵐ for `m ≥ ambient` (zero padded).
    pub fn extend_to(&self, m: usize) -> Subspace {
        assert!(m >= self.ambient, "cannot shrink the ambient space");
        let vecs = self
            .vectors
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.resize(m, Scalar::zero());
                w
            })
            .collect();
        Subspace { ambient: m, vectors: vecs }
    }

    /// Rows spanning the linear functionals vanishing on the subspace, so
    /// that `v ∈ self` iff `N v = 0`.
    pub fn annihilator(&self) -> Vec<Vec<Scalar>> {
        elim::kernel(self.vectors.clone(), self.ambient)
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &[&[(i64, i64)]], n: usize) -> Subspace {
        Subspace::from_vectors(rows.iter().map(|r| r.iter().map(|&(a, b)| Scalar::from_ints(a, b)).collect()).collect(), n)
            .unwrap()
    }

    #[test]
    fn dependent_vectors_collapse() {
        let s = span(&[&[(1, 0), (0, 0)], &[(2, 0), (0, 0)]], 2);
        assert_eq!(s.dim(), 1);
        assert_eq!(s, Subspace::coordinate(2, [0]));
        assert_eq!(Subspace::from_vectors(vec![], 3).unwrap().dim(), 0);
        assert!(span(&[&[(1, 0), (0, 1)], &[(0, 0), (1, 0)]], 2).is_full());
    }

    #[test]
    fn lattice_operations() {
        let e12 = Subspace::coordinate(3, [0, 1]);
        let e23 = Subspace::coordinate(3, [1, 2]);
        assert_eq!(e12.intersect(&e23).unwrap(), Subspace::coordinate(3, [1]));
        assert_eq!(e12.intersect(&e12).unwrap(), e12);
        let plus = span(&[&[(1, 0), (1, 0)]], 2);
        let minus = span(&[&[(1, 0), (-1, 0)]], 2);
        assert!(plus.sum(&minus).unwrap().is_full());
        assert!(Subspace::coordinate(2, [0]).intersect(&Subspace::coordinate(2, [1])).unwrap().is_zero());
    }

    #[test]
    fn containment() {
        let e1 = Subspace::coordinate(2, [0]);
        let diag = span(&[&[(1, 0), (1, 0)]], 2);
        assert!(!e1.contains(&diag).unwrap());
        assert!(Subspace::full(2).contains(&diag).unwrap());
        assert!(e1.contains(&Subspace::zero(2)).unwrap());
        assert!(e1.contains(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn annihilator_cuts_out_subspace() {
        let s = span(&[&[(1, 0), (0, 1), (0, 0)]], 3);
        let n = s.annihilator();
        assert_eq!(n.len(), 2);
        let v: Vec<Scalar> = vec![Scalar::from_int(2), Scalar::from_ints(0, 2), Scalar::zero()];
        for row in &n {
            let dot = row.iter().zip(&v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
            assert!(dot.is_zero());
        }
    }
}
