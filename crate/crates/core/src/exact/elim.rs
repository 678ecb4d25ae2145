//! Gaussian elimination over an exact field, shared by the complex matrix
//! code and the real-rational linear systems of stabilizer computations.

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use super::Scalar;

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn inverse(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        *self == 0u32
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn inverse(&self) -> Self {
        self.reciprocal()
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn inverse(&self) -> Self {
        self.inv()
    }
}

/// Eliminates column `col` from every row in `targets` using pivot row `pivot`
/// whose entry at `col` is already normalized to one. `support` lists the
/// nonzero columns of the pivot row at or after `col`.
fn eliminate<F: Field>(rows: &mut [Vec<F>], pivot: usize, col: usize, support: &[usize], targets: impl Iterator<Item = usize>) {
    let pivot_row = rows[pivot].clone();
    for r in targets {
        if r == pivot || rows[r][col].is_zero() {
            continue;
        }
        let factor = rows[r][col].clone();
        let row = &mut rows[r];
        for &k in support {
            row[k] = row[k].sub(&factor.mul(&pivot_row[k]));
        }
    }
}

/// Reduced row echelon form in place. Returns the pivot columns; rows beyond
/// the rank are dropped, so `rows.len()` equals the rank afterwards.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse();
        if inv != F::one() {
            for k in c..cols {
                if !rows[r][k].is_zero() {
                    rows[r][k] = rows[r][k].mul(&inv);
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&k| !rows[r][k].is_zero()).collect();
        let n = rows.len();
        eliminate(rows, r, c, &support, 0..n);
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank by forward elimination only.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse();
        for k in c..cols {
            if !rows[r][k].is_zero() {
                rows[r][k] = rows[r][k].mul(&inv);
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&k| !rows[r][k].is_zero()).collect();
        let n = rows.len();
        eliminate(&mut rows, r, c, &support, r + 1..n);
        r += 1;
    }
    r
}

/// Basis of `{x : A x = 0}` for the matrix whose rows are `rows`.
pub fn kernel<F: Field>(mut rows: Vec<Vec<F>>, cols: usize) -> Vec<Vec<F>> {
    let pivots = rref(&mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[p] = F::zero().sub(&row[free]);
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel_agree() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(m.clone(), 3), 2);
        let ker = kernel(m.clone(), 3);
        assert_eq!(ker.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&ker[0]).fold(Rational::ZERO, |acc, (a, b)| acc + a * b);
            assert_eq!(dot, 0u32);
        }
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = q(&[&[2, 4, 0], &[0, 0, 3]]);
        let mut b = q(&[&[1, 2, 3], &[-1, -2, 0]]);
        rref(&mut a, 3);
        rref(&mut b, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(rank::<Rational>(vec![], 4), 0);
        assert_eq!(kernel::<Rational>(vec![], 2).len(), 2);
        assert_eq!(rank(q(&[&[0, 0]]), 2), 0);
    }
}
