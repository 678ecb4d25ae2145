//! Real orbit dimensions through the stabilizer subalgebra.

use malachite_base::num::basic::traits::Zero;
use malachite_q::Rational;

use crate::error::Result;
use crate::exact::{elim, Mat, Scalar};
use crate::flags::Flag;
use crate::structures::RealFormStructure;

/// A real basis of the Lie algebra 𝔤⁰ ⊂ sl(n, ℂ), as complex matrices.
#[derive(Clone, Debug)]
pub struct RealLieAlgebra {
    n: usize,
    basis: Vec<Mat>,
}

/// `α·X_{ab} + β·conj(X_{ab})` terms of one complex equation.
type Term = (usize, usize, Scalar, Scalar);

/// Splits `Σ α x + β conj(x) = 0` into two real rows over the unknowns
/// `(Re X_{ab}, Im X_{ab})`.
fn real_rows(n: usize, terms: &[Term]) -> [Vec<Rational>; 2] {
    let mut re = vec![Rational::ZERO; 2 * n * n];
    let mut im = vec![Rational::ZERO; 2 * n * n];
    for (a, b, alpha, beta) in terms {
        let u = 2 * (a * n + b);
        let plus = alpha + beta;
        let minus = alpha - beta;
        // (α+β)·u + i(α−β)·v
        re[u] += plus.re();
        re[u + 1] -= minus.im();
        im[u] += plus.im();
        im[u + 1] += minus.re();
    }
    [re, im]
}

impl RealLieAlgebra {
    pub fn new(r: &RealFormStructure) -> Self {
        let n = r.n();
        let one = Scalar::one;
        let zero = Scalar::zero;
        let mut eqs: Vec<Vec<Term>> = Vec::new();
        eqs.push((0..n).map(|a| (a, a, one(), zero())).collect());
        match r {
            RealFormStructure::Su(h) => {
                // X*H + HX = 0: s_b·conj(X_ba) + s_a·X_ab = 0.
                let s = |i: usize| Scalar::from_int(h.signs()[i] as i64);
                for a in 0..n {
                    for b in a..n {
                        if a == b {
                            eqs.push(vec![(a, a, s(a), s(a))]);
                        } else {
                            eqs.push(vec![(a, b, s(a), zero()), (b, a, zero(), s(b))]);
                        }
                    }
                }
            }
            RealFormStructure::Slr(_) => {
                // X = conj(X).
                for a in 0..n {
                    for b in 0..n {
                        eqs.push(vec![(a, b, one(), -one())]);
                    }
                }
            }
            RealFormStructure::Slh(q) => {
                // XJ = J·conj(X), entry (a, b).
                let j = q.matrix();
                for a in 0..n {
                    for b in 0..n {
                        let mut t: Vec<Term> = Vec::new();
                        for c in 0..n {
                            if !j[(c, b)].is_zero() {
                                t.push((a, c, j[(c, b)].clone(), zero()));
                            }
                            if !j[(a, c)].is_zero() {
                                t.push((c, b, zero(), -&j[(a, c)]));
                            }
                        }
                        eqs.push(t);
                    }
                }
            }
        }
        let rows: Vec<Vec<Rational>> = eqs.iter().flat_map(|t| real_rows(n, t)).filter(|r| r.iter().any(|x| *x != 0u32)).collect();
        let basis = elim::kernel(rows, 2 * n * n)
            .into_iter()
            .map(|v| {
                let mut m = Mat::zeros(n, n);
                for a in 0..n {
                    for b in 0..n {
                        let u = 2 * (a * n + b);
                        m[(a, b)] = Scalar::new(v[u].clone(), v[u + 1].clone());
                    }
                }
                m
            })
            .collect();
        Self { n, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// `dim 𝔤⁰ − dim stab(F)`: the rank of `X ↦ (Nᵢ X Bᵢ)ᵢ`, where `Bᵢ` spans
    /// `Aᵢ` and `Nᵢ` cuts it out.
    pub fn orbit_dimension(&self, f: &Flag) -> usize {
        assert_eq!(f.ambient(), self.n, "flag and algebra live on different spaces");
        let cuts: Vec<(Vec<Vec<Scalar>>, &[Vec<Scalar>])> = f.spaces().iter().map(|s| (s.annihilator(), s.vectors())).collect();
        let rows: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|x| {
                let mut out = Vec::new();
                for (ann, vecs) in &cuts {
                    for v in vecs.iter() {
                        let xv = x.mul_vec(v).expect("square");
                        for row in ann {
                            let z = row.iter().zip(&xv).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
                            out.push(z.re().clone());
                            out.push(z.im().clone());
                        }
                    }
                }
                out
            })
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        elim::rank(rows, cols)
    }
}

/// Real dimension of the orbit through `f`.
pub fn orbit_dimension(f: &Flag, r: &RealFormStructure) -> Result<usize> {
    r.check_ambient(f.ambient())?;
    Ok(RealLieAlgebra::new(r).orbit_dimension(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Subspace;
    use crate::flags::make_flag;
    use crate::structures::{standard_slh, standard_slr, standard_su};

    #[test]
    fn algebra_dimensions() {
        assert_eq!(RealLieAlgebra::new(&standard_su(2, 1).unwrap()).dim(), 8);
        assert_eq!(RealLieAlgebra::new(&standard_slr(3).unwrap()).dim(), 8);
        assert_eq!(RealLieAlgebra::new(&standard_slh(4).unwrap()).dim(), 15);
        assert_eq!(RealLieAlgebra::new(&standard_slh(2).unwrap()).dim(), 3);
    }

    #[test]
    fn su11_lines() {
        let r = standard_su(1, 1).unwrap();
        let open = make_flag(vec![Subspace::coordinate(2, [0])]).unwrap();
        assert_eq!(orbit_dimension(&open, &r).unwrap(), 2);
        let v = vec![Scalar::one(), Scalar::one()];
        let iso = make_flag(vec![Subspace::from_vectors(vec![v], 2).unwrap()]).unwrap();
        assert_eq!(orbit_dimension(&iso, &r).unwrap(), 1);
    }

    #[test]
    fn real_projective_plane() {
        let r = standard_slr(3).unwrap();
        let f = make_flag(vec![Subspace::coordinate(3, [0])]).unwrap();
        assert_eq!(orbit_dimension(&f, &r).unwrap(), 2);
    }
}
