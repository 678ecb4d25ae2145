//! Seeded random group elements and flags.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{Mat, Scalar, Subspace};
use crate::flags::{Flag, FlagType};
use crate::structures::RealFormStructure;

const RETRIES: usize = 64;

fn small<R: Rng>(rng: &mut R) -> i64 {
    rng.gen_range(-2..=2)
}

fn random_complex<R: Rng>(rng: &mut R, n: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            m[(a, b)] = Scalar::from_ints(small(rng), small(rng));
        }
    }
    m
}

/// An element of U(p,q), GL(n,ℝ) or the GL-analogue commuting with the
/// quaternionic structure. Scalars act trivially on flags, so these have the
/// same flag orbits as the determinant-one groups.
pub fn random_form_element(r: &RealFormStructure, seed: u64) -> Result<Mat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = r.n();
    let id = Mat::identity(n);
    for _ in 0..RETRIES {
        let g = match r {
            RealFormStructure::Su(h) => {
                let mut k = Mat::zeros(n, n);
                for a in 0..n {
                    k[(a, a)] = Scalar::from_ints(0, small(&mut rng));
                    for b in a + 1..n {
                        let z = Scalar::from_ints(small(&mut rng), small(&mut rng));
                        k[(b, a)] = -z.conj();
                        k[(a, b)] = z;
                    }
                }
                let x = h.matrix().mul(&k)?;
                let Some(inv) = id.add(&x)?.inverse() else { continue };
                id.sub(&x)?.mul(&inv)?
            }
            RealFormStructure::Slr(_) => {
                let mut m = Mat::zeros(n, n);
                for a in 0..n {
                    for b in 0..n {
                        m[(a, b)] = Scalar::from_int(small(&mut rng));
                    }
                }
                m
            }
            RealFormStructure::Slh(q) => {
                let m = random_complex(&mut rng, n);
                let j = q.matrix();
                // g = (M + J·conj(M)·J⁻¹)/2 with J⁻¹ = −J.
                let twisted = j.mul(&m.conj())?.mul(&j)?;
                m.sub(&twisted)?.scale(&Scalar::from_fractions(1, 2, 0, 1))
            }
        };
        if g.rank() == n {
            return Ok(g);
        }
    }
    Err(Error::DegenerateSample(RETRIES))
}

/// A random flag of type `ty` whose basis entries come from `{0, ±1, ±i}`,
/// about half of them zero, so special positions are hit often.
pub fn random_flag<R: Rng>(ty: &FlagType, rng: &mut R) -> Result<Flag> {
    let n = ty.n;
    let choices = [Scalar::one(), -Scalar::one(), Scalar::i(), -Scalar::i()];
    for _ in 0..RETRIES {
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|_| (0..n).map(|_| if rng.gen_bool(0.5) { Scalar::zero() } else { choices[rng.gen_range(0..4)].clone() }).collect())
            .collect();
        let m = Mat::from_columns(&cols, n)?;
        if m.rank() < n {
            continue;
        }
        let spaces = ty.d.iter().map(|&d| Subspace::from_vectors(cols[..d].to_vec(), n)).collect::<Result<Vec<_>>>()?;
        return Flag::new(n, spaces);
    }
    Err(Error::DegenerateSample(RETRIES))
}
