//! Hermitian forms, real structures and quaternionic structures in standard
//! coordinates.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{elim, Mat, Scalar, Subspace};

/// Diagonal Hermitian form `diag(s₁, …, sₙ)` with every `sᵢ = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianStructure {
    signs: Vec<i8>,
}

impl HermitianStructure {
    pub fn from_signs(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::Alignment("hermitian form needs dimension at least 1".into()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Alignment("diagonal entries must be +1 or -1".into()));
        }
        Ok(Self { signs })
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn p(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }

    pub fn q(&self) -> usize {
        self.n() - self.p()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn positive_coords(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.signs[i] > 0).collect()
    }

    pub fn negative_coords(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.signs[i] < 0).collect()
    }

    pub fn matrix(&self) -> Mat {
        Mat::diagonal(&self.signs.iter().map(|&s| Scalar::from_int(s as i64)).collect::<Vec<_>>())
    }

    /// ω(x, y) = Σ sᵢ conj(xᵢ) yᵢ.
    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for ((s, a), b) in self.signs.iter().zip(x).zip(y) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let t = &a.conj() * b;
            if *s > 0 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        acc
    }

    /// Gram matrix `G[i][j] = ω(xᵢ, yⱼ)`.
    pub fn gram(&self, xs: &[Vec<Scalar>], ys: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        xs.iter().map(|x| ys.iter().map(|y| self.pair(x, y)).collect()).collect()
    }
}

/// Entrywise conjugation on ℂⁿ, n odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealStructure {
    n: usize,
}

impl RealStructure {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        v.iter().map(Scalar::conj).collect()
    }
}

/// The antilinear map `v ↦ J·conj(v)` on ℂⁿ, n even, with
/// `J e_{2i-1} = -e_{2i}` and `J e_{2i} = e_{2i-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionicStructure {
    n: usize,
}

impl QuaternionicStructure {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The real matrix J.
    pub fn matrix(&self) -> Mat {
        let mut j = Mat::zeros(self.n, self.n);
        for b in 0..self.n / 2 {
            j[(2 * b + 1, 2 * b)] = Scalar::from_int(-1);
            j[(2 * b, 2 * b + 1)] = Scalar::one();
        }
        j
    }

    pub fn apply_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for b in 0..self.n / 2 {
            out[2 * b] = v[2 * b + 1].conj();
            out[2 * b + 1] = -v[2 * b].conj();
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Su,
    Slr,
    Slh,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Su => "su",
            FormKind::Slr => "slr",
            FormKind::Slh => "slh",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RealFormStructure {
    Su(HermitianStructure),
    Slr(RealStructure),
    Slh(QuaternionicStructure),
}

/// Signature `(a, b, c)` of a restricted Hermitian form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.a + self.b + self.c
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

pub fn standard_su(p: usize, q: usize) -> Result<RealFormStructure> {
    if p + q == 0 {
        return Err(Error::Alignment("su:p,q needs p + q >= 1".into()));
    }
    let signs = std::iter::repeat_n(1, p).chain(std::iter::repeat_n(-1, q)).collect();
    Ok(RealFormStructure::Su(HermitianStructure::from_signs(signs)?))
}

pub fn standard_slr(n: usize) -> Result<RealFormStructure> {
    if n.is_multiple_of(2) {
        return Err(Error::Alignment(format!("slr requires odd dimension, got {n}")));
    }
    Ok(RealFormStructure::Slr(RealStructure { n }))
}

pub fn standard_slh(n: usize) -> Result<RealFormStructure> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Alignment(format!("slh requires positive even dimension, got {n}")));
    }
    Ok(RealFormStructure::Slh(QuaternionicStructure { n }))
}

impl RealFormStructure {
    pub fn n(&self) -> usize {
        match self {
            RealFormStructure::Su(h) => h.n(),
            RealFormStructure::Slr(t) => t.n(),
            RealFormStructure::Slh(j) => j.n(),
        }
    }

    pub fn kind(&self) -> FormKind {
        match self {
            RealFormStructure::Su(_) => FormKind::Su,
            RealFormStructure::Slr(_) => FormKind::Slr,
            RealFormStructure::Slh(_) => FormKind::Slh,
        }
    }

    pub fn hermitian(&self) -> Option<&HermitianStructure> {
        match self {
            RealFormStructure::Su(h) => Some(h),
            _ => None,
        }
    }

    /// Image of a vector under τ or J. `None` for Hermitian forms.
    pub fn antilinear_vector(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        match self {
            RealFormStructure::Su(_) => None,
            RealFormStructure::Slr(t) => Some(t.apply_vector(v)),
            RealFormStructure::Slh(j) => Some(j.apply_vector(v)),
        }
    }

    pub fn check_ambient(&self, ambient: usize) -> Result<()> {
        if ambient != self.n() {
            return Err(Error::Alignment(format!("ambient dimension {ambient} does not match the {} form on dimension {}", self.kind(), self.n())));
        }
        Ok(())
    }

    /// Short form `su:p,q`, `slr:n` or `slh:n`.
    pub fn spec(&self) -> String {
        match self {
            RealFormStructure::Su(h) if h.signs.windows(2).all(|w| w[0] >= w[1]) => format!("su:{},{}", h.p(), h.q()),
            RealFormStructure::Su(h) => {
                let s: String = h.signs.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect();
                format!("su:{s}")
            }
            RealFormStructure::Slr(t) => format!("slr:{}", t.n),
            RealFormStructure::Slh(j) => format!("slh:{}", j.n),
        }
    }
}

impl fmt::Display for RealFormStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

impl FromStr for RealFormStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s.trim().split_once(':').ok_or_else(|| Error::Parse(format!("form `{s}` should look like su:p,q, slr:n or slh:n")))?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number `{t}` in form `{s}`")));
        match kind.trim() {
            "su" => {
                let (p, q) = rest.split_once(',').ok_or_else(|| Error::Parse(format!("su form `{s}` needs p,q")))?;
                standard_su(num(p)?, num(q)?)
            }
            "slr" => standard_slr(num(rest)?),
            "slh" => standard_slh(num(rest)?),
            other => Err(Error::Parse(format!("unknown form kind `{other}`"))),
        }
    }
}

/// Signature of `ω|U` by Hermitian congruence elimination on the Gram matrix.
pub fn signature(u: &Subspace, h: &HermitianStructure) -> Result<Signature> {
    if u.ambient() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), found: u.ambient() });
    }
    Ok(gram_signature(h.gram(u.vectors(), u.vectors())))
}

/// Inertia of a Hermitian matrix given as rows.
pub fn gram_signature(mut g: Vec<Vec<Scalar>>) -> Signature {
    let mut sig = Signature::default();
    while !g.is_empty() {
        let k = g.len();
        if let Some(p) = (0..k).find(|&i| !g[i][i].is_zero()) {
            let d = g[p][p].re().clone();
            if d > 0u32 {
                sig.a += 1;
            } else {
                sig.b += 1;
            }
            g = schur_1(&g, p);
            continue;
        }
        // Zero diagonal: find an off-diagonal entry g[p][q] ≠ 0.
        let Some((p, q)) = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).find(|&(i, j)| !g[i][j].is_zero()) else {
            sig.c += k;
            break;
        };
        // x_p ← x_p + t·x_q with t = conj(g[p][q]) makes the new diagonal entry 2|g[p][q]|².
        let t = g[p][q].conj();
        let tc = t.conj();
        for j in 0..k {
            let add = &tc * &g[q][j];
            g[p][j] += &add;
        }
        for i in 0..k {
            let add = &g[i][q] * &t;
            g[i][p] += &add;
        }
    }
    sig
}

/// Schur complement of the pivot `p` in a Hermitian matrix.
fn schur_1(g: &[Vec<Scalar>], p: usize) -> Vec<Vec<Scalar>> {
    let inv = g[p][p].inv();
    let keep: Vec<usize> = (0..g.len()).filter(|&i| i != p).collect();
    keep.iter()
        .map(|&i| {
            let f = &g[i][p] * &inv;
            keep.iter()
                .map(|&j| if f.is_zero() || g[p][j].is_zero() { g[i][j].clone() } else { &g[i][j] - &(&f * &g[p][j]) })
                .collect()
        })
        .collect()
}

/// `U^⊥ = {x : ω(u, x) = 0 for all u ∈ U}`.
pub fn form_complement(u: &Subspace, h: &HermitianStructure) -> Result<Subspace> {
    if u.ambient() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), found: u.ambient() });
    }
    // Row for u: x ↦ Σ sᵢ conj(uᵢ) xᵢ.
    let rows: Vec<Vec<Scalar>> = u
        .vectors()
        .iter()
        .map(|v| v.iter().zip(h.signs()).map(|(x, &s)| if s > 0 { x.conj() } else { -x.conj() }).collect())
        .collect();
    Subspace::from_vectors(elim::kernel(rows, h.n()), h.n())
}

/// τ(U) or J(U).
pub fn apply_antilinear(r: &RealFormStructure, u: &Subspace) -> Result<Subspace> {
    r.check_ambient(u.ambient())?;
    let vecs = u
        .vectors()
        .iter()
        .map(|v| r.antilinear_vector(v).ok_or_else(|| Error::TypeMismatch("hermitian forms carry no antilinear map".into())))
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_vectors(vecs, u.ambient())
}
