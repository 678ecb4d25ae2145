use serde::Serialize;

use crate::error::Result;
use crate::exact::elim;
use crate::flags::Flag;
use crate::structures::{gram_signature, FormKind, RealFormStructure, Signature};

/// Complete orbit label of a flag.
///
/// `matrix[i][j]` is `dim(Aᵢ ∩ Aⱼ^⊥)` for SU, `dim(Aᵢ ∩ τAⱼ)` for SLR and
/// `dim(Aᵢ ∩ J Aⱼ)` for SLH, over the proper members. `signatures` is empty
/// except for SU.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitInvariant {
    pub kind: FormKind,
    pub n: usize,
    pub dims: Vec<usize>,
    pub signatures: Vec<Signature>,
    pub matrix: Vec<Vec<usize>>,
}

impl OrbitInvariant {
    /// Open-orbit criterion: every member nondegenerate (SU), or every
    /// intersection of generic dimension `max(dᵢ + dⱼ − n, 0)` (SLR, SLH).
    pub fn is_open(&self) -> bool {
        match self.kind {
            FormKind::Su => self.signatures.iter().all(|s| s.c == 0),
            FormKind::Slr | FormKind::Slh => self.matrix.iter().enumerate().all(|(i, row)| {
                row.iter().enumerate().all(|(j, &x)| x == (self.dims[i] + self.dims[j]).saturating_sub(self.n))
            }),
        }
    }

    /// Every member τ-stable.
    pub fn is_real(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| row[i] == self.dims[i])
    }

    /// Human-readable one-line label.
    pub fn label(&self) -> String {
        let m: Vec<String> = self.matrix.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
        if self.kind == FormKind::Su {
            let s: Vec<String> = self.signatures.iter().map(ToString::to_string).collect();
            format!("{} | {}", s.join(" "), m.join("; "))
        } else {
            m.join("; ")
        }
    }
}

/// The complete invariant of `f` with respect to `r`.
pub fn invariant(f: &Flag, r: &RealFormStructure) -> Result<OrbitInvariant> {
    r.check_ambient(f.ambient())?;
    let n = f.ambient();
    let dims: Vec<usize> = f.spaces().iter().map(|s| s.dim()).collect();
    let k = dims.len();
    let mut matrix = vec![vec![0; k]; k];
    let mut signatures = Vec::new();
    match r {
        RealFormStructure::Su(h) => {
            for (i, a) in f.spaces().iter().enumerate() {
                // Rows ω(b_j, ·) restricted to A_i: the kernel is A_i ∩ A_j^⊥.
                for (j, b) in f.spaces().iter().enumerate() {
                    let g = h.gram(b.vectors(), a.vectors());
                    matrix[i][j] = dims[i] - elim::rank(g, dims[i]);
                }
                signatures.push(gram_signature(h.gram(a.vectors(), a.vectors())));
            }
        }
        RealFormStructure::Slr(_) | RealFormStructure::Slh(_) => {
            let images: Vec<Vec<_>> = f
                .spaces()
                .iter()
                .map(|s| s.vectors().iter().map(|v| r.antilinear_vector(v).expect("antilinear form")).collect())
                .collect();
            for (i, a) in f.spaces().iter().enumerate() {
                for j in 0..k {
                    let rows: Vec<_> = a.vectors().iter().chain(&images[j]).cloned().collect();
                    matrix[i][j] = dims[i] + dims[j] - elim::rank(rows, n);
                }
            }
        }
    }
    Ok(OrbitInvariant { kind: r.kind(), n, dims, signatures, matrix })
}

/// Same orbit iff same invariant.
pub fn same_orbit(f1: &Flag, f2: &Flag, r: &RealFormStructure) -> Result<bool> {
    if f1.flag_type() != f2.flag_type() {
        return Err(crate::error::Error::TypeMismatch(format!("{} vs {}", f1.flag_type(), f2.flag_type())));
    }
    Ok(invariant(f1, r)? == invariant(f2, r)?)
}
