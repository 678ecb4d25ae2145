//! Flags, flag types, finite-type descriptors and the level-to-level embeddings.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{unit, Scalar, Subspace};
use crate::structures::{standard_slh, standard_slr, HermitianStructure, RealFormStructure};

/// Dimension vector `0 < d₁ < … < d_{s-1} < n` of the proper members.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FlagType {
    pub n: usize,
    pub d: Vec<usize>,
}

impl FlagType {
    pub fn new(n: usize, d: Vec<usize>) -> Result<Self> {
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidType(format!("dimensions {d:?} are not strictly increasing")));
        }
        if d.iter().any(|&x| x == 0 || x >= n) {
            return Err(Error::InvalidType(format!("dimensions {d:?} must lie strictly between 0 and {n}")));
        }
        Ok(Self { n, d })
    }

    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        Self::new(n, vec![k])
    }

    pub fn full(n: usize) -> Self {
        Self { n, d: (1..n).collect() }
    }

    /// Number of proper members.
    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// `d₀ = 0, d₁, …, d_{s-1}, d_s = n`.
    pub fn with_ends(&self) -> Vec<usize> {
        std::iter::once(0).chain(self.d.iter().copied()).chain(std::iter::once(self.n)).collect()
    }

    /// Sizes `dᵢ − dᵢ₋₁` for i = 1..s.
    pub fn blocks(&self) -> Vec<usize> {
        self.with_ends().windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Complex dimension of the flag variety.
    pub fn complex_dim(&self) -> usize {
        let sq: usize = self.blocks().iter().map(|b| b * b).sum();
        (self.n * self.n - sq) / 2
    }

    /// All flag types of ℂⁿ (every subset of 1..n-1).
    pub fn all(n: usize) -> Vec<FlagType> {
        let inner = n.saturating_sub(1);
        (0u32..(1 << inner))
            .map(|mask| FlagType { n, d: (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect() })
            .collect()
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(ToString::to_string).collect();
        write!(f, "({}) in C^{}", d.join(","), self.n)
    }
}

/// Nested proper subspaces `A₁ ⊂ … ⊂ A_{s-1}` of ℂⁿ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    ty: FlagType,
    spaces: Vec<Subspace>,
}

impl Flag {
    /// Validates nesting and infers the type. The ambient dimension must be
    /// given because an empty chain carries none.
    pub fn new(ambient: usize, spaces: Vec<Subspace>) -> Result<Self> {
        for s in &spaces {
            if s.ambient() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: s.ambient() });
            }
        }
        for (i, w) in spaces.windows(2).enumerate() {
            if w[0].dim() == w[1].dim() {
                return Err(Error::DuplicateDimension(w[0].dim()));
            }
            if !w[1].contains(&w[0])? {
                return Err(Error::Nesting(i + 1));
            }
        }
        let ty = FlagType::new(ambient, spaces.iter().map(Subspace::dim).collect())?;
        Ok(Self { ty, spaces })
    }

    pub fn flag_type(&self) -> &FlagType {
        &self.ty
    }

    pub fn ambient(&self) -> usize {
        self.ty.n
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// Member `i` for `0 ≤ i ≤ s`, with `A₀ = 0` and `A_s = V`.
    pub fn member(&self, i: usize) -> Subspace {
        if i == 0 {
            Subspace::zero(self.ambient())
        } else if i > self.spaces.len() {
            Subspace::full(self.ambient())
        } else {
            self.spaces[i - 1].clone()
        }
    }

    /// Applies a linear map to every member.
    pub fn image(&self, g: &crate::exact::Mat) -> Result<Flag> {
        let spaces = self.spaces.iter().map(|s| s.image(g)).collect::<Result<Vec<_>>>()?;
        Flag::new(self.ambient(), spaces)
    }
}

/// Validated constructor for a nonempty list of members.
pub fn make_flag(spaces: Vec<Subspace>) -> Result<Flag> {
    let ambient = spaces.first().map(Subspace::ambient).ok_or_else(|| Error::InvalidType("a flag needs at least one member".into()))?;
    Flag::new(ambient, spaces)
}

/// Coordinate flag `⟨e₁,…,e_{dᵢ}⟩`.
pub fn standard_flag(t: &FlagType) -> Flag {
    Flag { ty: t.clone(), spaces: t.d.iter().map(|&d| Subspace::coordinate(t.n, 0..d)).collect() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MemberKind {
    Dim,
    Middle,
    Codim,
}

/// A generalized flag given by finitely many finite dimensions and
/// codimensions, optionally one member growing like `⌊n·u/v⌋`, or an
/// unbounded chain (full flags at every level).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTypeDescriptor {
    finite_dims: Vec<usize>,
    finite_codims: Vec<usize>,
    middle: Option<(u64, u64)>,
    chain: bool,
}

impl FiniteTypeDescriptor {
    pub fn new(finite_dims: Vec<usize>, mut finite_codims: Vec<usize>, middle: Option<(u64, u64)>) -> Result<Self> {
        finite_codims.sort_unstable_by(|a, b| b.cmp(a));
        let mut dims = finite_dims.clone();
        dims.sort_unstable();
        if dims != finite_dims || dims.windows(2).any(|w| w[0] == w[1]) || dims.first() == Some(&0) {
            return Err(Error::Parse(format!("dims {finite_dims:?} must be positive and strictly increasing")));
        }
        if finite_codims.windows(2).any(|w| w[0] == w[1]) || finite_codims.last() == Some(&0) {
            return Err(Error::Parse("codims must be positive and distinct".into()));
        }
        if let Some((u, v)) = middle {
            if u == 0 || u >= v {
                return Err(Error::Parse(format!("middle slope {u}/{v} must lie strictly between 0 and 1")));
            }
        }
        Ok(Self { finite_dims, finite_codims, middle, chain: false })
    }

    pub fn grassmannian(k: usize) -> Self {
        Self::new(vec![k], vec![], None).expect("positive k")
    }

    pub fn chain() -> Self {
        Self { finite_dims: vec![], finite_codims: vec![], middle: None, chain: true }
    }

    pub fn finite_dims(&self) -> &[usize] {
        &self.finite_dims
    }

    /// Codimensions in decreasing order.
    pub fn finite_codims(&self) -> &[usize] {
        &self.finite_codims
    }

    pub fn middle(&self) -> Option<(u64, u64)> {
        self.middle
    }

    pub fn is_chain(&self) -> bool {
        self.chain
    }

    /// No growth options: finitely many members, each of finite dimension or codimension.
    pub fn is_finite_type(&self) -> bool {
        !self.chain && self.middle.is_none()
    }

    fn middle_at(&self, n: usize) -> Option<usize> {
        self.middle.map(|(u, v)| (n as u64 * u / v) as usize)
    }

    fn kinds(&self) -> Vec<MemberKind> {
        let mut k = vec![MemberKind::Dim; self.finite_dims.len()];
        if self.middle.is_some() {
            k.push(MemberKind::Middle);
        }
        k.extend(std::iter::repeat_n(MemberKind::Codim, self.finite_codims.len()));
        k
    }

    /// Flag type cut out at level `n`.
    pub fn induced_type(&self, n: usize) -> Result<FlagType> {
        if self.chain {
            return if n >= 1 { Ok(FlagType::full(n)) } else { Err(self.too_small(n)) };
        }
        let mut d: Vec<usize> = self.finite_dims.clone();
        d.extend(self.middle_at(n));
        for &b in &self.finite_codims {
            if b >= n {
                return Err(self.too_small(n));
            }
            d.push(n - b);
        }
        FlagType::new(n, d).map_err(|_| self.too_small(n))
    }

    fn too_small(&self, n: usize) -> Error {
        Error::LevelTooSmall { level: n, descriptor: self.to_string() }
    }

    pub fn is_valid_at(&self, n: usize) -> bool {
        self.induced_type(n).is_ok()
    }

    /// Whether member `i` (0-based among proper members) absorbs `e_{m+1}`.
    fn absorbs(&self, kind: MemberKind, m: usize) -> bool {
        match kind {
            MemberKind::Dim => false,
            MemberKind::Codim => true,
            MemberKind::Middle => self.middle_at(m + 1) > self.middle_at(m),
        }
    }

    /// Pivot `j_m` (1-based) for the step from level `m` to `m + 1`.
    pub fn pivot(&self, m: usize) -> usize {
        if self.chain {
            // The new member is the old ambient space V_m = G_{s_m}.
            return m + 1;
        }
        let kinds = self.kinds();
        kinds.iter().position(|&k| self.absorbs(k, m)).map_or(kinds.len() + 1, |i| i + 1)
    }
}

impl fmt::Display for FiniteTypeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain {
            return f.write_str("chain");
        }
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        if !self.finite_dims.is_empty() {
            parts.push(format!("dims={}", join(&self.finite_dims)));
        }
        if !self.finite_codims.is_empty() {
            parts.push(format!("codims={}", join(&self.finite_codims)));
        }
        if let Some((u, v)) = self.middle {
            parts.push(format!("middle={u}/{v}"));
        }
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for FiniteTypeDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "chain" {
            return Ok(Self::chain());
        }
        let list = |v: &str| -> Result<Vec<usize>> {
            v.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad number `{t}`")))).collect()
        };
        let (mut dims, mut codims, mut middle) = (vec![], vec![], None);
        for part in s.split(';').filter(|p| !p.trim().is_empty()) {
            let (key, val) = part.split_once('=').ok_or_else(|| Error::Parse(format!("descriptor part `{part}` lacks `=`")))?;
            match key.trim() {
                "dims" => dims = list(val)?,
                "codims" => codims = list(val)?,
                "middle" => {
                    let (u, v) = val.split_once('/').ok_or_else(|| Error::Parse(format!("middle `{val}` should be u/v")))?;
                    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad number `{t}`")));
                    middle = Some((num(u)?, num(v)?));
                }
                "chain" => return Err(Error::Parse("chain cannot be combined with other members".into())),
                other => return Err(Error::Parse(format!("unknown descriptor key `{other}`"))),
            }
        }
        if dims.is_empty() && codims.is_empty() && middle.is_none() {
            return Err(Error::Parse("empty descriptor".into()));
        }
        Self::new(dims, codims, middle)
    }
}

/// One embedding step `V_m → V_{m+1}` with explicit target type and pivot.
pub fn embed_with(flag: &Flag, next: &FlagType, pivot: usize) -> Result<Flag> {
    let m = flag.ambient();
    if next.n != m + 1 {
        return Err(Error::Embedding(format!("target level {} is not {m} + 1", next.n)));
    }
    let s_m = flag.len() + 1;
    let s_next = next.len() + 1;
    let grow = match s_next as isize - s_m as isize {
        0 => false,
        1 => true,
        _ => return Err(Error::Embedding(format!("flag length cannot go from {s_m} to {s_next}"))),
    };
    let e = Subspace::from_vectors(vec![unit(m + 1, m)], m + 1)?;
    let mut spaces = Vec::with_capacity(next.len());
    for i in 1..s_next {
        let space = if i < pivot {
            flag.member(i).extend_to(m + 1)
        } else {
            let src = if grow { i - 1 } else { i };
            flag.member(src).extend_to(m + 1).sum(&e)?
        };
        spaces.push(space);
    }
    let out = Flag::new(m + 1, spaces)?;
    if out.flag_type() != next {
        return Err(Error::TypeMismatch(format!("embedding produced {} instead of {}", out.flag_type(), next)));
    }
    Ok(out)
}

/// One embedding step driven by a descriptor.
pub fn embed_step(flag: &Flag, d: &FiniteTypeDescriptor) -> Result<Flag> {
    let m = flag.ambient();
    let here = d.induced_type(m)?;
    if *flag.flag_type() != here {
        return Err(Error::TypeMismatch(format!("flag has type {} but the descriptor induces {}", flag.flag_type(), here)));
    }
    let next = d.induced_type(m + 1)?;
    embed_with(flag, &next, d.pivot(m))
}

/// Composition of `embed_step` up to level `to`.
pub fn embed_levels(flag: &Flag, d: &FiniteTypeDescriptor, to: usize) -> Result<Flag> {
    let mut f = flag.clone();
    while f.ambient() < to {
        f = embed_step(&f, d)?;
    }
    Ok(f)
}

/// The same map built in one go: each member gains exactly the new basis
/// vectors its kind absorbs, and a chain gains the intermediate spaces
/// `V_m ⊂ V_{m+1} ⊂ …`.
pub fn embed_direct(flag: &Flag, d: &FiniteTypeDescriptor, to: usize) -> Result<Flag> {
    let m = flag.ambient();
    if *flag.flag_type() != d.induced_type(m)? {
        return Err(Error::TypeMismatch("flag type differs from the descriptor".into()));
    }
    let mut spaces: Vec<Subspace> = flag.spaces().iter().map(|s| s.extend_to(to)).collect();
    if d.is_chain() {
        spaces.extend((m..to).map(|k| Subspace::coordinate(to, 0..k)));
    } else {
        for (space, kind) in spaces.iter_mut().zip(d.kinds()) {
            let gained: Vec<Vec<Scalar>> = (m..to).filter(|&k| d.absorbs(kind, k)).map(|k| unit(to, k)).collect();
            *space = space.sum(&Subspace::from_vectors(gained, to)?)?;
        }
    }
    Flag::new(to, spaces)
}

/// The four families of real forms on the limit space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// SU(∞,∞): signs alternate `+,−,+,−,…`, even levels only.
    SuInf,
    /// SU(p,∞): first `p` coordinates positive.
    SuP(usize),
    /// SL(∞,ℝ): odd levels.
    Slr,
    /// SL(∞,ℍ): even levels.
    Slh,
}

impl Family {
    pub fn admits_level(&self, n: usize) -> bool {
        match self {
            Family::SuInf | Family::Slh => n >= 2 && n.is_multiple_of(2),
            Family::SuP(p) => n > *p,
            Family::Slr => n % 2 == 1,
        }
    }

    /// The real form at level `n` of the standard exhaustion.
    pub fn structure_at(&self, n: usize) -> Result<RealFormStructure> {
        if !self.admits_level(n) {
            return Err(Error::Alignment(format!("level {n} is not admissible for {self}")));
        }
        match self {
            Family::SuInf => Ok(RealFormStructure::Su(HermitianStructure::from_signs((0..n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect())?)),
            Family::SuP(p) => crate::structures::standard_su(*p, n - p),
            Family::Slr => standard_slr(n),
            Family::Slh => standard_slh(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SuInf => f.write_str("su_inf"),
            Family::SuP(p) => write!(f, "su_p:{p}"),
            Family::Slr => f.write_str("slr"),
            Family::Slh => f.write_str("slh"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "su_inf" => Ok(Family::SuInf),
            "slr" => Ok(Family::Slr),
            "slh" => Ok(Family::Slh),
            other => match other.strip_prefix("su_p:") {
                Some(p) => p.parse().map(Family::SuP).map_err(|_| Error::Parse(format!("bad p in `{other}`"))),
                None => Err(Error::Parse(format!("unknown family `{other}` (expected su_inf, su_p:<p>, slr, slh)"))),
            },
        }
    }
}

/// Family plus the admissible ambient dimensions used for a trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustionSpec {
    pub family: Family,
    pub level_dims: Vec<usize>,
}

impl ExhaustionSpec {
    /// Admissible levels in `from..=to`.
    pub fn in_range(family: Family, from: usize, to: usize) -> Result<Self> {
        if from > to {
            return Err(Error::Alignment(format!("empty level range {from}..{to}")));
        }
        let level_dims: Vec<usize> = (from..=to).filter(|&n| family.admits_level(n)).collect();
        if level_dims.is_empty() {
            return Err(Error::Alignment(format!("no level in {from}..{to} is admissible for {family}")));
        }
        Ok(Self { family, level_dims })
    }

    /// `(p_n, q_n)` at each level for Hermitian families.
    pub fn su_signatures(&self) -> Option<Vec<(usize, usize)>> {
        match self.family {
            Family::SuInf => Some(self.level_dims.iter().map(|&n| (n.div_ceil(2), n / 2)).collect()),
            Family::SuP(p) => Some(self.level_dims.iter().map(|&n| (p, n - p)).collect()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_validation() {
        let e1 = Subspace::coordinate(3, [0]);
        let e12 = Subspace::coordinate(3, [0, 1]);
        let f = make_flag(vec![e1.clone(), e12.clone()]).unwrap();
        assert_eq!(f.flag_type().d, vec![1, 2]);
        assert!(matches!(make_flag(vec![Subspace::coordinate(3, [1]), Subspace::coordinate(3, [0, 2])]), Err(Error::Nesting(1))));
        assert!(matches!(make_flag(vec![e1.clone(), e1]), Err(Error::DuplicateDimension(1))));
        assert!(make_flag(vec![]).is_err());
        assert_eq!(standard_flag(&FlagType::new(4, vec![]).unwrap()).len(), 0);
    }

    #[test]
    fn induced_types() {
        let d: FiniteTypeDescriptor = "dims=1;codims=1".parse().unwrap();
        assert_eq!(d.induced_type(5).unwrap().d, vec![1, 4]);
        assert!(d.induced_type(2).is_err());
        let mid: FiniteTypeDescriptor = "middle=1/2".parse().unwrap();
        assert_eq!(mid.induced_type(8).unwrap().d, vec![4]);
        let two: FiniteTypeDescriptor = "codims=1,3".parse().unwrap();
        assert_eq!(two.induced_type(6).unwrap().d, vec![3, 5]);
        assert_eq!(two.to_string(), "codims=3,1");
        assert!("chain;dims=1".parse::<FiniteTypeDescriptor>().is_err());
        assert!("middle=3/2".parse::<FiniteTypeDescriptor>().is_err());
    }

    #[test]
    fn steps_follow_descriptor() {
        let hyper: FiniteTypeDescriptor = "codims=1".parse().unwrap();
        let f = make_flag(vec![Subspace::coordinate(2, [0])]).unwrap();
        let g = embed_step(&f, &hyper).unwrap();
        assert_eq!(g.spaces()[0], Subspace::coordinate(3, [0, 2]));

        let line = FiniteTypeDescriptor::grassmannian(1);
        let g = embed_step(&f, &line).unwrap();
        assert_eq!(g.spaces()[0], Subspace::coordinate(3, [0]));

        let chain = FiniteTypeDescriptor::chain();
        let full = standard_flag(&FlagType::full(3));
        let g = embed_step(&full, &chain).unwrap();
        assert_eq!(g, standard_flag(&FlagType::full(4)));
    }

    #[test]
    fn families_parse_and_align() {
        assert_eq!("su_p:2".parse::<Family>().unwrap(), Family::SuP(2));
        assert!("su".parse::<Family>().is_err());
        let ex = ExhaustionSpec::in_range(Family::SuInf, 2, 8).unwrap();
        assert_eq!(ex.level_dims, vec![2, 4, 6, 8]);
        assert_eq!(ex.su_signatures().unwrap(), vec![(1, 1), (2, 2), (3, 3), (4, 4)]);
        assert_eq!(ExhaustionSpec::in_range(Family::Slr, 3, 11).unwrap().level_dims, vec![3, 5, 7, 9, 11]);
        assert!(Family::Slr.structure_at(4).is_err());
    }
}
