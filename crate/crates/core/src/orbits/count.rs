//! Closed-form orbit counts on grassmannians.

use crate::error::{Error, Result};
use crate::flags::Family;

fn check(k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(Error::InvalidType(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

/// SU(p, n−p) orbits on Gr(k, n).
pub fn su_grassmannian_count(n: usize, k: usize, p: usize) -> Result<usize> {
    check(k, n)?;
    if p > n {
        return Err(Error::InvalidType(format!("p = {p} exceeds n = {n}")));
    }
    let l = p.min(n - p);
    let tri = |x: usize| (x + 1) * (x + 2) / 2;
    Ok(if n - l <= k {
        tri(n - k)
    } else if l <= k {
        tri(l)
    } else {
        tri(k)
    })
}

/// SL(n,ℝ) orbits on Gr(k, n): `dim(A ∩ τA)` takes every value from
/// `max(2k − n, 0)` to `k`.
pub fn slr_grassmannian_count(n: usize, k: usize) -> Result<usize> {
    check(k, n)?;
    Ok(k.min(n - k) + 1)
}

/// SL(n/2,ℍ) orbits on Gr(k, n): `dim(A ∩ JA)` is even and ranges over
/// `max(2k − n, 0) ..= k`.
pub fn slh_grassmannian_count(n: usize, k: usize) -> Result<usize> {
    check(k, n)?;
    if n % 2 == 1 {
        return Err(Error::Alignment(format!("slh requires even dimension, got {n}")));
    }
    Ok(k.min(n - k) / 2 + 1)
}

/// Count on the limit grassmannian of `k`-dimensional subspaces.
pub fn stable_grassmannian_count(family: Family, k: usize) -> usize {
    let tri = |x: usize| (x + 1) * (x + 2) / 2;
    match family {
        Family::SuP(p) => tri(p.min(k)),
        Family::SuInf => tri(k),
        Family::Slr => k + 1,
        Family::Slh => k / 2 + 1,
    }
}
