//! Orbits of SU(p,q), SL(n,ℝ) and SL(n,ℍ) on complex flag varieties, computed
//! exactly, and their behaviour along increasing chains of ambient spaces.

pub mod error;
pub mod exact;
pub mod flags;
pub mod orbits;
pub mod report;
pub mod stabilization;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
