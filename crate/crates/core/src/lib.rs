//! Lowest-weight spaces of polynomial rings under invariant differential
//! operators, computed in exact rational arithmetic.
//!
//! The crate covers generalized symmetric groups G(m,1,n), the cyclic groups
//! C_e and the dihedral groups G(e,e,2): annihilators of the negative
//! part of the invariant Weyl algebra, Specht generators, the canonical
//! (Young) basis built by branching, Jucys–Murphy spectra, and differential
//! restriction from a cyclic group to its dihedral overgroup.

pub mod annihilator;
pub mod canonical;
pub mod cli;
pub mod combinat;
pub mod cyclic_dihedral;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod specht;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
