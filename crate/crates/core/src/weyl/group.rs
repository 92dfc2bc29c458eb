//! Finite group elements acting on polynomials.
//!
//! Diagonal elements multiply x^α by ε^{Σ w_i α(i)} for a primitive e-th
//! root of unity ε. Only the exponent of ε matters for every decomposition
//! here, so it is carried as a residue mod e and no cyclotomic arithmetic
//! is done.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupElement {
    /// x_i ↦ x_{σ(i)}, 0-based images.
    Permutation(Vec<usize>),
    /// x_i ↦ ε^{w_i} x_i.
    Diagonal(Vec<i64>),
    /// The diagonal part acts first, then the permutation.
    Composite { perm: Vec<usize>, weights: Vec<i64> },
}

/// The image of a polynomial, each term tagged with its power of ε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub poly: Polynomial,
    pub modulus: u32,
    pub residues: BTreeMap<MultiIndex, u32>,
}

impl GroupAction {
    /// The common residue r if g·p = ε^r p termwise, i.e. p is a
    /// semi-invariant of weight r.
    pub fn uniform_weight(&self) -> Result<u32> {
        let mut it = self.residues.values();
        let Some(&r) = it.next() else { return Ok(0) };
        if it.all(|&x| x == r) {
            Ok(r)
        } else {
            Err(Error::MixedResidues { modulus: self.modulus })
        }
    }
}

/// Residue Σ w_i α(i) mod e.
pub fn weight_residue(weights: &[i64], alpha: &MultiIndex, e: u32) -> u32 {
    let s: i64 = weights.iter().zip(alpha.iter()).map(|(w, a)| w * a as i64).sum();
    s.rem_euclid(e as i64) as u32
}

pub fn group_act(g: &GroupElement, p: &Polynomial, e: u32) -> Result<GroupAction> {
    if e == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let n = p.nvars();
    let check = |len: usize| {
        if len != n {
            Err(Error::LengthMismatch { expected: n, found: len })
        } else {
            Ok(())
        }
    };
    let (perm, weights): (Option<&Vec<usize>>, Option<&Vec<i64>>) = match g {
        GroupElement::Permutation(s) => (Some(s), None),
        GroupElement::Diagonal(w) => (None, Some(w)),
        GroupElement::Composite { perm, weights } => (Some(perm), Some(weights)),
    };
    if let Some(w) = weights {
        check(w.len())?;
    }
    let mut tagged: Vec<(MultiIndex, u32)> = p
        .terms()
        .map(|(a, _)| (a.clone(), weights.map_or(0, |w| weight_residue(w, a, e))))
        .collect();
    let poly = match perm {
        Some(s) => {
            check(s.len())?;
            let q = p.permute_vars(s)?;
            let mut inv = vec![0; s.len()];
            for (i, &t) in s.iter().enumerate() {
                inv[t] = i;
            }
            for (a, _) in tagged.iter_mut() {
                *a = a.gather(&inv);
            }
            q
        }
        None => p.clone(),
    };
    Ok(GroupAction { poly, modulus: e, residues: tagged.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = Polynomial::from_int_terms(2, &[(&[2, 1], 1)]);
        let r = group_act(&GroupElement::Permutation(vec![1, 0]), &p, 1).unwrap();
        assert_eq!(r.poly, Polynomial::from_int_terms(2, &[(&[1, 2], 1)]));

        let sq = Polynomial::from_int_terms(2, &[(&[2, 0], 1)]);
        let w = GroupElement::Diagonal(vec![1, -1]);
        assert_eq!(group_act(&w, &sq, 3).unwrap().uniform_weight().unwrap(), 2);
        let xy = Polynomial::from_int_terms(2, &[(&[1, 1], 1)]);
        for e in 2..6 {
            assert_eq!(group_act(&w, &xy, e).unwrap().uniform_weight().unwrap(), 0);
        }
        let mixed = &sq + &xy;
        assert!(matches!(
            group_act(&w, &mixed, 3).unwrap().uniform_weight(),
            Err(Error::MixedResidues { .. })
        ));
    }
}
