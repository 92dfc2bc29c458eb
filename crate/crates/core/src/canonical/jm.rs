//! Joint eigenvectors of the Jucys–Murphy elements, an oracle for the
//! branching construction that never looks at leading terms.

use std::collections::BTreeMap;

use crate::annihilator::{kernel_of_maps, GradedBasis};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{OrderedPartition, Polynomial};
use crate::weyl::jm_apply;

/// Splits a graded space by monomial class; each piece keeps its basis.
pub fn isotypic_pieces(space: &GradedBasis) -> BTreeMap<OrderedPartition, Vec<Polynomial>> {
    let mut out: BTreeMap<OrderedPartition, Vec<Polynomial>> = BTreeMap::new();
    for p in space.polys() {
        for (cls, part) in p.isotypic_decompose() {
            out.entry(cls).or_default().push(part);
        }
    }
    out
}

/// Simultaneous eigenvectors of L₂, …, Lₙ on span(`piece`), with their
/// eigenvalue vectors (ℓ(1) = 0), normalized and sorted by spectrum.
///
/// Eigenspaces are refined one Lᵢ at a time over the integer candidates
/// −(i−1)..=(i−1); the joint spectrum must be simple and the eigenvectors
/// must exhaust the piece.
pub fn jm_joint_eigenbasis(piece: &[Polynomial]) -> Result<Vec<(Polynomial, Vec<i64>)>> {
    let Some(first) = piece.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    let mut spaces: Vec<(Vec<Polynomial>, Vec<i64>)> = vec![(piece.to_vec(), vec![0; n.min(1)])];
    for i in 2..=n {
        let mut next = Vec::new();
        let bound = i as i64 - 1;
        for (cols, spec) in spaces {
            for c in -bound..=bound {
                let shift = Rational::from_int(c);
                let map = |p: &Polynomial| -> Result<Polynomial> { Ok(&jm_apply(i, p)? - &p.scale(&shift)) };
                let k = kernel_of_maps(&cols, &[map])?;
                if !k.is_empty() {
                    let mut s = spec.clone();
                    s.push(c);
                    next.push((k, s));
                }
            }
        }
        spaces = next;
    }
    let total: usize = spaces.iter().map(|(k, _)| k.len()).sum();
    if total != piece.len() {
        return Err(Error::NotEigenvector(format!(
            "joint eigenvectors span {total} of {} dimensions",
            piece.len()
        )));
    }
    let mut out = Vec::with_capacity(spaces.len());
    for (k, spec) in spaces {
        if k.len() != 1 {
            return Err(Error::NonSimpleSpectrum(format!("spectrum {spec:?} has multiplicity {}", k.len())));
        }
        out.push((k[0].normalized(), spec));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jm_examples() {
        let a = Polynomial::from_int_terms(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], -2)]);
        let b = Polynomial::from_int_terms(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], -1)]);
        let e = jm_joint_eigenbasis(&[&a + &b, &a - &b]).unwrap();
        assert_eq!(e, vec![(b, vec![0, -1, 1]), (a, vec![0, 1, -1])]);

        let e = jm_joint_eigenbasis(&[Polynomial::one(3)]).unwrap();
        assert_eq!(e[0].1, vec![0, 1, 2]);

        let x = |i| Polynomial::var(3, i);
        let vdm = &(&(&x(0) - &x(1)) * &(&x(0) - &x(2))) * &(&x(1) - &x(2));
        let e = jm_joint_eigenbasis(&[vdm]).unwrap();
        assert_eq!(e[0].1, vec![0, -1, -2]);
    }
}
