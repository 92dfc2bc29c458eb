//! Incrementally maintained reduced echelon bases of polynomial spans.

use std::collections::BTreeMap;

use super::multiindex::MultiIndex;
use super::polynomial::Polynomial;
use crate::linalg::Rational;

/// A subspace of polynomials held in reduced echelon form.
///
/// Every basis element has coefficient 1 on its reverse-lex leading monomial
/// (its pivot), and no basis element has a nonzero coefficient on another
/// element's pivot. The basis is therefore canonical for the subspace.
#[derive(Clone, Debug)]
pub struct PolySpan {
    nvars: usize,
    basis: Vec<Polynomial>,
    pivots: BTreeMap<MultiIndex, usize>,
}

impl PolySpan {
    pub fn new(nvars: usize) -> Self {
        PolySpan { nvars, basis: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn from_polys<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut s = Self::new(nvars);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// `p` minus its projection onto the span along the non-pivot monomials.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut r = p.clone();
        if self.pivots.len() <= p.num_terms() {
            for (piv, &i) in &self.pivots {
                if let Some(c) = p.coeff_ref(piv) {
                    r.axpy(&-c, &self.basis[i]);
                }
            }
        } else {
            for (e, c) in p.terms() {
                if let Some(&i) = self.pivots.get(e) {
                    r.axpy(&-c, &self.basis[i]);
                }
            }
        }
        r
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let (piv, _) = r.leading_term_revlex().expect("nonzero");
        for b in self.basis.iter_mut() {
            if let Some(c) = b.coeff_ref(&piv).cloned() {
                b.axpy(&-c, &r);
            }
        }
        self.pivots.insert(piv, self.basis.len());
        self.basis.push(r);
        true
    }

    /// Basis elements in the order they were added (each reduced).
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// The canonical basis: sorted by pivot, reverse-lex descending.
    pub fn canonical_basis(&self) -> Vec<Polynomial> {
        self.pivots.iter().rev().map(|(_, &i)| self.basis[i].clone()).collect()
    }

    /// Pivot monomials, reverse-lex descending.
    pub fn pivot_monomials(&self) -> Vec<MultiIndex> {
        self.pivots.keys().rev().cloned().collect()
    }

    /// Coordinates of `p` with respect to [`Self::canonical_basis`], or
    /// `None` if `p` is not in the span.
    pub fn coordinates(&self, p: &Polynomial) -> Option<Vec<Rational>> {
        if !self.contains(p) {
            return None;
        }
        Some(self.pivots.keys().rev().map(|piv| p.coeff(piv)).collect())
    }

    pub fn is_subspace_of(&self, other: &PolySpan) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Subspace equality; the canonical bases coincide exactly.
    pub fn same_span(&self, other: &PolySpan) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_basis() {
        let a = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let mut s = PolySpan::new(2);
        assert!(s.insert(&a));
        assert!(s.insert(&b));
        assert!(!s.insert(&(&a + &b)));
        assert_eq!(s.dim(), 2);
        let c = s.canonical_basis();
        assert_eq!(c[0], Polynomial::from_int_terms(2, &[(&[0, 1], 1)]));
        assert_eq!(c[1], Polynomial::from_int_terms(2, &[(&[1, 0], 1)]));
        assert_eq!(s.coordinates(&a).unwrap(), vec![Rational::one(), Rational::one()]);
    }
}
