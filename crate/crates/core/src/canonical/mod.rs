//! The canonical (Young) basis of B^ann(Sₙ): lowest-weight vectors indexed
//! by standard tableaux, built one variable at a time by branching, with
//! their spectra α_T, γ_T and ℓ_T.
//!
//! Tableau convention: box i sits in row α_T(i) + 1, where α_T is the
//! reverse-lexicographic leading exponent. The conjugate convention (box i
//! in column α_T(i) + 1) is reported alongside as the "conjugate" fields; its
//! contents are the negatives of the native ones.

mod branch;
mod jm;

use serde_json::{json, Value};

pub use branch::{
    branch_candidates, branch_step, canonical_basis, canonical_basis_with, BranchCandidate, BranchOptions,
};
pub use jm::{isotypic_pieces, jm_joint_eigenbasis};

use crate::combinat::{newton_f, Partition, Tableau};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{eigenvalue, MultiIndex, Polynomial};
use crate::weyl::{jm_apply, power_sum_nabla};

/// A canonical vector v_T with its path and spectra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestWeightVector {
    pub poly: Polynomial,
    pub tableau: Tableau,
    pub alpha: MultiIndex,
    pub gamma: Vec<i64>,
    pub ell: Vec<i64>,
}

impl LowestWeightVector {
    /// The constant 1 in zero variables, attached to the empty tableau.
    pub fn root() -> Self {
        LowestWeightVector {
            poly: Polynomial::one(0),
            tableau: Tableau::empty(),
            alpha: MultiIndex::zeros(0),
            gamma: Vec::new(),
            ell: Vec::new(),
        }
    }

    /// Builds the record from a polynomial and its path, deriving α from the
    /// leading term, γ as power sums of α and ℓ as contents.
    pub fn new(poly: Polynomial, tableau: Tableau) -> Result<Self> {
        let n = tableau.n();
        if poly.nvars() != n {
            return Err(Error::NvarsMismatch { left: n, right: poly.nvars() });
        }
        let (alpha, _) = poly.leading_term_revlex()?;
        for i in 1..=n {
            if alpha.get(i - 1) as usize + 1 != tableau.row_of(i) {
                return Err(Error::Consistency(format!(
                    "leading exponent {alpha} does not match tableau {tableau}"
                )));
            }
        }
        Ok(LowestWeightVector {
            gamma: power_sums(&alpha),
            ell: tableau.contents(),
            poly,
            tableau,
            alpha,
        })
    }

    pub fn n(&self) -> usize {
        self.tableau.n()
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn shape(&self) -> &Partition {
        self.tableau.shape()
    }

    /// The module label in the conjugate convention.
    pub fn conjugate_label(&self) -> Partition {
        self.tableau.shape().conjugate()
    }

    pub fn conjugate_tableau(&self) -> Tableau {
        self.tableau.transpose()
    }

    /// Row index − 1 of each box in the conjugate tableau.
    pub fn conjugate_alpha(&self) -> Vec<u32> {
        (1..=self.n()).map(|i| self.tableau.col_of(i) as u32 - 1).collect()
    }

    pub fn conjugate_ell(&self) -> Vec<i64> {
        self.ell.iter().map(|&c| -c).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tableau": self.tableau.to_json(),
            "filling": self.tableau.filling(),
            "alpha": self.alpha.iter().collect::<Vec<_>>(),
            "gamma": self.gamma,
            "ell": self.ell,
            "degree": self.degree(),
            "conjugate_label": self.conjugate_label().parts(),
            "conjugate_tableau": self.conjugate_tableau().filling(),
            "conjugate_alpha": self.conjugate_alpha(),
            "conjugate_ell": self.conjugate_ell(),
            "poly": self.poly.to_json(),
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "T={} shape={} alpha={} gamma={:?} ell={:?} deg={} | conjugate T={} ell={:?}\n  {}",
            self.tableau,
            self.shape(),
            self.alpha,
            self.gamma,
            self.ell,
            self.degree(),
            self.conjugate_tableau(),
            self.conjugate_ell(),
            self.poly
        )
    }
}

fn power_sums(alpha: &MultiIndex) -> Vec<i64> {
    (1..=alpha.len() as u32)
        .map(|i| alpha.iter().map(|a| (a as i64).pow(i)).sum())
        .collect()
}

/// Spectral data of a joint tᵢ-eigenvector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectra {
    pub alpha: MultiIndex,
    pub gamma: Vec<i64>,
    /// L_i eigenvalue where `poly` is an L_i-eigenvector (L_1 = 0).
    pub ell: Vec<Option<i64>>,
}

/// α from the leading term, γ(i) from the action of tᵢ = Σ_j ∇_jⁱ, and ℓ
/// candidates from the Jucys–Murphy elements; checks γ(i) = Σ_j α(j)ⁱ.
pub fn spectra(p: &Polynomial, n: usize) -> Result<Spectra> {
    if p.nvars() != n {
        return Err(Error::NvarsMismatch { left: n, right: p.nvars() });
    }
    let (alpha, _) = p.leading_term_revlex()?;
    let mut gamma = Vec::with_capacity(n);
    for i in 1..=n as u32 {
        let q = power_sum_nabla(i, n).apply(p)?;
        let c = eigenvalue(p, &q).ok_or_else(|| Error::NotEigenvector(format!("t_{i} on {p}")))?;
        let c = c.to_i64().filter(|_| c.is_integer()).ok_or_else(|| {
            Error::Consistency(format!("non-integral t_{i} eigenvalue {c}"))
        })?;
        gamma.push(c);
    }
    if gamma != power_sums(&alpha) {
        return Err(Error::Consistency(format!("gamma {gamma:?} is not the power sums of {alpha}")));
    }
    let mut ell = Vec::with_capacity(n);
    if n > 0 {
        ell.push(Some(0));
    }
    for i in 2..=n {
        let q = jm_apply(i, p)?;
        ell.push(eigenvalue(p, &q).and_then(|c| c.to_i64().filter(|_| c.is_integer())));
    }
    Ok(Spectra { alpha, gamma, ell })
}

/// γ_T(i) = γ_{T'}(i) + aⁱ for i < n and γ_T(n) = F_n(γ_{T'}) + aⁿ, where
/// T' is T without its last box and a = α_T(n).
pub fn gamma_recursion_holds(child: &LowestWeightVector, parent: &LowestWeightVector) -> bool {
    let n = child.n();
    if n == 0 || parent.n() + 1 != n {
        return false;
    }
    let a = child.alpha.get(n - 1) as i64;
    for i in 1..n {
        if child.gamma[i - 1] != parent.gamma[i - 1] + a.pow(i as u32) {
            return false;
        }
    }
    let top = if n == 1 {
        Rational::zero()
    } else {
        let pt: Vec<Rational> = parent.gamma.iter().map(|&g| Rational::from_int(g)).collect();
        newton_f(n - 1).eval(&pt).expect("arity matches")
    };
    top + Rational::from_int(a.pow(n as u32)) == Rational::from_int(child.gamma[n - 1])
}

/// The coefficient of x_{k+1}^{α(k+1)}⋯xₙ^{α(n)} in v_T, a polynomial in
/// x₁..x_k proportional to the canonical vector of the truncated path.
pub fn restrict_leading(v: &LowestWeightVector, k: usize) -> Result<Polynomial> {
    let n = v.n();
    if k < 1 || k >= n {
        return Err(Error::IndexOutOfRange { index: k, min: 1, max: n.saturating_sub(1) });
    }
    Ok(v.poly.coefficient_of_tail(&v.alpha.as_slice()[k..]))
}

/// Σᵢ i·λ(i) + a − l for λ the parent's label in the conjugate convention
/// and l its number of parts. Reported for comparison with deg v_T; the
/// construction itself uses deg v_T = deg v_{T'} + a.
pub fn closed_form_degree(parent_label: &Partition, a: usize) -> i64 {
    let s: i64 = parent_label.parts().iter().enumerate().map(|(i, &p)| (i as i64 + 1) * p as i64).sum();
    s + a as i64 - parent_label.len() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectra_examples() {
        let x12 = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let s = spectra(&x12, 2).unwrap();
        assert_eq!(s.alpha, MultiIndex::from(vec![0, 1]));
        assert_eq!(s.gamma, vec![1, 1]);
        assert_eq!(s.ell, vec![Some(0), Some(-1)]);
        let one = spectra(&Polynomial::one(3), 3).unwrap();
        assert_eq!(one.gamma, vec![0, 0, 0]);
        assert_eq!(one.ell, vec![Some(0), Some(1), Some(2)]);
        let not = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 2], 1)]);
        assert!(spectra(&not, 2).is_err());
    }

    #[test]
    fn conjugate_fields() {
        let v = Polynomial::from_int_terms(
            4,
            &[
                (&[0, 0, 1, 1], 2),
                (&[0, 1, 0, 1], -1),
                (&[1, 0, 0, 1], -1),
                (&[0, 1, 1, 0], -1),
                (&[1, 0, 1, 0], -1),
                (&[1, 1, 0, 0], 2),
            ],
        );
        let t = Tableau::from_rows(&[1, 1, 2, 2]).unwrap();
        let lw = LowestWeightVector::new(v, t).unwrap();
        assert_eq!(lw.gamma, vec![2, 2, 2, 2]);
        assert_eq!(lw.conjugate_alpha(), vec![0, 1, 0, 1]);
        assert_eq!(lw.conjugate_ell(), vec![0, -1, 1, 0]);
        assert_eq!(lw.conjugate_tableau().filling(), vec![vec![1, 3], vec![2, 4]]);
        let r3 = restrict_leading(&lw, 3).unwrap();
        assert_eq!(r3, Polynomial::from_int_terms(3, &[(&[0, 0, 1], 2), (&[1, 0, 0], -1), (&[0, 1, 0], -1)]));
        assert_eq!(restrict_leading(&lw, 2).unwrap(), Polynomial::constant(2, Rational::from_int(2)));
        assert!(restrict_leading(&lw, 4).is_err());
    }
}
