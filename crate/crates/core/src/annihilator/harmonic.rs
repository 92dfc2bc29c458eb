//! Harmonic polynomials: the common kernel of the invariant
//! constant-coefficient operators without constant term.

use super::closure::module_closure;
use super::graded::GradedBasis;
use super::group::GroupSpec;
use super::kernel::{annihilator_in, monomial_space};
use crate::error::Result;
use crate::linalg::Rational;
use crate::poly::{MultiIndex, Polynomial};
use crate::weyl::{power_op, DiffOp};

/// The Jacobian of the basic invariants of a reflection group, up to a
/// scalar; `None` for the cyclic group, which is not generated by
/// reflections.
pub fn jacobian(g: &GroupSpec) -> Option<Polynomial> {
    match *g {
        GroupSpec::SymmetricWreath { m, n } => {
            let mut j = Polynomial::monomial(MultiIndex::new(std::iter::repeat_n(m - 1, n)), Rational::one());
            for a in 0..n {
                for b in a + 1..n {
                    let mut ea = MultiIndex::zeros(n);
                    ea.set(a, m);
                    let mut eb = MultiIndex::zeros(n);
                    eb.set(b, m);
                    let f = &Polynomial::monomial(ea, Rational::one()) - &Polynomial::monomial(eb, Rational::one());
                    j = &j * &f;
                }
            }
            Some(j)
        }
        GroupSpec::Dihedral { e } => Some(Polynomial::from_int_terms(2, &[(&[e, 0], 1), (&[0, e], -1)])),
        GroupSpec::Cyclic { .. } => None,
    }
}

/// Constant-coefficient invariant generators: Σ_i ∂_i^{mk} (k = 1..n) for
/// G(m,1,n); ∂1∂2 and ∂1ᵉ+∂2ᵉ for the dihedral group; ∂1∂2, ∂1ᵉ, ∂2ᵉ for
/// the cyclic group.
pub fn invariant_partials(g: &GroupSpec) -> Vec<DiffOp> {
    let mono = |b: [u32; 2]| DiffOp::monomial(MultiIndex::zeros(2), MultiIndex::new(b), Rational::one());
    match *g {
        GroupSpec::SymmetricWreath { m, n } => {
            (1..=n).map(|k| power_op(0, (m as usize * k) as i64, n).expect("valid")).collect()
        }
        GroupSpec::Dihedral { e } => vec![mono([1, 1]), power_op(0, e as i64, 2).expect("valid")],
        GroupSpec::Cyclic { e } => vec![mono([1, 1]), mono([e, 0]), mono([0, e])],
    }
}

/// The harmonic space. For reflection groups it is the span of all
/// partial derivatives of the Jacobian (dimension |G|); for the cyclic
/// group it is computed as a kernel directly.
pub fn harmonic_space(g: &GroupSpec) -> Result<GradedBasis> {
    match jacobian(g) {
        Some(j) => {
            let n = g.nvars();
            let partials: Vec<DiffOp> = (0..n).map(|i| DiffOp::d(n, i)).collect();
            let top = j.degree().unwrap_or(0);
            module_closure(&partials, &[j], top, 0)
        }
        None => harmonic_space_by_kernel(g, g.default_window()),
    }
}

/// The harmonic space as the kernel of [`invariant_partials`] inside the
/// polynomials with per-variable degree below `window`.
pub fn harmonic_space_by_kernel(g: &GroupSpec, window: u32) -> Result<GradedBasis> {
    let n = g.nvars();
    let space = monomial_space(n, window, n * window.saturating_sub(1) as usize);
    annihilator_in(&space, &invariant_partials(g))
}
