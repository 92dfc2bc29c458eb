//! One branching level Sₙ₋₁ → Sₙ and its iteration to a full basis.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::LowestWeightVector;
use crate::annihilator::{
    bann, joint_kernel, module_closure_with, negative_generators, ClosureOptions, GradedBasis, GroupSpec,
};
use crate::error::{Error, Result};
use crate::poly::{MultiIndex, OrderedPartition, Polynomial};
use crate::weyl::{power_sum_d, power_sum_x, DiffOp};

/// Knobs for [`branch_step`] and [`canonical_basis_with`].
#[derive(Clone, Debug, Default)]
pub struct BranchOptions {
    /// Degrees above the target the closure may pass through; n when `None`.
    pub slack: Option<usize>,
    /// Search every exponent a in 0..n, not just the addable ones, and fail
    /// if a non-addable a yields a lowest-weight vector.
    pub audit: bool,
    /// Check that the final basis spans B^ann(Sₙ) as computed directly.
    pub check_span: bool,
}

/// The lowest-weight kernel found at degree deg v + a.
#[derive(Clone, Debug)]
pub struct BranchCandidate {
    pub a: usize,
    pub addable: bool,
    pub kernel: Vec<Polynomial>,
}

/// Generators h_i(x), h_i(∂), i = 1..m, of the Sₘ-invariant operators.
fn invariant_generators(m: usize) -> Vec<DiffOp> {
    (1..=m as u32).flat_map(|i| [power_sum_x(i, m), power_sum_d(i, m)]).collect()
}

/// Solves for the lowest-weight vectors of 𝒟ₙ₋₁·v in every degree
/// deg v + a, a in the addable set (or 0..n when auditing).
///
/// With m = n − 1, 𝒟ₘ·v = ⊕_j xₙʲ·(𝒟̃ₘ·v) because ∂ₙv = 0 and the
/// invariant operators in the first m variables commute with xₙ. The
/// closure 𝒟̃ₘ·v is computed in m variables and split over monomial
/// classes (it contains the nabla power sums). The candidate space at
/// degree deg v + a is split the same way in n variables; the kernel of the
/// negative Sₙ-generators is stable under tᵢ, so it splits over the classes
/// too.
pub fn branch_candidates(v: &LowestWeightVector, opts: &BranchOptions) -> Result<Vec<BranchCandidate>> {
    let m = v.n();
    let n = m + 1;
    let addable: Vec<usize> = v.shape().addable_rows().into_iter().map(|(r, _)| r - 1).collect();
    let targets: Vec<usize> = if opts.audit { (0..n).collect() } else { addable.clone() };
    let dv = v.degree();
    let top = dv + targets.iter().copied().max().unwrap_or(0);
    let closure_opts = ClosureOptions { slack: opts.slack.unwrap_or(n), split_classes: true };
    let module = module_closure_with(&invariant_generators(m), std::slice::from_ref(&v.poly), top, &closure_opts)?;
    let ops = negative_generators(&GroupSpec::symmetric(n), usize::MAX)?;

    targets
        .par_iter()
        .map(|&a| {
            let d = dv + a;
            let mut classes: BTreeMap<OrderedPartition, Vec<Polynomial>> = BTreeMap::new();
            for j in 0..=a {
                let mut xn = MultiIndex::zeros(n);
                xn.set(m, j as u32);
                for b in module.piece(d - j) {
                    let lifted = b.extend_vars(1).mul_monomial(&xn);
                    for (cls, part) in lifted.isotypic_decompose() {
                        classes.entry(cls).or_default().push(part);
                    }
                }
            }
            let mut kernel = Vec::new();
            for cols in classes.values() {
                kernel.extend(joint_kernel(cols, &ops)?);
            }
            Ok(BranchCandidate { a, addable: addable.contains(&a), kernel })
        })
        .collect()
}

/// The children of `v` at level n = v.n() + 1, one per addable row, in the
/// order of increasing a.
pub fn branch_step(v: &LowestWeightVector, opts: &BranchOptions) -> Result<Vec<LowestWeightVector>> {
    let n = v.n() + 1;
    let context = |a: usize| format!("branching {} at a = {a}", v.tableau);
    let mut out = Vec::new();
    for c in branch_candidates(v, opts)? {
        let d = v.degree() + c.a;
        match (c.kernel.len(), c.addable) {
            (0, false) => continue,
            (0, true) => return Err(Error::BranchMissing { degree: d, context: context(c.a) }),
            (1, true) => {}
            (k, true) => return Err(Error::MultiplicityViolation { dim: k, degree: d, context: context(c.a) }),
            (k, false) => {
                return Err(Error::Consistency(format!(
                    "{}: {k} lowest-weight vectors at a non-addable exponent",
                    context(c.a)
                )))
            }
        }
        let poly = c.kernel[0].normalized();
        let mut want = v.alpha.extended(1);
        want.set(n - 1, c.a as u32);
        let (lead, _) = poly.leading_term_revlex()?;
        if lead != want {
            return Err(Error::Consistency(format!("{}: leading exponent {lead}, expected {want}", context(c.a))));
        }
        let tableau = v.tableau.push(c.a + 1)?;
        out.push(LowestWeightVector::new(poly, tableau)?);
    }
    Ok(out)
}

/// [`canonical_basis_with`] with default options and the span check on.
pub fn canonical_basis(n: usize) -> Result<Vec<LowestWeightVector>> {
    canonical_basis_with(n, &BranchOptions { check_span: true, ..BranchOptions::default() })
}

/// Iterates [`branch_step`] from the root n times; the result is sorted by
/// shape (decreasing in lexicographic order) and then by path.
pub fn canonical_basis_with(n: usize, opts: &BranchOptions) -> Result<Vec<LowestWeightVector>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut level = vec![LowestWeightVector::root()];
    for _ in 0..n {
        let next: Vec<Vec<LowestWeightVector>> =
            level.par_iter().map(|v| branch_step(v, opts)).collect::<Result<_>>()?;
        level = next.into_iter().flatten().collect();
    }
    level.sort_by(|x, y| {
        y.shape().parts().cmp(x.shape().parts()).then_with(|| x.tableau.rows().cmp(y.tableau.rows()))
    });
    if opts.check_span {
        let direct = bann(&GroupSpec::symmetric(n))?;
        let built = GradedBasis::from_polys(n, level.iter().map(|v| &v.poly))?;
        if !built.same_span(&direct) {
            return Err(Error::Consistency(format!("canonical basis of S{n} does not span B^ann")));
        }
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Tableau;

    fn lw(poly: Polynomial, rows: &[usize]) -> LowestWeightVector {
        LowestWeightVector::new(poly, Tableau::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn branch_examples() {
        let one1 = lw(Polynomial::one(1), &[1]);
        let kids = branch_step(&one1, &BranchOptions::default()).unwrap();
        let polys: Vec<_> = kids.iter().map(|k| k.poly.clone()).collect();
        let x12 = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(polys, vec![Polynomial::one(2), x12.clone()]);
        assert_eq!(kids[0].shape().parts(), &[2]);
        assert_eq!(kids[1].shape().parts(), &[1, 1]);

        let v = lw(x12.clone(), &[1, 2]);
        let kids = branch_step(&v, &BranchOptions::default()).unwrap();
        assert_eq!(kids.len(), 2);
        assert_eq!(kids[1].shape().parts(), &[1, 1, 1]);
        assert_eq!(kids[1].degree(), 3);
        assert_eq!(kids[0].poly, x12.extend_vars(1));
        assert_eq!(kids[0].shape().parts(), &[2, 1]);

        let v = lw(Polynomial::one(2), &[1, 1]);
        let kids = branch_step(&v, &BranchOptions { audit: true, ..Default::default() }).unwrap();
        let want = Polynomial::from_int_terms(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], -2)]);
        assert_eq!(kids[1].poly, want);
        assert_eq!(kids[0].poly, Polynomial::one(3));
    }

    #[test]
    fn small_bases() {
        assert_eq!(canonical_basis(1).unwrap().len(), 1);
        let b3 = canonical_basis(3).unwrap();
        assert_eq!(b3.len(), 4);
        assert_eq!(b3[0].poly, Polynomial::one(3));
    }
}
