//! The polynomial ring in two variables over the invariant operators of the
//! cyclic group Cₑ (acting by (ε, ε⁻¹)) and of the dihedral group G(e,e,2):
//! isotypic pieces, lowest-weight spaces, and differential restriction
//! J(N) = 𝒟₂·Ann_{𝒟₁⁻}(N) from Cₑ to the dihedral group.

use std::fmt;

use serde_json::{json, Value};

use crate::annihilator::{
    annihilator_in, bann, module_closure, negative_generators, GradedBasis, GroupSpec,
};
use crate::error::{Error, Result};
use crate::linalg::{rank, ExactMatrix, Rational};
use crate::poly::{MultiIndex, Polynomial};
use crate::weyl::{power_op, DiffOp};

fn mono(a: u32, b: u32) -> Polynomial {
    Polynomial::monomial(MultiIndex::new([a, b]), Rational::one())
}

fn op(a: [u32; 2], b: [u32; 2]) -> DiffOp {
    DiffOp::monomial(MultiIndex::new(a), MultiIndex::new(b), Rational::one())
}

fn check_e(e: u32) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidArgument(format!("e must be at least 2, got {e}")));
    }
    Ok(())
}

fn check_i(e: u32, i: u32) -> Result<()> {
    check_e(e)?;
    if i >= e {
        return Err(Error::IndexOutOfRange { index: i as usize, min: 0, max: e as usize - 1 });
    }
    Ok(())
}

/// N_i: the monomials x^(a,b) with a − b ≡ i mod e and a + b ≤ `up_to_degree`.
pub fn cyclic_isotypic_basis(e: u32, i: u32, up_to_degree: usize) -> Result<GradedBasis> {
    check_i(e, i)?;
    let mut polys = Vec::new();
    for d in 0..=up_to_degree as u32 {
        for a in 0..=d {
            let b = d - a;
            if (a as i64 - b as i64).rem_euclid(e as i64) == i as i64 {
                polys.push(mono(a, b));
            }
        }
    }
    GradedBasis::from_polys(2, &polys)
}

/// The closed form of N_i^ann: x1ⁱ for i < e/2, {x1^{e/2}, x2^{e/2}} for
/// i = e/2, x2^{e−i} for i > e/2.
pub fn cyclic_ann_formula(e: u32, i: u32) -> Result<Vec<Polynomial>> {
    check_i(e, i)?;
    Ok(if 2 * i < e {
        vec![mono(i, 0)]
    } else if 2 * i == e {
        vec![mono(i, 0), mono(0, i)]
    } else {
        vec![mono(0, e - i)]
    })
}

/// N_i^ann computed as the kernel of the negative Cₑ-invariant monomial
/// operators on N_i (per-variable degree ≤ e, which contains every
/// harmonic polynomial), and checked against [`cyclic_ann_formula`].
pub fn cyclic_ann(e: u32, i: u32) -> Result<Vec<Polynomial>> {
    let space = restrict_per_variable(&cyclic_isotypic_basis(e, i, 2 * e as usize)?, e);
    let ops = negative_generators(&GroupSpec::Cyclic { e }, e as usize + 1)?;
    let kernel = annihilator_in(&space, &ops)?;
    let formula = cyclic_ann_formula(e, i)?;
    if !kernel.same_span(&GradedBasis::from_polys(2, &formula)?) {
        return Err(Error::Consistency(format!("N_{i}^ann for C{e} disagrees with the closed form")));
    }
    Ok(kernel.polys().cloned().collect())
}

fn restrict_per_variable(space: &GradedBasis, top: u32) -> GradedBasis {
    let polys: Vec<Polynomial> = space.polys().filter(|p| p.max_var_degree() <= top).cloned().collect();
    GradedBasis::from_polys(space.nvars(), &polys).expect("homogeneous monomials")
}

/// Simple 𝒟₂-modules occurring in ℚ[x1, x2] for the dihedral group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralLabel {
    /// The invariants A₂.
    M0,
    /// A₂(x1ᵉ − x2ᵉ), generated by the Jacobian.
    Me,
    /// A₂x1ⁱ + A₂x2^{e−i}, 1 ≤ i < e/2.
    M1(u32),
    /// A₂x2ⁱ + A₂x1^{e−i}, 1 ≤ i < e/2.
    M2(u32),
    /// A₂(x1^{e/2} + x2^{e/2}), e even.
    MI(u32),
    /// A₂(x1^{e/2} − x2^{e/2}), e even.
    MII(u32),
}

impl fmt::Display for DihedralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DihedralLabel::M0 => write!(f, "M_0"),
            DihedralLabel::Me => write!(f, "M_e"),
            DihedralLabel::M1(i) => write!(f, "M_{i}^1"),
            DihedralLabel::M2(i) => write!(f, "M_{i}^2"),
            DihedralLabel::MI(i) => write!(f, "M_{i}^I"),
            DihedralLabel::MII(i) => write!(f, "M_{i}^II"),
        }
    }
}

impl DihedralLabel {
    /// Every label that exists for a given e.
    pub fn all(e: u32) -> Vec<DihedralLabel> {
        let mut out = vec![DihedralLabel::M0];
        for i in 1..e {
            if 2 * i < e {
                out.push(DihedralLabel::M1(i));
                out.push(DihedralLabel::M2(i));
            }
        }
        if e.is_multiple_of(2) {
            out.push(DihedralLabel::MI(e / 2));
            out.push(DihedralLabel::MII(e / 2));
        }
        out.push(DihedralLabel::Me);
        out
    }

    /// A₂-module generators of the module.
    pub fn generators(&self, e: u32) -> Vec<Polynomial> {
        match *self {
            DihedralLabel::M0 => vec![Polynomial::one(2)],
            DihedralLabel::Me => vec![&mono(e, 0) - &mono(0, e)],
            DihedralLabel::M1(i) => vec![mono(i, 0), mono(0, e - i)],
            DihedralLabel::M2(i) => vec![mono(0, i), mono(e - i, 0)],
            DihedralLabel::MI(i) => vec![&mono(i, 0) + &mono(0, i)],
            DihedralLabel::MII(i) => vec![&mono(i, 0) - &mono(0, i)],
        }
    }

    /// The lowest-weight line of the module.
    pub fn lowest_weight(&self, e: u32) -> Polynomial {
        match *self {
            DihedralLabel::M1(i) => mono(i, 0),
            DihedralLabel::M2(i) => mono(0, i),
            _ => self.generators(e).remove(0),
        }
    }
}

/// The generators x1ᵉ + x2ᵉ and x1x2 of the invariant ring A₂.
fn a2_generators(e: u32) -> [Polynomial; 2] {
    [&mono(e, 0) + &mono(0, e), mono(1, 1)]
}

/// Σ_g A₂·g truncated to degrees ≤ `top`.
pub fn a2_span(e: u32, gens: &[Polynomial], top: usize) -> Result<GradedBasis> {
    let [s, p] = a2_generators(e);
    let mut polys = Vec::new();
    for g in gens {
        let dg = g.homogeneous_degree().ok_or_else(|| Error::NonHomogeneous(g.to_string()))?;
        let mut sp = g.clone();
        let mut ds = dg;
        while ds <= top {
            let mut q = sp.clone();
            let mut dq = ds;
            while dq <= top {
                polys.push(q.clone());
                q = &q * &p;
                dq += 2;
            }
            sp = &sp * &s;
            ds += e as usize;
        }
    }
    GradedBasis::from_polys(2, &polys)
}

/// The dihedral lowest-weight lines, labelled by their modules.
pub fn dihedral_bann_formula(e: u32) -> Vec<(DihedralLabel, Polynomial)> {
    DihedralLabel::all(e).into_iter().map(|l| (l, l.lowest_weight(e))).collect()
}

/// B^ann for the dihedral group with its labelled lines.
#[derive(Clone, Debug)]
pub struct DihedralBann {
    pub e: u32,
    pub basis: GradedBasis,
    pub lines: Vec<(DihedralLabel, Polynomial)>,
}

impl DihedralBann {
    pub fn to_json(&self) -> Value {
        json!({
            "group": format!("D{}", self.e),
            "dim": self.basis.dim(),
            "basis": self.basis.to_json(),
            "lines": self.lines.iter().map(|(l, p)| json!({"label": l.to_string(), "poly": p.to_json()})).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("D{}: dim {}\n", self.e, self.basis.dim());
        for (l, p) in &self.lines {
            s += &format!("  {l}: {p}\n");
        }
        s
    }
}

/// B^ann computed generically (symmetrized monomial operators), then
/// checked line by line against the labelled closed form; for even e the
/// split of x1^{e/2}, x2^{e/2} into ± lines is certified by the s-operator.
pub fn dihedral_bann(e: u32) -> Result<DihedralBann> {
    check_e(e)?;
    let basis = bann(&GroupSpec::Dihedral { e })?;
    let lines = dihedral_bann_formula(e);
    let formula = GradedBasis::from_polys(2, lines.iter().map(|(_, p)| p))?;
    if !basis.same_span(&formula) || basis.dim() != lines.len() {
        return Err(Error::Consistency(format!("B^ann for D{e} disagrees with the labelled lines")));
    }
    if e.is_multiple_of(2) {
        dihedral_s_eigencheck(e)?;
    }
    Ok(DihedralBann { e, basis, lines })
}

/// s = (x1∂2)^{e/2} + (x2∂1)^{e/2}.
pub fn s_operator(e: u32) -> Result<DiffOp> {
    let h = e / 2;
    op([1, 0], [0, 1]).pow(h).checked_add(&op([0, 1], [1, 0]).pow(h))
}

/// The eigenvalues of s on x1^{e/2} ± x2^{e/2}; errors if either is not
/// an eigenvector or the two eigenvalues coincide.
pub fn dihedral_s_eigencheck(e: u32) -> Result<(Rational, Rational)> {
    check_e(e)?;
    if !e.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("e = {e} is odd")));
    }
    let h = e / 2;
    let s = s_operator(e)?;
    let plus = &mono(h, 0) + &mono(0, h);
    let minus = &mono(h, 0) - &mono(0, h);
    let eig = |p: &Polynomial| -> Result<Rational> {
        let q = s.apply(p)?;
        crate::poly::eigenvalue(p, &q).ok_or_else(|| Error::NotEigenvector(format!("s on {p}")))
    };
    let (a, b) = (eig(&plus)?, eig(&minus)?);
    if a == b {
        return Err(Error::Consistency("s does not separate the two lines".into()));
    }
    Ok((a, b))
}

/// Rank of the span of the matrices of ∇1, ∇2, (x1∂2)^{e/2}, (x2∂1)^{e/2} on
/// ℚx1^{e/2} + ℚx2^{e/2}; rank 4 means they span all 2×2 matrices, so the
/// space is a simple module of dimension 2.
pub fn r1_witness_rank(e: u32) -> Result<usize> {
    check_e(e)?;
    if !e.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("e = {e} is odd")));
    }
    let h = e / 2;
    let basis = [mono(h, 0), mono(0, h)];
    let ops = [
        op([1, 0], [1, 0]),
        op([0, 1], [0, 1]),
        op([1, 0], [0, 1]).pow(h),
        op([0, 1], [1, 0]).pow(h),
    ];
    let mut rows = Vec::new();
    for o in &ops {
        let mut row = Vec::with_capacity(4);
        for b in &basis {
            let img = o.apply(b)?;
            for t in &basis {
                let (lead, _) = t.leading_term_revlex()?;
                row.push(img.coeff(&lead));
            }
            let rest = img.terms().filter(|(m, _)| **m != MultiIndex::new([h, 0]) && **m != MultiIndex::new([0, h]));
            if rest.count() > 0 {
                return Err(Error::Consistency(format!("{o} leaves the space")));
            }
        }
        rows.push(row);
    }
    Ok(rank(&ExactMatrix::from_rows(&rows, 4)?))
}

/// The generators x1ᵉ + x2ᵉ, x1x2, ∂1ᵉ + ∂2ᵉ, ∂1∂2 of the dihedral
/// invariant operators.
pub fn dihedral_operator_generators(e: u32) -> Vec<DiffOp> {
    let [s, p] = a2_generators(e);
    vec![
        DiffOp::mul_by(&s),
        DiffOp::mul_by(&p),
        power_op(0, e as i64, 2).expect("valid exponents"),
        op([0, 0], [1, 1]),
    ]
}

/// Cₑ-invariant operators used to generate the invariant ring from 1:
/// multiplication by x1x2, x1ᵉ, x2ᵉ and the matching partials.
fn cyclic_operator_generators(e: u32) -> Vec<DiffOp> {
    vec![
        DiffOp::mul_by(&mono(1, 1)),
        DiffOp::mul_by(&mono(e, 0)),
        DiffOp::mul_by(&mono(0, e)),
        op([0, 0], [1, 1]),
        op([0, 0], [e, 0]),
        op([0, 0], [0, e]),
    ]
}

/// Result of the differential restriction of N_i.
#[derive(Clone, Debug)]
pub struct MlsResult {
    pub e: u32,
    pub i: u32,
    pub up_to_degree: usize,
    pub lowest: Vec<Polynomial>,
    pub module: GradedBasis,
    pub labels: Vec<DihedralLabel>,
    /// Ann_{𝒟₂⁻} of the module equals the span of `lowest`.
    pub ann_matches: bool,
}

impl MlsResult {
    pub fn label(&self) -> String {
        self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" + ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "e": self.e,
            "i": self.i,
            "up_to_degree": self.up_to_degree,
            "label": self.label(),
            "labels": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "lowest": self.lowest.iter().map(Polynomial::to_json).collect::<Vec<_>>(),
            "ann_matches": self.ann_matches,
            "basis": self.module.to_json(),
        })
    }

    pub fn to_text(&self) -> String {
        let low: Vec<String> = self.lowest.iter().map(|p| p.to_string()).collect();
        format!(
            "J(N_{}) for C{} in D{}: {} (ann = {{{}}}, ann check {})\n{}",
            self.i,
            self.e,
            self.e,
            self.label(),
            low.join(", "),
            if self.ann_matches { "ok" } else { "FAILED" },
            self.module.to_text()
        )
    }
}

/// J(N_i) = 𝒟₂·Ann_{𝒟₁⁻}(N_i) in degrees ≤ `up_to_degree`, labelled by
/// comparing with every candidate module (and the sum M^I ⊕ M^II) as
/// graded subspaces up to the bound.
pub fn mls_restrict(e: u32, i: u32, up_to_degree: usize, slack: Option<usize>) -> Result<MlsResult> {
    check_i(e, i)?;
    let lowest = cyclic_ann(e, i)?;
    let slack = slack.unwrap_or(e as usize);
    let module = module_closure(&dihedral_operator_generators(e), &lowest, up_to_degree, slack)?;

    let mut candidates: Vec<Vec<DihedralLabel>> = DihedralLabel::all(e).into_iter().map(|l| vec![l]).collect();
    if e.is_multiple_of(2) {
        candidates.push(vec![DihedralLabel::MI(e / 2), DihedralLabel::MII(e / 2)]);
    }
    let mut labels = None;
    for c in candidates {
        let gens: Vec<Polynomial> = c.iter().flat_map(|l| l.generators(e)).collect();
        if a2_span(e, &gens, up_to_degree)?.same_span(&module) {
            labels = Some(c);
            break;
        }
    }
    let labels = labels.ok_or_else(|| Error::Consistency(format!("J(N_{i}) for e = {e} matches no module")))?;

    let ops = negative_generators(&GroupSpec::Dihedral { e }, up_to_degree + 1)?;
    let ann = annihilator_in(&module, &ops)?;
    let ann_matches = ann.same_span(&GradedBasis::from_polys(2, &lowest)?);
    Ok(MlsResult { e, i, up_to_degree, lowest, module, labels, ann_matches })
}

/// The chain {1} ⊂ Cₑ ⊂ D: J_1^{Cₑ}(B) is the invariant ring A₁ = N_0,
/// and J_{Cₑ}^D(A₁) = J_1^D(B) = A₂, compared up to `up_to_degree`.
pub fn chain_check(e: u32, up_to_degree: usize) -> Result<bool> {
    check_e(e)?;
    let slack = e as usize;
    // Ann of all of B under the partials is the constants.
    let window = crate::annihilator::monomial_space(2, e + 1, up_to_degree);
    let partials = [op([0, 0], [1, 0]), op([0, 0], [0, 1])];
    let ann_b = annihilator_in(&window, &partials)?;
    let seeds: Vec<Polynomial> = ann_b.polys().cloned().collect();

    let a1 = module_closure(&cyclic_operator_generators(e), &seeds, up_to_degree, slack)?;
    let n0 = cyclic_isotypic_basis(e, 0, up_to_degree)?;
    if !a1.same_span(&n0) {
        return Ok(false);
    }
    let a1_ann = annihilator_in(&a1, &negative_generators(&GroupSpec::Cyclic { e }, up_to_degree + 1)?)?;
    let via_cyclic: Vec<Polynomial> = a1_ann.polys().cloned().collect();
    let two_step = module_closure(&dihedral_operator_generators(e), &via_cyclic, up_to_degree, slack)?;
    let direct = module_closure(&dihedral_operator_generators(e), &seeds, up_to_degree, slack)?;
    let a2 = a2_span(e, &[Polynomial::one(2)], up_to_degree)?;
    Ok(two_step.same_span(&direct) && direct.same_span(&a2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotypic_examples() {
        let b = cyclic_isotypic_basis(3, 1, 2).unwrap();
        assert_eq!(b.polys().cloned().collect::<Vec<_>>(), vec![mono(1, 0), mono(0, 2)]);
        let b = cyclic_isotypic_basis(3, 0, 2).unwrap();
        assert_eq!(b.polys().cloned().collect::<Vec<_>>(), vec![Polynomial::one(2), mono(1, 1)]);
        assert_eq!(cyclic_isotypic_basis(2, 1, 1).unwrap().dim(), 2);
        assert!(cyclic_isotypic_basis(3, 3, 1).is_err());
    }

    #[test]
    fn cyclic_ann_examples() {
        assert_eq!(cyclic_ann(3, 1).unwrap(), vec![mono(1, 0)]);
        assert_eq!(cyclic_ann(4, 2).unwrap().len(), 2);
        assert_eq!(cyclic_ann(3, 2).unwrap(), vec![mono(0, 1)]);
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(dihedral_bann(3).unwrap().basis.dim(), 4);
        assert_eq!(dihedral_bann(4).unwrap().basis.dim(), 6);
        assert_eq!(dihedral_bann(2).unwrap().basis.dim(), 4);
        let f = |k: i64| Rational::from_int(k);
        assert_eq!(dihedral_s_eigencheck(4).unwrap(), (f(2), f(-2)));
        assert_eq!(dihedral_s_eigencheck(2).unwrap(), (f(1), f(-1)));
        assert_eq!(dihedral_s_eigencheck(6).unwrap(), (f(6), f(-6)));
        assert_eq!(r1_witness_rank(4).unwrap(), 4);
    }

    #[test]
    fn mls_examples() {
        let r = mls_restrict(3, 1, 6, None).unwrap();
        assert_eq!(r.labels, vec![DihedralLabel::M1(1)]);
        assert!(r.module.contains(&mono(1, 0)));
        assert!(r.module.contains(&mono(0, 2)));
        assert!(r.module.contains(&mono(2, 1)));
        assert!(r.ann_matches);
        let r = mls_restrict(4, 2, 8, None).unwrap();
        assert_eq!(r.labels, vec![DihedralLabel::MI(2), DihedralLabel::MII(2)]);
        assert!(r.ann_matches);
        assert_eq!(mls_restrict(3, 0, 6, None).unwrap().labels, vec![DihedralLabel::M0]);
        assert!(chain_check(3, 6).unwrap());
    }
}
