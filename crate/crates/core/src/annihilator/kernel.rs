//! Joint kernels of operator families on graded spaces.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::graded::GradedBasis;
use super::group::{cyclic_negative_partials, negative_generators, GroupSpec};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, ExactMatrix, Rational};
use crate::poly::{monomials_of_degree, MultiIndex, PolySpan, Polynomial};
use crate::weyl::DiffOp;

/// Kernel of the stacked maps `ops` on span(`cols`), returned as
/// polynomials Σ v_j cols_j. Rows of the system are indexed by
/// (operator, target monomial).
pub(crate) fn joint_kernel(cols: &[Polynomial], ops: &[DiffOp]) -> Result<Vec<Polynomial>> {
    let maps: Vec<_> = ops.iter().map(|op| move |p: &Polynomial| op.apply(p)).collect();
    kernel_of_maps(cols, &maps)
}

/// Kernel of a family of linear maps on span(`cols`); the images of every
/// column are computed once per map.
pub(crate) fn kernel_of_maps<F>(cols: &[Polynomial], maps: &[F]) -> Result<Vec<Polynomial>>
where
    F: Fn(&Polynomial) -> Result<Polynomial>,
{
    if cols.is_empty() {
        return Ok(Vec::new());
    }
    let n = cols[0].nvars();
    let mut rows: HashMap<(usize, MultiIndex), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for (oi, f) in maps.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            let img = f(c)?;
            for (e, v) in img.terms() {
                let next = rows.len();
                let r = *rows.entry((oi, e.clone())).or_insert(next);
                entries.push((r, j, v.clone()));
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..cols.len())
            .map(|j| {
                let mut v = vec![Rational::zero(); cols.len()];
                v[j] = Rational::one();
                v
            })
            .collect()
    } else {
        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
        for (r, j, v) in entries {
            m.set(r, j, v);
        }
        kernel_basis(&m)
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut p = Polynomial::zero(n);
            for (c, b) in v.iter().zip(cols) {
                if !c.is_zero() {
                    p.axpy(c, b);
                }
            }
            p
        })
        .collect())
}

/// Per degree d, the joint kernel of `ops` on the piece `space_d`, with a
/// canonical echelon basis. Degrees are processed in parallel.
pub fn annihilator_in(space: &GradedBasis, ops: &[DiffOp]) -> Result<GradedBasis> {
    for op in ops {
        if op.nvars() != space.nvars() {
            return Err(Error::NvarsMismatch { left: space.nvars(), right: op.nvars() });
        }
        match op.homogeneous_degree() {
            Some(s) if s < 0 => {}
            _ => return Err(Error::NonHomogeneous(format!("operator {op} is not homogeneous of negative degree"))),
        }
    }
    let pieces: Vec<(usize, Vec<Polynomial>)> = space.pieces().map(|(d, v)| (d, v.to_vec())).collect();
    let kernels: Vec<Result<(usize, Vec<Polynomial>)>> = pieces
        .into_par_iter()
        .map(|(d, cols)| Ok((d, joint_kernel(&cols, ops)?)))
        .collect();
    let mut spans = BTreeMap::new();
    for k in kernels {
        let (d, polys) = k?;
        spans.insert(d, PolySpan::from_polys(space.nvars(), &polys));
    }
    Ok(GradedBasis::from_spans(space.nvars(), spans))
}

/// All monomials with entries below `window`, graded by degree.
pub fn monomial_space(nvars: usize, window: u32, max_degree: usize) -> GradedBasis {
    let mut spans = BTreeMap::new();
    if window == 0 {
        return GradedBasis::new(nvars);
    }
    let top = max_degree.min(nvars * (window as usize - 1));
    for d in 0..=top {
        let mons = monomials_of_degree(nvars, d, window - 1);
        let polys: Vec<Polynomial> = mons.into_iter().map(|e| Polynomial::monomial(e, Rational::one())).collect();
        spans.insert(d, PolySpan::from_polys(nvars, &polys));
    }
    GradedBasis::from_spans(nvars, spans)
}

/// Sorted exponent multisets of length n with entries ≤ cap.
fn multisets(n: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, lo: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=cap {
            cur.push(v);
            rec(n, v, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, cap, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Distinct rearrangements of a sorted multiset.
fn rearrangements(sorted: &[u32]) -> Vec<MultiIndex> {
    let mut v = sorted.to_vec();
    let mut out = vec![MultiIndex::from(v.as_slice())];
    // next lexicographic permutation
    while let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) {
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(MultiIndex::from(v.as_slice()));
    }
    out
}

/// Options for [`bann_with`].
#[derive(Clone, Debug, Default)]
pub struct BannOptions {
    /// Exclusive per-variable exponent bound; the group's natural window
    /// when `None`.
    pub window: Option<u32>,
    /// Compute the kernel inside the harmonic space instead of inside all
    /// monomials (same result, smaller systems for large windows).
    pub harmonic_filter: bool,
    /// For the cyclic group, use the full monomial operator list instead of
    /// the closed-form ∂^b criterion.
    pub generic_cyclic: bool,
}

/// The operators whose joint kernel is B^ann inside a window.
pub fn bann_operators(g: &GroupSpec, window: u32, generic_cyclic: bool) -> Result<Vec<DiffOp>> {
    match *g {
        GroupSpec::Cyclic { e } if !generic_cyclic => Ok(cyclic_negative_partials(e, window as usize)),
        _ => negative_generators(g, window as usize),
    }
}

/// B^ann = Ann_{𝒟⁻}(B) in the group's natural window.
pub fn bann(g: &GroupSpec) -> Result<GradedBasis> {
    bann_with(g, &BannOptions::default())
}

pub fn bann_with(g: &GroupSpec, opts: &BannOptions) -> Result<GradedBasis> {
    let window = opts.window.unwrap_or_else(|| g.default_window());
    if window == 0 {
        return Err(Error::InvalidArgument("window must be positive".into()));
    }
    let ops = bann_operators(g, window, opts.generic_cyclic)?;
    let n = g.nvars();
    if opts.harmonic_filter {
        let h = super::harmonic::harmonic_space(g)?;
        let inside = restrict_window(&h, window);
        return annihilator_in(&inside, &ops);
    }
    // The invariant operators of degree 0 include the nabla power sums
    // Σ_j ∇_j^i (or ∇_1, ∇_2 separately for the cyclic group), whose joint
    // eigenspaces are spanned by the monomials sharing an exponent
    // multiset. The kernel is stable under them, so it splits over those
    // classes and each class is solved on its own.
    let classes = multisets(n, window - 1);
    let results: Vec<Result<Vec<Polynomial>>> = classes
        .par_iter()
        .map(|cls| {
            let cols: Vec<Polynomial> =
                rearrangements(cls).into_iter().map(|e| Polynomial::monomial(e, Rational::one())).collect();
            let d: u32 = cls.iter().sum();
            let relevant: Vec<DiffOp> = ops
                .iter()
                .filter(|op| op.homogeneous_degree().is_none_or(|s| -s <= d as i64))
                .cloned()
                .collect();
            joint_kernel(&cols, &relevant)
        })
        .collect();
    let mut all = Vec::new();
    for r in results {
        all.extend(r?);
    }
    GradedBasis::from_polys(n, &all)
}

/// Intersection of a graded space with the polynomials whose exponents are
/// all below `window`.
pub(crate) fn restrict_window(space: &GradedBasis, window: u32) -> GradedBasis {
    let mut spans = BTreeMap::new();
    for (d, piece) in space.pieces() {
        // Kernel of the projection onto monomials outside the window.
        let outside: Vec<MultiIndex> = {
            let mut s = std::collections::BTreeSet::new();
            for p in piece {
                for (e, _) in p.terms() {
                    if e.max_entry() >= window {
                        s.insert(e.clone());
                    }
                }
            }
            s.into_iter().collect()
        };
        let polys = if outside.is_empty() {
            piece.to_vec()
        } else {
            let mut m = ExactMatrix::zeros(outside.len(), piece.len());
            for (j, p) in piece.iter().enumerate() {
                for (i, e) in outside.iter().enumerate() {
                    m.set(i, j, p.coeff(e));
                }
            }
            kernel_basis(&m)
                .into_iter()
                .map(|v| {
                    let mut q = Polynomial::zero(space.nvars());
                    for (c, b) in v.iter().zip(piece) {
                        q.axpy(c, b);
                    }
                    q
                })
                .collect()
        };
        spans.insert(d, PolySpan::from_polys(space.nvars(), &polys));
    }
    GradedBasis::from_spans(space.nvars(), spans)
}
