//! Degree-indexed bases of graded subspaces.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{PolySpan, Polynomial};

/// Per-degree bases of a graded subspace of ℚ[x_1..x_n]. Every listed
/// polynomial is homogeneous of its key degree and each list is linearly
/// independent. Empty degrees are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    nvars: usize,
    pieces: BTreeMap<usize, Vec<Polynomial>>,
}

impl GradedBasis {
    pub fn new(nvars: usize) -> Self {
        GradedBasis { nvars, pieces: BTreeMap::new() }
    }

    /// Groups homogeneous polynomials by degree and reduces each group to
    /// its canonical echelon basis.
    pub fn from_polys<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<Self> {
        let mut spans: BTreeMap<usize, PolySpan> = BTreeMap::new();
        for p in polys {
            if p.nvars() != nvars {
                return Err(Error::NvarsMismatch { left: nvars, right: p.nvars() });
            }
            if p.is_zero() {
                continue;
            }
            let d = p
                .homogeneous_degree()
                .ok_or_else(|| Error::NonHomogeneous(p.to_string()))?;
            spans.entry(d).or_insert_with(|| PolySpan::new(nvars)).insert(p);
        }
        Ok(Self::from_spans(nvars, spans))
    }

    pub fn from_spans(nvars: usize, spans: BTreeMap<usize, PolySpan>) -> Self {
        let pieces = spans
            .into_iter()
            .filter(|(_, s)| !s.is_empty())
            .map(|(d, s)| (d, s.canonical_basis()))
            .collect();
        GradedBasis { nvars, pieces }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.pieces.keys().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.pieces.keys().next_back().copied()
    }

    pub fn piece(&self, d: usize) -> &[Polynomial] {
        self.pieces.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn pieces(&self) -> impl Iterator<Item = (usize, &[Polynomial])> + '_ {
        self.pieces.iter().map(|(d, v)| (*d, v.as_slice()))
    }

    pub fn span(&self, d: usize) -> PolySpan {
        PolySpan::from_polys(self.nvars, self.piece(d))
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }

    pub fn dim_at(&self, d: usize) -> usize {
        self.piece(d).len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// All basis polynomials in ascending degree order.
    pub fn polys(&self) -> impl Iterator<Item = &Polynomial> + '_ {
        self.pieces.values().flatten()
    }

    /// Whether `p` (any polynomial) lies in the graded span.
    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.nvars() != self.nvars {
            return false;
        }
        let mut by_degree: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (e, c) in p.terms() {
            by_degree
                .entry(e.degree())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(e.clone(), c);
        }
        by_degree.iter().all(|(d, q)| self.span(*d).contains(q))
    }

    /// Keeps the degrees in `[0, top]`.
    pub fn truncated(&self, top: usize) -> GradedBasis {
        GradedBasis {
            nvars: self.nvars,
            pieces: self.pieces.range(..=top).map(|(d, v)| (*d, v.clone())).collect(),
        }
    }

    /// Degree-by-degree subspace equality.
    pub fn same_span(&self, other: &GradedBasis) -> bool {
        let degrees: std::collections::BTreeSet<usize> = self.degrees().chain(other.degrees()).collect();
        degrees.into_iter().all(|d| self.span(d).same_span(&other.span(d)))
    }

    /// Degree-by-degree inclusion.
    pub fn is_subspace_of(&self, other: &GradedBasis) -> bool {
        self.pieces.keys().all(|&d| self.span(d).is_subspace_of(&other.span(d)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.pieces
                .iter()
                .map(|(d, v)| json!({ "degree": d, "basis": v.iter().map(Polynomial::to_json).collect::<Vec<_>>() }))
                .collect(),
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (d, v) in &self.pieces {
            s.push_str(&format!("degree {d} (dim {}):\n", v.len()));
            for p in v {
                s.push_str(&format!("  {p}\n"));
            }
        }
        s.push_str(&format!("total dimension {}\n", self.dim()));
        s
    }
}
