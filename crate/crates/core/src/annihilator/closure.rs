//! Graded closures 𝒟·V of seed vectors under a generating set of operators.

use std::collections::{BTreeMap, VecDeque};

use super::graded::GradedBasis;
use crate::error::{Error, Result};
use crate::poly::{OrderedPartition, PolySpan, Polynomial};
use crate::weyl::DiffOp;

/// Knobs for [`module_closure_with`].
#[derive(Clone, Debug)]
pub struct ClosureOptions {
    /// Extra degrees above the requested top that the closure may pass
    /// through (raise then lower).
    pub slack: usize,
    /// Store each degree split over monomial-multiset classes. Only valid
    /// when the generated algebra contains the nabla power sums, so that the
    /// module is a sum of its class components (e.g. symmetric-group
    /// invariant operators).
    pub split_classes: bool,
}

impl ClosureOptions {
    pub fn with_slack(slack: usize) -> Self {
        ClosureOptions { slack, split_classes: false }
    }
}

/// Fixpoint of applying `generators` to the span of `seeds`, computed in
/// degrees [0, top + slack] and truncated to [0, top].
pub fn module_closure(generators: &[DiffOp], seeds: &[Polynomial], top: usize, slack: usize) -> Result<GradedBasis> {
    module_closure_with(generators, seeds, top, &ClosureOptions::with_slack(slack))
}

pub fn module_closure_with(
    generators: &[DiffOp],
    seeds: &[Polynomial],
    top: usize,
    opts: &ClosureOptions,
) -> Result<GradedBasis> {
    let nvars = seeds
        .first()
        .map(Polynomial::nvars)
        .or_else(|| generators.first().map(DiffOp::nvars))
        .unwrap_or(0);
    let mut shifts = Vec::with_capacity(generators.len());
    for g in generators {
        if g.nvars() != nvars {
            return Err(Error::NvarsMismatch { left: nvars, right: g.nvars() });
        }
        if g.is_zero() {
            shifts.push(None);
            continue;
        }
        let s = g
            .homogeneous_degree()
            .ok_or_else(|| Error::NonHomogeneous(format!("generator {g}")))?;
        shifts.push(Some(s));
    }
    let window = top + opts.slack;
    type Key = (usize, Option<OrderedPartition>);
    let mut spans: BTreeMap<Key, PolySpan> = BTreeMap::new();
    let mut queue: VecDeque<(usize, Polynomial)> = VecDeque::new();

    let offer = |d: usize, p: Polynomial, spans: &mut BTreeMap<Key, PolySpan>, queue: &mut VecDeque<(usize, Polynomial)>| {
        if opts.split_classes {
            for (cls, part) in p.isotypic_decompose() {
                let span = spans.entry((d, Some(cls))).or_insert_with(|| PolySpan::new(nvars));
                if span.insert(&part) {
                    queue.push_back((d, part));
                }
            }
        } else {
            let span = spans.entry((d, None)).or_insert_with(|| PolySpan::new(nvars));
            if span.insert(&p) {
                queue.push_back((d, p));
            }
        }
    };

    for s in seeds {
        if s.nvars() != nvars {
            return Err(Error::NvarsMismatch { left: nvars, right: s.nvars() });
        }
        if s.is_zero() {
            continue;
        }
        let d = s.homogeneous_degree().ok_or_else(|| Error::NonHomogeneous(format!("seed {s}")))?;
        if d <= window {
            offer(d, s.clone(), &mut spans, &mut queue);
        }
    }
    while let Some((d, p)) = queue.pop_front() {
        for (g, s) in generators.iter().zip(&shifts) {
            let Some(s) = *s else { continue };
            let nd = d as i64 + s;
            if nd < 0 || nd as usize > window {
                continue;
            }
            let q = g.apply(&p)?;
            if !q.is_zero() {
                offer(nd as usize, q, &mut spans, &mut queue);
            }
        }
    }
    let mut by_degree: BTreeMap<usize, PolySpan> = BTreeMap::new();
    for ((d, _), span) in spans {
        if d > top {
            continue;
        }
        let target = by_degree.entry(d).or_insert_with(|| PolySpan::new(nvars));
        for b in span.basis() {
            target.insert(b);
        }
    }
    Ok(GradedBasis::from_spans(nvars, by_degree))
}
