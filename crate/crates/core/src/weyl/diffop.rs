//! Normal-ordered differential operators Σ c·x^a∂^b.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{MultiIndex, Polynomial};

/// A differential operator with polynomial coefficients, stored in normal
/// order (all x to the left of all ∂).
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    nvars: usize,
    terms: BTreeMap<(MultiIndex, MultiIndex), Rational>,
}

/// k(k−1)⋯(k−j+1); zero when j > k.
pub(crate) fn falling(k: u32, j: u32) -> i128 {
    if j > k {
        return 0;
    }
    ((k - j + 1)..=k).map(|v| v as i128).product()
}

fn binom(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

impl DiffOp {
    pub fn zero(nvars: usize) -> Self {
        DiffOp { nvars, terms: BTreeMap::new() }
    }

    pub fn identity(nvars: usize) -> Self {
        Self::monomial(MultiIndex::zeros(nvars), MultiIndex::zeros(nvars), Rational::one())
    }

    /// c·x^a∂^b.
    pub fn monomial(a: MultiIndex, b: MultiIndex, c: Rational) -> Self {
        assert_eq!(a.len(), b.len(), "x and ∂ exponents must have equal length");
        let nvars = a.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        DiffOp { nvars, terms }
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (MultiIndex, MultiIndex, Rational)>,
    ) -> Result<Self> {
        let mut op = Self::zero(nvars);
        for (a, b, c) in terms {
            for e in [&a, &b] {
                if e.len() != nvars {
                    return Err(Error::LengthMismatch { expected: nvars, found: e.len() });
                }
            }
            op.add_term(a, b, &c);
        }
        Ok(op)
    }

    /// Multiplication by x_{i+1} (0-based).
    pub fn x(nvars: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, i), MultiIndex::zeros(nvars), Rational::one())
    }

    /// ∂/∂x_{i+1} (0-based).
    pub fn d(nvars: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::zeros(nvars), MultiIndex::unit(nvars, i), Rational::one())
    }

    /// Multiplication by the polynomial `p`.
    pub fn mul_by(p: &Polynomial) -> Self {
        let n = p.nvars();
        let mut op = Self::zero(n);
        for (e, c) in p.terms() {
            op.add_term(e.clone(), MultiIndex::zeros(n), c);
        }
        op
    }

    /// The constant-coefficient operator q(∂).
    pub fn of_partials(q: &Polynomial) -> Self {
        let n = q.nvars();
        let mut op = Self::zero(n);
        for (e, c) in q.terms() {
            op.add_term(MultiIndex::zeros(n), e.clone(), c);
        }
        op
    }

    fn add_term(&mut self, a: MultiIndex, b: MultiIndex, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b)) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &MultiIndex, &Rational)> + '_ {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    /// The common degree shift |a| − |b| of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|(a, b)| a.degree() as i64 - b.degree() as i64);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        let mut out = Self::zero(self.nvars);
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), &(v * c));
        }
        out
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.nvars != n {
            return Err(Error::NvarsMismatch { left: self.nvars, right: n });
        }
        Ok(())
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check(p.nvars())?;
        let mut out = Polynomial::zero(self.nvars);
        for ((a, b), c) in &self.terms {
            for (alpha, d) in p.terms() {
                let Some(rest) = alpha.checked_sub(b) else { continue };
                let mut coef = c * d;
                for (k, j) in alpha.iter().zip(b.iter()) {
                    if j > 0 {
                        coef *= Rational::from_int(falling(k, j) as i64);
                    }
                }
                out.add_term(rest.add(a), &coef);
            }
        }
        Ok(out)
    }

    /// Operator product `self ∘ other`, renormal-ordered by the Leibniz rule
    /// ∂^b x^c = Σ_k C(b,k)·c^{(k)}·x^{c−k}∂^{b−k}, variable by variable.
    pub fn compose(&self, other: &DiffOp) -> Result<DiffOp> {
        self.check(other.nvars)?;
        let n = self.nvars;
        let mut out = Self::zero(n);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let base = c1 * c2;
                // Iterate over all k with 0 ≤ k_i ≤ min(b_i, c_i).
                let bound: Vec<u32> = b.iter().zip(c.iter()).map(|(x, y)| x.min(y)).collect();
                let mut k = vec![0u32; n];
                loop {
                    let mut f = base.clone();
                    for (i, &ki) in k.iter().enumerate() {
                        if ki > 0 {
                            f *= Rational::from_int((binom(b.get(i), ki) * falling(c.get(i), ki)) as i64);
                        }
                    }
                    let km = MultiIndex::from(k.as_slice());
                    let xa = a.add(c).checked_sub(&km).expect("k ≤ c");
                    let db = b.checked_sub(&km).expect("k ≤ b").add(d);
                    out.add_term(xa, db, &f);
                    // advance the odometer
                    let mut i = 0;
                    while i < n {
                        if k[i] < bound[i] {
                            k[i] += 1;
                            break;
                        }
                        k[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> DiffOp {
        let mut acc = Self::identity(self.nvars);
        for _ in 0..k {
            acc = acc.compose(self).expect("same nvars");
        }
        acc
    }

    /// The anti-automorphism with x_iᵗ = ∂_i and ∂_iᵗ = x_i; on a normal
    /// ordered monomial (x^a∂^b)ᵗ = x^b∂^a, which is again normal ordered.
    pub fn transpose(&self) -> DiffOp {
        DiffOp {
            nvars: self.nvars,
            terms: self.terms.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())).collect(),
        }
    }

    /// [self, other] = self∘other − other∘self.
    pub fn commutator(&self, other: &DiffOp) -> Result<DiffOp> {
        Ok(&self.compose(other)? - &other.compose(self)?)
    }

    pub fn checked_add(&self, other: &DiffOp) -> Result<DiffOp> {
        self.check(other.nvars)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|((a, b), c)| {
                    json!({
                        "x": a.as_slice(),
                        "d": b.as_slice(),
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts = Vec::new();
            for (i, p) in a.iter().enumerate().filter(|(_, p)| *p > 0) {
                parts.push(if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) });
            }
            for (i, p) in b.iter().enumerate().filter(|(_, p)| *p > 0) {
                parts.push(if p == 1 { format!("d{}", i + 1) } else { format!("d{}^{}", i + 1, p) });
            }
            let ac = c.abs();
            if parts.is_empty() {
                write!(f, "{ac}")?;
            } else if ac.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{ac}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp[{}]({self})", self.nvars)
    }
}

impl Add<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        self.checked_add(rhs).expect("operator variable counts differ")
    }
}

impl Sub<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self.checked_add(&-rhs).expect("operator variable counts differ")
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.scale(&-Rational::one())
    }
}

impl Mul<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        self.compose(rhs).expect("operator variable counts differ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: usize, a: &[u32], b: &[u32]) -> DiffOp {
        assert_eq!(a.len(), n);
        DiffOp::monomial(MultiIndex::from(a), MultiIndex::from(b), Rational::one())
    }

    #[test]
    fn apply_examples() {
        let x1sq = Polynomial::from_int_terms(1, &[(&[2], 1)]);
        assert_eq!(DiffOp::d(1, 0).apply(&x1sq).unwrap(), Polynomial::from_int_terms(1, &[(&[1], 2)]));
        let op = mono(2, &[1, 0], &[0, 1]);
        assert_eq!(op.apply(&Polynomial::var(2, 1)).unwrap(), Polynomial::var(2, 0));
        assert!(op.apply(&Polynomial::var(3, 1)).is_err());
    }

    #[test]
    fn commutation_rule() {
        // ∂x = x∂ + 1
        let dx = DiffOp::d(1, 0).compose(&DiffOp::x(1, 0)).unwrap();
        let expect = mono(1, &[1], &[1]).checked_add(&DiffOp::identity(1)).unwrap();
        assert_eq!(dx, expect);
        // ∂²x² = x²∂² + 4x∂ + 2
        let d2x2 = mono(1, &[0], &[2]).compose(&mono(1, &[2], &[0])).unwrap();
        let expect = DiffOp::from_terms(
            1,
            [
                (MultiIndex::from(vec![2]), MultiIndex::from(vec![2]), Rational::one()),
                (MultiIndex::from(vec![1]), MultiIndex::from(vec![1]), Rational::from_int(4)),
                (MultiIndex::from(vec![0]), MultiIndex::from(vec![0]), Rational::from_int(2)),
            ],
        )
        .unwrap();
        assert_eq!(d2x2, expect);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(DiffOp::x(1, 0).transpose(), DiffOp::d(1, 0));
        assert_eq!(DiffOp::d(1, 0).transpose(), DiffOp::x(1, 0));
        assert_eq!(mono(2, &[1, 0], &[0, 1]).transpose(), mono(2, &[0, 1], &[1, 0]));
    }
}
