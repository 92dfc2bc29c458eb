//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::multiindex::{lambda_of_multiindex, MultiIndex, OrderedPartition};
use crate::error::{Error, Result};
use crate::linalg::{big_gcd, big_lcm, Rational};

/// A polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(MultiIndex::zeros(nvars), c)
    }

    /// The variable x_{i+1} (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, i), Rational::one())
    }

    pub fn monomial(exp: MultiIndex, c: Rational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { nvars, terms }
    }

    /// Sums the given terms, combining repeated exponents.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (MultiIndex, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, found: e.len() });
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    /// Shorthand for tests and examples: integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (MultiIndex::from(*e), Rational::from_int(*c))),
        )
        .expect("exponent length must equal nvars")
    }

    pub(crate) fn add_term(&mut self, e: MultiIndex, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
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

    /// Terms in reverse-lexicographic descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: &MultiIndex) -> Rational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub(crate) fn coeff_ref(&self, e: &MultiIndex) -> Option<&Rational> {
        self.terms.get(e)
    }

    /// Maximum total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// The common degree of all terms, if the polynomial is nonzero and
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(MultiIndex::degree);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Largest exponent of x_{i+1} among the terms.
    pub fn var_degree(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e.get(i)).max().unwrap_or(0)
    }

    /// Largest single exponent of any variable.
    pub fn max_var_degree(&self) -> u32 {
        self.terms.keys().map(MultiIndex::max_entry).max().unwrap_or(0)
    }

    fn check_nvars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial x^e.
    pub fn mul_monomial(&self, e: &MultiIndex) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, v)| (a.add(e), v.clone())).collect(),
        }
    }

    /// `self += c · other`, assuming matching variable counts.
    pub(crate) fn axpy(&mut self, c: &Rational, other: &Polynomial) {
        for (e, v) in &other.terms {
            self.add_term(e.clone(), &(c * v));
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// ⟨f, g⟩ = (f(∂) g)|_{x=0} = Σ_α α!·f_α·g_α.
    pub fn pairing(&self, other: &Polynomial) -> Result<Rational> {
        self.check_nvars(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (e, c) in &small.terms {
            if let Some(d) = large.terms.get(e) {
                acc += Rational::from(BigInt::from(e.factorial())) * c * d;
            }
        }
        Ok(acc)
    }

    /// The reverse-lexicographically greatest term.
    pub fn leading_term_revlex(&self) -> Result<(MultiIndex, Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// The reverse-lexicographically smallest term.
    pub fn trailing_term_revlex(&self) -> Result<(MultiIndex, Rational)> {
        self.terms
            .iter()
            .next()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Keeps the terms x^α with λ^α = λ.
    pub fn isotypic_project(&self, lambda: &OrderedPartition) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| &lambda_of_multiindex(e) == lambda)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into isotypic components, keyed by λ.
    pub fn isotypic_decompose(&self) -> BTreeMap<OrderedPartition, Polynomial> {
        let mut out: BTreeMap<OrderedPartition, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(lambda_of_multiindex(e))
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    /// Applies the substitution x_i ↦ x_{σ(i)} (0-based `sigma`).
    pub fn permute_vars(&self, sigma: &[usize]) -> Result<Polynomial> {
        if sigma.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: sigma.len() });
        }
        let mut seen = vec![false; sigma.len()];
        for &s in sigma {
            if s >= sigma.len() || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation")));
            }
        }
        // x^α ↦ ∏ x_{σ(i)}^{α(i)}, so the new exponent at σ(i) is α(i).
        let mut inv = vec![0; sigma.len()];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.gather(&inv), c.clone())).collect(),
        })
    }

    /// Exchanges x_{i+1} and x_{j+1} (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.swapped(i, j), c.clone())).collect(),
        }
    }

    /// Regards the polynomial as one in `nvars + extra` variables.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(e, c)| (e.extended(extra), c.clone())).collect(),
        }
    }

    /// Drops trailing variables that do not occur; errors if one does.
    pub fn truncate_vars(&self, nvars: usize) -> Result<Polynomial> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.as_slice()[nvars..].iter().any(|&x| x != 0) {
                return Err(Error::InvalidArgument(format!(
                    "polynomial depends on variables beyond x{nvars}"
                )));
            }
            terms.insert(MultiIndex::from(&e.as_slice()[..nvars]), c.clone());
        }
        Ok(Polynomial { nvars, terms })
    }

    /// Coefficient of x_{k+1}^{e_{k+1}}⋯x_n^{e_n} when viewed as a polynomial
    /// in the trailing variables with coefficients in ℚ[x_1..x_k]; the
    /// result lives in k variables.
    pub fn coefficient_of_tail(&self, tail: &[u32]) -> Polynomial {
        let k = self.nvars - tail.len();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if &e.as_slice()[k..] == tail {
                terms.insert(MultiIndex::from(&e.as_slice()[..k]), c.clone());
            }
        }
        Polynomial { nvars: k, terms }
    }

    /// ∂/∂x_{i+1}.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(i);
            if k > 0 {
                let mut f = e.clone();
                f.set(i, k - 1);
                out.add_term(f, &(c * &Rational::from_int(k as i64)));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: point.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    t *= x.pow(k);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// The integral multiple with content 1 whose reverse-lexicographically
    /// smallest term is positive. Zero stays zero.
    ///
    /// The sign is fixed on the trailing term because that is what makes the
    /// classical lowest-weight vectors come out in their familiar form
    /// (x1 − x2, x1 + x2 − 2x3, the Vandermonde (x1−x2)(x1−x3)(x2−x3)).
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for c in self.terms.values() {
            if !c.is_integer() {
                l = big_lcm(&l, &c.denom());
            }
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&l / c.denom());
            g = big_gcd(&g, &n);
        }
        let mut s = Rational::from_bigints(l, g);
        if self.terms.values().next().map_or(0, Rational::signum) < 0 {
            s = -s;
        }
        self.scale(&s)
    }

    /// Scales so that the leading term has coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.values().next_back() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// JSON form: list of {"exp", "num", "den"} in reverse-lex descending order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| {
                    json!({
                        "exp": e.as_slice(),
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value, nvars: Option<usize>) -> Result<Polynomial> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial must be a JSON array".into()))?;
        let mut terms = Vec::with_capacity(arr.len());
        let mut n = nvars;
        for t in arr {
            let exp: Vec<u32> = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term without \"exp\"".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| Error::Parse("exponent must be a small non-negative integer".into()))
                })
                .collect::<Result<_>>()?;
            let field = |k: &str| -> Result<BigInt> {
                match t.get(k) {
                    Some(Value::String(s)) => s.parse().map_err(|_| Error::Parse(format!("bad {k}: {s}"))),
                    Some(Value::Number(x)) => x
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| Error::Parse(format!("bad {k}"))),
                    None if k == "den" => Ok(BigInt::one()),
                    _ => Err(Error::Parse(format!("term without \"{k}\""))),
                }
            };
            let den = field("den")?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let c = Rational::from_bigints(field("num")?, den);
            let len = *n.get_or_insert(exp.len());
            if exp.len() != len {
                return Err(Error::LengthMismatch { expected: len, found: exp.len() });
            }
            terms.push((MultiIndex::from(exp), c));
        }
        let n = n.ok_or_else(|| Error::Parse("cannot infer variable count of an empty polynomial".into()))?;
        Polynomial::from_terms(n, terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.signum() < 0;
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, p)| *p > 0)
                .map(|(i, p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the variable counts differ; use the `checked_` form to
        /// get an error instead.
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial variable counts differ")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn arithmetic_examples() {
        let a = &x(2, 0) - &x(2, 1);
        let b = &x(2, 1) - &x(2, 0);
        assert!((&a + &b).is_zero());
        let c = &a * &(&x(2, 0) + &x(2, 1));
        assert_eq!(c, Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        assert_eq!(x(2, 0).scale(&Rational::from_int(2)), Polynomial::from_int_terms(2, &[(&[1, 0], 2)]));
        assert!(x(2, 0).checked_add(&x(3, 0)).is_err());
    }

    #[test]
    fn pairing_examples() {
        assert!(x(2, 0).pairing(&x(2, 1)).unwrap().is_zero());
        let s = x(2, 0).pow(2);
        assert_eq!(s.pairing(&s).unwrap(), Rational::from_int(2));
        let m = &x(2, 0) * &x(2, 1);
        assert_eq!(m.pairing(&m).unwrap(), Rational::one());
        assert!(x(2, 0).pairing(&x(3, 0)).is_err());
    }

    #[test]
    fn leading_terms() {
        let a = &x(2, 0) - &x(2, 1);
        assert_eq!(a.leading_term_revlex().unwrap(), (MultiIndex::from(vec![0, 1]), Rational::from_int(-1)));
        let v = &(&(&x(3, 0) - &x(3, 1)) * &(&x(3, 0) - &x(3, 2))) * &(&x(3, 1) - &x(3, 2));
        // (x1−x2)(x1−x3)(x2−x3) has −x2·x3² as its reverse-lex leading term.
        assert_eq!(v.leading_term_revlex().unwrap(), (MultiIndex::from(vec![0, 1, 2]), Rational::from_int(-1)));
        assert_eq!(Polynomial::one(3).leading_term_revlex().unwrap(), (MultiIndex::zeros(3), Rational::one()));
        assert_eq!(Polynomial::zero(2).leading_term_revlex(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn isotypic_examples() {
        let p = &x(2, 0).pow(2) + &(&x(2, 0) * &x(2, 1));
        assert_eq!(p.isotypic_project(&OrderedPartition(vec![1, 0, 1])), x(2, 0).pow(2));
        assert_eq!(p.isotypic_project(&OrderedPartition(vec![0, 2])), &x(2, 0) * &x(2, 1));
        let a = &x(2, 0) - &x(2, 1);
        assert_eq!(a.isotypic_project(&OrderedPartition(vec![1, 1])), a);
    }

    #[test]
    fn normalization() {
        let p = Polynomial::from_int_terms(2, &[(&[1, 0], -3), (&[0, 1], 6)]).scale(&Rational::new(1, 7));
        assert_eq!(p.normalized(), Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -2)]));
    }

    #[test]
    fn permute() {
        let p = Polynomial::from_int_terms(2, &[(&[2, 1], 1)]);
        assert_eq!(p.permute_vars(&[1, 0]).unwrap(), Polynomial::from_int_terms(2, &[(&[1, 2], 1)]));
        // x1 ↦ x2, x2 ↦ x3, x3 ↦ x1
        let q = Polynomial::from_int_terms(3, &[(&[1, 2, 3], 1)]);
        assert_eq!(q.permute_vars(&[1, 2, 0]).unwrap(), Polynomial::from_int_terms(3, &[(&[3, 1, 2], 1)]));
    }

    #[test]
    fn json_roundtrip() {
        let p = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -2)]).scale(&Rational::new(1, 3));
        let v = p.to_json();
        assert_eq!(v[0]["exp"], json!([0, 1]));
        assert_eq!(v[0]["num"], json!("-2"));
        assert_eq!(v[0]["den"], json!("3"));
        assert_eq!(Polynomial::from_json(&v, None).unwrap(), p);
    }

    #[test]
    fn display() {
        let p = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 2], -2), (&[0, 0], 3)]);
        assert_eq!(p.to_string(), "-2*x2^2 + x1 + 3");
    }
}
