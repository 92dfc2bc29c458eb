//! Power differential operators, nabla calculus and Jucys–Murphy elements.

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{MultiIndex, Polynomial};

use super::diffop::DiffOp;

/// p_{k,l} = Σ_i x_i^k ∂_i^l in `n` variables.
pub fn power_op(k: i64, l: i64, n: usize) -> Result<DiffOp> {
    if k < 0 || l < 0 {
        return Err(Error::InvalidArgument(format!("power_op exponents must be non-negative, got ({k},{l})")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("power_op needs at least one variable".into()));
    }
    let (k, l) = (k as u32, l as u32);
    let terms = (0..n).map(|i| {
        let mut a = MultiIndex::zeros(n);
        let mut b = MultiIndex::zeros(n);
        a.set(i, k);
        b.set(i, l);
        (a, b, Rational::one())
    });
    DiffOp::from_terms(n, terms)
}

/// h_i(x) = Σ_j x_j^i as a multiplication operator.
pub fn power_sum_x(i: u32, n: usize) -> DiffOp {
    power_op(i as i64, 0, n).expect("valid exponents")
}

/// h_i(∂) = Σ_j ∂_j^i.
pub fn power_sum_d(i: u32, n: usize) -> DiffOp {
    power_op(0, i as i64, n).expect("valid exponents")
}

/// The univariate polynomial p_k(t) = t(t−1)⋯(t−k+1), with x^k∂^k = p_k(∇).
pub fn nabla_falling(k: u32) -> Polynomial {
    let t = Polynomial::var(1, 0);
    let mut acc = Polynomial::one(1);
    for j in 0..k {
        let shifted = &t - &Polynomial::constant(1, Rational::from_int(j as i64));
        acc = &acc * &shifted;
    }
    acc
}

/// Stirling numbers of the second kind S(i, k).
pub fn stirling2(i: u32, k: u32) -> Rational {
    let mut row = vec![Rational::one()];
    for m in 1..=i {
        let mut next = vec![Rational::zero(); m as usize + 1];
        for (j, slot) in next.iter_mut().enumerate().skip(1) {
            let from_prev = row.get(j).cloned().unwrap_or_default() * Rational::from_int(j as i64);
            *slot = from_prev + row.get(j - 1).cloned().unwrap_or_default();
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

/// ∇_j^i = (x_j∂_j)^i = Σ_k S(i,k) x_j^k∂_j^k (1-based `j`).
pub fn nabla_power_op(i: u32, j: usize, n: usize) -> Result<DiffOp> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, min: 1, max: n });
    }
    let terms = (0..=i).map(|k| {
        let mut a = MultiIndex::zeros(n);
        a.set(j - 1, k);
        (a.clone(), a, stirling2(i, k))
    });
    DiffOp::from_terms(n, terms)
}

/// t_i = Σ_j ∇_j^i; acts on x^α by Σ_j α(j)^i.
pub fn power_sum_nabla(i: u32, n: usize) -> DiffOp {
    let mut acc = DiffOp::zero(n);
    for j in 1..=n {
        acc = &acc + &nabla_power_op(i, j, n).expect("index in range");
    }
    acc
}

/// The Euler operator ∇ = Σ x_i∂_i.
pub fn euler(n: usize) -> DiffOp {
    power_op(1, 1, n).expect("valid exponents")
}

/// L_i = Σ_{j<i} (j i) applied to `p` (1-based `i`, 2 ≤ i ≤ nvars).
pub fn jm_apply(i: usize, p: &Polynomial) -> Result<Polynomial> {
    let n = p.nvars();
    if i < 2 || i > n {
        return Err(Error::IndexOutOfRange { index: i, min: 2, max: n });
    }
    let mut acc = Polynomial::zero(n);
    for j in 1..i {
        acc = &acc + &p.swap_vars(j - 1, i - 1);
    }
    Ok(acc)
}
