//! Sparse multivariate polynomials over the rationals.

mod multiindex;
mod parse;
mod polynomial;
mod span;

pub use multiindex::{lambda_of_multiindex, MultiIndex, OrderedPartition};
pub use polynomial::Polynomial;
pub use span::PolySpan;

/// All exponent vectors of total degree `d` in `n` variables, each entry at
/// most `cap`, in reverse-lex ascending order.
pub fn monomials_of_degree(n: usize, d: usize, cap: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, i: usize, left: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if i + 1 == n {
            if left as u64 <= cap as u64 {
                cur.push(left as u32);
                out.push(MultiIndex::from(cur.as_slice()));
                cur.pop();
            }
            return;
        }
        for k in 0..=left.min(cap as usize) {
            cur.push(k as u32);
            rec(n, i + 1, left - k, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(MultiIndex::zeros(0));
        }
        return out;
    }
    rec(n, 0, d, cap, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// The scalar c with q = c·p, if any (p nonzero).
pub fn eigenvalue(p: &Polynomial, q: &Polynomial) -> Option<crate::linalg::Rational> {
    let (lead, c0) = p.leading_term_revlex().ok()?;
    let c = q.coeff(&lead) / c0;
    (q == &p.scale(&c)).then_some(c)
}
