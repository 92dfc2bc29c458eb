//! Newton's identities: the (n+1)-st power sum in n variables as a
//! polynomial in the first n power sums.

use crate::linalg::Rational;
use crate::poly::Polynomial;

/// F_{n+1}(y_1, …, y_n) with h_{n+1}(x) = F_{n+1}(h_1(x), …, h_n(x)) for
/// x ∈ ℚⁿ, where h_i is the i-th power sum.
///
/// Newton: k·e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i expresses the
/// elementary symmetric polynomials through power sums; then with
/// e_{n+1} = 0, p_{n+1} = Σ_{i=1}^{n} (−1)^{i−1} e_i p_{n+1−i}.
pub fn newton_f(n: usize) -> Polynomial {
    assert!(n >= 1, "newton_f needs n >= 1");
    let y = |i: usize| Polynomial::var(n, i - 1);
    let mut e: Vec<Polynomial> = vec![Polynomial::one(n)];
    for k in 1..=n {
        let mut acc = Polynomial::zero(n);
        for i in 1..=k {
            let term = &e[k - i] * &y(i);
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&Rational::new(1, k as i64)));
    }
    let mut f = Polynomial::zero(n);
    for (i, ei) in e.iter().enumerate().take(n + 1).skip(1) {
        let term = ei * &y(n + 1 - i);
        f = if i % 2 == 1 { &f + &term } else { &f - &term };
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(newton_f(1), Polynomial::from_int_terms(1, &[(&[2], 1)]));
        // p3 = (1/2)(3 p1 p2 − p1³) in two variables
        let f3 = newton_f(2);
        let expect = Polynomial::from_int_terms(2, &[(&[1, 1], 3), (&[3, 0], -1)]).scale(&Rational::new(1, 2));
        assert_eq!(f3, expect);
    }
}
