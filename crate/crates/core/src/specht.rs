//! Specht polynomials and the higher Specht generators of G(d,1,n).

use serde_json::{json, Value};

use crate::combinat::{Partition, SetPartition};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{lambda_of_multiindex, MultiIndex, Polynomial};

/// A multi-index α together with a set partition whose blocks each lie in
/// one fibre {i : α(i) = v}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaPartition {
    alpha: MultiIndex,
    partition: SetPartition,
}

impl AlphaPartition {
    pub fn new(alpha: MultiIndex, partition: SetPartition) -> Result<Self> {
        if alpha.len() != partition.n() {
            return Err(Error::LengthMismatch { expected: partition.n(), found: alpha.len() });
        }
        for b in partition.blocks() {
            let v = alpha.get(b[0] - 1);
            if b.iter().any(|&k| alpha.get(k - 1) != v) {
                return Err(Error::InvalidArgument(format!(
                    "block {:?} meets several fibres of alpha {alpha}",
                    b
                )));
            }
        }
        Ok(AlphaPartition { alpha, partition })
    }

    pub fn alpha(&self) -> &MultiIndex {
        &self.alpha
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }
}

/// s_P = ∏ over blocks ∏_{k<l in block} (x_kᵈ − x_lᵈ).
pub fn specht_poly(p: &SetPartition, d: u32) -> Result<Polynomial> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let n = p.n();
    let power = |i: usize| {
        let mut e = MultiIndex::zeros(n);
        e.set(i - 1, d);
        Polynomial::monomial(e, Rational::one())
    };
    let mut s = Polynomial::one(n);
    for b in p.blocks() {
        for (i, &k) in b.iter().enumerate() {
            for &l in &b[i + 1..] {
                s = &s * &(&power(k) - &power(l));
            }
        }
    }
    Ok(s)
}

/// s_P · x^α, a lowest-weight generator for G(d,1,n).
pub fn higher_specht_generator(ap: &AlphaPartition, d: u32) -> Result<Polynomial> {
    if let Some(v) = ap.alpha.iter().find(|&v| v >= d) {
        return Err(Error::InvalidArgument(format!("alpha entry {v} is not below d = {d}")));
    }
    Ok(specht_poly(&ap.partition, d)?.mul_monomial(&ap.alpha))
}

/// λ^P together with whether every monomial x^α of the classical Specht
/// polynomial satisfies λ^α = (λ^P)ᶜ as unordered partitions.
pub fn leading_partition_check(p: &SetPartition) -> (Partition, bool) {
    let lambda = p.shape();
    let target = lambda.conjugate();
    let s = specht_poly(p, 1).expect("d = 1 is valid");
    let ok = s
        .terms()
        .all(|(e, _)| lambda_of_multiindex(e).to_sorted_parts() == target.parts());
    (lambda, ok)
}

/// JSON record for the CLI: the partition, α, d and the polynomial.
pub fn specht_json(p: &SetPartition, alpha: Option<&MultiIndex>, d: u32, poly: &Polynomial) -> Value {
    json!({
        "blocks": p.blocks(),
        "alpha": alpha.map(|a| a.iter().collect::<Vec<_>>()),
        "d": d,
        "degree": poly.degree(),
        "poly": poly.to_json(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    #[test]
    fn specht_examples() {
        assert_eq!(specht_poly(&sp("{1},{2},{3}"), 1).unwrap(), Polynomial::one(3));
        let x12 = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(specht_poly(&sp("{1,2}"), 1).unwrap(), x12);
        let v = specht_poly(&sp("{1,2,3}"), 1).unwrap();
        assert_eq!(v.num_terms(), 6);
        assert_eq!(v.degree(), Some(3));
    }

    #[test]
    fn higher_examples() {
        let ap = AlphaPartition::new(MultiIndex::zeros(2), sp("{1,2}")).unwrap();
        let want = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        assert_eq!(higher_specht_generator(&ap, 2).unwrap(), want);

        let ap = AlphaPartition::new(MultiIndex::from(vec![1, 0]), sp("{1},{2}")).unwrap();
        assert_eq!(higher_specht_generator(&ap, 2).unwrap(), Polynomial::var(2, 0));

        let ap = AlphaPartition::new(MultiIndex::from(vec![1, 1, 0]), sp("{1,2},{3}")).unwrap();
        let want = Polynomial::from_int_terms(3, &[(&[3, 1, 0], 1), (&[1, 3, 0], -1)]);
        assert_eq!(higher_specht_generator(&ap, 2).unwrap(), want);

        assert!(AlphaPartition::new(MultiIndex::from(vec![1, 0]), sp("{1,2}")).is_err());
        let ap = AlphaPartition::new(MultiIndex::from(vec![2, 0]), sp("{1},{2}")).unwrap();
        assert!(higher_specht_generator(&ap, 2).is_err());
    }

    #[test]
    fn leading_partition_examples() {
        let (l, ok) = leading_partition_check(&sp("{1,2}"));
        assert_eq!(l.parts(), &[2]);
        assert!(ok);
        let (l, ok) = leading_partition_check(&sp("{1},{2}"));
        assert_eq!(l.parts(), &[1, 1]);
        assert!(ok);
        assert!(leading_partition_check(&sp("{1,2},{3,4}")).1);
    }
}
