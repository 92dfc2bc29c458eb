//! Supported groups and their negative-degree invariant operators.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::MultiIndex;
use crate::weyl::{power_op, DiffOp};

/// A finite group acting on ℂⁿ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// G(m,1,n): monomial matrices with m-th roots of unity; m = 1 is Sₙ.
    SymmetricWreath { m: u32, n: usize },
    /// A(e,e,2): diag(ε, ε⁻¹) on ℂ².
    Cyclic { e: u32 },
    /// G(e,e,2): the dihedral group of order 2e on ℂ².
    Dihedral { e: u32 },
}

impl GroupSpec {
    pub fn symmetric(n: usize) -> Self {
        GroupSpec::SymmetricWreath { m: 1, n }
    }

    pub fn nvars(&self) -> usize {
        match *self {
            GroupSpec::SymmetricWreath { n, .. } => n,
            _ => 2,
        }
    }

    pub fn order(&self) -> u128 {
        match *self {
            GroupSpec::SymmetricWreath { m, n } => (m as u128).pow(n as u32) * (1..=n as u128).product::<u128>(),
            GroupSpec::Cyclic { e } => e as u128,
            GroupSpec::Dihedral { e } => 2 * e as u128,
        }
    }

    /// Per-variable exponent bound (exclusive) of the ambient window in
    /// which the lowest-weight space lives: nm for G(m,1,n), e+1 otherwise.
    pub fn default_window(&self) -> u32 {
        match *self {
            GroupSpec::SymmetricWreath { m, n } => m * n as u32,
            GroupSpec::Cyclic { e } | GroupSpec::Dihedral { e } => e + 1,
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            GroupSpec::SymmetricWreath { m, n } => m >= 1 && n >= 1,
            GroupSpec::Cyclic { e } | GroupSpec::Dihedral { e } => e >= 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidGroupSpec(self.to_string()))
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::SymmetricWreath { m: 1, n } => write!(f, "S{n}"),
            GroupSpec::SymmetricWreath { m, n } => write!(f, "G({m},1,{n})"),
            GroupSpec::Cyclic { e } => write!(f, "C{e}"),
            GroupSpec::Dihedral { e } => write!(f, "D{e}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Grammar: `S<n>`, `G(<m>,1,<n>)`, `C<e>`, `D<e>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGroupSpec(s.to_string());
        let t = s.trim();
        let num = |x: &str| x.trim().parse::<u64>().map_err(|_| bad());
        let spec = if let Some(rest) = t.strip_prefix("G(") {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 3 || num(parts[1])? != 1 {
                return Err(bad());
            }
            GroupSpec::SymmetricWreath { m: num(parts[0])? as u32, n: num(parts[2])? as usize }
        } else if let Some(rest) = t.strip_prefix('S') {
            GroupSpec::SymmetricWreath { m: 1, n: num(rest)? as usize }
        } else if let Some(rest) = t.strip_prefix('C') {
            GroupSpec::Cyclic { e: num(rest)? as u32 }
        } else if let Some(rest) = t.strip_prefix('D') {
            GroupSpec::Dihedral { e: num(rest)? as u32 }
        } else {
            return Err(bad());
        };
        spec.validate().map_err(|_| bad())
    }
}

/// Residue of a1 − a2 mod e: the C_e-weight of x^a (and of ∂^a, negated).
fn weight2(a: &MultiIndex, e: u32) -> u32 {
    (a.get(0) as i64 - a.get(1) as i64).rem_euclid(e as i64) as u32
}

fn mi2(a: u32, b: u32) -> MultiIndex {
    MultiIndex::new([a, b])
}

/// The exponents a of minimal shape ((k,0) or (0,k)) with |a| < |b| and
/// weight(a) = weight(b). Every other admissible a is one of these plus a
/// multiple of (1,1), and x1x2 is invariant, so the corresponding operators
/// lie in the left ideal generated by these.
fn minimal_partners(b: &MultiIndex, e: u32) -> Vec<MultiIndex> {
    let r = weight2(b, e);
    let top = b.degree() as u32;
    let mut out = Vec::new();
    for k in 0..top {
        if k % e == r % e {
            out.push(mi2(k, 0));
        }
        if k > 0 && (e - k % e) % e == r {
            out.push(mi2(0, k));
        }
    }
    out
}

/// A finite set S of negative-degree invariant operators such that, for
/// every polynomial whose per-variable degrees are below `degree_bound`,
/// S·v = 0 iff 𝒟⁻·v = 0.
///
/// For G(m,1,n) these are the power operators p_{k,l} with 0 ≤ k < l and
/// m | l − k, with l ≤ nm − 1 inside the natural window (degree_bound ≤ nm);
/// for wider windows l = nm is included too, since those are what force
/// ∂_i^{nm}v = 0. For the cyclic and dihedral groups they are the (S₂-
/// symmetrized) invariant monomials x^a∂^b with |a| < |b| and b_i below the
/// bound, with a restricted to the minimal representatives of its class.
pub fn negative_generators(g: &GroupSpec, degree_bound: usize) -> Result<Vec<DiffOp>> {
    if degree_bound < 1 {
        return Err(Error::InvalidArgument("degree_bound must be at least 1".into()));
    }
    match *g {
        GroupSpec::SymmetricWreath { m, n } => {
            let nm = m as usize * n;
            let top = if degree_bound <= nm { nm - 1 } else { nm };
            let mut out = Vec::new();
            for l in 1..=top {
                for k in 0..l {
                    if (l - k) % m as usize == 0 {
                        out.push(power_op(k as i64, l as i64, n)?);
                    }
                }
            }
            Ok(out)
        }
        GroupSpec::Cyclic { e } => {
            let mut out = Vec::new();
            for b in bounded_pairs(degree_bound as u32) {
                for a in minimal_partners(&b, e) {
                    out.push(DiffOp::monomial(a, b.clone(), Rational::one()));
                }
            }
            Ok(out)
        }
        GroupSpec::Dihedral { e } => {
            let mut out = Vec::new();
            let mut seen = std::collections::BTreeSet::new();
            for b in bounded_pairs(degree_bound as u32) {
                for a in minimal_partners(&b, e) {
                    let sa = a.swapped(0, 1);
                    let sb = b.swapped(0, 1);
                    let key = std::cmp::max((a.clone(), b.clone()), (sa.clone(), sb.clone()));
                    if !seen.insert(key) {
                        continue;
                    }
                    let op = DiffOp::from_terms(
                        2,
                        [(a.clone(), b.clone(), Rational::one()), (sa, sb, Rational::one())],
                    )?;
                    out.push(op);
                }
            }
            Ok(out)
        }
    }
}

/// The cyclic criterion in closed form: x^a∂^b v = 0 iff ∂^b v = 0 (x^a is
/// not a zero divisor), and an admissible a with |a| < |b| exists iff
/// |b| > min(r, e − r) for r = (b1 − b2) mod e.
pub fn cyclic_negative_partials(e: u32, degree_bound: usize) -> Vec<DiffOp> {
    bounded_pairs(degree_bound as u32)
        .into_iter()
        .filter(|b| {
            let r = weight2(b, e);
            b.degree() as u32 > r.min(e - r)
        })
        .map(|b| DiffOp::monomial(MultiIndex::zeros(2), b, Rational::one()))
        .collect()
}

/// All (b1, b2) with 0 ≤ b_i ≤ bound, except (0,0).
fn bounded_pairs(bound: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for b2 in 0..=bound {
        for b1 in 0..=bound {
            if b1 + b2 > 0 {
                out.push(mi2(b1, b2));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        assert_eq!("S3".parse::<GroupSpec>().unwrap(), GroupSpec::symmetric(3));
        assert_eq!("G(2,1,3)".parse::<GroupSpec>().unwrap(), GroupSpec::SymmetricWreath { m: 2, n: 3 });
        assert_eq!("C4".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic { e: 4 });
        assert_eq!("D5".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral { e: 5 });
        for bad in ["S0", "C1", "G(2,2,3)", "X3", "S", "D"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
        assert_eq!(GroupSpec::SymmetricWreath { m: 2, n: 3 }.to_string(), "G(2,1,3)");
    }

    #[test]
    fn symmetric_generators() {
        let g = negative_generators(&GroupSpec::symmetric(2), 2).unwrap();
        assert_eq!(g, vec![power_op(0, 1, 2).unwrap()]);
        assert_eq!(negative_generators(&GroupSpec::symmetric(3), 3).unwrap().len(), 3);
        // a wider window adds the l = nm operators
        assert_eq!(negative_generators(&GroupSpec::symmetric(2), 5).unwrap().len(), 3);
        assert!(negative_generators(&GroupSpec::symmetric(2), 0).is_err());
    }

    #[test]
    fn cyclic_generators_example() {
        let ops = negative_generators(&GroupSpec::Cyclic { e: 3 }, 3).unwrap();
        let has = |a: [u32; 2], b: [u32; 2]| {
            let want = DiffOp::monomial(MultiIndex::new(a), MultiIndex::new(b), Rational::one());
            ops.contains(&want)
        };
        assert!(has([0, 0], [1, 1]));
        assert!(has([0, 0], [3, 0]));
        assert!(has([0, 0], [0, 3]));
        assert!(has([1, 0], [0, 2]));
        assert!(has([0, 1], [2, 0]));
        for op in &ops {
            assert!(op.homogeneous_degree().unwrap() < 0);
        }
    }
}
