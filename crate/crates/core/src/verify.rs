//! Self-verification suites: deterministic consistency checks across the
//! modules, each reported as a named pass/fail line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::annihilator::{bann, bann_with, harmonic_space, BannOptions, GradedBasis, GroupSpec};
use crate::canonical::{
    branch_candidates, canonical_basis, gamma_recursion_holds, isotypic_pieces, jm_joint_eigenbasis,
    restrict_leading, spectra, BranchOptions, LowestWeightVector,
};
use crate::combinat::{newton_f, partitions, set_partitions, standard_tableaux, syt_count, Tableau};
use crate::cyclic_dihedral::{
    chain_check, cyclic_ann, cyclic_ann_formula, dihedral_bann, dihedral_s_eigencheck, mls_restrict,
    r1_witness_rank, DihedralLabel,
};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank, rref, ExactMatrix, Rational};
use crate::poly::{eigenvalue, MultiIndex, Polynomial};
use crate::specht::{leading_partition_check, specht_poly};
use crate::weyl::{power_op, DiffOp};

pub const SUITES: &[&str] = &["linalg", "poly", "weyl", "combinat", "bann", "specht", "canonical", "dihedral"];

/// One verified property.
#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

impl Check {
    pub fn to_json(&self) -> Value {
        json!({ "suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder { suite, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { suite: self.suite, name: name.into(), passed, detail: detail.into() });
    }

    /// Records a computation that may fail; an error is a failed check.
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        let name = name.into();
        match f() {
            Ok((ok, detail)) => self.check(name, ok, detail),
            Err(e) => self.check(name, false, format!("error: {e}")),
        }
    }
}

/// Runs one suite (or "all") with problem sizes capped by `n_max`.
pub fn run_suite(name: &str, n_max: usize) -> Result<Vec<Check>> {
    match name {
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, n_max)?);
            }
            Ok(out)
        }
        "linalg" => Ok(linalg()),
        "poly" => Ok(poly()),
        "weyl" => Ok(weyl()),
        "combinat" => Ok(combinat(n_max)),
        "bann" => Ok(bann_suite(n_max)),
        "specht" => Ok(specht(n_max)),
        "canonical" => Ok(canonical(n_max)),
        "dihedral" => Ok(dihedral()),
        other => Err(Error::InvalidArgument(format!(
            "unknown suite {other:?}; expected one of {} or all",
            SUITES.join(", ")
        ))),
    }
}

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

/// A deterministic integer matrix with a prescribed rank deficiency.
fn sample_matrix(rows: usize, cols: usize, seed: i64) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let v = ((i as i64 + 1) * (j as i64 + 2) * seed + (i * j) as i64 * 7) % 11 - 5;
            m.set(i, j, r(v));
        }
    }
    m
}

fn linalg() -> Vec<Check> {
    let mut rec = Recorder::new("linalg");
    let m = ExactMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    rec.check("rank of a rank-2 example", rank(&m) == 2, "");
    let k = kernel_basis(&m);
    let ok = k.len() == 1 && m.mul_vec(&k[0]).map(|v| v.iter().all(Rational::is_zero)).unwrap_or(false);
    rec.check("kernel vector is annihilated", ok, format!("{} vectors", k.len()));
    let mut all = true;
    for seed in 1..=12 {
        let m = sample_matrix(4 + seed as usize % 3, 6, seed);
        let k = kernel_basis(&m);
        all &= rank(&m) + k.len() == m.cols();
        all &= k.iter().all(|v| m.mul_vec(v).map(|w| w.iter().all(Rational::is_zero)).unwrap_or(false));
        let (red, piv) = rref(&m);
        all &= rref(&red).0 == red && piv.len() == rank(&m);
    }
    rec.check("rank-nullity and rref idempotence on 12 matrices", all, "");
    let big = Rational::from_int(i64::MAX) * Rational::from_int(i64::MAX);
    rec.check("big rational round trip", &big / &Rational::from_int(i64::MAX) == Rational::from_int(i64::MAX), "");
    rec.checks
}

fn poly() -> Vec<Check> {
    let mut rec = Recorder::new("poly");
    let x = |i| Polynomial::var(3, i);
    let f = &(&x(0) + &x(1)) * &(&x(1) - &x(2));
    let g = &(&x(0) - &x(2)) * &x(1);
    rec.check("multiplication is commutative", &f * &g == &g * &f, "");
    let vdm = &(&(&x(0) - &x(1)) * &(&x(0) - &x(2))) * &(&x(1) - &x(2));
    let lead = vdm.leading_term_revlex();
    rec.check(
        "Vandermonde leading term",
        lead.as_ref().map(|(e, c)| e == &MultiIndex::from(vec![0, 1, 2]) && *c == r(-1)).unwrap_or(false),
        format!("{lead:?}"),
    );
    let pieces = vdm.isotypic_decompose();
    rec.check("Vandermonde lies in one class", pieces.len() == 1, "");
    let sum: Polynomial = f.isotypic_decompose().values().fold(Polynomial::zero(3), |a, b| &a + b);
    rec.check("isotypic pieces sum back", sum == f, "");
    rec.run("pairing is symmetric and positive", || {
        Ok((f.pairing(&g)? == g.pairing(&f)? && f.pairing(&f)? > Rational::zero(), String::new()))
    });
    for n in 1..=4 {
        let fnp = newton_f(n);
        let mut ok = true;
        for seed in 0..3i64 {
            let pt: Vec<Rational> = (0..n as i64).map(|i| Rational::new(i * 3 + seed - 2, 1 + (i + seed) % 4)).collect();
            let h = |k: u32| pt.iter().map(|v| v.pow(k)).sum::<Rational>();
            let ys: Vec<Rational> = (1..=n as u32).map(h).collect();
            ok &= fnp.eval(&ys).map(|v| v == h(n as u32 + 1)).unwrap_or(false);
        }
        rec.check(format!("Newton polynomial F_{} reproduces the next power sum", n + 1), ok, "");
    }
    rec.checks
}

fn weyl() -> Vec<Check> {
    let mut rec = Recorder::new("weyl");
    let n = 2;
    let mut ok = true;
    for i in 0..n {
        for j in 0..n {
            let c = DiffOp::d(n, i).commutator(&DiffOp::x(n, j));
            let want = if i == j { DiffOp::identity(n) } else { DiffOp::zero(n) };
            ok &= c.map(|c| c == want).unwrap_or(false);
        }
    }
    rec.check("[d_i, x_j] = delta_ij", ok, "");
    let mut ok = true;
    let mut count = 0;
    let mons: Vec<MultiIndex> = (0..3).flat_map(|a| (0..3).map(move |b| MultiIndex::new([a, b]))).collect();
    for a in &mons {
        for b in &mons {
            let p = DiffOp::monomial(a.clone(), b.clone(), r(1));
            let f = Polynomial::from_int_terms(2, &[(&[2, 1], 1), (&[0, 3], -2), (&[1, 1], 3)]);
            let g = Polynomial::from_int_terms(2, &[(&[2, 2], 1), (&[1, 2], 5), (&[3, 0], -1)]);
            let lhs = p.apply(&f).and_then(|pf| pf.pairing(&g));
            let rhs = p.transpose().apply(&g).and_then(|pg| f.pairing(&pg));
            ok &= matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r);
            count += 1;
        }
    }
    rec.check("adjointness <Pf,g> = <f,P^t g>", ok, format!("{count} operators"));
    rec.run("p_{0,1} lowers degree by one", || {
        let p = power_op(0, 1, 3)?;
        Ok((p.homogeneous_degree() == Some(-1), String::new()))
    });
    rec.checks
}

/// Number of involutions of Sₙ by direct recursion over permutations.
fn involutions(n: usize) -> u128 {
    fn rec(free: &mut Vec<bool>) -> u128 {
        let Some(i) = free.iter().position(|&f| f) else { return 1 };
        free[i] = false;
        let mut total = rec(free);
        for j in i + 1..free.len() {
            if free[j] {
                free[j] = false;
                total += rec(free);
                free[j] = true;
            }
        }
        free[i] = true;
        total
    }
    rec(&mut vec![true; n])
}

fn combinat(n_max: usize) -> Vec<Check> {
    let mut rec = Recorder::new("combinat");
    for n in 1..=n_max.max(1) + 2 {
        let ps = partitions(n);
        let total: u128 = ps.iter().map(syt_count).sum();
        rec.check(format!("sum of SYT counts = involutions for n = {n}"), total == involutions(n), format!("{total}"));
        let ok = ps.iter().all(|p| standard_tableaux(p).len() as u128 == syt_count(p));
        rec.check(format!("enumeration matches hook formula for n = {n}"), ok, "");
        let ok = ps.iter().all(|p| p.conjugate().conjugate() == *p);
        rec.check(format!("conjugation is an involution for n = {n}"), ok, "");
    }
    let f4 = newton_f(3);
    let one = vec![r(1); 3];
    let printed = Polynomial::parse("1/6 x1^4 - x1^2 x2 + 1/2 x2^2 + 4/3 x1 x3", Some(3));
    rec.check("F_4 in the power sums y1, y2, y3", printed.is_ok_and(|p| p == f4), f4.to_string());
    rec.check("F_4(1,1,1) = 1", f4.eval(&one).map(|v| v == r(1)).unwrap_or(false), "");
    rec.checks
}

/// dim B^ann for G(m,1,n): Σ over m-multipartitions of n of the
/// multinomial coefficient times the product of SYT counts, i.e. Σ dim V
/// over irreducibles V.
fn gelfand_dimension(m: usize, n: usize) -> u128 {
    fn rec(m: usize, left: usize, parts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts.len() + 1 == m {
            parts.push(left);
            out.push(parts.clone());
            parts.pop();
            return;
        }
        for k in 0..=left {
            parts.push(k);
            rec(m, left - k, parts, out);
            parts.pop();
        }
    }
    let mut sizes = Vec::new();
    rec(m, n, &mut Vec::new(), &mut sizes);
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let f_total = |k: usize| partitions(k).iter().map(syt_count).sum::<u128>();
    // Σ_λ f^λ over partitions of k, for each color, multiplied by the
    // multinomial coefficient of the color sizes.
    sizes
        .iter()
        .map(|s| fact(n) / s.iter().map(|&k| fact(k)).product::<u128>() * s.iter().map(|&k| f_total(k)).product::<u128>())
        .sum()
}

fn bann_suite(n_max: usize) -> Vec<Check> {
    let mut rec = Recorder::new("bann");
    for n in 1..=n_max {
        rec.run(format!("dim B^ann(S{n}) = involutions"), || {
            let b = bann(&GroupSpec::symmetric(n))?;
            Ok((b.dim() as u128 == involutions(n), format!("{}", b.dim())))
        });
    }
    for (m, n) in [(2u32, 2usize), (2, 3), (3, 2)] {
        let g = GroupSpec::SymmetricWreath { m, n };
        rec.run(format!("dim B^ann({g}) = Gelfand model dimension"), || {
            let b = bann(&g)?;
            let want = gelfand_dimension(m as usize, n);
            let top = m * n as u32 - 1;
            let bounded = b.polys().all(|p| p.max_var_degree() <= top);
            Ok((b.dim() as u128 == want && bounded, format!("{} vs {want}", b.dim())))
        });
    }
    for g in [GroupSpec::symmetric(3), GroupSpec::SymmetricWreath { m: 2, n: 2 }, GroupSpec::Dihedral { e: 4 }] {
        rec.run(format!("harmonic filter agrees for {g}"), || {
            let a = bann(&g)?;
            let b = bann_with(&g, &BannOptions { harmonic_filter: true, ..BannOptions::default() })?;
            let h = harmonic_space(&g)?;
            Ok((a.same_span(&b) && a.is_subspace_of(&h) && h.dim() as u128 == g.order(), String::new()))
        });
    }
    rec.run("wider window leaves B^ann(S3) unchanged", || {
        let a = bann(&GroupSpec::symmetric(3))?;
        let b = bann_with(&GroupSpec::symmetric(3), &BannOptions { window: Some(5), ..BannOptions::default() })?;
        Ok((a.same_span(&b), String::new()))
    });
    rec.run("cyclic closed-form criterion agrees with generic operators (C4)", || {
        let g = GroupSpec::Cyclic { e: 4 };
        let a = bann(&g)?;
        let b = bann_with(&g, &BannOptions { generic_cyclic: true, ..BannOptions::default() })?;
        Ok((a.same_span(&b), format!("dim {}", a.dim())))
    });
    rec.checks
}

fn specht(n_max: usize) -> Vec<Check> {
    let mut rec = Recorder::new("specht");
    for n in 1..=(n_max + 2).min(6) {
        let ps = set_partitions(n);
        let ok = ps.iter().all(|p| leading_partition_check(p).1);
        rec.check(format!("leading partitions are conjugate for n = {n}"), ok, format!("{} set partitions", ps.len()));
        let ok = ps.iter().all(|p| {
            let want: usize = p.blocks().iter().map(|b| b.len() * (b.len() - 1) / 2).sum();
            specht_poly(p, 1).map(|s| s.degree() == Some(want)).unwrap_or(false)
        });
        rec.check(format!("deg s_P = sum of C(|block|, 2) for n = {n}"), ok, "");
    }
    for n in 1..=n_max {
        rec.run(format!("s_P lies in B^ann(S{n}) for every P"), || {
            let b = bann(&GroupSpec::symmetric(n))?;
            let mut ok = true;
            for p in set_partitions(n) {
                ok &= b.contains(&specht_poly(&p, 1)?);
            }
            Ok((ok, String::new()))
        });
    }
    rec.checks
}

/// Canonical bases for n = 1..n_max, keyed by tableau.
fn bases_by_tableau(n_max: usize) -> Result<Vec<BTreeMap<Tableau, LowestWeightVector>>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(canonical_basis(n)?.into_iter().map(|v| (v.tableau.clone(), v)).collect());
    }
    Ok(out)
}

fn canonical(n_max: usize) -> Vec<Check> {
    let mut rec = Recorder::new("canonical");
    let levels = match bases_by_tableau(n_max) {
        Ok(l) => l,
        Err(e) => {
            rec.check("canonical bases", false, format!("error: {e}"));
            return rec.checks;
        }
    };
    for (k, level) in levels.iter().enumerate() {
        let n = k + 1;
        let want: u128 = partitions(n).iter().map(syt_count).sum();
        rec.check(format!("S{n}: one vector per standard tableau"), level.len() as u128 == want, format!("{}", level.len()));

        let mut ok = true;
        for v in level.values() {
            ok &= match spectra(&v.poly, n) {
                Ok(s) => s.alpha == v.alpha && s.gamma == v.gamma && s.ell.iter().map(|c| c.unwrap_or(i64::MIN)).eq(v.ell.iter().copied()),
                Err(_) => false,
            };
        }
        rec.check(format!("S{n}: t_i and L_i eigenvalues match alpha, gamma, contents"), ok, "");

        let alphas: BTreeSet<&MultiIndex> = level.values().map(|v| &v.alpha).collect();
        rec.check(format!("S{n}: T -> alpha_T is injective"), alphas.len() == level.len(), "");

        if n >= 2 {
            let parents = &levels[k - 1];
            let ok = level
                .values()
                .all(|v| parents.get(&v.tableau.truncate(n - 1)).is_some_and(|p| gamma_recursion_holds(v, p)));
            rec.check(format!("S{n}: gamma recursion along every path"), ok, "");

            let mut ok = true;
            for v in level.values() {
                for j in 1..n {
                    let w = &levels[j - 1][&v.tableau.truncate(j)];
                    ok &= restrict_leading(v, j).map(|p| eigenvalue(&w.poly, &p).is_some_and(|c| !c.is_zero())).unwrap_or(false);
                }
            }
            rec.check(format!("S{n}: leading coefficients restrict to the truncated paths"), ok, "");
        }

        rec.run(format!("S{n}: Jucys-Murphy eigenbasis equals the branching basis"), || {
            let b = GradedBasis::from_polys(n, level.values().map(|v| &v.poly))?;
            let mut ok = true;
            let mut lines = 0;
            for piece in isotypic_pieces(&b).values() {
                for (p, ell) in jm_joint_eigenbasis(piece)? {
                    lines += 1;
                    ok &= level.values().any(|v| v.ell == ell && v.poly == p);
                }
            }
            Ok((ok && lines == level.len(), format!("{lines} lines")))
        });
    }
    if n_max >= 1 {
        rec.run("branching graph equals the Young graph", || {
            let mut ok = true;
            let mut root = vec![LowestWeightVector::root()];
            root.extend(levels.iter().take(n_max.saturating_sub(1)).flat_map(|l| l.values().cloned()));
            for v in &root {
                let cands = branch_candidates(v, &BranchOptions { audit: true, ..BranchOptions::default() })?;
                for c in cands {
                    ok &= (c.kernel.len() == 1) == c.addable && c.kernel.len() <= 1;
                }
            }
            Ok((ok, format!("{} parents audited", root.len())))
        });
    }
    rec.checks
}

fn dihedral() -> Vec<Check> {
    let mut rec = Recorder::new("dihedral");
    for e in 2..=8u32 {
        rec.run(format!("D{e}: B^ann equals the labelled lines"), || {
            let d = dihedral_bann(e)?;
            let want = if e % 2 == 0 { e + 2 } else { e + 1 };
            Ok((d.basis.dim() == want as usize, format!("dim {}", d.basis.dim())))
        });
        if e % 2 == 0 {
            rec.run(format!("D{e}: s splits the middle lines with eigenvalues +-(e/2)!"), || {
                let (a, b) = dihedral_s_eigencheck(e)?;
                let f: i64 = (1..=e as i64 / 2).product();
                Ok((a == r(f) && b == r(-f), format!("{a}, {b}")))
            });
            rec.run(format!("C{e}: x1^(e/2), x2^(e/2) span a simple 2-dimensional module"), || {
                let k = r1_witness_rank(e)?;
                Ok((k == 4, format!("rank {k}")))
            });
        }
        rec.run(format!("C{e}: annihilators of every isotypic piece match the closed form"), || {
            let mut ok = true;
            for i in 0..e {
                ok &= GradedBasis::from_polys(2, &cyclic_ann(e, i)?)?.same_span(&GradedBasis::from_polys(2, &cyclic_ann_formula(e, i)?)?);
            }
            Ok((ok, String::new()))
        });
        rec.run(format!("C{e} -> D{e}: restriction labels and annihilators"), || {
            let mut ok = true;
            let mut labels = Vec::new();
            for i in 0..e {
                let m = mls_restrict(e, i, 2 * e as usize, None)?;
                let want = if i == 0 {
                    vec![DihedralLabel::M0]
                } else if 2 * i < e {
                    vec![DihedralLabel::M1(i)]
                } else if 2 * i == e {
                    vec![DihedralLabel::MI(i), DihedralLabel::MII(i)]
                } else {
                    vec![DihedralLabel::M2(e - i)]
                };
                ok &= m.labels == want && m.ann_matches;
                labels.push(m.label());
            }
            Ok((ok, labels.join(", ")))
        });
        rec.run(format!("chain 1 < C{e} < D{e} is consistent"), || Ok((chain_check(e, 2 * e as usize)?, String::new())));
    }
    rec.checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles() {
        assert_eq!((1..=5).map(involutions).collect::<Vec<_>>(), vec![1, 2, 4, 10, 26]);
        assert_eq!(gelfand_dimension(2, 2), 6);
        assert_eq!(gelfand_dimension(3, 2), 12);
        assert_eq!(gelfand_dimension(1, 4), 10);
    }

    #[test]
    fn fast_suites_pass() {
        for s in ["linalg", "poly", "weyl", "combinat"] {
            for c in run_suite(s, 3).unwrap() {
                assert!(c.passed, "{c}");
            }
        }
        assert!(run_suite("nope", 3).is_err());
    }
}
