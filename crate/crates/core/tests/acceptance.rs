//! Acceptance criteria AC1-AC12, each checked against an independent oracle
//! or a printed reference value and timed against its budget.
//!
//! Prints one PASS/FAIL line per criterion. A criterion whose literal claim
//! is known to be unattainable is reported as FAIL with the reason and does
//! not affect the exit status; any other failure exits nonzero.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use invweyl::annihilator::{bann, GradedBasis, GroupSpec};
use invweyl::canonical::{
    branch_candidates, branch_step, canonical_basis, gamma_recursion_holds, isotypic_pieces, jm_joint_eigenbasis,
    BranchOptions, LowestWeightVector,
};
use invweyl::combinat::{newton_f, set_partitions, Tableau};
use invweyl::cyclic_dihedral::{cyclic_ann, dihedral_bann, dihedral_s_eigencheck, mls_restrict};
use invweyl::linalg::Rational;
use invweyl::poly::{eigenvalue, MultiIndex, Polynomial};
use invweyl::specht::leading_partition_check;
use invweyl::weyl::DiffOp;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DEFAULT_SEED: u64 = 0x1A2B_3C4D;

/// Seed for the sampled criteria; `INVWEYL_TEST_SEED` overrides it.
fn seed() -> u64 {
    std::env::var("INVWEYL_TEST_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

enum Verdict {
    Pass(String),
    Fail(String),
    /// The literal claim fails for a documented reason; everything else holds.
    KnownDeviation(String),
}

type Outcome = Result<Verdict, String>;

fn verdict(ok: bool, detail: impl Into<String>) -> Outcome {
    let d = detail.into();
    Ok(if ok { Verdict::Pass(d) } else { Verdict::Fail(d) })
}

fn err(e: invweyl::Error) -> String {
    e.to_string()
}

fn p(s: &str, n: usize) -> Polynomial {
    Polynomial::parse(s, Some(n)).expect("reference polynomial parses")
}

/// Involutions of Sₙ, by testing σ∘σ = id over all permutations.
fn involutions_brute(n: usize) -> usize {
    fn perms(k: usize, cur: &mut Vec<usize>, used: &mut [bool], count: &mut usize) {
        if cur.len() == k {
            if cur.iter().enumerate().all(|(i, &s)| cur[s] == i) {
                *count += 1;
            }
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                perms(k, cur, used, count);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut count = 0;
    perms(n, &mut Vec::new(), &mut vec![false; n], &mut count);
    count
}

/// n! / Π hook lengths.
fn hook_count(shape: &[usize]) -> u128 {
    let n: usize = shape.iter().sum();
    let mut hooks = 1u128;
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (1..=n as u128).product::<u128>() / hooks
}

/// Rows r (1-based) where a box can be added to `shape`.
fn addable_rows(shape: &[usize]) -> Vec<usize> {
    (0..=shape.len()).filter(|&r| r == 0 || shape[r - 1] > shape.get(r).copied().unwrap_or(0)).map(|r| r + 1).collect()
}

fn positive_multiple(want: &Polynomial, got: &Polynomial) -> bool {
    eigenvalue(want, got).is_some_and(|c| c.signum() > 0)
}

fn ac1() -> Outcome {
    let b = bann(&GroupSpec::symmetric(3)).map_err(err)?;
    let want = ["1", "x1 - x3", "x2 - x3", "(x1-x2)(x1-x3)(x2-x3)"].map(|s| p(s, 3));
    let w = GradedBasis::from_polys(3, &want).map_err(err)?;
    let dims: Vec<usize> = b.degrees().map(|d| b.dim_at(d)).collect();
    verdict(b.same_span(&w), format!("graded dims {dims:?}"))
}

fn ac2() -> Outcome {
    let basis = canonical_basis(3).map_err(err)?;
    // (vector, label in the conjugate convention used for the printed listing)
    let want = [
        ("1", vec![1, 1, 1]),
        ("x1 + x2 - 2x3", vec![2, 1]),
        ("x1 - x2", vec![2, 1]),
        ("(x1-x2)(x1-x3)(x2-x3)", vec![3]),
    ];
    let mut ok = basis.len() == want.len();
    for (s, label) in &want {
        let w = p(s, 3);
        ok &= basis.iter().any(|v| positive_multiple(&w, &v.poly) && v.conjugate_label().parts() == label.as_slice());
    }
    verdict(ok, format!("{} vectors, all positive multiples with matching labels", basis.len()))
}

fn ac3() -> Outcome {
    let basis = canonical_basis(4).map_err(err)?;
    let target = Tableau::from_filling(&[vec![1, 3], vec![2, 4]]).map_err(err)?;
    let want = p("2x4x3 - x4x2 - x4x1 - x3x2 - x3x1 + 2x2x1", 4);
    // The printed tableau and spectra use the conjugate convention (box i in
    // column α(i) + 1); the native record stores the transpose.
    let v = basis
        .iter()
        .find(|v| v.conjugate_tableau() == target)
        .ok_or("no vector with conjugate tableau [[1,3],[2,4]]")?;
    let ok = eigenvalue(&want, &v.poly).is_some_and(|c| !c.is_zero())
        && v.conjugate_alpha() == [0, 1, 0, 1]
        && v.gamma == [2, 2, 2, 2]
        && v.conjugate_ell() == [0, -1, 1, 0];
    verdict(
        ok,
        format!(
            "conjugate-convention fields: alpha={:?} gamma={:?} ell={:?}; native tableau {} with contents {:?}",
            v.conjugate_alpha(),
            v.gamma,
            v.conjugate_ell(),
            v.tableau,
            v.ell
        ),
    )
}

fn ac4(cache: &mut BTreeMap<usize, GradedBasis>) -> Outcome {
    let mut dims = Vec::new();
    let mut want = Vec::new();
    for n in 1..=5 {
        let b = bann(&GroupSpec::symmetric(n)).map_err(err)?;
        dims.push(b.dim());
        want.push(involutions_brute(n));
        cache.insert(n, b);
    }
    verdict(dims == want && want == [1, 2, 4, 10, 26], format!("dims {dims:?}, involutions {want:?}"))
}

fn ac5() -> Outcome {
    let mut level = vec![LowestWeightVector::root()];
    let audit = BranchOptions { audit: true, ..BranchOptions::default() };
    let mut ok = true;
    for n in 1..=5 {
        let mut next = Vec::new();
        for v in &level {
            let hits: Vec<usize> = branch_candidates(v, &audit)
                .map_err(err)?
                .into_iter()
                .filter(|c| !c.kernel.is_empty())
                .map(|c| c.a + 1)
                .collect();
            ok &= hits == addable_rows(v.shape().parts());
            next.extend(branch_step(v, &audit).map_err(err)?);
        }
        let mut paths: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
        for v in &next {
            *paths.entry(v.shape().parts().to_vec()).or_default() += 1;
        }
        ok &= paths.iter().all(|(shape, &k)| k == hook_count(shape));
        ok &= paths.values().sum::<u128>() == involutions_brute(n) as u128;
        level = next;
    }
    verdict(ok, format!("{} paths of length 5", level.len()))
}

fn ac6() -> Outcome {
    let mut lines = 0;
    for n in 1..=4 {
        let direct = bann(&GroupSpec::symmetric(n)).map_err(err)?;
        let mut jm: Vec<(Polynomial, Vec<i64>)> = Vec::new();
        for piece in isotypic_pieces(&direct).values() {
            jm.extend(jm_joint_eigenbasis(piece).map_err(err)?);
        }
        let mut branch: Vec<(Polynomial, Vec<i64>)> =
            canonical_basis(n).map_err(err)?.into_iter().map(|v| (v.poly.normalized(), v.ell)).collect();
        jm.sort_by(|a, b| a.1.cmp(&b.1));
        branch.sort_by(|a, b| a.1.cmp(&b.1));
        if jm != branch {
            return verdict(false, format!("S{n}: Jucys-Murphy lines differ from branching lines"));
        }
        lines += jm.len();
    }
    verdict(true, format!("{lines} lines identical for n <= 4"))
}

fn ac7() -> Outcome {
    let mut total = 0;
    for n in 1..=6 {
        for sp in set_partitions(n) {
            total += 1;
            if !leading_partition_check(&sp).1 {
                return verdict(false, format!("fails for {:?}", sp.blocks()));
            }
        }
    }
    verdict(true, format!("{total} set partitions"))
}

fn random_exp(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> MultiIndex {
    let mut e = vec![0u32; n];
    let deg = rng.gen_range(0..=max_deg);
    for _ in 0..deg {
        e[rng.gen_range(0..n)] += 1;
    }
    MultiIndex::from(e)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> Polynomial {
    let terms = (0..rng.gen_range(1..=5)).map(|_| (random_exp(rng, n, 6), random_rational(rng)));
    Polynomial::from_terms(n, terms.collect::<Vec<_>>()).expect("consistent arity")
}

/// ⟨f, g⟩ = Σ α! f_α g_α, computed here from the definition.
fn pairing(f: &Polynomial, g: &Polynomial) -> Rational {
    let mut s = Rational::zero();
    for (e, c) in f.terms() {
        let fact: i64 = e.iter().map(|k| (1..=k as i64).product::<i64>()).product();
        s += c.clone() * g.coeff(e) * Rational::from_int(fact);
    }
    s
}

fn ac8() -> Outcome {
    let seed = seed();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 3;
    for trial in 0..200 {
        let terms: Vec<_> = (0..rng.gen_range(1..=4))
            .map(|_| (random_exp(&mut rng, n, 3), random_exp(&mut rng, n, 3), random_rational(&mut rng)))
            .collect();
        let op = DiffOp::from_terms(n, terms).map_err(err)?;
        let f = random_poly(&mut rng, n);
        let g = random_poly(&mut rng, n);
        let lhs = pairing(&op.apply(&f).map_err(err)?, &g);
        let rhs = pairing(&f, &op.transpose().apply(&g).map_err(err)?);
        if lhs != rhs {
            return verdict(false, format!("trial {trial}: {lhs} != {rhs}"));
        }
    }
    verdict(true, format!("200 triples, seed {seed:#x}"))
}

fn ac9(cache: &BTreeMap<usize, GradedBasis>) -> Outcome {
    let groups = [(1u32, 2usize), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (3, 2)];
    let mut report = Vec::new();
    for (m, n) in groups {
        let g = GroupSpec::SymmetricWreath { m, n };
        let b = match (m, cache.get(&n)) {
            (1, Some(b)) => b.clone(),
            _ => bann(&g).map_err(err)?,
        };
        let top = b.polys().map(Polynomial::max_var_degree).max().unwrap_or(0);
        let bound = m * n as u32 - 1;
        if top > bound {
            return verdict(false, format!("{g}: degree {top} exceeds {bound}"));
        }
        report.push(format!("{g}:{top}<={bound}"));
    }
    verdict(true, report.join(" "))
}

/// The labelled lines listed for the dihedral group, written out directly.
fn dihedral_lines(e: u32) -> Vec<Polynomial> {
    let mono = |a: u32, b: u32| Polynomial::monomial(MultiIndex::from(vec![a, b]), Rational::one());
    let mut out = vec![Polynomial::one(2), &mono(e, 0) - &mono(0, e)];
    for i in 1..e {
        if 2 * i < e {
            out.push(mono(i, 0));
            out.push(mono(0, i));
        }
    }
    if e.is_multiple_of(2) {
        out.push(&mono(e / 2, 0) + &mono(0, e / 2));
        out.push(&mono(e / 2, 0) - &mono(0, e / 2));
    }
    out
}

fn ac10() -> Outcome {
    let mut odd = Vec::new();
    for e in 2..=8u32 {
        let d = dihedral_bann(e).map_err(err)?;
        let lines = dihedral_lines(e);
        let want = GradedBasis::from_polys(2, &lines).map_err(err)?;
        let labelled_ok = d.basis.same_span(&want) && lines.iter().all(|l| d.basis.contains(l));
        if !labelled_ok {
            return verdict(false, format!("D{e}: basis differs from the labelled lines"));
        }
        if e % 2 == 0 {
            let (a, b) = dihedral_s_eigencheck(e).map_err(err)?;
            let f = Rational::from_int((1..=e as i64 / 2).product());
            if a != f || b != -f.clone() {
                return verdict(false, format!("D{e}: s eigenvalues {a}, {b}, expected +-{f}"));
            }
            if d.basis.dim() != e as usize + 2 {
                return verdict(false, format!("D{e}: dim {}", d.basis.dim()));
            }
        } else {
            if d.basis.dim() != e as usize + 1 {
                return verdict(false, format!("D{e}: dim {}", d.basis.dim()));
            }
            odd.push(format!("D{e}={}", d.basis.dim()));
        }
    }
    Ok(Verdict::KnownDeviation(format!(
        "labelled lines exact and s-eigencheck +-(e/2)! for e = 2..8; dim is e+2 for even e but e+1 for odd e ({}), \
         since the pair x1^(e/2) +- x2^(e/2) only exists for even e",
        odd.join(", ")
    )))
}

fn ac11() -> Outcome {
    let mono = |a: u32, b: u32| Polynomial::monomial(MultiIndex::from(vec![a, b]), Rational::one());
    let mut count = 0;
    for e in 2..=8u32 {
        for i in 0..e {
            let want = if 2 * i < e {
                vec![mono(i, 0)]
            } else if 2 * i == e {
                vec![mono(i, 0), mono(0, i)]
            } else {
                vec![mono(0, e - i)]
            };
            let got = cyclic_ann(e, i).map_err(err)?;
            let same = GradedBasis::from_polys(2, &got)
                .and_then(|g| Ok(g.same_span(&GradedBasis::from_polys(2, &want)?)))
                .map_err(err)?;
            let label = if i == 0 {
                "M_0".to_string()
            } else if 2 * i < e {
                format!("M_{i}^1")
            } else if 2 * i == e {
                format!("M_{i}^I + M_{i}^II")
            } else {
                format!("M_{}^2", e - i)
            };
            let m = mls_restrict(e, i, 2 * e as usize, None).map_err(err)?;
            if !same || m.label() != label || !m.ann_matches {
                return verdict(false, format!("e={e}, i={i}: label {} (expected {label}), ann {}", m.label(), m.ann_matches));
            }
            count += 1;
        }
    }
    verdict(true, format!("{count} pairs (e, i), e <= 8"))
}

fn ac12() -> Outcome {
    let printed = p("1/6 x1^4 - x1^2 x2 + 1/2 x2^2 + 4/3 x1 x3", 3);
    let f4 = newton_f(3);
    let at_one = f4.eval(&[Rational::one(), Rational::one(), Rational::one()]).map_err(err)?;
    let mut ok = f4 == printed && at_one == Rational::one();
    let mut prev: BTreeMap<Tableau, LowestWeightVector> =
        [(Tableau::empty(), LowestWeightVector::root())].into_iter().collect();
    let mut checked = 0;
    for n in 1..=4 {
        let level = canonical_basis(n).map_err(err)?;
        for v in &level {
            let parent = &prev[&v.tableau.truncate(n - 1)];
            ok &= gamma_recursion_holds(v, parent);
            checked += 1;
        }
        prev = level.into_iter().map(|v| (v.tableau.clone(), v)).collect();
    }
    verdict(ok, format!("F4 = {f4}, F4(1,1,1) = {at_one}, recursion on {checked} path prefixes"))
}

fn main() -> ExitCode {
    let mut cache = BTreeMap::new();
    let mut unexpected = 0;
    let mut known = 0;
    let mut run = |name: &str, what: &str, budget: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let over = budget.is_some_and(|b| took > b);
        let timing = match budget {
            Some(b) => format!("{:.2} s, budget {} s", took.as_secs_f64(), b.as_secs()),
            None => format!("{:.2} s", took.as_secs_f64()),
        };
        let (tag, detail) = match outcome {
            Ok(Verdict::Pass(d)) if !over => ("PASS", d),
            Ok(Verdict::Pass(d)) => {
                unexpected += 1;
                ("FAIL", format!("over time budget; {d}"))
            }
            Ok(Verdict::Fail(d)) => {
                unexpected += 1;
                ("FAIL", d)
            }
            Ok(Verdict::KnownDeviation(d)) => {
                known += 1;
                ("FAIL", format!("known deviation: {d}"))
            }
            Err(e) => {
                unexpected += 1;
                ("FAIL", format!("error: {e}"))
            }
        };
        println!("[{tag}] {name} {what}: {detail} [{timing}]");
    };
    let s = |x| Some(Duration::from_secs(x));
    run("AC1", "B^ann(S3) span", s(1), &mut ac1);
    run("AC2", "canonical basis of S3", s(1), &mut ac2);
    run("AC3", "S4 vector of tableau [[1,3],[2,4]]", s(5), &mut ac3);
    run("AC4", "dim B^ann(S_n) = involutions, n <= 5", s(120), &mut || ac4(&mut cache));
    run("AC5", "branching graph = Young graph, n <= 5", None, &mut ac5);
    run("AC6", "Jucys-Murphy oracle = branching basis, n <= 4", None, &mut ac6);
    run("AC7", "leading partitions of Specht polynomials, n <= 6", None, &mut ac7);
    run("AC8", "adjointness on seeded random triples", None, &mut ac8);
    run("AC9", "per-variable degree bound nm-1", None, &mut || ac9(&cache));
    run("AC10", "dihedral B^ann of dimension e+2, e = 2..8", None, &mut ac10);
    run("AC11", "cyclic annihilators and restriction labels, e <= 8", s(30), &mut ac11);
    run("AC12", "Newton polynomial F4 and gamma recursion", None, &mut ac12);
    println!("acceptance: {} unexpected failure(s), {} known deviation(s)", unexpected, known);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
