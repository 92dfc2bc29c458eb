//! Command-line front end. Every subcommand prints deterministic text or
//! JSON on stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 usage or argument error, 2 verification or
//! consistency failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::annihilator::{bann_with, BannOptions, GroupSpec};
use crate::canonical::{
    branch_candidates, branch_step, canonical_basis_with, closed_form_degree, restrict_leading, spectra, BranchOptions,
    LowestWeightVector,
};
use crate::combinat::{SetPartition, Tableau};
use crate::cyclic_dihedral::{dihedral_bann, mls_restrict};
use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial};
use crate::specht::{higher_specht_generator, specht_json, specht_poly, AlphaPartition};
use crate::verify::run_suite;

/// Largest n accepted by the branching commands.
const MAX_BRANCH_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "invweyl", version, about = "Lowest-weight spaces under invariant differential operators")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exclusive per-variable degree bound (bann) or total degree bound (mls).
    #[arg(long, global = true)]
    degree_bound: Option<usize>,
    /// Extra degrees a module closure may pass through.
    #[arg(long, global = true)]
    slack: Option<usize>,
    /// Solve for B^ann inside the harmonic space.
    #[arg(long, global = true)]
    harmonic_filter: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis of the lowest-weight space B^ann of a group: S<n>, G(<m>,1,<n>), C<e>, D<e>.
    Bann {
        #[arg(long)]
        group: GroupSpec,
    },
    /// Canonical basis of B^ann(S_n), one vector per standard tableau.
    CanonicalBasis {
        #[arg(long)]
        n: usize,
        /// Search every exponent, not only the addable ones.
        #[arg(long)]
        audit: bool,
    },
    /// The canonical vector of a tableau and its branching to the next level.
    Branch {
        /// Row of each box ("1,1,2") or a filling ("[[1,2],[3]]").
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        audit: bool,
    },
    /// Specht polynomial of a set partition, e.g. --blocks "{1,2},{3}".
    Specht {
        #[arg(long)]
        blocks: String,
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// Exponent vector for the higher Specht generator, e.g. "0,0,1".
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Spectra (alpha, gamma, Jucys-Murphy eigenvalues) of a polynomial, or
    /// of every canonical vector of S_n when --poly is absent.
    Spectra {
        #[arg(long)]
        n: Option<usize>,
        /// Expression such as "x2 - x1" or the JSON term list.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Differential restriction of the C_e-isotypic piece N_i to the dihedral group.
    Mls {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        i: u32,
    },
    /// Labelled lowest-weight lines of the dihedral group G(e,e,2).
    Dihedral {
        #[arg(long)]
        e: u32,
    },
    /// Run self-verification suites: linalg, poly, weyl, combinat, bann,
    /// specht, canonical, dihedral or all.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

/// Outcome of a subcommand before rendering.
struct Output {
    text: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, failed: false }
    }
}

/// Parses `INVWEYL_THREADS` and sizes the global thread pool.
fn configure_threads(err: &mut impl Write) {
    let Ok(v) = std::env::var("INVWEYL_THREADS") else { return };
    match v.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => {
            let _ = writeln!(err, "warning: ignoring INVWEYL_THREADS={v:?}");
        }
    }
}

/// Runs the CLI on the process arguments and streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI on explicit arguments (including the program name).
pub fn run_with<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    configure_threads(err);
    match execute(&cli) {
        Ok(o) => {
            let written = match cli.format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("JSON values serialize"))
                }
                Format::Text => write!(out, "{}", o.text),
            };
            if written.is_err() {
                return 1;
            }
            if o.failed {
                let _ = writeln!(err, "verification failed");
                2
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MultiplicityViolation { .. }
        | Error::BranchMissing { .. }
        | Error::NotEigenvector(_)
        | Error::NonSimpleSpectrum(_)
        | Error::Consistency(_) => 2,
        _ => 1,
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Bann { group } => cmd_bann(cli, group),
        Command::CanonicalBasis { n, audit } => cmd_canonical(cli, *n, *audit),
        Command::Branch { tableau, audit } => cmd_branch(cli, tableau, *audit),
        Command::Specht { blocks, d, alpha } => cmd_specht(blocks, *d, alpha.as_deref()),
        Command::Spectra { n, poly } => cmd_spectra(cli, *n, poly.as_deref()),
        Command::Mls { e, i } => cmd_mls(cli, *e, *i),
        Command::Dihedral { e } => {
            let d = dihedral_bann(*e)?;
            Ok(Output::ok(d.to_text(), d.to_json()))
        }
        Command::Verify { suite, n_max } => cmd_verify(suite, *n_max),
    }
}

fn branch_options(cli: &Cli, audit: bool) -> BranchOptions {
    BranchOptions { slack: cli.slack, audit, check_span: false }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_BRANCH_N {
        return Err(Error::IndexOutOfRange { index: n, min: 1, max: MAX_BRANCH_N });
    }
    Ok(())
}

fn cmd_bann(cli: &Cli, group: &GroupSpec) -> Result<Output> {
    let window = cli
        .degree_bound
        .map(|w| u32::try_from(w).map_err(|_| Error::InvalidArgument(format!("degree bound {w} too large"))))
        .transpose()?;
    let opts = BannOptions { window, harmonic_filter: cli.harmonic_filter, ..BannOptions::default() };
    let b = bann_with(group, &opts)?;
    let text = format!("B^ann({group}): dim {}\n{}", b.dim(), b.to_text());
    let json = json!({ "group": group.to_string(), "nvars": b.nvars(), "dim": b.dim(), "basis": b.to_json() });
    Ok(Output::ok(text, json))
}

fn cmd_canonical(cli: &Cli, n: usize, audit: bool) -> Result<Output> {
    check_n(n)?;
    let opts = BranchOptions { check_span: true, ..branch_options(cli, audit) };
    let basis = canonical_basis_with(n, &opts)?;
    let mut text = format!("canonical basis of B^ann(S{n}): {} vectors\n", basis.len());
    for v in &basis {
        text += &v.to_text();
        text.push('\n');
    }
    let json = json!({
        "n": n,
        "count": basis.len(),
        "vectors": basis.iter().map(LowestWeightVector::to_json).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn parse_tableau(s: &str) -> Result<Tableau> {
    let t = s.trim();
    if t.starts_with('[') {
        let filling: Vec<Vec<usize>> =
            serde_json::from_str(t).map_err(|e| Error::Parse(format!("tableau filling: {e}")))?;
        Tableau::from_filling(&filling)
    } else {
        let rows: Vec<usize> = t
            .split(',')
            .map(|r| r.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad row index {r:?}"))))
            .collect::<Result<_>>()?;
        Tableau::from_rows(&rows)
    }
}

/// Follows the branching path of `t` from the root.
fn vector_of(t: &Tableau, opts: &BranchOptions) -> Result<LowestWeightVector> {
    let mut v = LowestWeightVector::root();
    for k in 1..=t.n() {
        let want = t.truncate(k);
        v = branch_step(&v, opts)?
            .into_iter()
            .find(|c| c.tableau == want)
            .ok_or_else(|| Error::Consistency(format!("no branch to {want}")))?;
    }
    Ok(v)
}

fn cmd_branch(cli: &Cli, tableau: &str, audit: bool) -> Result<Output> {
    let t = parse_tableau(tableau)?;
    check_n(t.n() + 1)?;
    let opts = branch_options(cli, audit);
    let v = vector_of(&t, &opts)?;
    let cands = branch_candidates(&v, &opts)?;
    let children = branch_step(&v, &opts)?;

    let mut text = format!("{}\n", v.to_text());
    let mut restrictions = Vec::new();
    for k in (1..t.n()).rev() {
        let r = restrict_leading(&v, k)?;
        text += &format!("  leading coefficient in x1..x{k}: {r}\n");
        restrictions.push(json!({ "k": k, "poly": r.to_json() }));
    }
    text += &format!("branching to S{}:\n", t.n() + 1);
    let mut cand_json = Vec::new();
    for c in &cands {
        let predicted = closed_form_degree(&v.conjugate_label(), c.a);
        text += &format!(
            "  a={} addable={} kernel dim={} degree={} closed-form degree={}\n",
            c.a,
            c.addable,
            c.kernel.len(),
            v.degree() + c.a,
            predicted
        );
        cand_json.push(json!({
            "a": c.a,
            "addable": c.addable,
            "kernel_dim": c.kernel.len(),
            "degree": v.degree() + c.a,
            "closed_form_degree": predicted,
        }));
    }
    for c in &children {
        text += &c.to_text();
        text.push('\n');
    }
    let json = json!({
        "vector": v.to_json(),
        "restrictions": restrictions,
        "candidates": cand_json,
        "children": children.iter().map(LowestWeightVector::to_json).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn parse_ints(s: &str) -> Result<Vec<u32>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad integer {x:?}"))))
        .collect()
}

fn cmd_specht(blocks: &str, d: u32, alpha: Option<&str>) -> Result<Output> {
    let p = SetPartition::parse(blocks)?;
    let (alpha, poly) = match alpha {
        Some(a) => {
            let alpha = MultiIndex::from(parse_ints(a)?);
            let ap = AlphaPartition::new(alpha.clone(), p.clone())?;
            (Some(alpha), higher_specht_generator(&ap, d)?)
        }
        None => (None, specht_poly(&p, d)?),
    };
    let mut text = format!("partition {}", p.blocks().iter().map(|b| format!("{b:?}")).collect::<Vec<_>>().join(" "));
    if let Some(a) = &alpha {
        text += &format!(" alpha={a}");
    }
    text += &format!(" d={d} degree={}\n  {poly}\n", poly.degree().unwrap_or(0));
    Ok(Output::ok(text, specht_json(&p, alpha.as_ref(), d, &poly)))
}

fn parse_poly(s: &str, n: Option<usize>) -> Result<Polynomial> {
    let t = s.trim();
    if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
        Polynomial::from_json(&v, n)
    } else {
        Polynomial::parse(t, n)
    }
}

fn spectra_json(poly: &Polynomial, n: usize) -> Result<(String, Value)> {
    let s = spectra(poly, n)?;
    let ell: Vec<Value> = s.ell.iter().map(|c| c.map_or(Value::Null, Value::from)).collect();
    let show = |c: &Option<i64>| c.map_or("-".to_string(), |c| c.to_string());
    let text = format!(
        "{poly}\n  alpha={} gamma={:?} ell=[{}]\n",
        s.alpha,
        s.gamma,
        s.ell.iter().map(show).collect::<Vec<_>>().join(", ")
    );
    let json = json!({
        "poly": poly.to_json(),
        "alpha": s.alpha.iter().collect::<Vec<_>>(),
        "gamma": s.gamma,
        "ell": ell,
    });
    Ok((text, json))
}

fn cmd_spectra(cli: &Cli, n: Option<usize>, poly: Option<&str>) -> Result<Output> {
    if let Some(src) = poly {
        let p = parse_poly(src, n)?;
        let (text, json) = spectra_json(&p, p.nvars())?;
        return Ok(Output::ok(text, json));
    }
    let n = n.ok_or_else(|| Error::InvalidArgument("spectra needs --poly or --n".into()))?;
    check_n(n)?;
    let basis = canonical_basis_with(n, &branch_options(cli, false))?;
    let mut text = String::new();
    let mut items = Vec::new();
    let mut failed = false;
    for v in &basis {
        let (t, mut j) = spectra_json(&v.poly, n)?;
        let s = spectra(&v.poly, n)?;
        let agrees = s.gamma == v.gamma && s.ell.iter().zip(&v.ell).all(|(a, b)| *a == Some(*b));
        failed |= !agrees;
        text += &format!("T={} contents={:?} {}\n{t}", v.tableau, v.ell, if agrees { "ok" } else { "MISMATCH" });
        j["tableau"] = json!(v.tableau.filling());
        j["contents"] = json!(v.ell);
        j["agrees"] = json!(agrees);
        items.push(j);
    }
    Ok(Output { text, json: json!({ "n": n, "vectors": items }), failed })
}

fn cmd_mls(cli: &Cli, e: u32, i: u32) -> Result<Output> {
    let up_to = cli.degree_bound.unwrap_or(2 * e as usize);
    let m = mls_restrict(e, i, up_to, cli.slack)?;
    Ok(Output { text: m.to_text(), json: m.to_json(), failed: !m.ann_matches })
}

fn cmd_verify(suite: &str, n_max: usize) -> Result<Output> {
    if n_max == 0 || n_max > 6 {
        return Err(Error::IndexOutOfRange { index: n_max, min: 1, max: 6 });
    }
    let checks = run_suite(suite, n_max)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    text += &format!("{} checks, {} failed\n", checks.len(), failed);
    let json = json!({
        "suite": suite,
        "n_max": n_max,
        "passed": failed == 0,
        "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    });
    Ok(Output { text, json, failed: failed > 0 })
}
