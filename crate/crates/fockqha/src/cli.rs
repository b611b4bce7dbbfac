//! Command-line surface: subcommands wrapping each module, JSON rendering
//! with lossless decimal-string integers, and a bundled verification
//! suite.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.

use crate::cartan::{CartanDatum, RootElement};
use crate::crystal::count_simples;
use crate::dimension::{
    dim_block, dim_pair_report, factorial_identity, spherical_sequence, DimReport,
};
use crate::fock::{apply_e, apply_f, apply_e_word, weight, FockVector};
use crate::qharep::{
    build_l, build_s, check_relations, restrict_last, Mat, MatrixRep, QTable,
};
use crate::reptype::{brauer_data, classify, defect, defect_oracle, reconcile_delta_dim, TypeKind};
use crate::shifted::{
    content, enumerate_diagrams, enumerate_standard, hook_count, hook_length, kostka_count,
    residue_sequence, ResidueSequence, ShiftedDiagram,
};
use crate::{Error, Result};
use clap::{Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Parser)]
#[command(name = "fockqha", version, about = "Exact combinatorics of twisted level-one blocks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List standard tableaux, hooks, and counts for a shifted shape.
    Tableaux {
        /// Strictly decreasing parts, e.g. 4,1
        #[arg(long)]
        shape: String,
        /// Rank parameter; enables residue sequences.
        #[arg(long)]
        ell: Option<usize>,
        /// Print the residue sequence of each tableau (needs --ell).
        #[arg(long)]
        residues: bool,
    },
    /// Block and truncation dimensions.
    Dim {
        #[arg(long)]
        ell: usize,
        /// Root coefficients k0,k1,...,kl
        #[arg(long)]
        beta: Option<String>,
        /// Total number of boxes (whole degree).
        #[arg(long)]
        n: Option<u32>,
        /// Residue sequence for a truncation e(nu) R e(nu).
        #[arg(long)]
        nu: Option<String>,
        /// Second residue sequence (defaults to --nu).
        #[arg(long)]
        nu2: Option<String>,
    },
    /// Representation-type verdict for a block.
    Type {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        beta: String,
    },
    /// Matrix model of a homogeneous module.
    Rep {
        #[arg(long)]
        ell: usize,
        /// L0, L1, ..., S0, S1, ... (underscores accepted)
        #[arg(long)]
        module: String,
        /// Emit "matrices" for the full generator matrices.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Run the verification suite.
    Verify {
        /// Restrict to one rank (default: 1, 2, 3).
        #[arg(long)]
        ell: Option<usize>,
        /// Size cutoff for the sweeps.
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
}

fn parse_beta(s: &str, ell: usize) -> Result<RootElement> {
    let coeffs: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| Error::BadRoot(s.to_string(), ell)))
        .collect::<Result<_>>()?;
    if coeffs.len() != ell + 1 || coeffs.iter().any(|&c| c < 0) {
        return Err(Error::BadRoot(s.to_string(), ell));
    }
    Ok(RootElement::new(coeffs))
}

fn biguint_str(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

fn root_value(beta: &RootElement) -> Value {
    Value::Array(beta.coeffs().iter().map(|&c| json!(c)).collect())
}

/// Loads the Q table from the `FOCKQHA_QTABLE` file if the variable is
/// set, otherwise the default table.
pub fn qtable_from_env(datum: &CartanDatum) -> Result<QTable> {
    match std::env::var("FOCKQHA_QTABLE") {
        Ok(path) if !path.is_empty() => QTable::load(datum, &path),
        _ => Ok(QTable::standard(datum)),
    }
}

fn dim_report_value(r: &DimReport) -> Value {
    json!({
        "beta": root_value(&r.beta),
        "dim": biguint_str(&r.dim),
        "terms": r.terms.iter().map(|t| json!({
            "shape": t.shape.parts(),
            "exp": t.exp,
            "count": biguint_str(&t.count),
            "value": biguint_str(&t.value()),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_tableaux(shape: &str, ell: Option<usize>, residues: bool, as_json: bool) -> Result<()> {
    let lam = ShiftedDiagram::parse(shape)?;
    if residues && ell.is_none() {
        return Err(Error::BadPartList("--residues needs --ell".into()));
    }
    let datum = ell.map(CartanDatum::new);
    let tableaux = enumerate_standard(&lam);
    let count = hook_count(&lam);
    assert_eq!(BigUint::from(tableaux.len()), count, "hook count disagrees with enumeration");
    let hooks: Vec<Vec<u32>> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &p)| {
            let i = r as u32 + 1;
            (i..i + p).map(|j| hook_length(&lam, i, j)).collect()
        })
        .collect();
    if as_json {
        let mut obj = json!({
            "shape": lam.parts(),
            "count": biguint_str(&count),
            "hooks": hooks,
        });
        if let (Some(d), true) = (&datum, residues) {
            obj["residue_sequences"] = Value::Array(
                tableaux.iter().map(|t| json!(residue_sequence(d, t).to_string())).collect(),
            );
        }
        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
    } else {
        println!("shape {lam}: {count} standard tableaux");
        for (r, row) in hooks.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|h| h.to_string()).collect();
            println!("hooks row {}: {}", r + 1, cells.join(" "));
        }
        if let (Some(d), true) = (&datum, residues) {
            for t in &tableaux {
                println!("res: {}", residue_sequence(d, t));
            }
        }
    }
    Ok(())
}

fn cmd_dim(
    ell: usize,
    beta: Option<&str>,
    n: Option<u32>,
    nu: Option<&str>,
    nu2: Option<&str>,
    as_json: bool,
) -> Result<()> {
    let datum = CartanDatum::new(ell);
    let chosen = [beta.is_some(), n.is_some(), nu.is_some()].iter().filter(|&&b| b).count();
    if chosen != 1 {
        return Err(Error::BadPartList("give exactly one of --beta, --n, --nu".into()));
    }
    let report = if let Some(b) = beta {
        dim_block(&datum, &parse_beta(b, ell)?)
    } else if let Some(n) = n {
        let mut dim = BigUint::zero();
        let mut blocks = 0usize;
        let mut seen = std::collections::BTreeSet::new();
        for lam in enumerate_diagrams(n) {
            if seen.insert(content(&datum, &lam)) {
                blocks += 1;
            }
        }
        for b in &seen {
            dim += dim_block(&datum, b).dim;
        }
        if as_json {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "n": n, "blocks": blocks, "dim": biguint_str(&dim)
                }))
                .unwrap()
            );
        } else {
            println!("dim R({n}) = {dim} over {blocks} blocks");
        }
        return Ok(());
    } else {
        let nu = ResidueSequence::parse(nu.unwrap(), ell)?;
        let nu2 = match nu2 {
            Some(s) => ResidueSequence::parse(s, ell)?,
            None => nu.clone(),
        };
        if nu.len() != nu2.len() {
            return Err(Error::BadResidueList("length mismatch between --nu and --nu2".into(), ell));
        }
        dim_pair_report(&datum, &nu2, &nu)
    };
    if as_json {
        println!("{}", serde_json::to_string_pretty(&dim_report_value(&report)).unwrap());
    } else {
        println!("dim = {}", report.dim);
        for t in &report.terms {
            println!("  {} : 2^{} * {}", t.shape, t.exp, t.count);
        }
    }
    Ok(())
}

fn cmd_type(ell: usize, beta: &str, as_json: bool) -> Result<()> {
    let datum = CartanDatum::new(ell);
    let beta = parse_beta(beta, ell)?;
    let verdict = classify(&datum, &beta);
    let mut obj = serde_json::to_value(&verdict).unwrap();
    obj["beta"] = root_value(&beta);
    if verdict.defect == Some(1) {
        let b = brauer_data(&datum);
        obj["brauer"] = json!({
            "ell": b.ell,
            "simple_dims": b.simple_dims.iter().map(biguint_str).collect::<Vec<_>>(),
            "cartan": b.cartan,
            "exceptional_multiplicity": 2,
        });
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
    } else {
        match verdict.defect {
            Some(k) => println!("{:?} (defect {k})", verdict.kind),
            None => println!("{:?}", verdict.kind),
        }
        if let Some(note) = &verdict.note {
            println!("note: {note}");
        }
        if verdict.defect == Some(1) {
            let b = brauer_data(&datum);
            println!("brauer line: dims {:?}, cartan {:?}", b.simple_dims, b.cartan);
        }
    }
    Ok(())
}

fn mat_value(m: &Mat) -> Value {
    Value::Array(
        (0..m.dim())
            .map(|i| {
                Value::Array(
                    (0..m.dim()).map(|j| Value::String(m.get(i, j).to_string())).collect(),
                )
            })
            .collect(),
    )
}

fn cmd_rep(ell: usize, module: &str, emit: Option<&str>, as_json: bool) -> Result<()> {
    let datum = CartanDatum::new(ell);
    let name = module.replace('_', "");
    let (kind, idx) = name.split_at(1);
    let i: usize = idx
        .parse()
        .map_err(|_| Error::BadPartList(format!("bad module name {module:?}")))?;
    if i >= ell {
        return Err(Error::IndexOutOfRange(i, ell - 1));
    }
    let rep: MatrixRep = match kind {
        "L" | "l" => build_l(&datum, i),
        "S" | "s" => build_s(&datum, i),
        _ => return Err(Error::BadPartList(format!("bad module name {module:?}"))),
    };
    let qtable = qtable_from_env(&datum)?;
    let violations = check_relations(&datum, &qtable, &rep);
    if emit == Some("matrices") {
        let mut gens: BTreeMap<String, Value> = BTreeMap::new();
        for nu in rep.support() {
            gens.insert(format!("e({nu})"), mat_value(&rep.idempotent(&nu)));
        }
        for (k, m) in rep.x.iter().enumerate() {
            gens.insert(format!("x_{}", k + 1), mat_value(m));
        }
        for (l, m) in rep.psi.iter().enumerate() {
            gens.insert(format!("psi_{}", l + 1), mat_value(m));
        }
        let obj = json!({
            "module": module,
            "n": rep.n,
            "dim": rep.dim(),
            "basis_nu": rep.basis_nu.iter().map(|nu| nu.to_string()).collect::<Vec<_>>(),
            "relations_ok": violations.is_empty(),
            "generators": gens,
        });
        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
    } else if as_json {
        let obj = json!({
            "module": module,
            "n": rep.n,
            "dim": rep.dim(),
            "relations_ok": violations.is_empty(),
        });
        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
    } else {
        println!("{module}: dim {}, {} strands", rep.dim(), rep.n);
        println!("relations: {}", if violations.is_empty() { "ok" } else { "VIOLATED" });
        for v in &violations {
            println!("  {v}");
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::BadPartList("defining relations violated".into()))
    }
}

/// One pass/fail record of the verification suite.
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(results: &mut Vec<CheckResult>, name: &str, ok: bool, detail: String) {
    results.push(CheckResult { name: name.to_string(), ok, detail });
}

/// Runs the full verification suite at the given limits and returns the
/// results; used by both `verify` and the integration tests.
pub fn run_verification(ells: &[usize], max_n: u32) -> Vec<CheckResult> {
    let mut results = Vec::new();

    for &ell in ells {
        let datum = CartanDatum::new(ell);

        // factorial identity
        let mut ok = true;
        for n in 0..=max_n {
            if !factorial_identity(&datum, n).holds() {
                ok = false;
            }
        }
        check(&mut results, &format!("factorial identity (l={ell}, n<= {max_n})"), ok, String::new());

        // hook formula against enumeration
        let mut ok = true;
        for n in 0..=max_n {
            for lam in enumerate_diagrams(n) {
                if BigUint::from(enumerate_standard(&lam).len()) != hook_count(&lam) {
                    ok = false;
                }
            }
        }
        check(&mut results, &format!("hook formula (l={ell}, n<= {max_n})"), ok, String::new());

        // spherical dimensions 12 / 36
        let h = datum.h();
        let mut ok = true;
        for k in 1..=h {
            let nu = spherical_sequence(&datum, k);
            let d = dim_pair_report(&datum, &nu, &nu).dim;
            let expect = if k < h { 12u32 } else { 36 };
            if d != BigUint::from(expect) {
                ok = false;
            }
        }
        check(&mut results, &format!("spherical dimensions (l={ell})"), ok, String::new());

        // sl2 commutators
        let sl2_n = max_n.min(6);
        let mut ok = true;
        for n in 0..=sl2_n {
            for lam in enumerate_diagrams(n) {
                let v = FockVector::basis(lam.clone());
                for i in 0..=ell as u8 {
                    for j in 0..=ell as u8 {
                        let lhs = apply_e(&datum, i, &apply_f(&datum, j, &v))
                            .sub(&apply_f(&datum, j, &apply_e(&datum, i, &v)));
                        let rhs = if i == j {
                            v.scale(&BigInt::from(
                                datum.pairing_h(i as usize, &weight(&datum, &lam)),
                            ))
                        } else {
                            FockVector::zero()
                        };
                        if lhs != rhs {
                            ok = false;
                        }
                    }
                }
            }
        }
        check(&mut results, &format!("sl2 commutators (l={ell}, n<= {sl2_n})"), ok, String::new());

        // e-word evaluation identity
        let word_n = max_n.min(6);
        let mut ok = true;
        for n in 1..=word_n {
            for lam in enumerate_diagrams(n) {
                let k0 = content(&datum, &lam).coeff(0);
                let exp = (k0 - lam.depth() as i64) as u32;
                let mut seqs: Vec<ResidueSequence> = enumerate_standard(&lam)
                    .iter()
                    .map(|t| residue_sequence(&datum, t))
                    .collect();
                seqs.sort();
                seqs.dedup();
                for nu in seqs {
                    let expected = BigInt::from(kostka_count(&datum, &lam, &nu)) << exp;
                    if apply_e_word(&datum, &nu, &lam) != expected {
                        ok = false;
                    }
                }
            }
        }
        check(&mut results, &format!("lowering-word identity (l={ell}, n<= {word_n})"), ok, String::new());

        // defining relations on the homogeneous modules
        let qtable = QTable::standard(&datum);
        let mut ok = true;
        let mut detail = String::new();
        for i in 0..ell {
            for rep in [build_l(&datum, i), build_s(&datum, i)] {
                let v = check_relations(&datum, &qtable, &rep);
                if !v.is_empty() {
                    ok = false;
                    detail = v[0].to_string();
                }
            }
            let s = build_s(&datum, i);
            for j in 0..=ell as u8 {
                let r = restrict_last(&s, j);
                let expect_dim = if j as usize == i { build_l(&datum, i).dim() } else { 0 };
                if r.dim() != expect_dim {
                    ok = false;
                }
            }
        }
        check(&mut results, &format!("homogeneous module relations (l={ell})"), ok, detail);

        // defect formula against the enumeration oracle
        let mut ok = true;
        let mut betas = std::collections::BTreeSet::new();
        for n in 0..=max_n {
            for lam in enumerate_diagrams(n) {
                betas.insert(content(&datum, &lam));
            }
        }
        for beta in &betas {
            if defect(&datum, beta) != defect_oracle(&datum, beta) {
                ok = false;
            }
        }
        check(&mut results, &format!("defect oracle (l={ell}, |beta|<= {max_n})"), ok, String::new());

        // support agreement between wall counts and dimensions
        let mut ok = true;
        for beta in &betas {
            let simples = count_simples(&datum, beta) > 0;
            let dim = !dim_block(&datum, beta).dim.is_zero();
            if simples != dim {
                ok = false;
            }
        }
        check(&mut results, &format!("support agreement (l={ell}, |beta|<= {max_n})"), ok, String::new());

        // classification anchors
        let delta = datum.null_root();
        let ok = classify(&datum, &delta).kind == TypeKind::FiniteNotSemisimple
            && classify(&datum, &delta.scale(2)).kind == TypeKind::Wild
            && classify(&datum, &RootElement::alpha(ell, 0)).kind == TypeKind::Simple
            && count_simples(&datum, &delta) == ell;
        check(&mut results, &format!("classification anchors (l={ell})"), ok, String::new());

        // Brauer reconciliation
        let (ok, lhs, rhs) = reconcile_delta_dim(&datum);
        check(
            &mut results,
            &format!("Brauer reconciliation (l={ell})"),
            ok,
            format!("{lhs} vs {rhs}"),
        );
    }
    results
}

fn cmd_verify(ell: Option<usize>, max_n: u32, as_json: bool) -> i32 {
    let ells: Vec<usize> = match ell {
        Some(l) => vec![l],
        None => vec![1, 2, 3],
    };
    let results = run_verification(&ells, max_n);
    let mut failures = 0;
    if as_json {
        let arr: Vec<Value> = results
            .iter()
            .map(|r| json!({"name": r.name, "ok": r.ok, "detail": r.detail}))
            .collect();
        for r in &results {
            if !r.ok {
                failures += 1;
            }
        }
        println!("{}", serde_json::to_string_pretty(&Value::Array(arr)).unwrap());
    } else {
        for r in &results {
            if r.ok {
                println!("PASS {}", r.name);
            } else {
                failures += 1;
                if r.detail.is_empty() {
                    println!("FAIL {}", r.name);
                } else {
                    println!("FAIL {} ({})", r.name, r.detail);
                }
            }
        }
        println!(
            "{} checks, {} failed",
            results.len(),
            failures
        );
    }
    if failures == 0 {
        0
    } else {
        1
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let as_json = cli.json;
    let outcome: Result<i32> = match &cli.command {
        Command::Tableaux { shape, ell, residues } => {
            cmd_tableaux(shape, *ell, *residues, as_json).map(|_| 0)
        }
        Command::Dim { ell, beta, n, nu, nu2 } => {
            cmd_dim(*ell, beta.as_deref(), *n, nu.as_deref(), nu2.as_deref(), as_json).map(|_| 0)
        }
        Command::Type { ell, beta } => cmd_type(*ell, beta, as_json).map(|_| 0),
        Command::Rep { ell, module, emit } => {
            cmd_rep(*ell, module, emit.as_deref(), as_json).map(|_| 0)
        }
        Command::Verify { ell, max_n } => Ok(cmd_verify(*ell, *max_n, as_json)),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
