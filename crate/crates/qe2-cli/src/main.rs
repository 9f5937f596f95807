use clap::{Args, Parser, Subcommand};
use qe2::autgrp::{self, AutTag, RhoParams};
use qe2::parse::parse_scalar;
use qe2::zlattice::{self, IntMatrix};
use qe2::{catalog, pbw, repmod, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;

/// Exact normal forms and identity checks for the quantum Euclidean double.
#[derive(Parser)]
#[command(name = "qe2", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal form of an expression.
    Nf {
        #[arg(long)]
        algebra: String,
        expr: String,
    },
    /// `x*y - c*y*x` in normal form.
    Comm {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        factor: String,
        x: String,
        y: String,
    },
    /// Builds a family member and checks it against every defining relation.
    CheckMap(MapArgs),
    /// Runs the identity suite.
    Suite {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Center lattice of a quantum torus from its exponent matrix.
    Center {
        /// JSON file, or `builtin:<id>`.
        #[arg(long)]
        matrix: String,
    },
    /// Relation audit and connectivity probe of a module.
    ModuleAudit {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// Induces a module over the centralizer up to the double.
    Induce {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 1)]
        window: i64,
    },
    /// Overlap (diamond) check of a presentation.
    Diamond {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 50)]
        random: usize,
    },
}

#[derive(Args)]
struct MapArgs {
    /// Oq.tau, Oq.xi, Oq.eta, Uq.sigma, Uq.xi, Uq.eta, Dq.rho, C.tau_a, A.tau_K, A_to_C.Phi, C_to_A.Phi_inv
    #[arg(long)]
    family: String,
    #[arg(long, allow_hyphen_values = true)]
    i: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    power: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// Random `Dq.rho` drawn from `QE2_SEED`.
    #[arg(long)]
    random: bool,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

fn seed() -> Result<u64, Usage> {
    match std::env::var("QE2_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Usage(format!("QE2_SEED must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

fn scalar_or_one(s: &Option<String>) -> Result<Scalar, Usage> {
    Ok(match s {
        Some(t) => parse_scalar(t)?,
        None => Scalar::one(),
    })
}

fn need(x: Option<i64>, name: &str) -> Result<i64, Usage> {
    x.ok_or_else(|| Usage(format!("--{name} is required for this family")))
}

fn map_tag(a: &MapArgs) -> Result<AutTag, Usage> {
    let eta = || -> Result<_, Usage> { Ok((scalar_or_one(&a.alpha)?, scalar_or_one(&a.beta)?, scalar_or_one(&a.gamma)?)) };
    Ok(match a.family.as_str() {
        "Oq.tau" => AutTag::OqTau,
        "Oq.xi" => AutTag::OqXi(need(a.i, "i")?),
        "Oq.eta" => {
            let (x, y, z) = eta()?;
            AutTag::OqEta(x, y, z)
        }
        "Uq.sigma" => AutTag::UqSigma,
        "Uq.xi" => AutTag::UqXi(need(a.i, "i")?),
        "Uq.eta" => {
            let (x, y, z) = eta()?;
            AutTag::UqEta(x, y, z)
        }
        "Dq.rho" if a.random => AutTag::DqRho(autgrp::random_rho(&mut ChaCha8Rng::seed_from_u64(seed()?), 3)),
        "Dq.rho" => AutTag::DqRho(RhoParams {
            lambda: scalar_or_one(&a.lambda)?,
            mu: scalar_or_one(&a.mu)?,
            gamma: scalar_or_one(&a.gamma)?,
            nu: scalar_or_one(&a.nu)?,
            i: a.i.unwrap_or(1),
            j: a.j.unwrap_or(0),
            m: a.m.unwrap_or(0),
            n: a.n.unwrap_or(1),
        }),
        "C.tau_a" => AutTag::CTauA(a.power.unwrap_or(1)),
        "A.tau_K" => AutTag::ATauK(a.power.unwrap_or(1)),
        "A_to_C.Phi" => AutTag::AToCPhi,
        "C_to_A.Phi_inv" => AutTag::CToAPhiInv,
        other => return Err(Usage(format!("unknown family {other}"))),
    })
}

fn check_map(a: &MapArgs) -> Outcome {
    let tag = map_tag(a)?;
    let (f, report) = autgrp::make_checked(&tag)?;
    println!("{}", tag.to_json());
    for g in 0..f.source.ngens() {
        println!("  {} -> {}", f.source.gen_name(g), f.target.render(f.image(g)));
    }
    for fail in &report.failures {
        println!("FAIL {}: {}", fail.relation, fail.residue);
    }
    let mut ok = report.passed();
    if let AutTag::DqRho(p) = &tag {
        let n = autgrp::action_on_normals(p)?;
        println!("  phi -> K^{} a^{} phi, psi -> K^{} a^{} psi", n.phi.0, n.phi.1, n.psi.0, n.psi.1);
        ok &= n.law_holds();
    }
    println!("{} relations checked, {} failed", report.checked, report.failures.len());
    Ok(ok)
}

fn suite(filter: Option<&str>, json: Option<&str>) -> Outcome {
    let r = catalog::run_suite(filter);
    for e in &r.entries {
        let mark = if e.status == "pass" { "PASS" } else { "FAIL" };
        if e.status == "pass" {
            println!("{mark} {} [{}]", e.id, e.anchor);
        } else {
            println!("{mark} {} [{}] residue {}", e.id, e.anchor, e.residue);
        }
    }
    println!("{} entries, {} failed", r.entries.len(), r.failures());
    if let Some(path) = json {
        std::fs::write(path, serde_json::to_string_pretty(&r)?)?;
    }
    Ok(r.passed())
}

fn center(matrix: &str) -> Outcome {
    let m = match matrix.strip_prefix("builtin:") {
        Some(id) => zlattice::builtin(id)?,
        None if zlattice::BUILTIN_NAMES.contains(&matrix) => zlattice::builtin(matrix)?,
        None => IntMatrix::from_json(&std::fs::read_to_string(matrix)?)?,
    };
    println!("{}", zlattice::torus_center(&m)?.summary());
    Ok(true)
}

fn module_audit(tag: &str, window: i64) -> Outcome {
    let m = repmod::module_by_tag(tag)?;
    let r = repmod::relation_audit(&m, window);
    for f in &r.failures {
        println!("FAIL {} at {:?}: {}", f.rule_id, f.index, f.residue);
    }
    println!("{}: {} checks on window {}, {} failed", r.module, r.checked, window, r.failures.len());
    let c = repmod::connectivity_probe(&m, window);
    println!(
        "connectivity: {} nodes, {} edges, strongly connected {} ({})",
        c.nodes, c.edges, c.strongly_connected, c.note
    );
    Ok(r.passed())
}

fn induce(tag: &str, window: i64) -> Outcome {
    let full = if tag.starts_with("ind") { tag.to_string() } else { format!("ind-{tag}") };
    let m = repmod::module_by_tag(&full)?;
    for idx in m.window(window) {
        for g in 0..m.algebra.ngens() {
            let v = m.act_gen(g, &repmod::ModVector::basis(idx.clone()));
            println!("{} . {:?} = {}", m.algebra.gen_name(g), idx, v);
        }
    }
    let r = repmod::relation_audit(&m, window + 1);
    println!("{}: {} checks, {} failed", m.name, r.checked, r.failures.len());
    Ok(r.passed())
}

fn diamond(id: &str, degree: u32, random: usize) -> Outcome {
    let spec = catalog::spec(id)?;
    let r = pbw::diamond_check(&spec, degree, random, seed()?);
    for (t, res) in &r.failures {
        println!("FAIL {t}: {res}");
    }
    println!(
        "{}: {} generator triples, {} random triples, {} failed",
        r.algebra,
        r.generator_triples,
        r.random_triples,
        r.failures.len()
    );
    Ok(r.passed())
}

fn run(cmd: &Cmd) -> Outcome {
    match cmd {
        Cmd::Nf { algebra, expr } => {
            let x = catalog::parse_in(algebra, expr)?;
            println!("{}", catalog::spec(algebra)?.render(&x));
            Ok(true)
        }
        Cmd::Comm { algebra, factor, x, y } => {
            let spec = catalog::spec(algebra)?;
            let (x, y) = (catalog::parse_in(algebra, x)?, catalog::parse_in(algebra, y)?);
            println!("{}", spec.render(&spec.commutator_q(&x, &y, &parse_scalar(factor)?)?));
            Ok(true)
        }
        Cmd::CheckMap(a) => check_map(a),
        Cmd::Suite { filter, json } => suite(filter.as_deref(), json.as_deref()),
        Cmd::Center { matrix } => center(matrix),
        Cmd::ModuleAudit { module, window } => module_audit(module, *window),
        Cmd::Induce { module, window } => induce(module, *window),
        Cmd::Diamond { algebra, degree, random } => diamond(algebra, *degree, *random),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
