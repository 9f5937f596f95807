//! Built-in presentations, named elements, embeddings and the identity
//! registry.
//!
//! Generator orders: `Dq = (K, a, E, c, F, b)`, `Oq = (a, b, c)`,
//! `Uq = (K, E, F)`, `C = (K, x1, y1, x2, y2)`, `A = (a, E, w, t1, t2)`.

use crate::parse::{parse_element, ParseError};
use crate::pbw::{AlgebraSpec, Element, MorphismSpec, PbwError};
use crate::{hopf, zlattice, Scalar};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown algebra {0}")]
    UnknownAlgebra(String),
    #[error("unknown element {0} in {1}")]
    UnknownName(String, String),
    #[error("no embedding {0} -> {1}")]
    UnknownEmbedding(String, String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

type Rules<'a> = &'a [(&'a str, &'a str, &'a str)];

/// Builds a presentation from rules `l * r = rhs`.
///
/// Right-hand sides are parsed against the rules already accepted, so a
/// correction may use any rule whose own right-hand side parses first.
pub fn build_presentation(id: &str, gens: &[(&str, bool)], rules: Rules) -> Result<AlgebraSpec, PbwError> {
    let mut spec = AlgebraSpec::new(id, gens);
    let idx = |s: &str, spec: &AlgebraSpec| spec.gen_index(s).ok_or_else(|| PbwError::UnknownGenerator(s.into()));
    let mut pending: Vec<(usize, usize, &str)> =
        rules.iter().map(|(l, r, rhs)| Ok((idx(l, &spec)?, idx(r, &spec)?, *rhs))).collect::<Result<_, PbwError>>()?;
    while !pending.is_empty() {
        let mut next = Vec::new();
        let mut last_err = None;
        for (l, r, rhs) in pending.iter().copied() {
            match parse_element(rhs, &spec, &()) {
                Ok(x) => {
                    let mut m = vec![0; spec.ngens()];
                    m[l] += 1;
                    m[r] += 1;
                    let c = x.coeff(&m);
                    let corr = x.sub(&Element::term(m, c.clone()));
                    spec.set_rule(l, r, c, corr);
                }
                Err(e) => {
                    last_err = Some(e);
                    next.push((l, r, rhs));
                }
            }
        }
        if next.len() == pending.len() {
            return Err(last_err.map(PbwError::from).unwrap_or_else(|| PbwError::Spec(id.into())));
        }
        pending = next;
    }
    spec.validate()?;
    Ok(spec)
}

/// Quantum torus with `X_i X_j = q^{D_ij} X_j X_i`.
pub fn torus_from_matrix(id: &str, names: &[&str], d: &zlattice::IntMatrix) -> AlgebraSpec {
    let gens: Vec<(&str, bool)> = names.iter().map(|n| (*n, true)).collect();
    let mut spec = AlgebraSpec::new(id, &gens);
    for l in 0..names.len() {
        for r in 0..l {
            let e = i32::try_from(d.get(l, r)).expect("small exponent");
            spec.skew(l, r, Scalar::q_pow(e));
        }
    }
    spec
}

const DQ_GENS: [(&str, bool); 6] = [("K", true), ("a", true), ("E", false), ("c", false), ("F", false), ("b", false)];

const DQ_RULES: [(&str, &str, &str); 15] = [
    ("a", "K", "q*K*a"),
    ("E", "K", "q^-2*K*E"),
    ("E", "a", "a*E"),
    ("c", "K", "q*K*c"),
    ("c", "a", "q^-1*a*c"),
    ("c", "E", "E*c - a^-1*K"),
    ("F", "K", "q^2*K*F"),
    ("F", "a", "q*a*F"),
    ("F", "E", "E*F"),
    ("F", "c", "q*c*F"),
    ("b", "K", "q^-1*K*b"),
    ("b", "a", "q^-1*a*b"),
    ("b", "E", "E*b"),
    ("b", "c", "c*b"),
    ("b", "F", "q*F*b - q*a"),
];

fn centralizer_rules(k: &str) -> Vec<(String, String, String)> {
    let mut v: Vec<(String, String, String)> = vec![
        ("y1".into(), "x1".into(), format!("q^-2*x1*y1 - q^-2*{k}")),
        ("x2".into(), "x1".into(), "q^2*x1*x2".into()),
        ("x2".into(), "y1".into(), "q^-2*y1*x2".into()),
        ("y2".into(), "x1".into(), "q^-2*x1*y2".into()),
        ("y2".into(), "y1".into(), "q^2*y1*y2".into()),
        ("y2".into(), "x2".into(), "q^2*x2*y2 - q^3".into()),
    ];
    if k == "K" {
        for g in ["x1", "y1", "x2", "y2"] {
            v.push((g.into(), "K".into(), format!("K*{g}")));
        }
    }
    v
}

fn a_rules(a: &str) -> Vec<(String, String, String)> {
    let mut v: Vec<(String, String, String)> = vec![
        ("w".into(), "E".into(), format!("q^-2*E*w - q^-2*{a}")),
        ("t1".into(), "E".into(), "q^2*E*t1".into()),
        ("t1".into(), "w".into(), "q^-2*w*t1".into()),
        ("t2".into(), "E".into(), "q^-2*E*t2".into()),
        ("t2".into(), "w".into(), "q^2*w*t2".into()),
        ("t2".into(), "t1".into(), "q^2*t1*t2 - q^3".into()),
    ];
    if a == "a" {
        for g in ["E", "w", "t1", "t2"] {
            v.push((g.into(), "a".into(), format!("a*{g}")));
        }
    }
    v
}

fn owned(id: &str, gens: &[(&str, bool)], rules: &[(String, String, String)]) -> AlgebraSpec {
    let r: Vec<(&str, &str, &str)> = rules.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    build_presentation(id, gens, &r).unwrap_or_else(|e| panic!("catalog presentation {id}: {e}"))
}

pub struct Algebra {
    pub spec: Arc<AlgebraSpec>,
    named: BTreeMap<String, Element>,
}

impl Algebra {
    pub fn named(&self) -> &BTreeMap<String, Element> {
        &self.named
    }
}

pub struct Catalog {
    algebras: BTreeMap<String, Algebra>,
    involution: MorphismSpec,
}

pub const ALGEBRA_IDS: [&str; 12] =
    ["Oq", "Uq", "Dq", "Pi", "C", "Cchi", "A", "Achi", "torus", "torus56", "UqE", "Oq2"];

fn add_names(spec: &AlgebraSpec, named: &mut BTreeMap<String, Element>, defs: &[(&str, String)]) {
    for (name, text) in defs {
        assert!(spec.gen_index(name).is_none(), "name {name} collides with a generator of {}", spec.id);
        assert!(!named.contains_key(*name), "duplicate name {name} in {}", spec.id);
        let v = {
            let look = |s: &str| named.get(s).cloned();
            parse_element(text, spec, &look).unwrap_or_else(|e| panic!("{}::{name}: {e}", spec.id))
        };
        named.insert(name.to_string(), v);
    }
}

fn build_catalog() -> Catalog {
    let mut algebras = BTreeMap::new();
    let oq = build_presentation(
        "Oq",
        &[("a", true), ("b", false), ("c", false)],
        &[("b", "a", "q^-1*a*b"), ("c", "a", "q^-1*a*c"), ("c", "b", "b*c")],
    )
    .expect("Oq");
    let uq = build_presentation(
        "Uq",
        &[("K", true), ("E", false), ("F", false)],
        &[("E", "K", "q^-2*K*E"), ("F", "K", "q^2*K*F"), ("F", "E", "E*F")],
    )
    .expect("Uq");
    let dq = build_presentation("Dq", &DQ_GENS, &DQ_RULES).expect("Dq");
    let pi = build_presentation("Pi", &[("x", false), ("y", false)], &[("y", "x", "q^-2*x*y")]).expect("Pi");
    let c = owned("C", &[("K", true), ("x1", false), ("y1", false), ("x2", false), ("y2", false)], &centralizer_rules("K"));
    let cchi = owned("Cchi", &[("x1", false), ("y1", false), ("x2", false), ("y2", false)], &centralizer_rules("chi"));
    let a = owned("A", &[("a", true), ("E", false), ("w", false), ("t1", false), ("t2", false)], &a_rules("a"));
    let achi = owned("Achi", &[("E", false), ("w", false), ("t1", false), ("t2", false)], &a_rules("chi"));
    let torus = torus_from_matrix("torus", &["a", "b", "c", "K", "psi", "phi"], &zlattice::matrix_d());
    let torus56 = torus_from_matrix("torus56", &["a", "b", "c", "K"], &zlattice::builtin("D56").expect("D56"));
    let uqe = torus_from_matrix("UqE", &["E", "K"], &zlattice::matrix_uq_e());
    let oq2 = hopf::tensor_power(&oq, 2);

    let dq = Arc::new(dq);
    let involution = MorphismSpec::new(
        "involution",
        dq.clone(),
        dq.clone(),
        ["K", "a^-1", "q*K*F", "-q^-1*b", "q*K^-1*E", "-q*c"]
            .iter()
            .map(|t| parse_element(t, &dq, &()).expect("involution image"))
            .collect(),
        true,
    )
    .expect("involution");

    let mut dq_named = BTreeMap::new();
    add_names(
        &dq,
        &mut dq_named,
        &[
            ("phi", "(1-q^2)*F*b + q^2*a".into()),
            ("psi", "(1-q^-2)*E*c + q^-2*a^-1*K".into()),
            ("C", "E*F".into()),
            ("x1", "a^2*E".into()),
            ("y1", "a^-1*c".into()),
            ("x2", "a^-2*F".into()),
            ("y2", "a*b".into()),
            ("u", "(q^2-1)*y1*x1 + K".into()),
            ("v", "(q^-3-q^-1)*y2*x2 + 1".into()),
            ("w", "q^-1*a^2*K^-1*c".into()),
            ("t1", "K*F".into()),
            ("t2", "q^3*a^-1*K^-1*b".into()),
        ],
    );
    let phi_star = involution.apply(&dq_named["phi"]).expect("phi*");
    let psi_star = involution.apply(&dq_named["psi"]).expect("psi*");
    dq_named.insert("phi_star".into(), phi_star);
    dq_named.insert("psi_star".into(), psi_star);

    let mut put = |spec: AlgebraSpec, defs: &[(&str, String)]| {
        let mut named = BTreeMap::new();
        add_names(&spec, &mut named, defs);
        algebras.insert(spec.id.clone(), Algebra { spec: Arc::new(spec), named });
    };
    put(oq, &[("x", "a*b".into()), ("y", "c*a^-1".into())]);
    put(uq, &[("C", "E*F".into())]);
    put(pi, &[]);
    put(c, &[("u", "(q^2-1)*y1*x1 + K".into()), ("v", "(q^-3-q^-1)*y2*x2 + 1".into())]);
    put(
        cchi,
        &[
            ("u", "(q^2-1)*y1*x1 + chi".into()),
            ("v", "(q^-3-q^-1)*y2*x2 + 1".into()),
            ("theta", "v*x1".into()),
            ("omega", "u*x2".into()),
        ],
    );
    put(a, &[("u", "(q^2-1)*w*E + a".into()), ("v", "(q^-3-q^-1)*t2*t1 + 1".into())]);
    put(achi, &[("u", "(q^2-1)*w*E + chi".into()), ("v", "(q^-3-q^-1)*t2*t1 + 1".into())]);
    put(torus, &[]);
    put(torus56, &[]);
    put(uqe, &[]);
    put(oq2, &[]);
    algebras.insert("Dq".into(), Algebra { spec: dq, named: dq_named });
    Catalog { algebras, involution }
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(build_catalog)
}

impl Catalog {
    pub fn get(&self, id: &str) -> Result<&Algebra, CatalogError> {
        self.algebras.get(id).ok_or_else(|| CatalogError::UnknownAlgebra(id.into()))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.algebras.keys().map(|s| s.as_str())
    }
}

pub fn spec(id: &str) -> Result<Arc<AlgebraSpec>, CatalogError> {
    Ok(catalog().get(id)?.spec.clone())
}

/// The anti-involution `*` of `Dq`.
pub fn involution() -> MorphismSpec {
    catalog().involution.clone()
}

/// Named element, including the derived `smash_U_x` cross relations in `Dq`.
pub fn resolve(id: &str, name: &str) -> Option<Element> {
    let alg = catalog().algebras.get(id)?;
    if let Some(x) = alg.named.get(name) {
        return Some(x.clone());
    }
    if id == "Dq" {
        let rest = name.strip_prefix("smash_")?;
        let (u, x) = rest.split_once('_')?;
        return hopf::cross_relation(u, x).ok();
    }
    None
}

pub fn named(name: &str, id: &str) -> Result<Element, CatalogError> {
    catalog().get(id)?;
    resolve(id, name).ok_or_else(|| CatalogError::UnknownName(name.into(), id.into()))
}

/// Parses text in an algebra with its named elements in scope.
pub fn parse_in(id: &str, text: &str) -> Result<Element, CatalogError> {
    let spec = spec(id)?;
    let look = |s: &str| resolve(id, s);
    Ok(parse_element(text, &spec, &look)?)
}

fn morphism(name: &str, src: &str, tgt: &str, images: &[&str], anti: bool) -> Result<MorphismSpec, CatalogError> {
    let (s, t) = (spec(src)?, spec(tgt)?);
    let ims = images.iter().map(|x| parse_in(tgt, x)).collect::<Result<Vec<_>, _>>()?;
    Ok(MorphismSpec::new(name, s, t, ims, anti)?)
}

pub const EMBEDDINGS: [(&str, &str); 5] = [("C", "Dq"), ("A", "Dq"), ("Pi", "Oq"), ("Oq", "Dq"), ("Uq", "Dq")];

pub fn embedding(sub: &str, sup: &str) -> Result<MorphismSpec, CatalogError> {
    let name = format!("{sub}->{sup}");
    match (sub, sup) {
        ("C", "Dq") => morphism(&name, sub, sup, &["K", "a^2*E", "a^-1*c", "a^-2*F", "a*b"], false),
        ("A", "Dq") => morphism(&name, sub, sup, &["a", "E", "q^-1*a^2*K^-1*c", "K*F", "q^3*a^-1*K^-1*b"], false),
        ("Pi", "Oq") => morphism(&name, sub, sup, &["a*b", "c*a^-1"], false),
        ("Oq", "Dq") => morphism(&name, sub, sup, &["a", "b", "c"], false),
        ("Uq", "Dq") => morphism(&name, sub, sup, &["K", "E", "F"], false),
        _ => Err(CatalogError::UnknownEmbedding(sub.into(), sup.into())),
    }
}

// ---------------------------------------------------------------------------
// identity registry

#[derive(Clone, Debug, Serialize)]
pub struct IdentityEntry {
    pub id: String,
    pub algebra: String,
    pub lhs: String,
    pub rhs: String,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror: Option<String>,
}

fn entry(id: String, algebra: &str, lhs: String, rhs: String, anchor: &str) -> IdentityEntry {
    IdentityEntry { id, algebra: algebra.into(), lhs, rhs, anchor: anchor.into(), mirror: None }
}

/// `(1 - t^n)/(1 - t)` at `t = q^s` as literal text.
fn geom(n: i64, s: i64) -> String {
    format!("((1-q^({}))/(1-q^({s})))", n * s)
}

pub const DEFAULT_RANGE: std::ops::RangeInclusive<i64> = 1..=6;

pub fn identity_suite() -> Vec<IdentityEntry> {
    identity_suite_with(DEFAULT_RANGE)
}

/// The registry with indexed families instantiated over `range`.
pub fn identity_suite_with(range: std::ops::RangeInclusive<i64>) -> Vec<IdentityEntry> {
    let mut v = Vec::new();
    let cross = [
        ("K", "a", "q^-1*a*K"),
        ("K", "b", "q*b*K"),
        ("K", "c", "q^-1*c*K"),
        ("E", "a", "a*E"),
        ("E", "b", "b*E"),
        ("E", "c", "c*E + a^-1*K"),
        ("F", "a", "q*a*F"),
        ("F", "b", "q^-1*b*F + a"),
        ("F", "c", "q*c*F"),
    ];
    for (u, x, rhs) in cross {
        v.push(entry(format!("smash-{u}{x}"), "Dq", format!("smash_{u}_{x}"), rhs.into(), "smash-cross"));
    }
    for i in range.clone() {
        v.push(entry(
            format!("fb-power@{i}"),
            "Dq",
            format!("F*b^{i}"),
            format!("q^-{i}*b^{i}*F + {}*a*b^{}", geom(i, -2), i - 1),
            "fb-power",
        ));
        v.push(entry(
            format!("ec-power@{i}"),
            "Dq",
            format!("E*c^{i}"),
            format!("c^{i}*E + {}*c^{}*a^-1*K", geom(i, -2), i - 1),
            "ec-power",
        ));
    }
    let table = [
        ("phiK", "phi*K", "q*K*phi"),
        ("phia", "phi*a", "a*phi"),
        ("phiE", "phi*E", "E*phi"),
        ("phib", "phi*b", "q^-1*b*phi"),
        ("phiF", "phi*F", "q*F*phi"),
        ("phic", "phi*c", "q*c*phi"),
        ("psiK", "psi*K", "q^-1*K*psi"),
        ("psia", "psi*a", "q^-1*a*psi"),
        ("psiE", "psi*E", "E*psi"),
        ("psib", "psi*b", "b*psi"),
        ("psiF", "psi*F", "q^-1*F*psi"),
        ("psic", "psi*c", "c*psi"),
    ];
    for (id, l, r) in table {
        v.push(entry(format!("phi-psi-table:{id}"), "Dq", l.into(), r.into(), "phi-psi-table"));
    }
    v.push(entry("phi-psi-commute".into(), "Dq", "phi*psi".into(), "q*psi*phi".into(), "phi-psi-commute"));
    v.push(entry("psi-from-phi-star".into(), "Dq", "psi".into(), "q^-3*K*phi_star".into(), "involution-link"));
    v.push(entry("phi-from-psi-star".into(), "Dq", "phi".into(), "q^2*K^-1*psi_star".into(), "involution-link"));
    v.push(entry("phi-symmetric".into(), "Dq", "phi".into(), "F*b - q*b*F".into(), "phi-psi-symmetric"));
    v.push(entry("psi-symmetric".into(), "Dq", "psi".into(), "E*c - q^-2*c*E".into(), "phi-psi-symmetric"));
    for g in ["K", "E", "F"] {
        v.push(entry(format!("casimir-central:{g}"), "Uq", format!("C*{g}"), format!("{g}*C"), "casimir-central"));
    }
    let uv = [
        ("x1u", "x1*u", "q^2*u*x1", "Eu", "E*u", "q^2*u*E"),
        ("x2u", "x2*u", "u*x2", "t1u", "t1*u", "u*t1"),
        ("y1u", "y1*u", "q^-2*u*y1", "wu", "w*u", "q^-2*u*w"),
        ("y2u", "y2*u", "u*y2", "t2u", "t2*u", "u*t2"),
        ("x1v", "x1*v", "v*x1", "Ev", "E*v", "v*E"),
        ("x2v", "x2*v", "q^-2*v*x2", "t1v", "t1*v", "q^-2*v*t1"),
        ("y1v", "y1*v", "v*y1", "wv", "w*v", "v*w"),
        ("y2v", "y2*v", "q^2*v*y2", "t2v", "t2*v", "q^2*v*t2"),
    ];
    for (id, l, r, aid, al, ar) in uv {
        v.push(entry(format!("uv-normal:{id}"), "C", l.into(), r.into(), "uv-normal"));
        let mut e = entry(format!("A-uv-normal:{aid}"), "A", al.into(), ar.into(), "uv-normal-mirror");
        e.mirror = Some(format!("uv-normal:{id}"));
        v.push(e);
    }
    v.push(entry("u-is-a-psi".into(), "Dq", "(q^2-1)*y1*x1 + K".into(), "a*psi".into(), "uv-factor"));
    v.push(entry("v-is-ainv-phi".into(), "Dq", "(q^-3-q^-1)*y2*x2 + 1".into(), "a^-1*phi".into(), "uv-factor"));
    for i in range {
        v.push(entry(
            format!("x1pow-y1@{i}"),
            "Cchi",
            format!("x1^{i}*y1 - q^{}*y1*x1^{i}", 2 * i),
            format!("chi*{}*x1^{}", geom(i, 2), i - 1),
            "x1pow-y1",
        ));
        v.push(entry(
            format!("x1pow-y1-K@{i}"),
            "C",
            format!("x1^{i}*y1 - q^{}*y1*x1^{i}", 2 * i),
            format!("K*{}*x1^{}", geom(i, 2), i - 1),
            "x1pow-y1",
        ));
        let mut e = entry(
            format!("A-Epow-w@{i}"),
            "A",
            format!("E^{i}*w - q^{}*w*E^{i}", 2 * i),
            format!("a*{}*E^{}", geom(i, 2), i - 1),
            "x1pow-y1-mirror",
        );
        e.mirror = Some(format!("x1pow-y1-K@{i}"));
        v.push(e);
        v.push(entry(
            format!("y2-x2pow@{i}"),
            "Cchi",
            format!("y2*x2^{i}"),
            format!("q^{}*x2^{i}*y2 - q^3*{}*x2^{}", 2 * i, geom(i, 2), i - 1),
            "y2-x2pow",
        ));
        v.push(entry(
            format!("x1-y1pow@{i}"),
            "Cchi",
            format!("x1*y1^{i}"),
            format!("q^{}*y1^{i}*x1 + chi*{}*y1^{}", 2 * i, geom(i, 2), i - 1),
            "x1-y1pow",
        ));
    }
    v.push(entry("quantum-plane".into(), "Pi", "x*y".into(), "q^2*y*x".into(), "quantum-plane"));
    v.push(entry("quantum-plane-in-Oq".into(), "Oq", "x*y".into(), "q^2*y*x".into(), "quantum-plane"));
    v.push(entry("sanity".into(), "Oq", "1*1".into(), "1".into(), "sanity"));
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

/// `lhs - rhs` in normal form.
pub fn evaluate(e: &IdentityEntry) -> Result<Element, CatalogError> {
    Ok(parse_in(&e.algebra, &e.lhs)?.sub(&parse_in(&e.algebra, &e.rhs)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteEntry {
    pub id: String,
    pub anchor: String,
    pub status: String,
    pub residue: String,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub version: u32,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == "pass")
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| e.status != "pass").count()
    }
}

/// Evaluates registry entries whose id starts with `filter`, in parallel.
pub fn run_suite(filter: Option<&str>) -> SuiteReport {
    catalog();
    let entries: Vec<IdentityEntry> =
        identity_suite().into_iter().filter(|e| filter.is_none_or(|f| e.id.starts_with(f))).collect();
    let mut out: Vec<SuiteEntry> = entries
        .par_iter()
        .map(|e| {
            let t = Instant::now();
            let r = evaluate(e);
            let elapsed_ms = t.elapsed().as_secs_f64() * 1000.0;
            let (status, residue) = match r {
                Ok(x) if x.is_zero() => ("pass", "0".to_string()),
                Ok(x) => ("fail", spec(&e.algebra).map(|s| s.render(&x)).unwrap_or_default()),
                Err(err) => ("fail", format!("error: {err}")),
            };
            SuiteEntry { id: e.id.clone(), anchor: e.anchor.clone(), status: status.into(), residue, elapsed_ms }
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport { version: 1, entries: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dq_normal_forms() {
        let dq = spec("Dq").unwrap();
        let x = parse_in("Dq", "F*b - q^-1*b*F").unwrap();
        assert_eq!(dq.render(&x), "a");
        let y = parse_in("Dq", "c*E").unwrap();
        assert_eq!(y, parse_in("Dq", "E*c - a^-1*K").unwrap());
        assert_eq!(dq.rules().count(), 15);
    }

    #[test]
    fn phi_psi_relation() {
        let dq = spec("Dq").unwrap();
        let phi = named("phi", "Dq").unwrap();
        let psi = named("psi", "Dq").unwrap();
        assert!(dq.commutator_q(&phi, &psi, &Scalar::q_pow(1)).unwrap().is_zero());
    }

    #[test]
    fn unknown_things() {
        assert!(matches!(spec("Zz"), Err(CatalogError::UnknownAlgebra(_))));
        assert!(matches!(named("nope", "Dq"), Err(CatalogError::UnknownName(..))));
        assert!(embedding("Dq", "C").is_err());
    }

    #[test]
    fn suite_is_large() {
        let s = identity_suite();
        assert!(s.len() >= 30);
        let mut ids: Vec<_> = s.iter().map(|e| e.id.clone()).collect();
        ids.dedup();
        assert_eq!(ids.len(), s.len());
    }
}
