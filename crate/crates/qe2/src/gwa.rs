//! Generalized Weyl algebras `R[x, y; σ, τ, a]` over quantum polynomial
//! bases, the quotient presentations of `Dq` and `Cchi`, and quantum GWAs
//! `A(a(h), q^k)`.
//!
//! Quotients never go through an ideal: each factor comes with its own
//! presentation, and the engine checks it.

use crate::catalog;
use crate::parse::parse_element;
use crate::pbw::{check_morphism, AlgebraSpec, Element, MorphismSpec, PbwError};
use crate::zlattice;
use crate::Scalar;
use serde_json::json;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GwaError {
    #[error("{map} is not diagonal on {gen}")]
    NotDiagonal { map: String, gen: String },
    #[error("condition {clause} fails: {residue}")]
    Condition { clause: String, residue: String },
    #[error("a(h) has more than one root in the nonzero scalars")]
    TooManyRoots,
    #[error("a(h) is zero")]
    ZeroPolynomial,
    #[error("unknown factor tag {0}")]
    UnknownTag(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

pub type Result<T> = std::result::Result<T, GwaError>;

/// Pads monomials of a base element with trailing zero exponents.
pub fn lift(x: &Element, n: usize) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.terms() {
        let mut m = m.clone();
        m.resize(n, 0);
        out.add_term(m, c.clone());
    }
    out
}

/// Quantum polynomial ring on the listed torus coordinates, with
/// `X_l X_r = q^{M[l][r]} X_r X_l`.
pub fn quantum_base(id: &str, gens: &[(&str, bool)], m: &zlattice::IntMatrix) -> AlgebraSpec {
    let mut spec = AlgebraSpec::new(id, gens);
    for l in 0..gens.len() {
        for r in 0..l {
            let e = i32::try_from(m.get(l, r)).expect("small exponent");
            spec.skew(l, r, Scalar::q_pow(e));
        }
    }
    spec
}

#[derive(Clone, Debug)]
pub struct GgwaData {
    pub base: Arc<AlgebraSpec>,
    pub sigma: MorphismSpec,
    pub tau: MorphismSpec,
    pub a_elem: Element,
    pub x: String,
    pub y: String,
}

fn diagonal(f: &MorphismSpec) -> Result<Vec<Scalar>> {
    let n = f.source.ngens();
    (0..n)
        .map(|g| {
            let bad = || GwaError::NotDiagonal { map: f.name.clone(), gen: f.source.gen_name(g).into() };
            let (m, c) = f.image(g).single().ok_or_else(bad)?;
            let ok = m.iter().enumerate().all(|(i, e)| *e == i32::from(i == g));
            if ok && !f.anti {
                Ok(c.clone())
            } else {
                Err(bad())
            }
        })
        .collect()
}

/// Diagonal map `g ↦ s_g g` on `base`.
pub fn diagonal_map(name: &str, base: &Arc<AlgebraSpec>, scalars: &[Scalar]) -> Result<MorphismSpec> {
    let images = scalars.iter().enumerate().map(|(g, s)| base.gen(g).scale(s)).collect();
    Ok(MorphismSpec::new(name, base.clone(), base.clone(), images, false)?)
}

#[derive(Clone, Debug, Default)]
pub struct ConditionReport {
    pub clauses: Vec<(String, Option<String>)>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|(_, r)| r.is_none())
    }

    pub fn first_failure(&self) -> Option<(&str, &str)> {
        self.clauses.iter().find_map(|(c, r)| r.as_deref().map(|r| (c.as_str(), r)))
    }
}

impl GgwaData {
    /// Checks `τσ(a) = a`, `a r = τσ(r) a` and `σ(a) r = στ(r) σ(a)` on
    /// every base generator.
    pub fn condition(&self) -> Result<ConditionReport> {
        diagonal(&self.sigma)?;
        diagonal(&self.tau)?;
        let b = &self.base;
        let ts = self.tau.compose(&self.sigma)?;
        let st = self.sigma.compose(&self.tau)?;
        let sa = self.sigma.apply(&self.a_elem)?;
        let mut rep = ConditionReport::default();
        let mut push = |label: String, v: Element| {
            let r = if v.is_zero() { None } else { Some(b.render(&v)) };
            rep.clauses.push((label, r));
        };
        push("tau-sigma-fixes-a".into(), ts.apply(&self.a_elem)?.sub(&self.a_elem));
        for g in 0..b.ngens() {
            let r = b.gen(g);
            let name = b.gen_name(g);
            let lhs = b.mul(&self.a_elem, &r)?;
            let rhs = b.mul(&ts.apply(&r)?, &self.a_elem)?;
            push(format!("a-twist:{name}"), lhs.sub(&rhs));
            let lhs = b.mul(&sa, &r)?;
            let rhs = b.mul(&st.apply(&r)?, &sa)?;
            push(format!("sigma-a-twist:{name}"), lhs.sub(&rhs));
        }
        Ok(rep)
    }

    /// The classical GWA test: `τ = σ^-1` and `a` central in the base.
    /// `None` when `τσ` is not the identity.
    pub fn classical_condition(&self) -> Result<Option<ConditionReport>> {
        let ts = self.tau.compose(&self.sigma)?;
        if !ts.same_images(&MorphismSpec::identity(self.base.clone())) {
            return Ok(None);
        }
        Ok(Some(central_element_check(&self.base, &self.a_elem)?))
    }
}

/// Builds `R[x, y; σ, τ, a]` with generators `base ∪ {x, y}`.
pub fn ggwa_build(d: &GgwaData, id: &str) -> Result<AlgebraSpec> {
    let rep = d.condition()?;
    if let Some((c, r)) = rep.first_failure() {
        return Err(GwaError::Condition { clause: c.into(), residue: r.into() });
    }
    let s = diagonal(&d.sigma)?;
    let t = diagonal(&d.tau)?;
    let b = &d.base;
    let nb = b.ngens();
    let mut gens: Vec<(&str, bool)> = b.gens().iter().map(|g| (g.name.as_str(), g.invertible)).collect();
    gens.push((d.x.as_str(), false));
    gens.push((d.y.as_str(), false));
    let mut spec = AlgebraSpec::new(id, &gens);
    spec.params = b.params.clone();
    for (l, r, rule) in b.rules() {
        spec.set_rule(l, r, rule.coeff.clone(), lift(&rule.correction, nb + 2));
    }
    let (x, y) = (nb, nb + 1);
    for g in 0..nb {
        spec.skew(x, g, s[g].clone());
        spec.skew(y, g, t[g].clone());
    }
    spec.set_rule(y, x, Scalar::zero(), lift(&d.a_elem, nb + 2));
    spec.set_rule(x, y, Scalar::zero(), lift(&d.sigma.apply(&d.a_elem)?, nb + 2));
    spec.validate()?;
    Ok(spec)
}

#[derive(Clone, Debug)]
pub struct CentralReport {
    pub element: String,
    pub residues: Vec<(String, Option<String>)>,
}

impl CentralReport {
    pub fn passed(&self) -> bool {
        self.residues.iter().all(|(_, r)| r.is_none())
    }
}

impl From<CentralReport> for ConditionReport {
    fn from(c: CentralReport) -> Self {
        ConditionReport { clauses: c.residues }
    }
}

/// Commutators `[z, g]` for every generator `g`.
pub fn central_element_check(spec: &AlgebraSpec, z: &Element) -> Result<ConditionReport> {
    Ok(central_report(spec, z)?.into())
}

pub fn central_report(spec: &AlgebraSpec, z: &Element) -> Result<CentralReport> {
    let mut residues = Vec::new();
    for g in 0..spec.ngens() {
        let c = spec.commutator_q(z, &spec.gen(g), &Scalar::one())?;
        residues.push((spec.gen_name(g).to_string(), (!c.is_zero()).then(|| spec.render(&c))));
    }
    Ok(CentralReport { element: spec.render(z), residues })
}

// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DqFactor {
    /// `Dq / Dq φ`
    Phi,
    /// `Dq / Dq ψ`
    Psi,
    /// `Dq / (φ, ψ - α b)`
    PhiPsiAlpha,
    /// `Dq / (φ - β c K^-1, ψ)`
    PsiPhiBeta,
}

pub const DQ_FACTORS: [DqFactor; 4] = [DqFactor::Phi, DqFactor::Psi, DqFactor::PhiPsiAlpha, DqFactor::PsiPhiBeta];

impl DqFactor {
    pub fn tag(self) -> &'static str {
        match self {
            DqFactor::Phi => "phi",
            DqFactor::Psi => "psi",
            DqFactor::PhiPsiAlpha => "phi-psi-alpha",
            DqFactor::PsiPhiBeta => "psi-phi-beta",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        DQ_FACTORS.iter().copied().find(|f| f.tag() == s).ok_or_else(|| GwaError::UnknownTag(s.into()))
    }
}

fn with_param<'a>(name: &'a str, v: &'a Scalar, spec: &'a AlgebraSpec) -> impl Fn(&str) -> Option<Element> + 'a {
    move |s: &str| (s == name).then(|| spec.scalar(v.clone()))
}

fn parse_with(spec: &AlgebraSpec, text: &str, param: Option<(&str, &Scalar)>) -> Element {
    let r = match param {
        Some((n, v)) => parse_element(text, spec, &with_param(n, v, spec)),
        None => parse_element(text, spec, &()),
    };
    r.unwrap_or_else(|e| panic!("{}: {text}: {e}", spec.id))
}

/// One `Dq` factor with its base, maps, a-element and distinguished central
/// element (if any).
pub struct Factor {
    pub data: GgwaData,
    pub central: Option<(String, String)>,
}

/// GGWA data for a prime factor of `Dq`; `param` is α or β (defaults to the
/// formal parameter of that name).
pub fn dq_factor(which: DqFactor, param: Option<Scalar>) -> Factor {
    let d = zlattice::matrix_d();
    let (idx, names, x, y, sig, tau, a, central): (Vec<usize>, Vec<(&str, bool)>, _, _, Vec<i32>, Vec<i32>, _, _) =
        match which {
            DqFactor::Phi => (
                vec![0, 1, 3, 4],
                vec![("a", true), ("b", true), ("K", true), ("psi", false)],
                "E",
                "c",
                vec![0, 0, -2, 0],
                vec![-1, 0, 1, 0],
                "(1-q^-2)^-1*(psi - a^-1*K)",
                Some(("Theta", "psi*b^-1")),
            ),
            DqFactor::Psi => (
                vec![0, 2, 3, 5],
                vec![("a", true), ("c", true), ("K", true), ("phi", false)],
                "F",
                "b",
                vec![1, 1, 2, -1],
                vec![-1, 0, -1, 1],
                "(q^-1-q)^-1*(phi - a)",
                Some(("Omega", "phi*K*c^-1")),
            ),
            DqFactor::PhiPsiAlpha => (
                vec![0, 1, 3],
                vec![("a", true), ("b", true), ("K", true)],
                "E",
                "c",
                vec![0, 0, -2],
                vec![-1, 0, 1],
                "(1-q^-2)^-1*(alpha*b - a^-1*K)",
                None,
            ),
            DqFactor::PsiPhiBeta => (
                vec![0, 2, 3],
                vec![("a", true), ("c", true), ("K", true)],
                "F",
                "b",
                vec![1, 1, 2],
                vec![-1, 0, -1],
                "(q^-1-q)^-1*(beta*c*K^-1 - a)",
                None,
            ),
        };
    let drop: Vec<usize> = (0..6).filter(|i| !idx.contains(i)).collect();
    let sub = d.delete(&drop);
    let base = Arc::new(quantum_base(&format!("Dq/{}:base", which.tag()), &names, &sub));
    let pname = match which {
        DqFactor::PsiPhiBeta => "beta",
        _ => "alpha",
    };
    let pval = param.unwrap_or_else(|| Scalar::param(pname).expect("registered"));
    let a_elem = parse_with(&base, a, Some((pname, &pval)));
    let qs = |v: &[i32]| v.iter().map(|e| Scalar::q_pow(*e)).collect::<Vec<_>>();
    let sigma = diagonal_map("sigma", &base, &qs(&sig)).expect("diagonal");
    let tau = diagonal_map("tau", &base, &qs(&tau)).expect("diagonal");
    Factor {
        data: GgwaData { base, sigma, tau, a_elem, x: x.into(), y: y.into() },
        central: central.map(|(n, t)| (n.to_string(), t.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CchiFactor {
    /// `Cchi / (u)`
    U,
    /// `Cchi / (v)`
    V,
    /// `Cchi / (u, θ - α)`
    UTheta,
    /// `Cchi / (v, ω - β)`
    VOmega,
}

pub const CCHI_FACTORS: [CchiFactor; 4] = [CchiFactor::U, CchiFactor::V, CchiFactor::UTheta, CchiFactor::VOmega];

impl CchiFactor {
    pub fn tag(self) -> &'static str {
        match self {
            CchiFactor::U => "u-quotient",
            CchiFactor::V => "v-quotient",
            CchiFactor::UTheta => "u-theta",
            CchiFactor::VOmega => "v-omega",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        CCHI_FACTORS.iter().copied().find(|f| f.tag() == s).ok_or_else(|| GwaError::UnknownTag(s.into()))
    }
}

/// GWA data (`τ = σ^-1`) for a prime factor of `Cchi`.
pub fn cchi_factor_data(which: CchiFactor, param: Option<Scalar>) -> Factor {
    let (names, m, x, y, sig, a, central, pname): (Vec<(&str, bool)>, Vec<Vec<i64>>, _, _, Vec<i32>, _, _, _) =
        match which {
            CchiFactor::U => (
                vec![("v", false), ("x1", true)],
                vec![vec![0, 0], vec![0, 0]],
                "x2",
                "y2",
                vec![-2, 2],
                "(q^-3-q^-1)^-1*(v - 1)",
                Some(("theta", "v*x1")),
                "alpha",
            ),
            CchiFactor::V => (
                vec![("u", false), ("x2", true)],
                vec![vec![0, 0], vec![0, 0]],
                "x1",
                "y1",
                vec![2, -2],
                "(q^2-1)^-1*(u - chi)",
                Some(("omega", "u*x2")),
                "beta",
            ),
            CchiFactor::UTheta => (
                vec![("x1", true)],
                vec![vec![0]],
                "x2",
                "y2",
                vec![2],
                "(q^-3-q^-1)^-1*(alpha*x1^-1 - 1)",
                None,
                "alpha",
            ),
            CchiFactor::VOmega => (
                vec![("x2", true)],
                vec![vec![0]],
                "x1",
                "y1",
                vec![-2],
                "(q^2-1)^-1*(beta*x2^-1 - chi)",
                None,
                "beta",
            ),
        };
    let m = zlattice::IntMatrix::from_rows(&m).expect("square");
    let base = Arc::new(quantum_base(&format!("Cchi/{}:base", which.tag()), &names, &m));
    let pval = param.unwrap_or_else(|| Scalar::param(pname).expect("registered"));
    let a_elem = parse_with(&base, a, Some((pname, &pval)));
    let s: Vec<Scalar> = sig.iter().map(|e| Scalar::q_pow(*e)).collect();
    let t: Vec<Scalar> = sig.iter().map(|e| Scalar::q_pow(-*e)).collect();
    let sigma = diagonal_map("sigma", &base, &s).expect("diagonal");
    let tau = diagonal_map("tau", &base, &t).expect("diagonal");
    Factor {
        data: GgwaData { base, sigma, tau, a_elem, x: x.into(), y: y.into() },
        central: central.map(|(n, t)| (n.to_string(), t.to_string())),
    }
}

/// Built presentation of a `Cchi` factor.
pub fn cchi_factor(which: CchiFactor, param: Option<Scalar>) -> Result<AlgebraSpec> {
    let f = cchi_factor_data(which, param);
    ggwa_build(&f.data, &format!("Cchi/{}", which.tag()))
}

/// Built presentation of a `Dq` factor.
pub fn dq_factor_spec(which: DqFactor, param: Option<Scalar>) -> Result<AlgebraSpec> {
    let f = dq_factor(which, param);
    ggwa_build(&f.data, &format!("Dq/{}", which.tag()))
}

/// Evaluates the factor's central element inside its built presentation.
pub fn factor_central(spec: &AlgebraSpec, f: &Factor) -> Option<(String, Element)> {
    let (n, t) = f.central.as_ref()?;
    let e = parse_element(t, spec, &()).unwrap_or_else(|e| panic!("{n}: {e}"));
    Some((n.clone(), e))
}

// ---------------------------------------------------------------------------

/// `A(a(h), q^k)` with `a(h) = μ h^i` or `μ h^i (h - ζ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QgwaData {
    pub mu: Scalar,
    pub i: i32,
    pub zeta: Option<Scalar>,
    pub q_power: i32,
}

impl QgwaData {
    /// Reads `a(h)` from its Laurent coefficients `power ↦ coefficient`.
    pub fn from_laurent(coeffs: &BTreeMap<i32, Scalar>, q_power: i32) -> Result<Self> {
        let nz: Vec<(i32, &Scalar)> = coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (*k, c)).collect();
        let Some(&(lo, c_lo)) = nz.first() else {
            return Err(GwaError::ZeroPolynomial);
        };
        let &(hi, c_hi) = nz.last().expect("nonempty");
        match hi - lo {
            0 => Ok(QgwaData { mu: c_hi.clone(), i: lo, zeta: None, q_power }),
            1 => {
                let zeta = c_lo.neg_ref().div_ref(c_hi).expect("nonzero");
                Ok(QgwaData { mu: c_hi.clone(), i: lo, zeta: Some(zeta), q_power })
            }
            _ => Err(GwaError::TooManyRoots),
        }
    }

    /// Laurent coefficients of `a(h)`.
    pub fn laurent(&self) -> BTreeMap<i32, Scalar> {
        let mut m = BTreeMap::new();
        match &self.zeta {
            None => {
                m.insert(self.i, self.mu.clone());
            }
            Some(z) => {
                m.insert(self.i + 1, self.mu.clone());
                m.insert(self.i, self.mu.mul_ref(z).neg_ref());
            }
        }
        m
    }

    /// `a(s h)` evaluated at the scalar `s h = value`; used by module actions.
    pub fn eval(&self, h: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in self.laurent() {
            acc = acc.add_ref(&c.mul_ref(&h.pow(i64::from(k)).expect("h nonzero")));
        }
        acc
    }

    /// `a(q^s h)` as an element of the base `k[h^±1]`.
    pub fn shifted(&self, s: i32) -> BTreeMap<i32, Scalar> {
        self.laurent().into_iter().map(|(k, c)| (k, c.mul_ref(&Scalar::q_pow(s * k)))).collect()
    }
}

fn laurent_element(spec: &AlgebraSpec, h: usize, coeffs: &BTreeMap<i32, Scalar>) -> Element {
    let mut e = Element::zero();
    for (k, c) in coeffs {
        let mut m = vec![0; spec.ngens()];
        m[h] = *k;
        e.add_term(m, c.clone());
    }
    e
}

/// Builds `A(a(h), q^k)` on generators `(h, x, y)`.
pub fn qgwa_build(d: &QgwaData) -> Result<AlgebraSpec> {
    if d.mu.is_zero() {
        return Err(GwaError::ZeroPolynomial);
    }
    let mut spec = AlgebraSpec::new("qgwa", &[("h", true), ("x", false), ("y", false)]);
    spec.skew(1, 0, Scalar::q_pow(d.q_power));
    spec.skew(2, 0, Scalar::q_pow(-d.q_power));
    let a = laurent_element(&spec, 0, &d.laurent());
    let sa = laurent_element(&spec, 0, &d.shifted(d.q_power));
    spec.set_rule(2, 1, Scalar::zero(), a);
    spec.set_rule(1, 2, Scalar::zero(), sa);
    spec.validate()?;
    Ok(spec)
}

/// The two printed quantum-GWA forms of the `Cchi` factors.
pub fn cchip_data(which: CchiFactor, param: &Scalar) -> Result<QgwaData> {
    let chi = Scalar::param("chi").expect("registered");
    match which {
        CchiFactor::UTheta => {
            let mu = Scalar::q_pow(-1).sub_ref(&Scalar::q_pow(-3)).inv().expect("nonzero");
            Ok(QgwaData { mu, i: -1, zeta: Some(param.clone()), q_power: 2 })
        }
        CchiFactor::VOmega => {
            let mu = Scalar::one().sub_ref(&Scalar::q_pow(2)).inv().expect("nonzero").mul_ref(&chi);
            let zeta = chi.inv().expect("nonzero").mul_ref(param);
            Ok(QgwaData { mu, i: -1, zeta: Some(zeta), q_power: -2 })
        }
        other => Err(GwaError::UnknownTag(other.tag().into())),
    }
}

/// Rule tables of two presentations with the same number of generators,
/// compared position by position (names ignored).
pub fn same_rule_table(a: &AlgebraSpec, b: &AlgebraSpec) -> bool {
    if a.ngens() != b.ngens() {
        return false;
    }
    let inv = (0..a.ngens()).all(|g| a.is_invertible(g) == b.is_invertible(g));
    inv && (0..a.ngens()).all(|l| (0..a.ngens()).all(|r| a.rule(l, r) == b.rule(l, r)))
}

/// Generator list and rule table as JSON.
pub fn export_presentation(spec: &AlgebraSpec) -> serde_json::Value {
    let gens: Vec<_> = spec.gens().iter().map(|g| json!({"name": g.name, "invertible": g.invertible})).collect();
    let rules: Vec<_> = spec
        .rules()
        .map(|(l, r, rule)| {
            json!({
                "left": spec.gen_name(l),
                "right": spec.gen_name(r),
                "coeff": rule.coeff.to_string(),
                "correction": spec.render(&rule.correction),
            })
        })
        .collect();
    json!({"id": spec.id, "generators": gens, "rules": rules})
}

/// Checks that the base of a `Dq` factor matches `Dq` itself: each skew rule
/// of the base holds between the corresponding `Dq` elements.
pub fn base_rules_hold_in_dq(which: DqFactor) -> Result<Vec<(String, Option<String>)>> {
    let f = dq_factor(which, None);
    let dq = catalog::spec("Dq").expect("Dq");
    let b = &f.data.base;
    let elem = |g: usize| catalog::parse_in("Dq", b.gen_name(g)).expect("Dq element");
    let mut out = Vec::new();
    for (l, r, rule) in b.rules() {
        let d = dq.commutator_q(&elem(l), &elem(r), &rule.coeff)?;
        let label = format!("{}*{}", b.gen_name(l), b.gen_name(r));
        out.push((label, (!d.is_zero()).then(|| dq.render(&d))));
    }
    Ok(out)
}

/// Maps reports on `check_morphism` for σ and τ, both of which must be
/// automorphisms of the base.
pub fn maps_are_morphisms(d: &GgwaData) -> bool {
    check_morphism(&d.sigma).passed() && check_morphism(&d.tau).passed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::diamond_check;

    #[test]
    fn dq_factors_build_and_confluent() {
        for w in DQ_FACTORS {
            let f = dq_factor(w, None);
            assert!(f.data.condition().unwrap().passed(), "{w:?}");
            assert!(maps_are_morphisms(&f.data));
            let s = ggwa_build(&f.data, "t").unwrap();
            let rep = diamond_check(&s, 2, 20, 1);
            assert!(rep.passed(), "{w:?}: {:?}", rep.failures);
            if let Some((n, z)) = factor_central(&s, &f) {
                assert!(central_element_check(&s, &z).unwrap().passed(), "{n}");
            }
        }
    }

    #[test]
    fn dq_base_matches_dq() {
        for w in DQ_FACTORS {
            for (l, r) in base_rules_hold_in_dq(w).unwrap() {
                assert!(r.is_none(), "{w:?} {l}: {r:?}");
            }
        }
    }

    #[test]
    fn cchi_factors() {
        for w in CCHI_FACTORS {
            let f = cchi_factor_data(w, None);
            let g = f.data.condition().unwrap();
            let c = f.data.classical_condition().unwrap().expect("tau inverse of sigma");
            assert_eq!(g.passed(), c.passed());
            assert!(g.passed());
            let s = cchi_factor(w, None).unwrap();
            assert!(diamond_check(&s, 2, 20, 3).passed());
            if let Some((n, z)) = factor_central(&s, &f) {
                assert!(central_element_check(&s, &z).unwrap().passed(), "{n}");
            }
        }
    }

    #[test]
    fn cchip_forms_agree() {
        for (w, p) in [(CchiFactor::UTheta, "alpha"), (CchiFactor::VOmega, "beta")] {
            let pv = Scalar::param(p).unwrap();
            let a = cchi_factor(w, Some(pv.clone())).unwrap();
            let b = qgwa_build(&cchip_data(w, &pv).unwrap()).unwrap();
            assert!(same_rule_table(&a, &b), "{w:?}");
        }
    }

    #[test]
    fn bad_condition_names_clause() {
        let mut f = dq_factor(DqFactor::Phi, None);
        let b = f.data.base.clone();
        f.data.tau = diagonal_map("tau", &b, &[Scalar::one(), Scalar::one(), Scalar::one(), Scalar::one()]).unwrap();
        match ggwa_build(&f.data, "bad") {
            Err(GwaError::Condition { clause, .. }) => assert!(clause.starts_with("tau-sigma") || clause.contains("twist")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn too_many_roots() {
        let mut m = BTreeMap::new();
        m.insert(0, Scalar::one());
        m.insert(2, Scalar::one());
        assert_eq!(QgwaData::from_laurent(&m, 1), Err(GwaError::TooManyRoots));
        m.remove(&2);
        m.insert(1, Scalar::int(-3));
        let d = QgwaData::from_laurent(&m, 1).unwrap();
        assert_eq!(d.zeta, Some(Scalar::int(1) / Scalar::int(3)));
    }
}
