//! Modules given by basis-indexed actions: quantum-GWA modules, the four
//! highest-weight style `Cchi` modules, pullbacks, and induction to `Dq`
//! from the centralizers of `K` and of `a`.
//!
//! Modules are infinite-dimensional and never truncated; only audits and
//! probes look at a finite window of basis indices.

use crate::autgrp::{self, AutTag};
use crate::catalog::{self, CatalogError};
use crate::gwa::{self, GwaError, QgwaData};
use crate::pbw::{AlgebraSpec, Element, MorphismSpec, PbwError};
use crate::scalar::qint;
use crate::Scalar;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("unknown module {0}")]
    UnknownModule(String),
    #[error("module over {found}, expected {expected}")]
    WrongAlgebra { expected: String, found: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Gwa(#[from] GwaError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

pub type Result<T> = std::result::Result<T, ModError>;

pub type Index = Vec<i64>;

/// Finite combination of basis vectors with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModVector(BTreeMap<Index, Scalar>);

impl ModVector {
    pub fn zero() -> Self {
        ModVector(BTreeMap::new())
    }

    pub fn basis(idx: Index) -> Self {
        Self::single(idx, Scalar::one())
    }

    pub fn single(idx: Index, c: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(idx, c);
        v
    }

    pub fn add_term(&mut self, idx: Index, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&idx) {
            Some(x) => {
                *x = x.add_ref(&c);
                if x.is_zero() {
                    self.0.remove(&idx);
                }
            }
            None => {
                self.0.insert(idx, c);
            }
        }
    }

    pub fn add(&self, o: &ModVector) -> ModVector {
        let mut r = self.clone();
        for (i, c) in &o.0 {
            r.add_term(i.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &ModVector) -> ModVector {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> ModVector {
        if s.is_zero() {
            return Self::zero();
        }
        ModVector(self.0.iter().map(|(i, c)| (i.clone(), c.mul_ref(s))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, &Scalar)> {
        self.0.iter()
    }

    pub fn coeff(&self, idx: &[i64]) -> Scalar {
        self.0.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn map_index(&self, f: impl Fn(&Index) -> Index) -> ModVector {
        let mut r = Self::zero();
        for (i, c) in &self.0 {
            r.add_term(f(i), c.clone());
        }
        r
    }
}

impl fmt::Display for ModVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(i, c)| format!("({c})*{i:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub type ActFn = Arc<dyn Fn(&[i64]) -> ModVector + Send + Sync>;

/// How each index coordinate ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Range {
    Nat,
    Int,
    /// No values; used for the zero module.
    Empty,
}

#[derive(Clone)]
pub struct ModuleSpec {
    pub name: String,
    pub algebra: Arc<AlgebraSpec>,
    pub ranges: Vec<Range>,
    actions: Vec<ActFn>,
    inverses: Vec<Option<ActFn>>,
}

impl fmt::Debug for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleSpec({} over {})", self.name, self.algebra.id)
    }
}

impl ModuleSpec {
    pub fn new(
        name: &str,
        algebra: Arc<AlgebraSpec>,
        ranges: Vec<Range>,
        actions: Vec<ActFn>,
        inverses: Vec<Option<ActFn>>,
    ) -> Result<Self> {
        let n = algebra.ngens();
        if actions.len() != n || inverses.len() != n {
            return Err(ModError::Invalid(format!("{name}: need {n} actions")));
        }
        for g in 0..n {
            if algebra.is_invertible(g) && inverses[g].is_none() {
                return Err(ModError::Invalid(format!("{name}: {} needs an inverse action", algebra.gen_name(g))));
            }
        }
        Ok(ModuleSpec { name: name.into(), algebra, ranges, actions, inverses })
    }

    /// The zero module: no basis vectors, every generator acts by zero.
    pub fn zero(algebra: Arc<AlgebraSpec>) -> Self {
        let n = algebra.ngens();
        let z = || act_fn(|_| ModVector::zero());
        let inverses = (0..n).map(|g| algebra.is_invertible(g).then(z)).collect();
        ModuleSpec { name: "0".into(), algebra, ranges: vec![Range::Empty], actions: (0..n).map(|_| z()).collect(), inverses }
    }

    pub fn valid(&self, idx: &[i64]) -> bool {
        idx.len() == self.ranges.len()
            && idx.iter().zip(&self.ranges).all(|(x, r)| match r {
                Range::Int => true,
                Range::Nat => *x >= 0,
                Range::Empty => false,
            })
    }

    /// Basis indices with every coordinate in `[-w, w]` (or `[0, w]`).
    pub fn window(&self, w: i64) -> Vec<Index> {
        let mut out: Vec<Index> = vec![vec![]];
        for r in &self.ranges {
            let (lo, hi) = match r {
                Range::Int => (-w, w),
                Range::Nat => (0, w),
                Range::Empty => (1, 0),
            };
            out = out.into_iter().flat_map(|p| (lo..=hi).map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        out
    }

    pub fn act_gen(&self, g: usize, v: &ModVector) -> ModVector {
        let mut out = ModVector::zero();
        for (i, c) in v.terms() {
            out = out.add(&(self.actions[g])(i).scale(c));
        }
        out
    }

    pub fn act_gen_inv(&self, g: usize, v: &ModVector) -> Result<ModVector> {
        let f = self.inverses[g]
            .as_ref()
            .ok_or_else(|| ModError::Invalid(format!("{} has no inverse action", self.algebra.gen_name(g))))?;
        let mut out = ModVector::zero();
        for (i, c) in v.terms() {
            out = out.add(&f(i).scale(c));
        }
        Ok(out)
    }

    /// Action of an algebra element; monomials act right to left.
    pub fn act(&self, x: &Element, v: &ModVector) -> Result<ModVector> {
        let mut out = ModVector::zero();
        for (m, c) in x.terms() {
            let mut w = v.clone();
            for g in (0..m.len()).rev() {
                for _ in 0..m[g].unsigned_abs() {
                    w = if m[g] > 0 { self.act_gen(g, &w) } else { self.act_gen_inv(g, &w)? };
                }
            }
            out = out.add(&w.scale(c));
        }
        Ok(out)
    }

    pub fn act_on(&self, x: &Element, idx: &[i64]) -> Result<ModVector> {
        self.act(x, &ModVector::basis(idx.to_vec()))
    }

    /// Action of the generator named `name` on a basis vector.
    pub fn act_named(&self, name: &str, idx: &[i64]) -> Result<ModVector> {
        let g = self.algebra.gen_index(name).ok_or_else(|| PbwError::UnknownGenerator(name.into()))?;
        Ok((self.actions[g])(idx))
    }
}

fn act_fn(f: impl Fn(&[i64]) -> ModVector + Send + Sync + 'static) -> ActFn {
    Arc::new(f)
}

fn one(idx: Vec<i64>, c: Scalar) -> ModVector {
    ModVector::single(idx, c)
}

fn qp(e: i64) -> Scalar {
    Scalar::q_pow(i32::try_from(e).expect("small exponent"))
}

// ---------------------------------------------------------------------------
// Quantum GWA modules over A(a(h), q^k), generators (h, x, y).

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionKind {
    /// `A / A(h - γ)`, basis `Z`: `n ≥ 0` is `x^n`, `n < 0` is `y^-n`.
    WGamma,
    /// `A / A(h - ζ, x)`, basis `y^n`.
    W,
    /// `A / A(h - q^-k ζ, y)`, basis `x^n`.
    WPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionfreeKind {
    /// `A / A(x - γ)`
    X,
    /// `A / A(y - γ)`
    Y,
}

/// Default quantum GWA for module work: the `(u, θ - α)` factor of `Cchi`.
pub fn default_qgwa() -> QgwaData {
    gwa::cchip_data(gwa::CchiFactor::UTheta, &Scalar::param("alpha").expect("registered")).expect("u-theta")
}

fn qgwa_algebra(d: &QgwaData) -> Arc<AlgebraSpec> {
    match gwa::qgwa_build(d) {
        Ok(s) => Arc::new(s),
        Err(_) => {
            let mut s = AlgebraSpec::new("qgwa-degenerate", &[("h", true), ("x", false), ("y", false)]);
            s.skew(1, 0, qp(d.q_power.into()));
            s.skew(2, 0, qp((-d.q_power).into()));
            s.set_rule(2, 1, Scalar::zero(), Element::zero());
            s.set_rule(1, 2, Scalar::zero(), Element::zero());
            Arc::new(s)
        }
    }
}

fn gamma() -> Scalar {
    Scalar::param("gamma").expect("registered")
}

pub fn gwa_torsion_module(kind: TorsionKind, d: &QgwaData) -> Result<ModuleSpec> {
    let alg = qgwa_algebra(d);
    let qk = i64::from(d.q_power);
    let a = Arc::new(d.clone());
    let (name, base): (&str, Scalar) = match kind {
        TorsionKind::WGamma => ("W(gamma)", gamma()),
        TorsionKind::W => ("W", d.zeta.clone().ok_or_else(|| ModError::Invalid("W needs a root".into()))?),
        TorsionKind::WPrime => (
            "W'",
            d.zeta.clone().ok_or_else(|| ModError::Invalid("W' needs a root".into()))?.mul_ref(&qp(-qk)),
        ),
    };
    // h eigenvalue on x^n is q^{-kn} base, on y^n it is q^{kn} base.
    let sign: i64 = match kind {
        TorsionKind::W => -1,
        _ => 1,
    };
    let hval = {
        let base = base.clone();
        move |n: i64| base.mul_ref(&qp(-qk * sign * n))
    };
    let h = {
        let hv = hval.clone();
        act_fn(move |i| one(i.to_vec(), hv(i[0])))
    };
    let hinv = {
        let hv = hval.clone();
        act_fn(move |i| one(i.to_vec(), hv(i[0]).inv().expect("nonzero")))
    };
    let (x, y): (ActFn, ActFn) = match kind {
        TorsionKind::WGamma => {
            let (a1, a2) = (a.clone(), a.clone());
            let (b1, b2) = (base.clone(), base.clone());
            (
                act_fn(move |i| {
                    let n = i[0];
                    if n >= 0 {
                        ModVector::basis(vec![n + 1])
                    } else {
                        one(vec![n + 1], a1.eval(&b1.mul_ref(&qp(-qk * n))))
                    }
                }),
                act_fn(move |i| {
                    let n = i[0];
                    if n <= 0 {
                        ModVector::basis(vec![n - 1])
                    } else {
                        one(vec![n - 1], a2.eval(&b2.mul_ref(&qp(-qk * (n - 1)))))
                    }
                }),
            )
        }
        TorsionKind::W => {
            let b1 = base.clone();
            (
                act_fn(move |i| {
                    let n = i[0];
                    if n == 0 {
                        ModVector::zero()
                    } else {
                        one(vec![n - 1], a.eval(&b1.mul_ref(&qp(qk * n))))
                    }
                }),
                act_fn(|i| ModVector::basis(vec![i[0] + 1])),
            )
        }
        TorsionKind::WPrime => {
            let b1 = base.clone();
            (
                act_fn(|i| ModVector::basis(vec![i[0] + 1])),
                act_fn(move |i| {
                    let n = i[0];
                    if n == 0 {
                        ModVector::zero()
                    } else {
                        one(vec![n - 1], a.eval(&b1.mul_ref(&qp(-qk * (n - 1)))))
                    }
                }),
            )
        }
    };
    let range = if kind == TorsionKind::WGamma { Range::Int } else { Range::Nat };
    ModuleSpec::new(name, alg, vec![range], vec![h, x, y], vec![Some(hinv), None, None])
}

/// `γ^s Σ c_k h^{l+k}` on the `h`-power basis.
fn laurent_times(coeffs: &BTreeMap<i32, Scalar>, l: i64, extra: &Scalar) -> ModVector {
    let mut v = ModVector::zero();
    for (k, c) in coeffs {
        v.add_term(vec![l + i64::from(*k)], c.mul_ref(extra));
    }
    v
}

/// `A / A(x - γ)` or `A / A(y - γ)` on the basis `h^l 1̄`, `l ∈ Z`.
///
/// In `A / A(x - γ)` one has `y 1̄ = γ^-1 a(h) 1̄`, and in `A / A(y - γ)`
/// one has `x 1̄ = γ^-1 a(qh) 1̄`, so powers of `h` already span.
pub fn gwa_torsionfree_module(kind: TorsionfreeKind, d: &QgwaData) -> Result<ModuleSpec> {
    let alg = qgwa_algebra(d);
    let qk = i64::from(d.q_power);
    let g = gamma();
    let ginv = g.inv().map_err(PbwError::from)?;
    let h = act_fn(|i| ModVector::basis(vec![i[0] + 1]));
    let hinv = act_fn(|i| ModVector::basis(vec![i[0] - 1]));
    let (name, x, y): (&str, ActFn, ActFn) = match kind {
        TorsionfreeKind::X => {
            let plain = d.laurent();
            (
                "X(gamma)",
                act_fn(move |i| one(i.to_vec(), g.mul_ref(&qp(qk * i[0])))),
                act_fn(move |i| laurent_times(&plain, i[0], &ginv.mul_ref(&qp(-qk * i[0])))),
            )
        }
        TorsionfreeKind::Y => {
            let shifted = d.shifted(d.q_power);
            (
                "Y(gamma)",
                act_fn(move |i| laurent_times(&shifted, i[0], &ginv.mul_ref(&qp(qk * i[0])))),
                act_fn(move |i| one(i.to_vec(), g.mul_ref(&qp(-qk * i[0])))),
            )
        }
    };
    ModuleSpec::new(name, alg, vec![Range::Int], vec![h, x, y], vec![Some(hinv), None, None])
}

// ---------------------------------------------------------------------------
// Cchi modules, generators (x1, y1, x2, y2), basis N^2.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CchiKind {
    /// `x1, y2` kill the generator; basis `y1^i x2^j`.
    H,
    /// `y1, x2` kill the generator; basis `x1^i y2^j`.
    L,
    /// `x1, x2` kill the generator; basis `y1^i y2^j`.
    M,
    /// `y1, y2` kill the generator; basis `x1^i x2^j`.
    N,
}

pub const CCHI_KINDS: [CchiKind; 4] = [CchiKind::H, CchiKind::L, CchiKind::M, CchiKind::N];

impl CchiKind {
    pub fn tag(self) -> &'static str {
        match self {
            CchiKind::H => "H",
            CchiKind::L => "L",
            CchiKind::M => "M",
            CchiKind::N => "N",
        }
    }
}

fn chi() -> Scalar {
    Scalar::param("chi").expect("registered")
}

/// `(1 - q^{2i}) / (1 - q^2)`
fn br(i: i64) -> Scalar {
    qint(i, 2)
}

/// `q (1 - q^{-2j}) / (1 - q^{-2})`
fn br_x2(j: i64) -> Scalar {
    qint(j, -2).mul_ref(&qp(1))
}

pub fn cchi_module(kind: CchiKind) -> Result<ModuleSpec> {
    let alg = catalog::spec("Cchi")?;
    let c = chi();
    let c2 = c.clone();
    let step = |di: i64, dj: i64, f: fn(i64, i64) -> Scalar| {
        act_fn(move |i| one(vec![i[0] + di, i[1] + dj], f(i[0], i[1])))
    };
    let (x1, y1, x2, y2): (ActFn, ActFn, ActFn, ActFn) = match kind {
        CchiKind::H => (
            act_fn(move |i| one(vec![i[0] - 1, i[1]], c.mul_ref(&br(i[0])))),
            step(1, 0, |_, _| Scalar::one()),
            step(0, 1, |i, _| qp(-2 * i)),
            step(0, -1, |i, j| qp(2 * i + 3).mul_ref(&br(j)).neg_ref()),
        ),
        CchiKind::L => (
            step(1, 0, |_, _| Scalar::one()),
            act_fn(move |i| one(vec![i[0] - 1, i[1]], c.mul_ref(&br(i[0])).mul_ref(&qp(-2 * i[0])).neg_ref())),
            step(0, -1, |i, j| qp(2 * i).mul_ref(&br_x2(j))),
            step(0, 1, |i, _| qp(-2 * i)),
        ),
        CchiKind::M => (
            act_fn(move |i| one(vec![i[0] - 1, i[1]], c.mul_ref(&br(i[0])))),
            step(1, 0, |_, _| Scalar::one()),
            step(0, -1, |i, j| qp(-2 * i).mul_ref(&br_x2(j))),
            step(0, 1, |i, _| qp(2 * i)),
        ),
        CchiKind::N => (
            step(1, 0, |_, _| Scalar::one()),
            act_fn(move |i| one(vec![i[0] - 1, i[1]], c2.mul_ref(&br(i[0])).mul_ref(&qp(-2 * i[0])).neg_ref())),
            step(0, 1, |i, _| qp(2 * i)),
            step(0, -1, |i, j| qp(3 - 2 * i).mul_ref(&br(j)).neg_ref()),
        ),
    };
    ModuleSpec::new(
        kind.tag(),
        alg,
        vec![Range::Nat, Range::Nat],
        vec![x1, y1, x2, y2],
        vec![None, None, None, None],
    )
}

/// Module over `target`, where `central` acts by `value` and every other
/// generator acts as the generator of the same name in `m`.
pub fn lift_central(m: &ModuleSpec, target: Arc<AlgebraSpec>, central: &str, value: Scalar) -> Result<ModuleSpec> {
    let mut actions = Vec::new();
    let mut inverses = Vec::new();
    for g in 0..target.ngens() {
        let name = target.gen_name(g);
        if name == central {
            let (v1, v2) = (value.clone(), value.inv().map_err(PbwError::from)?);
            actions.push(act_fn(move |i| one(i.to_vec(), v1.clone())));
            inverses.push(Some(act_fn(move |i| one(i.to_vec(), v2.clone()))));
            continue;
        }
        let h = m.algebra.gen_index(name).ok_or_else(|| ModError::Invalid(format!("{name} missing in {}", m.name)))?;
        actions.push(m.actions[h].clone());
        inverses.push(m.inverses[h].clone());
    }
    ModuleSpec::new(&m.name, target, m.ranges.clone(), actions, inverses)
}

/// A `Cchi` module as a `C` module with `K` acting by `chi`.
pub fn lift_to_c(m: &ModuleSpec) -> Result<ModuleSpec> {
    lift_central(m, catalog::spec("C")?, "K", chi())
}

/// Pullback along `f: S → m.algebra`; generators of `S` act through their
/// images.
pub fn pullback(m: &ModuleSpec, f: &MorphismSpec) -> Result<ModuleSpec> {
    if f.target.id != m.algebra.id {
        return Err(ModError::WrongAlgebra { expected: f.target.id.clone(), found: m.algebra.id.clone() });
    }
    if f.anti {
        return Err(ModError::Invalid("pullback along an anti-homomorphism".into()));
    }
    let mut actions = Vec::new();
    let mut inverses = Vec::new();
    for g in 0..f.source.ngens() {
        let im = f.image(g).clone();
        let mm = m.clone();
        actions.push(act_fn(move |i| mm.act_on(&im, i).expect("image acts")));
        if f.source.is_invertible(g) {
            let inv = f.target.unit_inverse(f.image(g))?;
            let mm = m.clone();
            inverses.push(Some(act_fn(move |i| mm.act_on(&inv, i).expect("inverse acts"))));
        } else {
            inverses.push(None);
        }
    }
    ModuleSpec::new(&format!("{}^{}", m.name, f.name), f.source.clone(), m.ranges.clone(), actions, inverses)
}

/// `M^τ` for an automorphism `τ` of `m.algebra`.
pub fn twist(m: &ModuleSpec, tau: &MorphismSpec) -> Result<ModuleSpec> {
    if tau.source.id != tau.target.id {
        return Err(ModError::Invalid("twist needs an automorphism".into()));
    }
    pullback(m, tau)
}

// ---------------------------------------------------------------------------
// Induction to Dq.

/// How a `Dq` generator factors as `u^d t` with `u` the normal unit and
/// `t` in the centralizer.
struct Induction {
    sub: &'static str,
    unit: usize,
    parts: Vec<(i64, &'static str)>,
    twist: [i32; 5],
}

fn induction_data(sub: &str) -> Result<Induction> {
    match sub {
        "C" => Ok(Induction {
            sub: "C",
            unit: 1,
            parts: vec![(0, "K"), (1, "1"), (-2, "x1"), (1, "y1"), (2, "x2"), (-1, "y2")],
            twist: autgrp::TAU_A_EXPONENTS,
        }),
        "A" => Ok(Induction {
            sub: "A",
            unit: 0,
            parts: vec![(1, "1"), (0, "a"), (0, "E"), (1, "q*a^-2*w"), (-1, "t1"), (1, "q^-3*a*t2")],
            twist: autgrp::TAU_K_EXPONENTS,
        }),
        other => Err(ModError::WrongAlgebra { expected: "C or A".into(), found: other.into() }),
    }
}

/// `τ^k(t)` for the diagonal twist with exponents `ex`.
fn twist_power(t: &Element, ex: &[i32; 5], k: i64) -> Element {
    let mut out = Element::zero();
    for (m, c) in t.terms() {
        let s: i64 = m.iter().zip(ex).map(|(a, b)| i64::from(*a) * i64::from(*b)).sum();
        out.add_term(m.clone(), c.mul_ref(&qp(s * k)));
    }
    out
}

/// Checks `u^d t = g` in `Dq` for every generator decomposition.
pub fn induction_decomposition_check(sub: &str) -> Result<Vec<(String, Option<String>)>> {
    let ind = induction_data(sub)?;
    let emb = catalog::embedding(ind.sub, "Dq")?;
    let dq = catalog::spec("Dq")?;
    let mut out = Vec::new();
    for (g, (d, t)) in ind.parts.iter().enumerate() {
        let t = catalog::parse_in(ind.sub, t)?;
        let u = dq.pow(&dq.gen(ind.unit), *d)?;
        let lhs = dq.mul(&u, &emb.apply(&t)?)?;
        let r = lhs.sub(&dq.gen(g));
        out.push((dq.gen_name(g).to_string(), (!r.is_zero()).then(|| dq.render(&r))));
    }
    Ok(out)
}

/// `Dq ⊗ M` over the centralizer `m.algebra` (`C` or `A`), basis
/// `Z × basis(M)` with stratum `i` meaning `u^i ⊗ m`.
pub fn induce(m: &ModuleSpec) -> Result<ModuleSpec> {
    let ind = Arc::new(induction_data(&m.algebra.id)?);
    let dq = catalog::spec("Dq")?;
    let sub = catalog::spec(ind.sub)?;
    let mut actions = Vec::new();
    let mut inverses = Vec::new();
    for (g, (d, t)) in ind.parts.iter().enumerate() {
        let t = catalog::parse_in(ind.sub, t)?;
        let d = *d;
        let (mm, ii, tt) = (m.clone(), ind.clone(), t.clone());
        actions.push(act_fn(move |idx| {
            let k = idx[0];
            let tw = twist_power(&tt, &ii.twist, k);
            mm.act_on(&tw, &idx[1..]).expect("centralizer acts").map_index(|j| [vec![k + d], j.clone()].concat())
        }));
        if dq.is_invertible(g) {
            let tinv = sub.unit_inverse(&t)?;
            let (mm, ii) = (m.clone(), ind.clone());
            inverses.push(Some(act_fn(move |idx| {
                let k = idx[0] - d;
                let tw = twist_power(&tinv, &ii.twist, k);
                mm.act_on(&tw, &idx[1..]).expect("centralizer acts").map_index(|j| [vec![k], j.clone()].concat())
            })));
        } else {
            inverses.push(None);
        }
    }
    let mut ranges = vec![Range::Int];
    ranges.extend(m.ranges.iter().copied());
    ModuleSpec::new(&format!("ind({})", m.name), dq, ranges, actions, inverses)
}

/// The `Dq` module induced from a `Cchi` module through `C`.
pub fn induce_cchi(kind: CchiKind) -> Result<ModuleSpec> {
    induce(&lift_to_c(&cchi_module(kind)?)?)
}

/// The `Dq` module induced through `A`, where the `A` module is the pullback
/// of the lifted `Cchi` module along `Φ`.
pub fn induce_achi(kind: CchiKind) -> Result<ModuleSpec> {
    let phi = autgrp::make(&AutTag::AToCPhi).map_err(|e| ModError::Invalid(e.to_string()))?;
    induce(&pullback(&lift_to_c(&cchi_module(kind)?)?, &phi)?)
}

// ---------------------------------------------------------------------------
// Audits and probes.

#[derive(Clone, Debug, Serialize)]
pub struct AuditFailure {
    pub module: String,
    pub rule_id: String,
    pub index: Index,
    pub residue: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub module: String,
    pub window: i64,
    pub checked: usize,
    pub failures: Vec<AuditFailure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Check {
    Rule { l: usize, r: usize, coeff: Scalar, correction: Element },
    Unit(usize),
}

fn residue(m: &ModuleSpec, c: &Check, v: &ModVector) -> Result<ModVector> {
    match c {
        Check::Rule { l, r, coeff, correction } => {
            let lr = m.act_gen(*l, &m.act_gen(*r, v));
            let rl = m.act_gen(*r, &m.act_gen(*l, v));
            Ok(lr.sub(&rl.scale(coeff)).sub(&m.act(correction, v)?))
        }
        Check::Unit(g) => {
            let a = m.act_gen(*g, &m.act_gen_inv(*g, v)?);
            let b = m.act_gen_inv(*g, &m.act_gen(*g, v))?;
            Ok(a.sub(v).add(&b.sub(v)))
        }
    }
}

/// Applies every defining rule `l r - c r l - corr` (and `g g^-1 - 1`) to
/// every basis vector in the window.
pub fn relation_audit(m: &ModuleSpec, window: i64) -> AuditReport {
    let alg = &m.algebra;
    let mut checks: Vec<(String, Check)> = alg
        .rules()
        .map(|(l, r, rule)| {
            (
                format!("{}*{}", alg.gen_name(l), alg.gen_name(r)),
                Check::Rule { l, r, coeff: rule.coeff.clone(), correction: rule.correction.clone() },
            )
        })
        .collect();
    for g in (0..alg.ngens()).filter(|g| alg.is_invertible(*g)) {
        checks.push((format!("{0}*{0}^-1", alg.gen_name(g)), Check::Unit(g)));
    }
    let basis = m.window(window);
    let work: Vec<(usize, &Index)> = (0..checks.len()).flat_map(|k| basis.iter().map(move |b| (k, b))).collect();
    let failures: Vec<AuditFailure> = work
        .par_iter()
        .filter_map(|(k, idx)| {
            let (label, check) = &checks[*k];
            let res = match residue(m, check, &ModVector::basis((*idx).clone())) {
                Ok(r) if r.is_zero() => return None,
                Ok(r) => r.to_string(),
                Err(e) => format!("error: {e}"),
            };
            Some(AuditFailure { module: m.name.clone(), rule_id: label.clone(), index: (*idx).clone(), residue: res })
        })
        .collect();
    AuditReport { module: m.name.clone(), window, checked: work.len(), failures }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityReport {
    pub module: String,
    pub window: i64,
    pub nodes: usize,
    pub edges: usize,
    pub strongly_connected: bool,
    pub note: &'static str,
}

/// Graph on in-window basis vectors, with an edge `u → v` whenever some
/// generator (or inverse) sends `u` to a combination involving `v`.
pub fn connectivity_probe(m: &ModuleSpec, window: i64) -> ConnectivityReport {
    let nodes = m.window(window);
    let pos: BTreeMap<&Index, usize> = nodes.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let mut fwd: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes.len()];
    let mut back: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes.len()];
    for (u, idx) in nodes.iter().enumerate() {
        let v = ModVector::basis(idx.clone());
        for g in 0..m.algebra.ngens() {
            let mut images = vec![m.act_gen(g, &v)];
            if let Ok(w) = m.act_gen_inv(g, &v) {
                images.push(w);
            }
            for w in images {
                for (j, _) in w.terms() {
                    if let Some(&t) = pos.get(j) {
                        if t != u {
                            fwd[u].insert(t);
                            back[t].insert(u);
                        }
                    }
                }
            }
        }
    }
    let reach = |adj: &Vec<BTreeSet<usize>>| {
        if adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; adj.len()];
        seen[0] = true;
        let mut q = VecDeque::from([0usize]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }
        seen.iter().all(|s| *s)
    };
    ConnectivityReport {
        module: m.name.clone(),
        window,
        nodes: nodes.len(),
        edges: fwd.iter().map(|s| s.len()).sum(),
        strongly_connected: reach(&fwd) && reach(&back),
        note: "necessary signal only",
    }
}

/// Module tags accepted by [`module_by_tag`].
pub const MODULE_TAGS: [&str; 17] = [
    "W(gamma)", "W", "W'", "X(gamma)", "Y(gamma)", "H", "L", "M", "N", "ind-H", "ind-L", "ind-M", "ind-N", "indA-H",
    "indA-L", "indA-M", "indA-N",
];

pub fn module_by_tag(tag: &str) -> Result<ModuleSpec> {
    let d = default_qgwa();
    let kind = |s: &str| CCHI_KINDS.iter().copied().find(|k| k.tag() == s);
    match tag {
        "W(gamma)" => gwa_torsion_module(TorsionKind::WGamma, &d),
        "W" => gwa_torsion_module(TorsionKind::W, &d),
        "W'" => gwa_torsion_module(TorsionKind::WPrime, &d),
        "X(gamma)" => gwa_torsionfree_module(TorsionfreeKind::X, &d),
        "Y(gamma)" => gwa_torsionfree_module(TorsionfreeKind::Y, &d),
        t => {
            if let Some(k) = kind(t) {
                return cchi_module(k);
            }
            if let Some(k) = t.strip_prefix("ind-").and_then(kind) {
                return induce_cchi(k);
            }
            if let Some(k) = t.strip_prefix("indA-").and_then(kind) {
                return induce_achi(k);
            }
            Err(ModError::UnknownModule(t.into()))
        }
    }
}
