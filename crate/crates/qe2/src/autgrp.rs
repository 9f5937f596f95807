//! Automorphism families of `Oq`, `Uq` and `Dq`, the twists `τ_a` on `C`
//! and `τ_K` on `A`, and the isomorphism `Φ: A → C`.

use crate::catalog::{self, CatalogError};
use crate::pbw::{check_morphism, AlgebraSpec, Element, MorphismReport, MorphismSpec, PbwError};
use crate::Scalar;
use rand::Rng;
use serde_json::json;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutError {
    #[error("matrix ({i} {j}; {m} {n}) has determinant {det}, expected 1")]
    Det { i: i64, j: i64, m: i64, n: i64, det: i64 },
    #[error("scalar parameter {0} is zero")]
    ZeroScalar(&'static str),
    #[error("not in the family: {0}")]
    NotInFamily(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

pub type Result<T> = std::result::Result<T, AutError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoParams {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub gamma: Scalar,
    pub nu: Scalar,
    pub i: i64,
    pub j: i64,
    pub m: i64,
    pub n: i64,
}

impl RhoParams {
    pub fn unit(i: i64, j: i64, m: i64, n: i64) -> Self {
        RhoParams { lambda: Scalar::one(), mu: Scalar::one(), gamma: Scalar::one(), nu: Scalar::one(), i, j, m, n }
    }

    pub fn det(&self) -> i64 {
        self.i * self.n - self.j * self.m
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.i, self.j], [self.m, self.n]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutTag {
    OqTau,
    OqXi(i64),
    OqEta(Scalar, Scalar, Scalar),
    UqSigma,
    UqXi(i64),
    UqEta(Scalar, Scalar, Scalar),
    DqRho(RhoParams),
    /// `τ_a^k` on `C`.
    CTauA(i64),
    /// `τ_K^k` on `A`.
    ATauK(i64),
    AToCPhi,
    CToAPhiInv,
}

impl AutTag {
    pub fn home(&self) -> &'static str {
        match self {
            AutTag::OqTau | AutTag::OqXi(_) | AutTag::OqEta(..) => "Oq",
            AutTag::UqSigma | AutTag::UqXi(_) | AutTag::UqEta(..) => "Uq",
            AutTag::DqRho(_) => "Dq",
            AutTag::CTauA(_) | AutTag::CToAPhiInv => "C",
            AutTag::ATauK(_) | AutTag::AToCPhi => "A",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let s = |x: &Scalar| x.to_string();
        match self {
            AutTag::OqTau => json!({"family": "Oq.tau"}),
            AutTag::OqXi(i) => json!({"family": "Oq.xi", "i": i}),
            AutTag::OqEta(a, b, c) => json!({"family": "Oq.eta", "alpha": s(a), "beta": s(b), "gamma": s(c)}),
            AutTag::UqSigma => json!({"family": "Uq.sigma"}),
            AutTag::UqXi(i) => json!({"family": "Uq.xi", "i": i}),
            AutTag::UqEta(a, b, c) => json!({"family": "Uq.eta", "alpha": s(a), "beta": s(b), "gamma": s(c)}),
            AutTag::DqRho(p) => json!({
                "family": "Dq.rho",
                "lambda": s(&p.lambda), "mu": s(&p.mu), "gamma": s(&p.gamma), "nu": s(&p.nu),
                "i": p.i, "j": p.j, "m": p.m, "n": p.n,
            }),
            AutTag::CTauA(k) => json!({"family": "C.tau_a", "power": k}),
            AutTag::ATauK(k) => json!({"family": "A.tau_K", "power": k}),
            AutTag::AToCPhi => json!({"family": "A_to_C.Phi"}),
            AutTag::CToAPhiInv => json!({"family": "C_to_A.Phi_inv"}),
        }
    }
}

fn mono(n: usize, entries: &[(usize, i64)]) -> Vec<i32> {
    let mut m = vec![0; n];
    for (g, e) in entries {
        m[*g] += i32::try_from(*e).expect("small exponent");
    }
    m
}

fn nonzero(s: &Scalar, name: &'static str) -> Result<()> {
    if s.is_zero() {
        Err(AutError::ZeroScalar(name))
    } else {
        Ok(())
    }
}

/// q-exponents of `ρ(b)` and `ρ(c)` as printed with the family.
pub fn printed_exponents(i: i64, j: i64, m: i64, n: i64) -> (i64, i64) {
    (i * j + 2 * m * n - 3 * i * n - 2 * j + 3 * n, i * n + 3 * m * n - j - n)
}

// Dq generator positions.
const K: usize = 0;
const A: usize = 1;
const E: usize = 2;
const C: usize = 3;
const F: usize = 4;
const B: usize = 5;

fn rho_shape(p: &RhoParams, eb: i64, ec: i64) -> Vec<Element> {
    let (i, j, m, n) = (p.i, p.j, p.m, p.n);
    let sc = |e: i64| Scalar::q_pow(i32::try_from(e).expect("small exponent"));
    let inv = |s: &Scalar| s.inv().expect("nonzero");
    vec![
        Element::term(mono(6, &[(K, i), (A, j)]), p.lambda.clone()),
        Element::term(mono(6, &[(K, m), (A, n)]), p.mu.clone()),
        Element::term(mono(6, &[(K, -2 * m), (A, -2 * n + 2), (E, 1)]), p.nu.clone()),
        Element::term(
            mono(6, &[(K, i + m - 1), (A, j + n - 1), (C, 1)]),
            p.lambda.mul_ref(&inv(&p.mu)).mul_ref(&inv(&p.nu)).mul_ref(&sc(ec)),
        ),
        Element::term(mono(6, &[(K, -i + 2 * m + 1), (A, -j + 2 * n - 2), (F, 1)]), p.gamma.clone()),
        Element::term(mono(6, &[(K, i - m - 1), (A, j - n + 1), (B, 1)]), p.mu.mul_ref(&inv(&p.gamma)).mul_ref(&sc(eb))),
    ]
}

fn q_exponent(s: &Scalar, what: &str) -> Result<i64> {
    s.as_q_power().map(i64::from).ok_or_else(|| AutError::NotInFamily(format!("{what}: scalar {s} is not a power of q")))
}

/// Solves the q-exponents of `ρ(b)` and `ρ(c)` from `Fb - q^-1 bF = a` and
/// `Ec - cE = a^-1 K` with unit scalars.
pub fn solved_exponents(i: i64, j: i64, m: i64, n: i64) -> Result<(i64, i64)> {
    let dq = catalog::spec("Dq")?;
    let p = RhoParams::unit(i, j, m, n);
    let im = rho_shape(&p, 0, 0);
    let lb = dq.commutator_q(&im[F], &im[B], &Scalar::q_pow(-1))?;
    let (_, cb) = lb.single().ok_or_else(|| AutError::NotInFamily("F*b relation is not a monomial".into()))?;
    let target = &im[A];
    let (_, ct) = target.single().expect("monomial");
    let eb = q_exponent(&ct.div_ref(cb).map_err(PbwError::from)?, "rho(b)")?;
    let lc = dq.commutator_q(&im[E], &im[C], &Scalar::one())?;
    let (_, cc) = lc.single().ok_or_else(|| AutError::NotInFamily("E*c relation is not a monomial".into()))?;
    let rhs = dq.mul(&dq.unit_inverse(&im[A])?, &im[K])?;
    let (_, cr) = rhs.single().expect("monomial");
    let ec = q_exponent(&cr.div_ref(cc).map_err(PbwError::from)?, "rho(c)")?;
    Ok((eb, ec))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentNote {
    pub printed: (i64, i64),
    pub solved: (i64, i64),
}

impl ExponentNote {
    pub fn agree(&self) -> bool {
        self.printed == self.solved
    }
}

pub fn exponent_note(i: i64, j: i64, m: i64, n: i64) -> Result<ExponentNote> {
    Ok(ExponentNote { printed: printed_exponents(i, j, m, n), solved: solved_exponents(i, j, m, n)? })
}

fn rho(p: &RhoParams) -> Result<MorphismSpec> {
    if p.det() != 1 {
        return Err(AutError::Det { i: p.i, j: p.j, m: p.m, n: p.n, det: p.det() });
    }
    nonzero(&p.lambda, "lambda")?;
    nonzero(&p.mu, "mu")?;
    nonzero(&p.gamma, "gamma")?;
    nonzero(&p.nu, "nu")?;
    let note = exponent_note(p.i, p.j, p.m, p.n)?;
    let (eb, ec) = if note.agree() { note.printed } else { note.solved };
    let dq = catalog::spec("Dq")?;
    Ok(MorphismSpec::new("rho", dq.clone(), dq, rho_shape(p, eb, ec), false)?)
}

fn diagonal(spec: &Arc<AlgebraSpec>, name: &str, entries: &[(usize, Scalar, Vec<(usize, i64)>)]) -> Result<MorphismSpec> {
    let n = spec.ngens();
    let images = entries
        .iter()
        .map(|(g, s, extra)| {
            let mut e = extra.clone();
            e.push((*g, 1));
            Element::term(mono(n, &e), s.clone())
        })
        .collect();
    Ok(MorphismSpec::new(name, spec.clone(), spec.clone(), images, false)?)
}

fn q(e: i64) -> Scalar {
    Scalar::q_pow(i32::try_from(e).expect("small exponent"))
}

/// `τ_a(g) = q^e g` on `C = (K, x1, y1, x2, y2)`.
pub const TAU_A_EXPONENTS: [i32; 5] = [-1, 0, -1, 1, -1];
/// `τ_K(g) = q^e g` on `A = (a, E, w, t1, t2)`.
pub const TAU_K_EXPONENTS: [i32; 5] = [1, -2, 3, 2, -2];

/// Generator images of a family member.
pub fn make(tag: &AutTag) -> Result<MorphismSpec> {
    let one = Scalar::one;
    match tag {
        AutTag::OqTau => {
            let s = catalog::spec("Oq")?;
            diagonal(&s, "Oq.tau", &[(0, one(), vec![]), (2, one(), vec![]), (1, one(), vec![])])
        }
        AutTag::OqXi(i) => {
            let s = catalog::spec("Oq")?;
            diagonal(&s, "Oq.xi", &[(0, one(), vec![]), (1, one(), vec![(0, *i)]), (2, one(), vec![(0, *i)])])
        }
        AutTag::OqEta(x, y, z) => {
            nonzero(x, "alpha")?;
            nonzero(y, "beta")?;
            nonzero(z, "gamma")?;
            let s = catalog::spec("Oq")?;
            diagonal(&s, "Oq.eta", &[(0, x.clone(), vec![]), (1, y.clone(), vec![]), (2, z.clone(), vec![])])
        }
        AutTag::UqSigma => {
            let s = catalog::spec("Uq")?;
            let images = vec![
                Element::term(vec![-1, 0, 0], one()),
                Element::term(vec![0, 0, 1], one()),
                Element::term(vec![0, 1, 0], one()),
            ];
            Ok(MorphismSpec::new("Uq.sigma", s.clone(), s, images, false)?)
        }
        AutTag::UqXi(i) => {
            let s = catalog::spec("Uq")?;
            diagonal(&s, "Uq.xi", &[(0, one(), vec![]), (1, one(), vec![(0, *i)]), (2, one(), vec![(0, -*i)])])
        }
        AutTag::UqEta(x, y, z) => {
            nonzero(x, "alpha")?;
            nonzero(y, "beta")?;
            nonzero(z, "gamma")?;
            let s = catalog::spec("Uq")?;
            diagonal(&s, "Uq.eta", &[(0, x.clone(), vec![]), (1, y.clone(), vec![]), (2, z.clone(), vec![])])
        }
        AutTag::DqRho(p) => rho(p),
        AutTag::CTauA(k) => {
            let s = catalog::spec("C")?;
            let e: Vec<_> = TAU_A_EXPONENTS.iter().enumerate().map(|(g, x)| (g, q(i64::from(*x) * k), vec![])).collect();
            diagonal(&s, "C.tau_a", &e)
        }
        AutTag::ATauK(k) => {
            let s = catalog::spec("A")?;
            let e: Vec<_> = TAU_K_EXPONENTS.iter().enumerate().map(|(g, x)| (g, q(i64::from(*x) * k), vec![])).collect();
            diagonal(&s, "A.tau_K", &e)
        }
        AutTag::AToCPhi => {
            let (a, c) = (catalog::spec("A")?, catalog::spec("C")?);
            let images = (0..5).map(|g| c.gen(g)).collect();
            Ok(MorphismSpec::new("Phi", a, c, images, false)?)
        }
        AutTag::CToAPhiInv => {
            let (a, c) = (catalog::spec("A")?, catalog::spec("C")?);
            let images = (0..5).map(|g| a.gen(g)).collect();
            Ok(MorphismSpec::new("Phi^-1", c, a, images, false)?)
        }
    }
}

/// `make` followed by `check_morphism`.
pub fn make_checked(tag: &AutTag) -> Result<(MorphismSpec, MorphismReport)> {
    let f = make(tag)?;
    let r = check_morphism(&f);
    Ok((f, r))
}

/// `f ∘ g`: `g` is applied first.
pub fn compose(f: &MorphismSpec, g: &MorphismSpec) -> Result<MorphismSpec> {
    Ok(f.compose(g)?)
}

fn single_on(f: &MorphismSpec, g: usize) -> Result<(Vec<i32>, Scalar)> {
    let (m, c) = f
        .image(g)
        .single()
        .ok_or_else(|| AutError::NotInFamily(format!("image of {} is not a monomial", f.source.gen_name(g))))?;
    Ok((m.clone(), c.clone()))
}

fn confirm(tag: AutTag, h: &MorphismSpec) -> Result<AutTag> {
    let f = make(&tag)?;
    if f.same_images(h) {
        Ok(tag)
    } else {
        Err(AutError::NotInFamily(format!("{} differs from {}", h.name, tag.to_json())))
    }
}

/// Recovers the family parameters of `h` from its generator images.
pub fn classify(h: &MorphismSpec) -> Result<AutTag> {
    if h.source.id != h.target.id || h.anti {
        return Err(AutError::NotInFamily(format!("{} is not an automorphism", h.name)));
    }
    let not = || AutError::NotInFamily(h.name.clone());
    match h.source.id.as_str() {
        "Dq" => {
            let (mk, lambda) = single_on(h, K)?;
            let (ma, mu) = single_on(h, A)?;
            let (_, nu) = single_on(h, E)?;
            let (_, gamma) = single_on(h, F)?;
            if mk[2..].iter().chain(ma[2..].iter()).any(|e| *e != 0) {
                return Err(not());
            }
            let p = RhoParams {
                lambda,
                mu,
                gamma,
                nu,
                i: mk[0].into(),
                j: mk[1].into(),
                m: ma[0].into(),
                n: ma[1].into(),
            };
            if p.det() != 1 {
                return Err(not());
            }
            confirm(AutTag::DqRho(p), h)
        }
        "Oq" => {
            let (ma, al) = single_on(h, 0)?;
            let (mb, be) = single_on(h, 1)?;
            let (_, ga) = single_on(h, 2)?;
            if ma != [1, 0, 0] {
                return Err(not());
            }
            let i = i64::from(mb[0]);
            let swap = mb[2] == 1;
            let units = al.is_one() && be.is_one() && ga.is_one();
            let tag = match (swap, i, units) {
                (true, 0, true) => AutTag::OqTau,
                (false, _, true) => AutTag::OqXi(i),
                (false, 0, false) => AutTag::OqEta(al, be, ga),
                _ => return Err(not()),
            };
            confirm(tag, h)
        }
        "Uq" => {
            let (mk, al) = single_on(h, 0)?;
            let (me, be) = single_on(h, 1)?;
            let (_, ga) = single_on(h, 2)?;
            let swap = mk[0] == -1;
            let i = i64::from(me[0]);
            let units = al.is_one() && be.is_one() && ga.is_one();
            let tag = match (swap, i, units) {
                (true, 0, true) => AutTag::UqSigma,
                (false, _, true) => AutTag::UqXi(i),
                (false, 0, false) => AutTag::UqEta(al, be, ga),
                _ => return Err(not()),
            };
            confirm(tag, h)
        }
        "C" => {
            let (_, k) = single_on(h, 0)?;
            let e = q_exponent(&k, "tau_a")?;
            confirm(AutTag::CTauA(-e), h)
        }
        "A" => {
            let (_, a) = single_on(h, 0)?;
            let e = q_exponent(&a, "tau_K")?;
            confirm(AutTag::ATauK(e), h)
        }
        _ => Err(not()),
    }
}

/// Inverse of a family member, as a family member.
pub fn invert(tag: &AutTag) -> Result<AutTag> {
    let inv = |s: &Scalar| s.inv().map_err(|e| AutError::Pbw(e.into()));
    Ok(match tag {
        AutTag::OqTau => AutTag::OqTau,
        AutTag::UqSigma => AutTag::UqSigma,
        AutTag::OqXi(i) => AutTag::OqXi(-i),
        AutTag::UqXi(i) => AutTag::UqXi(-i),
        AutTag::OqEta(a, b, c) => AutTag::OqEta(inv(a)?, inv(b)?, inv(c)?),
        AutTag::UqEta(a, b, c) => AutTag::UqEta(inv(a)?, inv(b)?, inv(c)?),
        AutTag::CTauA(k) => AutTag::CTauA(-k),
        AutTag::ATauK(k) => AutTag::ATauK(-k),
        AutTag::AToCPhi => AutTag::CToAPhiInv,
        AutTag::CToAPhiInv => AutTag::AToCPhi,
        AutTag::DqRho(p) => {
            let f = rho(p)?;
            let (i, j, m, n) = (p.n, -p.j, -p.m, p.i);
            let g = rho(&RhoParams::unit(i, j, m, n))?;
            let AutTag::DqRho(t) = classify(&f.compose(&g)?)? else { unreachable!() };
            if t.matrix() != [[1, 0], [0, 1]] {
                return Err(AutError::NotInFamily("inverse matrix".into()));
            }
            let t_inv = rho(&RhoParams {
                lambda: inv(&t.lambda)?,
                mu: inv(&t.mu)?,
                gamma: inv(&t.gamma)?,
                nu: inv(&t.nu)?,
                ..RhoParams::unit(1, 0, 0, 1)
            })?;
            classify(&g.compose(&t_inv)?)?
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalsReport {
    /// `(s, t)` with `ρ(φ) ∈ k* K^s a^t φ`.
    pub phi: (i64, i64),
    pub psi: (i64, i64),
    pub phi_expected: (i64, i64),
    pub psi_expected: (i64, i64),
}

impl NormalsReport {
    pub fn law_holds(&self) -> bool {
        self.phi == self.phi_expected && self.psi == self.psi_expected
    }
}

fn unit_factor(dq: &AlgebraSpec, image: &Element, x: &Element) -> Result<(i64, i64)> {
    let (lm, lc) = dq.leading(image).ok_or_else(|| AutError::NotInFamily("zero image".into()))?;
    let (xm, xc) = dq.leading(x).expect("nonzero");
    let d: Vec<i32> = lm.iter().zip(&xm).map(|(a, b)| a - b).collect();
    if d[2..].iter().any(|e| *e != 0) {
        return Err(AutError::NotInFamily("image is not a unit multiple".into()));
    }
    let c = lc.div_ref(&xc).map_err(PbwError::from)?;
    let unit = Element::term(mono(6, &[(K, d[0].into()), (A, d[1].into())]), c);
    if !dq.mul(&unit, x)?.sub(image).is_zero() {
        return Err(AutError::NotInFamily("image is not a unit multiple".into()));
    }
    Ok((d[0].into(), d[1].into()))
}

/// `ρ(φ)` and `ρ(ψ)` as unit multiples of `φ` and `ψ`.
pub fn action_on_normals(p: &RhoParams) -> Result<NormalsReport> {
    let f = rho(p)?;
    let dq = catalog::spec("Dq")?;
    let phi = catalog::named("phi", "Dq")?;
    let psi = catalog::named("psi", "Dq")?;
    Ok(NormalsReport {
        phi: unit_factor(&dq, &f.apply(&phi)?, &phi)?,
        psi: unit_factor(&dq, &f.apply(&psi)?, &psi)?,
        phi_expected: (p.m, p.n - 1),
        psi_expected: (p.i - p.m - 1, p.j - p.n + 1),
    })
}

/// Compares `τ_a` (resp. `τ_K`) with conjugation by `a` (resp. `K`) inside
/// `Dq`, generator by generator.
pub fn twist_by_conjugation(tag: &AutTag) -> Result<Vec<(String, Option<String>)>> {
    let (sub, unit) = match tag {
        AutTag::CTauA(1) => ("C", A),
        AutTag::ATauK(1) => ("A", K),
        _ => return Err(AutError::NotInFamily("only tau_a and tau_K are conjugations".into())),
    };
    let t = make(tag)?;
    let emb = catalog::embedding(sub, "Dq")?;
    let dq = catalog::spec("Dq")?;
    let u = dq.gen(unit);
    let ui = dq.unit_inverse(&u)?;
    let mut out = Vec::new();
    for g in 0..t.source.ngens() {
        let lhs = emb.apply(t.image(g))?;
        let rhs = dq.mul_all(&[&ui, emb.image(g), &u])?;
        let d = lhs.sub(&rhs);
        out.push((t.source.gen_name(g).to_string(), (!d.is_zero()).then(|| dq.render(&d))));
    }
    Ok(out)
}

/// Applies `Φ` to both sides of every `A` identity that mirrors a `C`
/// identity and compares with that entry.
pub fn phi_transport() -> Result<Vec<(String, Option<String>)>> {
    let phi = make(&AutTag::AToCPhi)?;
    let c = catalog::spec("C")?;
    let suite = catalog::identity_suite();
    let mut out = Vec::new();
    for e in suite.iter().filter(|e| e.algebra == "A") {
        let Some(mid) = &e.mirror else { continue };
        let m = suite
            .iter()
            .find(|x| &x.id == mid)
            .ok_or_else(|| AutError::NotInFamily(format!("missing mirror {mid}")))?;
        let l = phi.apply(&catalog::parse_in("A", &e.lhs)?)?.sub(&catalog::parse_in("C", &m.lhs)?);
        let r = phi.apply(&catalog::parse_in("A", &e.rhs)?)?.sub(&catalog::parse_in("C", &m.rhs)?);
        let d = l.add(&r);
        let res = if l.is_zero() && r.is_zero() { None } else { Some(c.render(&d)) };
        out.push((format!("{} -> {}", e.id, mid), res));
    }
    Ok(out)
}

/// Uniform `SL_2(Z)` matrix with entries in `[-bound, bound]`.
pub fn random_sl2(rng: &mut impl Rng, bound: i64) -> (i64, i64, i64, i64) {
    loop {
        let v: Vec<i64> = (0..4).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v[0] * v[3] - v[1] * v[2] == 1 {
            return (v[0], v[1], v[2], v[3]);
        }
    }
}

/// Nonzero scalar `±k q^e` with small `k` and `e`.
pub fn random_unit_scalar(rng: &mut impl Rng) -> Scalar {
    let k = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let d = rng.gen_range(1..=3);
    (Scalar::int(k) / Scalar::int(d)) * Scalar::q_pow(rng.gen_range(-3..=3))
}

pub fn random_rho(rng: &mut impl Rng, bound: i64) -> RhoParams {
    let (i, j, m, n) = random_sl2(rng, bound);
    RhoParams {
        lambda: random_unit_scalar(rng),
        mu: random_unit_scalar(rng),
        gamma: random_unit_scalar(rng),
        nu: random_unit_scalar(rng),
        i,
        j,
        m,
        n,
    }
}
