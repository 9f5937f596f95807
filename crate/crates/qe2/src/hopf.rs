//! Hopf structure on `Oq` and `Uq`, the pairing action of `Uq` on `Oq`, and
//! the cross relations it induces in `Dq`.

use crate::catalog;
use crate::pbw::{check_morphism, AlgebraSpec, Element, MorphismSpec, PbwError};
use crate::scalar::qbinom;
use crate::Scalar;
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    Oq,
    Uq,
}

impl Which {
    pub fn id(self) -> &'static str {
        match self {
            Which::Oq => "Oq",
            Which::Uq => "Uq",
        }
    }
}

/// `k` commuting copies of `spec`; generator `g` of copy `j` is `g_j`.
pub fn tensor_power(spec: &AlgebraSpec, k: usize) -> AlgebraSpec {
    let n = spec.ngens();
    let names: Vec<(String, bool)> = (1..=k)
        .flat_map(|c| spec.gens().iter().map(move |g| (format!("{}_{c}", g.name), g.invertible)))
        .collect();
    let refs: Vec<(&str, bool)> = names.iter().map(|(s, i)| (s.as_str(), *i)).collect();
    let id = if spec.id == "Oq" && k == 2 { "Oq2".to_string() } else { format!("{}^{k}", spec.id) };
    let mut t = AlgebraSpec::new(&id, &refs);
    for c in 0..k {
        for (l, r, rule) in spec.rules() {
            let corr = place(&rule.correction, n, c, k);
            t.set_rule(c * n + l, c * n + r, rule.coeff.clone(), corr);
        }
        for d in 0..c {
            for l in 0..n {
                for r in 0..n {
                    t.skew(c * n + l, d * n + r, Scalar::one());
                }
            }
        }
    }
    t
}

/// Moves an element of an `n`-generator algebra into copy `copy` of a `k`-fold tensor power.
pub fn place(x: &Element, n: usize, copy: usize, k: usize) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.terms() {
        let mut big = vec![0; n * k];
        big[copy * n..copy * n + n].copy_from_slice(m);
        out.add_term(big, c.clone());
    }
    out
}

/// Splits a tensor-power monomial into its per-copy monomials.
pub fn split(m: &[i32], n: usize) -> Vec<Vec<i32>> {
    m.chunks(n).map(|c| c.to_vec()).collect()
}

pub struct HopfData {
    pub which: Which,
    pub spec: Arc<AlgebraSpec>,
    pub t2: Arc<AlgebraSpec>,
    pub t3: Arc<AlgebraSpec>,
    pub delta: MorphismSpec,
    pub antipode: MorphismSpec,
    pub counit: MorphismSpec,
}

fn tensor_text(left: &str, right: &str) -> String {
    format!("{left}*{right}")
}

fn build(which: Which) -> HopfData {
    let spec = catalog::spec(which.id()).expect("catalog algebra");
    let t2 = Arc::new(tensor_power(&spec, 2));
    let t3 = Arc::new(tensor_power(&spec, 3));
    let (delta_txt, s_txt, eps): (Vec<String>, Vec<&str>, Vec<&str>) = match which {
        Which::Oq => (
            vec![
                tensor_text("a_1", "a_2"),
                format!("{} + {}", tensor_text("b_1", "a_2^-1"), tensor_text("a_1", "b_2")),
                format!("{} + {}", tensor_text("c_1", "a_2"), tensor_text("a_1^-1", "c_2")),
            ],
            vec!["a^-1", "-q^-1*b", "-q*c"],
            vec!["1", "0", "0"],
        ),
        Which::Uq => (
            vec![
                tensor_text("K_1", "K_2"),
                format!("{} + E_2", tensor_text("E_1", "K_2")),
                format!("F_1 + {}", tensor_text("K_1^-1", "F_2")),
            ],
            vec!["K^-1", "-E*K^-1", "-K*F"],
            vec!["1", "0", "0"],
        ),
    };
    let parse = |t: &str, s: &AlgebraSpec| crate::parse::parse_element(t, s, &()).expect("structure map text");
    let delta = MorphismSpec::new(
        "delta",
        spec.clone(),
        t2.clone(),
        delta_txt.iter().map(|t| parse(t, &t2)).collect(),
        false,
    )
    .expect("delta");
    let antipode =
        MorphismSpec::new("antipode", spec.clone(), spec.clone(), s_txt.iter().map(|t| parse(t, &spec)).collect(), true)
            .expect("antipode");
    let ground = Arc::new(AlgebraSpec::new("k", &[]));
    let counit =
        MorphismSpec::new("counit", spec.clone(), ground.clone(), eps.iter().map(|t| parse(t, &ground)).collect(), false)
            .expect("counit");
    HopfData { which, spec, t2, t3, delta, antipode, counit }
}

static OQ: OnceLock<HopfData> = OnceLock::new();
static UQ: OnceLock<HopfData> = OnceLock::new();

pub fn hopf(which: Which) -> &'static HopfData {
    match which {
        Which::Oq => OQ.get_or_init(|| build(Which::Oq)),
        Which::Uq => UQ.get_or_init(|| build(Which::Uq)),
    }
}

pub fn coproduct(x: &Element, which: Which) -> Result<Element, PbwError> {
    hopf(which).delta.apply(x)
}

pub fn counit(x: &Element, which: Which) -> Result<Scalar, PbwError> {
    Ok(hopf(which).counit.apply(x)?.as_scalar().expect("ground field"))
}

pub fn antipode(x: &Element, which: Which) -> Result<Element, PbwError> {
    hopf(which).antipode.apply(x)
}

impl HopfData {
    fn n(&self) -> usize {
        self.spec.ngens()
    }

    /// `Δ ⊗ id` or `id ⊗ Δ` as a map from the square to the cube.
    pub fn delta_leg(&self, left: bool) -> MorphismSpec {
        let n = self.n();
        let mut images = Vec::with_capacity(2 * n);
        for copy in 0..2 {
            for g in 0..n {
                let im = if left == (copy == 0) {
                    let d = self.delta.image(g);
                    let off = if left { 0 } else { 1 };
                    let mut out = Element::zero();
                    for (m, c) in d.terms() {
                        let mut big = vec![0; 3 * n];
                        big[off * n..off * n + 2 * n].copy_from_slice(m);
                        out.add_term(big, c.clone());
                    }
                    out
                } else {
                    let dest = if left { 2 } else { 0 };
                    place(&self.spec.gen(g), n, dest, 3)
                };
                images.push(im);
            }
        }
        let name = if left { "delta⊗id" } else { "id⊗delta" };
        MorphismSpec::new(name, self.t2.clone(), self.t3.clone(), images, false).expect("unit images")
    }

    /// `ε ⊗ id` (left) or `id ⊗ ε` as a map from the square back to the algebra.
    pub fn counit_leg(&self, left: bool) -> MorphismSpec {
        let n = self.n();
        let mut images = Vec::with_capacity(2 * n);
        for copy in 0..2 {
            for g in 0..n {
                if left == (copy == 0) {
                    let e = self.counit.image(g).as_scalar().expect("scalar counit");
                    images.push(self.spec.scalar(e));
                } else {
                    images.push(self.spec.gen(g));
                }
            }
        }
        MorphismSpec::new("counit-leg", self.t2.clone(), self.spec.clone(), images, false).expect("unit images")
    }

    /// `m ∘ (S ⊗ id)` (left) or `m ∘ (id ⊗ S)` applied termwise to a square element.
    pub fn antipode_contract(&self, x: &Element, left: bool) -> Result<Element, PbwError> {
        let n = self.n();
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let parts = split(m, n);
            let l = Element::term(parts[0].clone(), Scalar::one());
            let r = Element::term(parts[1].clone(), Scalar::one());
            let (l, r) = if left { (self.antipode.apply(&l)?, r) } else { (l, self.antipode.apply(&r)?) };
            out = out.add(&self.spec.mul(&l, &r)?.scale(c));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Default)]
pub struct AxiomResult {
    pub label: String,
    pub residue: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct HopfReport {
    pub algebra: String,
    pub results: Vec<AxiomResult>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.residue.is_none())
    }
}

/// Coassociativity, counit and both antipode axioms on every generator, plus
/// the homomorphism checks for `Δ`, `ε` and `S`.
pub fn check_hopf_axioms(which: Which) -> HopfReport {
    let h = hopf(which);
    let mut rep = HopfReport { algebra: which.id().into(), results: Vec::new() };
    for m in [&h.delta, &h.antipode, &h.counit] {
        let r = check_morphism(m);
        rep.results.push(AxiomResult {
            label: format!("{} respects relations", m.name),
            residue: (!r.passed()).then(|| format!("{:?}", r.failures)),
        });
    }
    let mut push = |label: String, res: Result<Element, PbwError>, spec: &AlgebraSpec| {
        let residue = match res {
            Ok(x) if x.is_zero() => None,
            Ok(x) => Some(spec.render(&x)),
            Err(e) => Some(format!("error: {e}")),
        };
        rep.results.push(AxiomResult { label, residue });
    };
    let left = h.delta_leg(true);
    let right = h.delta_leg(false);
    let el = h.counit_leg(true);
    let er = h.counit_leg(false);
    for g in 0..h.n() {
        let name = h.spec.gen_name(g).to_string();
        let x = h.spec.gen(g);
        let d = h.delta.image(g).clone();
        push(format!("coassociativity {name}"), (|| Ok(left.apply(&d)?.sub(&right.apply(&d)?)))(), &h.t3);
        push(format!("left counit {name}"), (|| Ok(el.apply(&d)?.sub(&x)))(), &h.spec);
        push(format!("right counit {name}"), (|| Ok(er.apply(&d)?.sub(&x)))(), &h.spec);
        let eps = h.counit.image(g).as_scalar().expect("scalar counit");
        let one = h.spec.scalar(eps);
        push(format!("left antipode {name}"), (|| Ok(h.antipode_contract(&d, true)?.sub(&one)))(), &h.spec);
        push(format!("right antipode {name}"), (|| Ok(h.antipode_contract(&d, false)?.sub(&one)))(), &h.spec);
    }
    rep
}

// ---------------------------------------------------------------------------
// action of Uq on Oq

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ULetter {
    One,
    K,
    Kinv,
    E,
    F,
}

impl ULetter {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "K" => ULetter::K,
            "Kinv" | "K^-1" => ULetter::Kinv,
            "E" => ULetter::E,
            "F" => ULetter::F,
            "1" => ULetter::One,
            _ => return None,
        })
    }

    pub fn text(self) -> &'static str {
        match self {
            ULetter::One => "1",
            ULetter::K => "K",
            ULetter::Kinv => "K^-1",
            ULetter::E => "E",
            ULetter::F => "F",
        }
    }

    fn counit(self) -> i64 {
        match self {
            ULetter::One | ULetter::K | ULetter::Kinv => 1,
            _ => 0,
        }
    }

    /// Coproduct as `(coefficient, left, right)` triples.
    pub fn coproduct(self) -> Vec<(ULetter, ULetter)> {
        match self {
            ULetter::One => vec![(ULetter::One, ULetter::One)],
            ULetter::K => vec![(ULetter::K, ULetter::K)],
            ULetter::Kinv => vec![(ULetter::Kinv, ULetter::Kinv)],
            ULetter::E => vec![(ULetter::E, ULetter::K), (ULetter::One, ULetter::E)],
            ULetter::F => vec![(ULetter::F, ULetter::One), (ULetter::Kinv, ULetter::F)],
        }
    }
}

/// Oq letters: `(generator index in Oq, ±1)`.
type OLetter = (usize, i32);

/// `⟨u, x⟩` on generators and inverses.
pub fn pairing(u: ULetter, x: OLetter) -> Scalar {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    match (u, x) {
        (ULetter::One, (A, _)) => Scalar::one(),
        (ULetter::K, (A, e)) => Scalar::q_pow(-e),
        (ULetter::Kinv, (A, e)) => Scalar::q_pow(e),
        (ULetter::E, (C, 1)) | (ULetter::F, (B, 1)) => Scalar::one(),
        _ => Scalar::zero(),
    }
}

fn oq_letter_coproduct(x: OLetter) -> Vec<(OLetter, OLetter)> {
    match x {
        (0, e) => vec![((0, e), (0, e))],
        (1, _) => vec![((1, 1), (0, -1)), ((0, 1), (1, 1))],
        (2, _) => vec![((2, 1), (0, 1)), ((0, -1), (2, 1))],
        _ => unreachable!("Oq has three generators"),
    }
}

fn act_word(u: ULetter, w: &[OLetter], oq: &AlgebraSpec) -> Result<Element, PbwError> {
    match w {
        [] => Ok(oq.scalar(Scalar::int(u.counit()))),
        [x] => {
            let mut out = Element::zero();
            for (x1, x2) in oq_letter_coproduct(*x) {
                let p = pairing(u, x2);
                if !p.is_zero() {
                    out = out.add(&oq.nf_word(&[x1])?.scale(&p));
                }
            }
            Ok(out)
        }
        [x, rest @ ..] => {
            let mut out = Element::zero();
            for (u1, u2) in u.coproduct() {
                let l = act_word(u1, std::slice::from_ref(x), oq)?;
                if l.is_zero() {
                    continue;
                }
                let r = act_word(u2, rest, oq)?;
                out = out.add(&oq.mul(&l, &r)?);
            }
            Ok(out)
        }
    }
}

/// `u · x` for a single `Uq` letter.
pub fn act_letter(u: ULetter, x: &Element) -> Result<Element, PbwError> {
    let oq = catalog::spec("Oq").expect("Oq");
    let mut out = Element::zero();
    for (m, c) in x.terms() {
        let w: Vec<OLetter> = oq
            .mono_to_word(m)
            .into_iter()
            .flat_map(|(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
            .collect();
        out = out.add(&act_word(u, &w, &oq)?.scale(c));
    }
    Ok(out)
}

/// `u · x` for `u` in `Uq`, letters applied right to left.
pub fn act(u: &Element, x: &Element) -> Result<Element, PbwError> {
    let uq = catalog::spec("Uq").expect("Uq");
    let mut out = Element::zero();
    for (m, c) in u.terms() {
        let mut letters = Vec::new();
        for (g, e) in uq.mono_to_word(m) {
            let l = match (g, e > 0) {
                (0, true) => ULetter::K,
                (0, false) => ULetter::Kinv,
                (1, _) => ULetter::E,
                _ => ULetter::F,
            };
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        let mut v = x.clone();
        for l in letters.iter().rev() {
            v = act_letter(*l, &v)?;
        }
        out = out.add(&v.scale(c));
    }
    Ok(out)
}

/// `Σ (u₁·x) u₂` in `Dq` for a `Uq` letter and an `Oq` generator name.
pub fn cross_relation(u: &str, x: &str) -> Result<Element, PbwError> {
    let ul = ULetter::parse(u).ok_or_else(|| PbwError::UnknownGenerator(u.into()))?;
    let oq = catalog::spec("Oq").expect("Oq");
    let dq = catalog::spec("Dq").expect("Dq");
    let inc = catalog::embedding("Oq", "Dq").expect("Oq in Dq");
    let xe = oq.gen_named(x)?;
    let mut out = Element::zero();
    for (u1, u2) in ul.coproduct() {
        let part = act_letter(u1, &xe)?;
        if part.is_zero() {
            continue;
        }
        let right = crate::parse::parse_element(u2.text(), &dq, &()).map_err(PbwError::from)?;
        out = out.add(&dq.mul(&inc.apply(&part)?, &right)?);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DeltaPower {
    pub m: u32,
    pub n: u32,
    pub direct: Element,
    pub closed: Element,
}

impl DeltaPower {
    pub fn equal(&self) -> bool {
        self.direct == self.closed
    }
}

pub const DELTA_POWER_CAP: u32 = 8;

/// `Δ(x)^m Δ(y)^n` for `x = ab`, `y = ca^-1`, against the q-binomial double sum.
pub fn delta_power(m: u32, n: u32) -> Result<DeltaPower, PbwError> {
    if m > DELTA_POWER_CAP || n > DELTA_POWER_CAP {
        return Err(PbwError::Spec(format!("delta_power cap is {DELTA_POWER_CAP}")));
    }
    let h = hopf(Which::Oq);
    let oq = &h.spec;
    let t2 = &h.t2;
    let x = catalog::named("x", "Oq").expect("x");
    let y = catalog::named("y", "Oq").expect("y");
    let dx = h.delta.apply(&x)?;
    let dy = h.delta.apply(&y)?;
    let direct = t2.mul(&t2.pow(&dx, m as i64)?, &t2.pow(&dy, n as i64)?)?;
    let a = oq.gen(0);
    let k = oq.ngens();
    let mut closed = Element::zero();
    for i in 0..=m {
        for j in 0..=n {
            let coef = qbinom(m, i, 2)?.mul_ref(&qbinom(n, j, 2)?);
            let left = oq.mul_all(&[
                &oq.pow(&x, i as i64)?,
                &oq.pow(&a, 2 * m as i64 - 2 * (i + j) as i64)?,
                &oq.pow(&y, (n - j) as i64)?,
            ])?;
            let right = oq.mul(&oq.pow(&x, (m - i) as i64)?, &oq.pow(&y, j as i64)?)?;
            let term = t2.mul(&place(&left, k, 0, 2), &place(&right, k, 1, 2))?;
            closed = closed.add(&term.scale(&coef));
        }
    }
    Ok(DeltaPower { m, n, direct, closed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oq(t: &str) -> Element {
        catalog::parse_in("Oq", t).unwrap()
    }

    #[test]
    fn coproduct_of_b() {
        let h = hopf(Which::Oq);
        let d = coproduct(&oq("b"), Which::Oq).unwrap();
        let want = crate::parse::parse_element("b_1*a_2^-1 + a_1*b_2", &h.t2, &()).unwrap();
        assert_eq!(d, want);
        assert_eq!(coproduct(&oq("1"), Which::Oq).unwrap(), h.t2.one());
    }

    #[test]
    fn action_table() {
        assert_eq!(act_letter(ULetter::E, &oq("c")).unwrap(), oq("a^-1"));
        assert!(act_letter(ULetter::F, &oq("a")).unwrap().is_zero());
        assert_eq!(act_letter(ULetter::F, &oq("b^2")).unwrap(), oq("(1+q^-2)*a*b"));
        assert_eq!(act_letter(ULetter::K, &oq("b")).unwrap(), oq("q*b"));
    }

    #[test]
    fn cross_examples() {
        let dq = |t: &str| catalog::parse_in("Dq", t).unwrap();
        assert_eq!(cross_relation("F", "b").unwrap(), dq("q^-1*b*F + a"));
        assert_eq!(cross_relation("E", "a").unwrap(), dq("a*E"));
        assert_eq!(cross_relation("E", "c").unwrap(), dq("c*E + a^-1*K"));
    }

    #[test]
    fn hopf_axioms_hold() {
        assert!(check_hopf_axioms(Which::Oq).passed(), "{:?}", check_hopf_axioms(Which::Oq));
        assert!(check_hopf_axioms(Which::Uq).passed(), "{:?}", check_hopf_axioms(Which::Uq));
    }

    #[test]
    fn delta_power_small() {
        for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (3, 2)] {
            assert!(delta_power(m, n).unwrap().equal(), "({m},{n})");
        }
        assert!(delta_power(9, 0).is_err());
    }
}
