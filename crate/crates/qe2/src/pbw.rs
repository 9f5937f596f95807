//! PBW presentations and normal-form rewriting.
//!
//! Words are lists of syllables `(generator, exponent)`. A word is normal when
//! no adjacent pair of syllables has a rule; for the catalog algebras that
//! means the generators appear in increasing order.

use crate::scalar::{ParamRing, ScalarError};
use crate::Scalar;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub const STEP_CAP: usize = 1_000_000;

pub type Mono = Vec<i32>;
pub type Word = Vec<(usize, i32)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PbwError {
    #[error("generator {0} is not invertible")]
    NotInvertible(String),
    #[error("rewrite cap of {0} steps exceeded")]
    StepCap(usize),
    #[error("no rule for {0}*{1}")]
    MissingRule(String, String),
    #[error("rule {0}*{1} cannot move negative powers")]
    NegativeSplit(String, String),
    #[error("{0} is not a scalar times a unit monomial")]
    NotUnit(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("invalid presentation: {0}")]
    Spec(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T> = std::result::Result<T, PbwError>;

// ---------------------------------------------------------------------------

/// Finite linear combination of PBW monomials.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Mono, Scalar>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn term(mono: Mono, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(mono, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[i32]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Element) -> Element {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg_ref());
        }
        r
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul_ref(s))).collect() }
    }

    /// `Some(c)` when the element is `c` times the empty monomial.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.iter().all(|e| *e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn single(&self) -> Option<(&Mono, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> std::result::Result<Scalar, ScalarError>) -> Result<Element> {
        let mut r = Element::zero();
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c)?);
        }
        Ok(r)
    }
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub invertible: bool,
}

/// `l * r -> coeff * r * l + correction`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub coeff: Scalar,
    pub correction: Element,
}

#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub id: String,
    gens: Vec<Generator>,
    rules: Vec<Option<Rule>>,
    pub params: ParamRing,
}

impl AlgebraSpec {
    /// Empty presentation; rules are added with [`AlgebraSpec::set_rule`].
    pub fn new(id: &str, gens: &[(&str, bool)]) -> Self {
        let n = gens.len();
        AlgebraSpec {
            id: id.to_string(),
            gens: gens.iter().map(|(s, i)| Generator { name: s.to_string(), invertible: *i }).collect(),
            rules: vec![None; n * n],
            params: ParamRing::standard(),
        }
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn gen_name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.gens[i].invertible
    }

    pub fn rule(&self, l: usize, r: usize) -> Option<&Rule> {
        self.rules[l * self.ngens() + r].as_ref()
    }

    pub fn set_rule(&mut self, l: usize, r: usize, coeff: Scalar, correction: Element) {
        let n = self.ngens();
        self.rules[l * n + r] = Some(Rule { coeff, correction });
    }

    pub fn skew(&mut self, l: usize, r: usize, coeff: Scalar) {
        self.set_rule(l, r, coeff, Element::zero());
    }

    /// All stored rules as `(l, r, rule)`.
    pub fn rules(&self) -> impl Iterator<Item = (usize, usize, &Rule)> {
        let n = self.ngens();
        self.rules.iter().enumerate().filter_map(move |(k, r)| r.as_ref().map(|r| (k / n, k % n, r)))
    }

    pub fn nontrivial_rule_count(&self) -> usize {
        self.rules()
            .filter(|(_, _, r)| !(r.coeff.is_one() && r.correction.is_zero()))
            .count()
    }

    /// Checks that the rule table is total on out-of-order pairs and that
    /// in-order rules have no swap term.
    pub fn validate(&self) -> Result<()> {
        let n = self.ngens();
        for l in 0..n {
            for r in 0..n {
                match (l.cmp(&r), self.rule(l, r)) {
                    (std::cmp::Ordering::Greater, None) => {
                        return Err(PbwError::MissingRule(self.gen_name(l).into(), self.gen_name(r).into()))
                    }
                    (std::cmp::Ordering::Less, Some(rule)) if !rule.coeff.is_zero() => {
                        return Err(PbwError::Spec(format!(
                            "in-order rule {}*{} must not reorder",
                            self.gen_name(l),
                            self.gen_name(r)
                        )))
                    }
                    (std::cmp::Ordering::Equal, Some(_)) => {
                        return Err(PbwError::Spec("rule on a repeated generator".into()))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    // -- construction of elements

    pub fn one(&self) -> Element {
        Element::term(vec![0; self.ngens()], Scalar::one())
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::term(vec![0; self.ngens()], c)
    }

    pub fn gen(&self, i: usize) -> Element {
        let mut m = vec![0; self.ngens()];
        m[i] = 1;
        Element::term(m, Scalar::one())
    }

    pub fn gen_named(&self, name: &str) -> Result<Element> {
        let i = self.gen_index(name).ok_or_else(|| PbwError::UnknownGenerator(name.into()))?;
        Ok(self.gen(i))
    }

    pub fn mono_to_word(&self, m: &[i32]) -> Word {
        m.iter().enumerate().filter(|(_, e)| **e != 0).map(|(i, e)| (i, *e)).collect()
    }

    fn word_to_mono(&self, w: &Word) -> Mono {
        let mut m = vec![0; self.ngens()];
        for (g, e) in w {
            m[*g] += e;
        }
        m
    }

    fn clean_word(&self, w: Word) -> Result<Word> {
        let mut out: Word = Vec::with_capacity(w.len());
        for (g, e) in w {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.0 == g => {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        for (g, e) in &out {
            if *e < 0 && !self.is_invertible(*g) {
                return Err(PbwError::NotInvertible(self.gen_name(*g).into()));
            }
        }
        Ok(out)
    }

    fn reducible(&self, w: &Word) -> Option<usize> {
        (0..w.len().saturating_sub(1)).find(|&p| {
            let (l, r) = (w[p].0, w[p + 1].0);
            l > r || self.rule(l, r).is_some()
        })
    }

    fn push(&self, pool: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let w = self.clean_word(w)?;
        match pool.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    fn rewrite(&self, w: &Word, p: usize, coef: &Scalar, pool: &mut BTreeMap<Word, Scalar>) -> Result<()> {
        let (l, m) = w[p];
        let (r, n) = w[p + 1];
        let rule = self
            .rule(l, r)
            .ok_or_else(|| PbwError::MissingRule(self.gen_name(l).into(), self.gen_name(r).into()))?;
        let head = &w[..p];
        let tail = &w[p + 2..];
        if rule.correction.is_zero() {
            let c = rule.coeff.pow(m as i64 * n as i64)?;
            let mut nw = head.to_vec();
            nw.push((r, n));
            nw.push((l, m));
            nw.extend_from_slice(tail);
            return self.push(pool, nw, coef.mul_ref(&c));
        }
        if m < 1 || n < 1 {
            return Err(PbwError::NegativeSplit(self.gen_name(l).into(), self.gen_name(r).into()));
        }
        let build = |mid: &[(usize, i32)]| {
            let mut nw = head.to_vec();
            nw.push((l, m - 1));
            nw.extend_from_slice(mid);
            nw.push((r, n - 1));
            nw.extend_from_slice(tail);
            nw
        };
        if !rule.coeff.is_zero() {
            self.push(pool, build(&[(r, 1), (l, 1)]), coef.mul_ref(&rule.coeff))?;
        }
        for (mono, c) in rule.correction.terms() {
            self.push(pool, build(&self.mono_to_word(mono)), coef.mul_ref(c))?;
        }
        Ok(())
    }

    fn reduce_pool(&self, mut pool: BTreeMap<Word, Scalar>) -> Result<Element> {
        let mut out = Element::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = pool.pop_last() {
            match self.reducible(&w) {
                None => out.add_term(self.word_to_mono(&w), c),
                Some(p) => {
                    steps += 1;
                    if steps > STEP_CAP {
                        return Err(PbwError::StepCap(STEP_CAP));
                    }
                    self.rewrite(&w, p, &c, &mut pool)?;
                }
            }
        }
        Ok(out)
    }

    /// Normal form of a raw word.
    pub fn nf_word(&self, w: &[(usize, i32)]) -> Result<Element> {
        self.nf_words(std::iter::once((w.to_vec(), Scalar::one())))
    }

    /// Normal form of a linear combination of raw words.
    pub fn nf_words(&self, words: impl IntoIterator<Item = (Word, Scalar)>) -> Result<Element> {
        let mut pool = BTreeMap::new();
        for (w, c) in words {
            for (g, _) in &w {
                if *g >= self.ngens() {
                    return Err(PbwError::UnknownGenerator(format!("#{g}")));
                }
            }
            self.push(&mut pool, w, c)?;
        }
        self.reduce_pool(pool)
    }

    /// Re-normalizes an element whose monomials are read as ordered words.
    pub fn normal_form(&self, x: &Element) -> Result<Element> {
        self.nf_words(x.terms().map(|(m, c)| (self.mono_to_word(m), c.clone())))
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.is_zero() || y.is_zero() {
            return Ok(Element::zero());
        }
        let mut words = Vec::with_capacity(x.len() * y.len());
        for (m1, c1) in x.terms() {
            let w1 = self.mono_to_word(m1);
            for (m2, c2) in y.terms() {
                let mut w = w1.clone();
                w.extend(self.mono_to_word(m2));
                words.push((w, c1.mul_ref(c2)));
            }
        }
        self.nf_words(words)
    }

    pub fn mul_all(&self, xs: &[&Element]) -> Result<Element> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `x*y - c*y*x`
    pub fn commutator_q(&self, x: &Element, y: &Element, c: &Scalar) -> Result<Element> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?.scale(c)))
    }

    pub fn pow(&self, x: &Element, e: i64) -> Result<Element> {
        let base = if e < 0 { self.unit_inverse(x)? } else { x.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    /// Inverse of `c * m` where `m` only involves invertible generators.
    pub fn unit_inverse(&self, x: &Element) -> Result<Element> {
        let (m, c) = x.single().ok_or_else(|| PbwError::NotUnit(self.render(x)))?;
        if m.iter().enumerate().any(|(i, e)| *e != 0 && !self.is_invertible(i)) {
            return Err(PbwError::NotUnit(self.render(x)));
        }
        let w: Word = self.mono_to_word(m).into_iter().rev().map(|(g, e)| (g, -e)).collect();
        Ok(self.nf_word(&w)?.scale(&c.inv()?))
    }

    pub fn is_unit(&self, x: &Element) -> bool {
        x.single()
            .is_some_and(|(m, _)| m.iter().enumerate().all(|(i, e)| *e == 0 || self.is_invertible(i)))
    }

    /// Degree counting only non-invertible generators.
    pub fn filtration_degree(&self, m: &[i32]) -> i64 {
        m.iter()
            .enumerate()
            .filter(|(i, _)| !self.is_invertible(*i))
            .map(|(_, e)| *e as i64)
            .sum()
    }

    /// Leading monomial: largest filtration degree, ties broken lexicographically.
    pub fn leading(&self, x: &Element) -> Option<(Mono, Scalar)> {
        x.terms()
            .max_by(|a, b| {
                self.filtration_degree(a.0).cmp(&self.filtration_degree(b.0)).then_with(|| a.0.cmp(b.0))
            })
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    // -- rendering

    pub fn render_mono(&self, m: &[i32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(i, e)| if *e == 1 { self.gen_name(i).to_string() } else { format!("{}^{}", self.gen_name(i), e) })
            .collect();
        parts.join("*")
    }

    /// Terms in lexicographic order; coefficients other than 1 in parentheses.
    pub fn render(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .terms()
            .map(|(m, c)| {
                let mono = self.render_mono(m);
                match (mono.is_empty(), c.is_one()) {
                    (true, true) => "1".to_string(),
                    (true, false) => format!("({c})"),
                    (false, true) => mono,
                    (false, false) => format!("({c})*{mono}"),
                }
            })
            .collect();
        parts.join(" + ")
    }

    // -- random data for property checks

    pub fn random_mono(&self, rng: &mut impl Rng, max_deg: u32) -> Mono {
        let mut m = vec![0; self.ngens()];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            let g = rng.gen_range(0..self.ngens());
            if self.is_invertible(g) && rng.gen_bool(0.3) {
                m[g] -= 1;
            } else {
                m[g] += 1;
            }
        }
        m
    }

    pub fn random_element(&self, rng: &mut impl Rng, nterms: usize, max_deg: u32) -> Element {
        let mut x = Element::zero();
        for _ in 0..nterms {
            let mut c = rng.gen_range(1..=3i64);
            if rng.gen_bool(0.5) {
                c = -c;
            }
            let s = Scalar::int(c).mul_ref(&Scalar::q_pow(rng.gen_range(-2..=2)));
            x.add_term(self.random_mono(rng, max_deg), s);
        }
        x
    }
}

// ---------------------------------------------------------------------------

/// Generator images defining a (anti-)homomorphism between presentations.
#[derive(Clone, Debug)]
pub struct MorphismSpec {
    pub name: String,
    pub source: Arc<AlgebraSpec>,
    pub target: Arc<AlgebraSpec>,
    images: Vec<Element>,
    inverses: Vec<Option<Element>>,
    pub anti: bool,
}

impl MorphismSpec {
    pub fn new(
        name: &str,
        source: Arc<AlgebraSpec>,
        target: Arc<AlgebraSpec>,
        images: Vec<Element>,
        anti: bool,
    ) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(PbwError::Spec(format!(
                "{name}: {} images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        let mut inverses = Vec::with_capacity(images.len());
        for (i, im) in images.iter().enumerate() {
            if source.is_invertible(i) {
                inverses.push(Some(target.unit_inverse(im).map_err(|_| {
                    PbwError::NotUnit(format!("{name}({}) = {}", source.gen_name(i), target.render(im)))
                })?));
            } else {
                inverses.push(None);
            }
        }
        Ok(MorphismSpec { name: name.to_string(), source, target, images, inverses, anti })
    }

    pub fn identity(spec: Arc<AlgebraSpec>) -> Self {
        let images = (0..spec.ngens()).map(|i| spec.gen(i)).collect();
        MorphismSpec::new("id", spec.clone(), spec, images, false).expect("identity images are units")
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &Element {
        &self.images[g]
    }

    fn power_image(&self, g: usize, e: i32) -> Result<Element> {
        let base = if e < 0 {
            self.inverses[g]
                .clone()
                .ok_or_else(|| PbwError::NotInvertible(self.source.gen_name(g).into()))?
        } else {
            self.images[g].clone()
        };
        let mut acc = self.target.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.target.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        let mut cache: BTreeMap<(usize, i32), Element> = BTreeMap::new();
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let mut w = self.source.mono_to_word(m);
            if self.anti {
                w.reverse();
            }
            let mut acc = self.target.scalar(c.clone());
            for (g, e) in w {
                if !cache.contains_key(&(g, e)) {
                    let p = self.power_image(g, e)?;
                    cache.insert((g, e), p);
                }
                acc = self.target.mul(&acc, &cache[&(g, e)])?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// `self ∘ g`, so `g` is applied first.
    pub fn compose(&self, g: &MorphismSpec) -> Result<MorphismSpec> {
        if g.target.id != self.source.id {
            return Err(PbwError::Spec(format!("cannot compose {} after {}", self.name, g.name)));
        }
        let images = g.images.iter().map(|im| self.apply(im)).collect::<Result<Vec<_>>>()?;
        MorphismSpec::new(
            &format!("{}∘{}", self.name, g.name),
            g.source.clone(),
            self.target.clone(),
            images,
            self.anti ^ g.anti,
        )
    }

    /// True when every generator image agrees with `o`.
    pub fn same_images(&self, o: &MorphismSpec) -> bool {
        self.anti == o.anti && self.images == o.images
    }
}

#[derive(Clone, Debug, Default)]
pub struct RelationFailure {
    pub relation: String,
    pub residue: String,
}

#[derive(Clone, Debug, Default)]
pub struct MorphismReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Maps every defining rule (and `g*g^-1 = 1`) through `f` and collects
/// nonzero residues.
pub fn check_morphism(f: &MorphismSpec) -> MorphismReport {
    let src = &f.source;
    let tgt = &f.target;
    let mut rep = MorphismReport { name: f.name.clone(), ..Default::default() };
    let mut record = |label: String, res: Result<Element>| match res {
        Ok(r) if r.is_zero() => {}
        Ok(r) => rep.failures.push(RelationFailure { relation: label, residue: tgt.render(&r) }),
        Err(e) => rep.failures.push(RelationFailure { relation: label, residue: format!("error: {e}") }),
    };
    let mut checked = 0;
    for (l, r, rule) in src.rules() {
        checked += 1;
        let label = format!(
            "{}*{} = ({})*{}*{} + {}",
            src.gen_name(l),
            src.gen_name(r),
            rule.coeff,
            src.gen_name(r),
            src.gen_name(l),
            src.render(&rule.correction)
        );
        let res = (|| {
            let (fl, fr) = (f.image(l), f.image(r));
            let (lhs, swapped) = if f.anti {
                (tgt.mul(fr, fl)?, tgt.mul(fl, fr)?)
            } else {
                (tgt.mul(fl, fr)?, tgt.mul(fr, fl)?)
            };
            Ok(lhs.sub(&swapped.scale(&rule.coeff)).sub(&f.apply(&rule.correction)?))
        })();
        record(label, res);
    }
    for g in 0..src.ngens() {
        if !src.is_invertible(g) {
            continue;
        }
        checked += 1;
        let res = (|| {
            let inv = f.power_image(g, -1)?;
            let a = tgt.mul(f.image(g), &inv)?.sub(&tgt.one());
            let b = tgt.mul(&inv, f.image(g))?.sub(&tgt.one());
            Ok(a.add(&b))
        })();
        record(format!("{0}*{0}^-1 = 1", src.gen_name(g)), res);
    }
    rep.checked = checked;
    rep
}

#[derive(Clone, Debug, Default)]
pub struct DiamondReport {
    pub algebra: String,
    pub generator_triples: usize,
    pub random_triples: usize,
    pub failures: Vec<(String, String)>,
}

impl DiamondReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares both associations of products over all generator triples and
/// `random` seeded monomial triples of degree at most `degree_cap`.
pub fn diamond_check(spec: &AlgebraSpec, degree_cap: u32, random: usize, seed: u64) -> DiamondReport {
    let n = spec.ngens();
    let mut rep = DiamondReport { algebra: spec.id.clone(), ..Default::default() };
    let test = |x: &Element, y: &Element, z: &Element, rep: &mut DiamondReport| {
        let res = (|| {
            let l = spec.mul(&spec.mul(x, y)?, z)?;
            let r = spec.mul(x, &spec.mul(y, z)?)?;
            Ok::<_, PbwError>(l.sub(&r))
        })();
        let label = || format!("({})*({})*({})", spec.render(x), spec.render(y), spec.render(z));
        match res {
            Ok(d) if d.is_zero() => {}
            Ok(d) => rep.failures.push((label(), spec.render(&d))),
            Err(e) => rep.failures.push((label(), format!("error: {e}"))),
        }
    };
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                test(&spec.gen(k), &spec.gen(j), &spec.gen(i), &mut rep);
                rep.generator_triples += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let m: Vec<Element> = (0..3)
            .map(|_| Element::term(spec.random_mono(&mut rng, degree_cap), Scalar::one()))
            .collect();
        let m: Vec<Element> = m.iter().map(|x| spec.normal_form(x).unwrap_or_default()).collect();
        test(&m[0], &m[1], &m[2], &mut rep);
        rep.random_triples += 1;
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> AlgebraSpec {
        let mut s = AlgebraSpec::new("plane", &[("x", false), ("y", false)]);
        s.skew(1, 0, Scalar::q_pow(-2));
        s
    }

    fn weyl() -> AlgebraSpec {
        let mut s = AlgebraSpec::new("weyl", &[("x", false), ("d", false)]);
        let one = s.one();
        s.set_rule(1, 0, Scalar::one(), one);
        s
    }

    #[test]
    fn skew_swap_power() {
        let s = plane();
        let r = s.nf_word(&[(1, 2), (0, 3)]).unwrap();
        assert_eq!(r, Element::term(vec![3, 2], Scalar::q_pow(-12)));
    }

    #[test]
    fn weyl_straightening() {
        let s = weyl();
        let r = s.nf_word(&[(1, 1), (0, 2)]).unwrap();
        let mut want = Element::term(vec![2, 1], Scalar::one());
        want.add_term(vec![1, 0], Scalar::int(2));
        assert_eq!(r, want);
        assert!(diamond_check(&s, 3, 20, 1).passed());
    }

    #[test]
    fn inverse_of_non_invertible_rejected() {
        let s = plane();
        assert!(matches!(s.nf_word(&[(0, -1)]), Err(PbwError::NotInvertible(_))));
    }

    #[test]
    fn render_terms() {
        let s = weyl();
        let r = s.nf_word(&[(1, 1), (0, 1)]).unwrap();
        assert_eq!(s.render(&r), "1 + x*d");
        assert_eq!(s.render(&Element::zero()), "0");
    }

    #[test]
    fn corrupted_rule_found() {
        let mut s = AlgebraSpec::new("bad", &[("x", false), ("y", false), ("z", false)]);
        s.skew(1, 0, Scalar::q_pow(1));
        s.skew(2, 1, Scalar::q_pow(1));
        let x = s.gen(0);
        s.set_rule(2, 0, Scalar::one(), x);
        assert!(!diamond_check(&s, 3, 0, 0).passed());
    }

    #[test]
    fn step_cap_trips_on_loop() {
        let mut s = AlgebraSpec::new("loop", &[("x", false), ("y", false)]);
        let mut yx = Element::zero();
        yx.add_term(vec![1, 1], Scalar::one());
        s.set_rule(1, 0, Scalar::zero(), yx.clone());
        s.set_rule(0, 1, Scalar::zero(), yx);
        assert!(matches!(s.nf_word(&[(1, 1), (0, 1)]), Err(PbwError::StepCap(_))));
    }
}
