//! Exact coefficient field: rational functions in `q` and a small set of
//! formal parameters, with arbitrary-precision integer coefficients.
//!
//! Every variable is treated as transcendental and invertible, so numerators
//! are Laurent polynomials. Denominators are ordinary polynomials with no
//! monomial factor and a positive leading coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::RwLock;

pub const MAX_VARS: usize = 12;
pub type Exps = [i32; MAX_VARS];

const STANDARD: [&str; 9] = [
    "q", "chi", "alpha", "beta", "gamma", "zeta", "mu", "lambda", "nu",
];

static NAMES: RwLock<Vec<String>> = RwLock::new(Vec::new());

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("too many parameters (limit {MAX_VARS})")]
    TooManyParams,
    #[error("division by zero")]
    DivisionByZero,
    #[error("m > n in q-binomial ({m} > {n})")]
    BinomialRange { n: u32, m: u32 },
}

fn with_names<R>(f: impl FnOnce(&mut Vec<String>) -> R) -> R {
    let mut g = NAMES.write().unwrap_or_else(|e| e.into_inner());
    if g.is_empty() {
        g.extend(STANDARD.iter().map(|s| s.to_string()));
    }
    f(&mut g)
}

/// Index of a declared parameter.
pub fn var_index(name: &str) -> Option<usize> {
    with_names(|n| n.iter().position(|s| s == name))
}

/// Declares a parameter, returning its index. Idempotent.
pub fn declare(name: &str) -> Result<usize, ScalarError> {
    with_names(|n| {
        if let Some(i) = n.iter().position(|s| s == name) {
            return Ok(i);
        }
        if n.len() >= MAX_VARS {
            return Err(ScalarError::TooManyParams);
        }
        n.push(name.to_string());
        Ok(n.len() - 1)
    })
}

pub fn var_name(i: usize) -> String {
    with_names(|n| n.get(i).cloned().unwrap_or_else(|| format!("p{i}")))
}

/// Ordered parameter list; `q` is always index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamRing {
    names: Vec<String>,
}

impl ParamRing {
    pub fn standard() -> Self {
        with_names(|_| ());
        ParamRing { names: STANDARD.iter().map(|s| s.to_string()).collect() }
    }

    pub fn with_params(extra: &[&str]) -> Result<Self, ScalarError> {
        let mut r = Self::standard();
        for p in extra {
            declare(p)?;
            if !r.names.iter().any(|s| s == p) {
                r.names.push(p.to_string());
            }
        }
        Ok(r)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|s| s == name)
    }
}

// ---------------------------------------------------------------------------
// Laurent polynomials

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Exps, BigInt>,
}

const ZERO_EXPS: Exps = [0; MAX_VARS];

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut r = *a;
    for i in 0..MAX_VARS {
        r[i] += b[i];
    }
    r
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, ZERO_EXPS)
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn monomial(c: BigInt, e: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    pub fn var(i: usize, power: i32) -> Self {
        let mut e = ZERO_EXPS;
        e[i] = power;
        Self::monomial(BigInt::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ZERO_EXPS).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn single_term(&self) -> Option<(&Exps, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c);
        }
        r
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some((e, c)) = self.single_term() {
            return o.mul_term(c, e);
        }
        if let Some((e, c)) = o.single_term() {
            return self.mul_term(c, e);
        }
        let mut r = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(add_exps(e1, e2), c1 * c2);
            }
        }
        r
    }

    pub fn mul_term(&self, c: &BigInt, e: &Exps) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e2, c2)| (add_exps(e, e2), c * c2)).collect() }
    }

    pub fn shift(&self, e: &Exps) -> Poly {
        Poly { terms: self.terms.iter().map(|(e2, c2)| (add_exps(e, e2), c2.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(c, &ZERO_EXPS)
    }

    fn div_int(&self, c: &BigInt) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, x)| (*e, x / c)).collect() }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn min_exps(&self) -> Exps {
        let mut m = ZERO_EXPS;
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                m = *e;
                first = false;
            } else {
                for i in 0..MAX_VARS {
                    m[i] = m[i].min(e[i]);
                }
            }
        }
        m
    }

    pub fn only_q(&self) -> bool {
        self.terms.keys().all(|e| e[1..].iter().all(|x| *x == 0))
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] != 0)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut r = Poly::one();
        let mut b = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                r = r.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_exps(e);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

fn render_exps(e: &Exps) -> String {
    let mut parts = Vec::new();
    for (i, x) in e.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        let n = var_name(i);
        if *x == 1 {
            parts.push(n);
        } else {
            parts.push(format!("{n}^{x}"));
        }
    }
    parts.join("*")
}

// ---------------------------------------------------------------------------
// dense univariate helpers over Z, ascending coefficients

type UPoly = Vec<BigInt>;

fn utrim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn ucontent(a: &UPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn uprim(a: UPoly) -> UPoly {
    let c = ucontent(&a);
    if c.is_zero() || c.is_one() {
        return a;
    }
    a.into_iter().map(|x| x / &c).collect()
}

fn uprem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        r = utrim(r);
    }
    r
}

fn ugcd(a: UPoly, b: UPoly) -> UPoly {
    let mut a = uprim(utrim(a));
    let mut b = uprim(utrim(b));
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = uprem(&a, &b);
        a = b;
        b = uprim(r);
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        a = a.into_iter().map(|x| -x).collect();
    }
    a
}

fn udivexact(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut quo = vec![BigInt::zero(); r.len() - db];
    for k in (0..quo.len()).rev() {
        let c = &r[k + db] / &b[db];
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[k + i] -= &c * bc;
            }
        }
        quo[k] = c;
    }
    utrim(quo)
}

/// Splits a polynomial into groups by the non-q part of the exponent,
/// each group a dense polynomial in q with a shift.
fn q_groups(p: &Poly) -> BTreeMap<Exps, (i32, UPoly)> {
    let mut raw: BTreeMap<Exps, Vec<(i32, BigInt)>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut rest = *e;
        rest[0] = 0;
        raw.entry(rest).or_default().push((e[0], c.clone()));
    }
    raw.into_iter()
        .map(|(k, v)| {
            let lo = v.iter().map(|x| x.0).min().unwrap_or(0);
            let hi = v.iter().map(|x| x.0).max().unwrap_or(0);
            let mut d = vec![BigInt::zero(); (hi - lo + 1) as usize];
            for (x, c) in v {
                d[(x - lo) as usize] = c;
            }
            (k, (lo, d))
        })
        .collect()
}

fn from_q_groups(g: BTreeMap<Exps, (i32, UPoly)>) -> Poly {
    let mut p = Poly::zero();
    for (k, (lo, d)) in g {
        for (i, c) in d.into_iter().enumerate() {
            let mut e = k;
            e[0] = lo + i as i32;
            p.add_term(e, c);
        }
    }
    p
}

// ---------------------------------------------------------------------------
// fractions

/// Element of the coefficient field.
#[derive(Clone)]
pub struct ScalarFraction {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Default for ScalarFraction {
    fn default() -> Self {
        Self::zero()
    }
}

impl ScalarFraction {
    pub fn zero() -> Self {
        ScalarFraction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        ScalarFraction { num: Poly::constant(BigInt::from(n)), den: Poly::one() }
    }

    pub fn big(n: BigInt) -> Self {
        ScalarFraction { num: Poly::constant(n), den: Poly::one() }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::var_pow(0, e)
    }

    pub fn var_pow(i: usize, e: i32) -> Self {
        ScalarFraction { num: Poly::var(i, e), den: Poly::one() }
    }

    /// A declared parameter by name, registering it if needed.
    pub fn param(name: &str) -> Result<Self, ScalarError> {
        Ok(Self::var_pow(declare(name)?, 1))
    }

    pub fn from_poly(p: Poly) -> Self {
        ScalarFraction { num: p, den: Poly::one() }
    }

    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut s = ScalarFraction { num, den };
        s.normalize();
        Ok(s)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// `Some((c, e))` when the value is `c * x^e` with integer `c`.
    pub fn as_monomial(&self) -> Option<(BigInt, Exps)> {
        if !self.den.is_one() {
            return None;
        }
        self.num.single_term().map(|(e, c)| (c.clone(), *e))
    }

    /// `Some(e)` when the value is exactly `q^e`.
    pub fn as_q_power(&self) -> Option<i32> {
        let (c, e) = self.as_monomial()?;
        if c.is_one() && e[1..].iter().all(|x| *x == 0) {
            Some(e[0])
        } else {
            None
        }
    }

    fn unit_monomial(&self) -> Option<(bool, Exps)> {
        let (c, e) = self.as_monomial()?;
        if c.is_one() {
            Some((false, e))
        } else if (-&c).is_one() {
            Some((true, e))
        } else {
            None
        }
    }

    /// Brings the fraction to canonical form.
    pub fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let m = self.den.min_exps();
        if m != ZERO_EXPS {
            let neg: Exps = std::array::from_fn(|i| -m[i]);
            self.den = self.den.shift(&neg);
            self.num = self.num.shift(&neg);
        }
        if self.den.single_term().is_none() && self.den.only_q() {
            let dg = q_groups(&self.den);
            let (_, (_, dd)) = dg.into_iter().next().expect("nonzero denominator");
            let mut ng = q_groups(&self.num);
            let mut g = dd.clone();
            for (_, (_, d)) in ng.iter() {
                g = ugcd(g, d.clone());
                if g.len() <= 1 {
                    break;
                }
            }
            if g.len() > 1 {
                let nd = udivexact(&dd, &g);
                for (_, (_, d)) in ng.iter_mut() {
                    *d = udivexact(d, &g);
                }
                self.num = from_q_groups(ng);
                let mut den = Poly::zero();
                for (i, c) in nd.into_iter().enumerate() {
                    let mut e = ZERO_EXPS;
                    e[0] = i as i32;
                    den.add_term(e, c);
                }
                let m2 = den.min_exps();
                if m2 != ZERO_EXPS {
                    let neg: Exps = std::array::from_fn(|i| -m2[i]);
                    den = den.shift(&neg);
                    self.num = self.num.shift(&neg);
                }
                self.den = den;
            }
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() && !c.is_zero() {
            self.num = self.num.div_int(&c);
            self.den = self.den.div_int(&c);
        }
        if self.den.leading_coeff().is_some_and(|c| c.is_negative()) {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        if self.num == self.den {
            self.num = Poly::one();
            self.den = Poly::one();
        }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return ScalarFraction { num: self.num.add(&o.num), den: Poly::one() };
        }
        let mut r = if self.den == o.den {
            ScalarFraction { num: self.num.add(&o.num), den: self.den.clone() }
        } else {
            ScalarFraction {
                num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
                den: self.den.mul(&o.den),
            }
        };
        r.normalize();
        r
    }

    pub fn neg_ref(&self) -> Self {
        ScalarFraction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some((neg, e)) = self.unit_monomial() {
            let n = o.num.shift(&e);
            return ScalarFraction { num: if neg { n.neg() } else { n }, den: o.den.clone() };
        }
        if let Some((neg, e)) = o.unit_monomial() {
            let n = self.num.shift(&e);
            return ScalarFraction { num: if neg { n.neg() } else { n }, den: self.den.clone() };
        }
        let mut r = ScalarFraction { num: self.num.mul(&o.num), den: self.den.mul(&o.den) };
        if !(r.den.is_one()) {
            r.normalize();
        }
        r
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some((neg, e)) = self.unit_monomial() {
            let ne: Exps = std::array::from_fn(|i| -e[i]);
            let n = Poly::monomial(if neg { -BigInt::one() } else { BigInt::one() }, ne);
            return Ok(ScalarFraction { num: n, den: Poly::one() });
        }
        let mut r = ScalarFraction { num: self.den.clone(), den: self.num.clone() };
        r.normalize();
        Ok(r)
    }

    pub fn div_ref(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        if e == 0 {
            return Ok(Self::one());
        }
        if let Some((neg, ex)) = self.unit_monomial() {
            let k = e as i32;
            let ne: Exps = std::array::from_fn(|i| ex[i] * k);
            let sign = if neg && e.rem_euclid(2) == 1 { -BigInt::one() } else { BigInt::one() };
            return Ok(ScalarFraction { num: Poly::monomial(sign, ne), den: Poly::one() });
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        let mut r = ScalarFraction {
            num: base.num.pow(n),
            den: base.den.pow(n),
        };
        r.normalize();
        Ok(r)
    }

    pub fn eq_ref(&self, o: &Self) -> bool {
        if self.den.is_one() && o.den.is_one() {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Substitutes `value` for parameter `var`.
    pub fn specialize(&self, var: usize, value: &ScalarFraction) -> Result<Self, ScalarError> {
        let n = eval_poly(&self.num, var, value)?;
        let d = eval_poly(&self.den, var, value)?;
        n.div_ref(&d)
    }

    pub fn specialize_named(&self, name: &str, value: &ScalarFraction) -> Result<Self, ScalarError> {
        match var_index(name) {
            Some(i) => self.specialize(i, value),
            None => Ok(self.clone()),
        }
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    /// True when the value is a product of a nonzero integer and variables.
    pub fn is_monomial(&self) -> bool {
        self.as_monomial().is_some()
    }

    /// A total order on canonical forms, used only for deterministic output.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        let a = (self.num.terms.iter().collect::<Vec<_>>(), self.den.terms.iter().collect::<Vec<_>>());
        let b = (o.num.terms.iter().collect::<Vec<_>>(), o.den.terms.iter().collect::<Vec<_>>());
        a.cmp(&b)
    }
}

fn eval_poly(p: &Poly, var: usize, value: &ScalarFraction) -> Result<ScalarFraction, ScalarError> {
    let mut acc = ScalarFraction::zero();
    for (e, c) in p.terms() {
        let mut rest = *e;
        let k = rest[var];
        rest[var] = 0;
        let term = ScalarFraction::from_poly(Poly::monomial(c.clone(), rest)).mul_ref(&value.pow(k as i64)?);
        acc = acc.add_ref(&term);
    }
    Ok(acc)
}

impl PartialEq for ScalarFraction {
    fn eq(&self, o: &Self) -> bool {
        self.eq_ref(o)
    }
}

impl Eq for ScalarFraction {}

impl From<i64> for ScalarFraction {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&ScalarFraction> for &ScalarFraction {
            type Output = ScalarFraction;
            fn $m(self, o: &ScalarFraction) -> ScalarFraction {
                self.$f(o)
            }
        }
        impl $tr<ScalarFraction> for ScalarFraction {
            type Output = ScalarFraction;
            fn $m(self, o: ScalarFraction) -> ScalarFraction {
                (&self).$f(&o)
            }
        }
        impl $tr<&ScalarFraction> for ScalarFraction {
            type Output = ScalarFraction;
            fn $m(self, o: &ScalarFraction) -> ScalarFraction {
                (&self).$f(o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Div<&ScalarFraction> for &ScalarFraction {
    type Output = ScalarFraction;
    fn div(self, o: &ScalarFraction) -> ScalarFraction {
        self.div_ref(o).expect("division by zero scalar")
    }
}

impl Div<ScalarFraction> for ScalarFraction {
    type Output = ScalarFraction;
    fn div(self, o: ScalarFraction) -> ScalarFraction {
        &self / &o
    }
}

impl Neg for ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        self.neg_ref()
    }
}

impl Neg for &ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        self.neg_ref()
    }
}

impl Zero for ScalarFraction {
    fn zero() -> Self {
        ScalarFraction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ScalarFraction {
    fn one() -> Self {
        ScalarFraction::one()
    }
}

impl num_traits::Inv for ScalarFraction {
    type Output = ScalarFraction;
    fn inv(self) -> ScalarFraction {
        ScalarFraction::inv(&self).expect("inverse of zero scalar")
    }
}

/// Gaussian binomial coefficient `[n choose m]` at base `q^base_exp`.
pub fn qbinom(n: u32, m: u32, base_exp: i32) -> Result<ScalarFraction, ScalarError> {
    if m > n {
        return Err(ScalarError::BinomialRange { n, m });
    }
    let poch = |k: u32| -> ScalarFraction {
        let mut acc = ScalarFraction::one();
        for i in 1..=k {
            acc = acc.mul_ref(&ScalarFraction::one().sub_ref(&ScalarFraction::q_pow(base_exp * i as i32)));
        }
        acc
    };
    poch(n).div_ref(&poch(m).mul_ref(&poch(n - m)))
}

/// `(1 - t^n) / (1 - t)` with `t = q^base_exp`, expanded.
pub fn qint(n: i64, base_exp: i32) -> ScalarFraction {
    let mut acc = ScalarFraction::zero();
    if n >= 0 {
        for k in 0..n {
            acc = acc.add_ref(&ScalarFraction::q_pow(base_exp * k as i32));
        }
    } else {
        for k in n..0 {
            acc = acc.sub_ref(&ScalarFraction::q_pow(base_exp * k as i32));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> ScalarFraction {
        ScalarFraction::q_pow(e)
    }

    fn one() -> ScalarFraction {
        ScalarFraction::one()
    }

    #[test]
    fn reciprocal_sum_is_one() {
        let a = one().div_ref(&(one() - q(2))).unwrap();
        let b = one().div_ref(&(one() - q(-2))).unwrap();
        assert_eq!(a + b, one());
    }

    #[test]
    fn exact_division_reduces() {
        let x = (one() - q(2)).div_ref(&(one() - q(1))).unwrap();
        assert!(x.denom().is_one());
        assert_eq!(x, one() + q(1));
        assert_ne!(q(-1), q(1));
    }

    #[test]
    fn zero_is_canonical() {
        let z = q(3) - q(3);
        assert!(z.numer().is_zero());
        assert!(z.denom().is_one());
    }

    #[test]
    fn normalize_idempotent() {
        let chi = ScalarFraction::param("chi").unwrap();
        let x = (chi.clone() * (one() - q(4))).div_ref(&(q(2) - q(6))).unwrap();
        let mut y = x.clone();
        y.normalize();
        assert_eq!(x.render(), y.render());
    }

    #[test]
    fn qbinom_small() {
        assert_eq!(qbinom(3, 1, 2).unwrap(), one() + q(2) + q(4));
        assert_eq!(qbinom(2, 1, 1).unwrap(), one() + q(1));
        assert_eq!(qbinom(5, 0, 3).unwrap(), one());
        assert!(qbinom(1, 2, 1).is_err());
    }

    #[test]
    fn qint_matches_fraction() {
        for n in 1..6 {
            let f = (one() - q(-2 * n as i32)).div_ref(&(one() - q(-2))).unwrap();
            assert_eq!(qint(n, -2), f);
        }
    }

    #[test]
    fn specialization() {
        let chi = ScalarFraction::param("chi").unwrap();
        let x = chi.clone() * chi.clone() + q(1);
        let v = x.specialize_named("chi", &ScalarFraction::int(3)).unwrap();
        assert_eq!(v, ScalarFraction::int(9) + q(1));
    }

    #[test]
    fn render_shapes() {
        assert_eq!(q(-2).render(), "q^-2");
        assert_eq!((one() + q(-2) + q(-4)).render(), "1 + q^-2 + q^-4");
        assert_eq!(ScalarFraction::zero().render(), "0");
    }
}
