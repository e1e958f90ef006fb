//! Sparse graded polynomials over the integers or a prime field.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use smallvec::SmallVec;

use super::coeff::{BaseRing, Coefficient};
use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 12]>;

/// A monomial: exponent vector indexed by the generator table, with its
/// weight cached. Ordering is by weight first, then lexicographic on the
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub weight: u32,
    pub exps: Exponents,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            weight: 0,
            exps: SmallVec::from_elem(0, n),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            weight: self.weight + other.weight,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when every exponent allows it.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial {
            weight: self.weight - other.weight,
            exps,
        })
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    fn padded(&self, n: usize) -> Monomial {
        if self.exps.len() == n {
            return self.clone();
        }
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial {
            weight: self.weight,
            exps,
        }
    }
}

/// Generator table plus coefficient ring. Tables are only ever extended at
/// the end, so a polynomial over a prefix table embeds positionally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    base: BaseRing,
    names: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(base: BaseRing, gens: &[(S, u32)]) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            base,
            names: gens.iter().map(|(n, _)| n.as_ref().to_string()).collect(),
            weights: gens.iter().map(|(_, w)| *w).collect(),
        })
    }

    /// A new table with `extra` generators appended.
    pub fn extend<S: AsRef<str>>(&self, extra: &[(S, u32)]) -> Arc<PolyRing> {
        let mut r = self.clone();
        for (n, w) in extra {
            r.names.push(n.as_ref().to_string());
            r.weights.push(*w);
        }
        Arc::new(r)
    }

    pub fn with_base(&self, base: BaseRing) -> Arc<PolyRing> {
        let mut r = self.clone();
        r.base = base;
        Arc::new(r)
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same base and `self`'s generators are an initial segment of `other`'s.
    pub fn embeds_in(&self, other: &PolyRing) -> bool {
        self.base == other.base
            && self.names.len() <= other.names.len()
            && self.names.iter().zip(&other.names).all(|(a, b)| a == b)
            && self.weights.iter().zip(&other.weights).all(|(a, b)| a == b)
    }

    pub fn monomial_from_exps(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.ngens());
        let weight = exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum();
        Monomial {
            weight,
            exps: exps.iter().copied().collect(),
        }
    }

    pub fn gen(self: &Arc<Self>, i: usize) -> GradedPolynomial {
        let mut exps = vec![0; self.ngens()];
        exps[i] = 1;
        GradedPolynomial::monomial(self, self.monomial_from_exps(&exps), self.base.one())
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<GradedPolynomial> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::Unknown(name.to_string()))?;
        Ok(self.gen(i))
    }

    pub fn gens(self: &Arc<Self>) -> Vec<GradedPolynomial> {
        (0..self.ngens()).map(|i| self.gen(i)).collect()
    }

    pub fn zero(self: &Arc<Self>) -> GradedPolynomial {
        GradedPolynomial::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> GradedPolynomial {
        self.constant(1)
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> GradedPolynomial {
        self.scalar(self.base.from_i64(c))
    }

    pub fn scalar(self: &Arc<Self>, c: Coefficient) -> GradedPolynomial {
        GradedPolynomial::monomial(self, Monomial::one(self.ngens()), c)
    }

    /// All monomials of exact weight `w` in the generators listed in `gens`
    /// (every one of which must have positive weight). Returned ascending.
    pub fn monomials_of_weight_in(&self, gens: &[usize], w: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.ngens()];
        self.enumerate(gens, 0, w, &mut exps, &mut out);
        out.sort();
        out
    }

    pub fn monomials_of_weight(&self, w: u32) -> Vec<Monomial> {
        let gens: Vec<usize> = (0..self.ngens()).collect();
        self.monomials_of_weight_in(&gens, w)
    }

    fn enumerate(
        &self,
        gens: &[usize],
        k: usize,
        rest: u32,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if k == gens.len() {
            if rest == 0 {
                out.push(self.monomial_from_exps(exps));
            }
            return;
        }
        let g = gens[k];
        let w = self.weights[g];
        assert!(w > 0, "cannot enumerate monomials in a weight-zero generator");
        let mut e = 0;
        while e * w <= rest {
            exps[g] = e;
            self.enumerate(gens, k + 1, rest - e * w, exps, out);
            e += 1;
        }
        exps[g] = 0;
    }

    pub fn monomial_text(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Smallest ring containing both operands, if one table embeds in the other.
pub fn common_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> Result<Arc<PolyRing>> {
    if Arc::ptr_eq(a, b) || a == b {
        return Ok(a.clone());
    }
    if a.base != b.base {
        return Err(Error::MixedModuli);
    }
    if a.embeds_in(b) {
        Ok(b.clone())
    } else if b.embeds_in(a) {
        Ok(a.clone())
    } else {
        Err(Error::IncompatibleRings(format!(
            "{:?} vs {:?}",
            a.names, b.names
        )))
    }
}

/// An element of a polynomial ring. No stored coefficient is zero.
#[derive(Clone, Debug)]
pub struct GradedPolynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl PartialEq for GradedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            return self.terms == other.terms;
        }
        match common_ring(&self.ring, &other.ring) {
            Ok(r) => self.embed(&r).terms == other.embed(&r).terms,
            Err(_) => false,
        }
    }
}

impl Eq for GradedPolynomial {}

impl GradedPolynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        GradedPolynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coefficient) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coefficient)>>(
        ring: &Arc<PolyRing>,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn base(&self) -> BaseRing {
        self.ring.base
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Coefficient> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Coefficient of the monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.base.zero())
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&Monomial::one(self.ring.ngens()))
    }

    pub fn leading(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The same element viewed in a larger table.
    pub fn embed(&self, ring: &Arc<PolyRing>) -> GradedPolynomial {
        if Arc::ptr_eq(&self.ring, ring) || *self.ring == **ring {
            return GradedPolynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            };
        }
        assert!(self.ring.embeds_in(ring), "ring does not embed");
        let n = ring.ngens();
        GradedPolynomial {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.padded(n), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the element over an identical generator table with a
    /// different name list (same length and weights).
    pub fn rename(&self, ring: &Arc<PolyRing>) -> GradedPolynomial {
        assert_eq!(self.ring.weights, ring.weights);
        assert_eq!(self.ring.base, ring.base);
        GradedPolynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    fn aligned<'a>(
        &'a self,
        other: &'a GradedPolynomial,
    ) -> Result<(std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>)> {
        use std::borrow::Cow;
        if Arc::ptr_eq(&self.ring, &other.ring) {
            return Ok((Cow::Borrowed(self), Cow::Borrowed(other)));
        }
        let r = common_ring(&self.ring, &other.ring)?;
        let a = if *self.ring == *r {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.embed(&r))
        };
        let b = if *other.ring == *r {
            Cow::Borrowed(other)
        } else {
            Cow::Owned(other.embed(&r))
        };
        Ok((a, b))
    }

    pub fn try_add(&self, other: &GradedPolynomial) -> Result<GradedPolynomial> {
        let (a, b) = self.aligned(other)?;
        let mut out = a.into_owned();
        for (m, c) in b.terms.iter() {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &GradedPolynomial) -> Result<GradedPolynomial> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &GradedPolynomial) -> Result<GradedPolynomial> {
        let (a, b) = self.aligned(other)?;
        Ok(a.mul_filtered(&b, |_| true))
    }

    /// Product keeping only monomials accepted by `keep`. Both operands must
    /// share a table.
    pub fn mul_filtered<F: Fn(&Monomial) -> bool>(
        &self,
        other: &GradedPolynomial,
        keep: F,
    ) -> GradedPolynomial {
        debug_assert!(self.ring.ngens() == other.ring.ngens());
        let mut out = GradedPolynomial::zero(&self.ring);
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                let m = m1.mul(m2);
                if keep(&m) {
                    out.add_term(m, &c1.mul(c2));
                }
            }
        }
        out
    }

    pub fn neg(&self) -> GradedPolynomial {
        GradedPolynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &Coefficient) -> GradedPolynomial {
        if k.is_zero() {
            return GradedPolynomial::zero(&self.ring);
        }
        let mut out = GradedPolynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let v = c.mul(k);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn scale_i64(&self, k: i64) -> GradedPolynomial {
        self.scale(&self.ring.base.from_i64(k))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coefficient) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            let v = c1.mul(c);
            if !v.is_zero() {
                out.terms.insert(m1.mul(m), v);
            }
        }
        out
    }

    /// Divides every coefficient by `d`, failing if any division is inexact.
    pub fn div_exact(&self, d: &Coefficient) -> Result<GradedPolynomial> {
        let mut out = GradedPolynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.div_exact(d)?);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> GradedPolynomial {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The weight when every term has the same weight; `None` for zero or
    /// inhomogeneous elements.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight;
        it.all(|m| m.weight == w).then_some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    pub fn homogeneous_part(&self, w: u32) -> GradedPolynomial {
        GradedPolynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight).max()
    }

    pub fn retain<F: Fn(&Monomial) -> bool>(&self, keep: F) -> GradedPolynomial {
        GradedPolynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Changes the coefficient ring (integers to a prime field).
    pub fn reduce_mod(&self, ring: &Arc<PolyRing>) -> GradedPolynomial {
        assert_eq!(self.ring.names, ring.names);
        let mut out = GradedPolynomial::zero(ring);
        for (m, c) in &self.terms {
            let v = c.reduce(ring.base);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Splits by the exponents of the listed generators: each key is the
    /// exponent vector on `vars`, each value the cofactor with those
    /// exponents cleared.
    pub fn collect_by(&self, vars: &[usize]) -> BTreeMap<Vec<u32>, GradedPolynomial> {
        let mut out: BTreeMap<Vec<u32>, GradedPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&i| m.exps[i]).collect();
            let mut rest = m.clone();
            for &i in vars {
                rest.weight -= rest.exps[i] * self.ring.weights[i];
                rest.exps[i] = 0;
            }
            out.entry(key)
                .or_insert_with(|| GradedPolynomial::zero(&self.ring))
                .terms
                .insert(rest, c.clone());
        }
        out
    }

    /// Ring homomorphism into `target` sending generator `i` to `images[i]`.
    /// Integer coefficients are reduced when the target is a prime field.
    pub fn substitute(
        &self,
        images: &[GradedPolynomial],
        target: &Arc<PolyRing>,
    ) -> GradedPolynomial {
        self.substitute_filtered(images, target, |_| true)
    }

    /// As [`substitute`](Self::substitute), discarding monomials rejected by
    /// `keep` after every multiplication. `keep` must be closed under
    /// divisibility (a truncation), or the result is meaningless.
    pub fn substitute_filtered<F: Fn(&Monomial) -> bool + Copy>(
        &self,
        images: &[GradedPolynomial],
        target: &Arc<PolyRing>,
        keep: F,
    ) -> GradedPolynomial {
        assert_eq!(images.len(), self.ring.ngens(), "one image per generator");
        let images: Vec<GradedPolynomial> = images
            .iter()
            .map(|p| {
                if *p.ring == **target {
                    p.clone()
                } else if p.ring.base != target.base {
                    p.reduce_mod(&p.ring.with_base(target.base)).embed(target)
                } else {
                    p.embed(target)
                }
            })
            .collect();
        let mut powers: Vec<Vec<GradedPolynomial>> =
            images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut out = GradedPolynomial::zero(target);
        for (m, c) in &self.terms {
            let c = c.reduce(target.base);
            if c.is_zero() {
                continue;
            }
            let mut acc = target.scalar(c);
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i]
                        .last()
                        .unwrap()
                        .mul_filtered(&images[i], keep);
                    powers[i].push(next);
                }
                acc = acc.mul_filtered(&powers[i][e as usize], keep);
                if acc.is_zero() {
                    break;
                }
            }
            for (m2, c2) in acc.terms {
                out.add_term(m2, &c2);
            }
        }
        out
    }

    /// Canonical text: terms in descending monomial order, each written
    /// `coef*gen^e*...`, joined by ` + `.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_one() {
                    c.to_string()
                } else {
                    format!("{}*{}", c, self.ring.monomial_text(m))
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parses sums and products of integers and generator names, with
    /// `+ - * ^` and parentheses.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<GradedPolynomial> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            ring,
            tokens,
            pos: 0,
        };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("trailing input in {text:?}")));
        }
        Ok(p)
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::ops::Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.try_add(rhs).expect("incompatible rings")
    }
}

impl std::ops::Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.try_sub(rhs).expect("incompatible rings")
    }
}

impl std::ops::Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.try_mul(rhs).expect("incompatible rings")
    }
}

impl std::ops::Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        GradedPolynomial::neg(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Int(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

/// Generator names appearing in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for t in tokenize(text)? {
        if let Token::Ident(s) = t {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<GradedPolynomial> {
        let mut acc = match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Token::Op(c)) = self.peek() {
            let c = *c;
            if c != '+' && c != '-' {
                break;
            }
            self.pos += 1;
            // Accept "a + -3*b", the shape our own printer produces.
            let mut negate = c == '-';
            while let Some(Token::Op(s @ ('+' | '-'))) = self.peek() {
                if *s == '-' {
                    negate = !negate;
                }
                self.pos += 1;
            }
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedPolynomial> {
        let mut acc = self.power()?;
        while let Some(Token::Op('*')) = self.peek() {
            self.pos += 1;
            let f = self.power()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<GradedPolynomial> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GradedPolynomial> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(self.ring.scalar(self.ring.base.from_bigint(&n))),
            Token::Ident(s) => self.ring.var(&s),
            Token::Op('(') => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Token::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(Error::Parse("missing ')'".into())),
                }
            }
            Token::Op('-') => Ok(self.atom()?.neg()),
            Token::Op(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(BaseRing::Integers, &[("x", 2), ("y", 2)])
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_text(), "1*x^2 + -1*y^2");
        assert_eq!(p.homogeneous_weight(), Some(4));
    }

    #[test]
    fn frobenius_mod_two() {
        let r = PolyRing::new(BaseRing::Prime(2), &[("xi1", 1), ("xi2", 3)]);
        let s = &r.var("xi1").unwrap() + &r.var("xi2").unwrap();
        let sq = &s * &s;
        let expect = GradedPolynomial::parse(&r, "xi1^2 + xi2^2").unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn product_weight_is_additive() {
        let r = PolyRing::new(BaseRing::Integers, &[("a1", 2), ("a3", 6)]);
        let p = &r.var("a1").unwrap() * &r.var("a3").unwrap();
        assert_eq!(p.homogeneous_weight(), Some(8));
    }

    #[test]
    fn text_round_trip() {
        let r = ring();
        let p = GradedPolynomial::parse(&r, "3*x^2*y - 7*y + 2 - (x - 1)^2").unwrap();
        let q = GradedPolynomial::parse(&r, &p.to_text()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.to_text(), "3*x^2*y + -1*x^2 + 2*x + -7*y + 1");
    }

    #[test]
    fn prefix_tables_embed() {
        let r = ring();
        let big = r.extend(&[("z", 0)]);
        let x = r.var("x").unwrap();
        let z = big.var("z").unwrap();
        let p = &x * &z;
        assert_eq!(p.ring().ngens(), 3);
        let other = PolyRing::new(BaseRing::Integers, &[("u", 2)]);
        assert!(x.try_add(&other.var("u").unwrap()).is_err());
        let f2 = PolyRing::new(BaseRing::Prime(2), &[("x", 2), ("y", 2)]);
        assert_eq!(x.try_mul(&f2.var("x").unwrap()), Err(Error::MixedModuli));
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let r = ring();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let p = GradedPolynomial::parse(&r, "x^2 + 3*x*y").unwrap();
        let images = vec![&x + &y, y.clone()];
        let q = p.substitute(&images, &r);
        let expect = GradedPolynomial::parse(&r, "(x+y)^2 + 3*(x+y)*y").unwrap();
        assert_eq!(q, expect);
    }

    #[test]
    fn monomial_enumeration() {
        let r = PolyRing::new(BaseRing::Integers, &[("a", 2), ("b", 4)]);
        let ms = r.monomials_of_weight(8);
        assert_eq!(ms.len(), 3);
    }
}
