//! Mod-2 dual Steenrod algebra 𝔸 = F_2[ξ1, ξ2, ...] with |ξi| = 2^i - 1.
//!
//! Monomials are packed into a `u64`, one byte per generator, so a product
//! is an integer sum and the Frobenius is a shift. Degrees are capped at 255,
//! which keeps every exponent inside its byte.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{BaseRing, GradedPolynomial, PolyRing};
use crate::error::{Error, Result};

pub const MAX_CUTOFF: u32 = 255;
const MAX_GENS: usize = 8;

pub type Mono = u64;

pub fn exponent(m: Mono, i: usize) -> u32 {
    ((m >> (8 * i)) & 0xff) as u32
}

pub fn generator(i: usize) -> Mono {
    1 << (8 * i)
}

/// Degree of ξ_{i+1}.
pub fn gen_degree(i: usize) -> u32 {
    (1 << (i + 1)) - 1
}

pub fn degree(m: Mono) -> u32 {
    (0..MAX_GENS).map(|i| exponent(m, i) * gen_degree(i)).sum()
}

fn frobenius(m: Mono, j: u32) -> Mono {
    m << j
}

/// Graded order key: degree, then exponents read from the highest
/// generator down, so ξ3 precedes ξ1ξ2^2 precedes ξ1^7.
pub(crate) fn key(m: Mono) -> (u32, [u8; MAX_GENS]) {
    let mut e = [0u8; MAX_GENS];
    for (i, x) in e.iter_mut().enumerate() {
        *x = exponent(m, MAX_GENS - 1 - i) as u8;
    }
    (degree(m), e)
}

/// Which generators an element is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coordinates {
    /// Milnor generators ξi.
    Milnor,
    /// Conjugates ξ̄i = χ(ξi).
    Conjugate,
}

impl Coordinates {
    pub fn prefix(self) -> &'static str {
        match self {
            Coordinates::Milnor => "xi",
            Coordinates::Conjugate => "xibar",
        }
    }
}

/// A polynomial over F_2: the set of monomials with coefficient 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct F2Poly(pub BTreeSet<Mono>);

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(m: Mono) -> Self {
        F2Poly(BTreeSet::from([m]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn toggle(&mut self, m: Mono) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        F2Poly(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero();
        for a in &self.0 {
            for b in &other.0 {
                out.toggle(a + b);
            }
        }
        out
    }

    /// `self^(2^j)`, which in characteristic two acts termwise.
    pub fn frobenius(&self, j: u32) -> F2Poly {
        F2Poly(self.0.iter().map(|&m| frobenius(m, j)).collect())
    }

    pub fn pow(&self, e: u32) -> F2Poly {
        let mut out = F2Poly::one();
        for j in 0..32 {
            if e >> j & 1 == 1 {
                out = out.mul(&self.frobenius(j));
            }
        }
        out
    }

    /// The common degree of all terms, if there is one.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.0.iter().map(|&m| degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> u32 {
        self.0.iter().map(|&m| degree(m)).max().unwrap_or(0)
    }

    /// Terms in descending graded order.
    pub fn sorted_terms(&self) -> Vec<Mono> {
        let mut v: Vec<Mono> = self.0.iter().copied().collect();
        v.sort_by_key(|&m| std::cmp::Reverse(key(m)));
        v
    }

    pub fn text(&self, coords: Coordinates) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.sorted_terms()
            .into_iter()
            .map(|m| monomial_text(m, coords))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn monomial_text(m: Mono, coords: Coordinates) -> String {
    let parts: Vec<String> = (0..MAX_GENS)
        .filter_map(|i| match exponent(m, i) {
            0 => None,
            1 => Some(format!("{}{}", coords.prefix(), i + 1)),
            e => Some(format!("{}{}^{e}", coords.prefix(), i + 1)),
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// An element of 𝔸 ⊗ 𝔸, as the set of (left, right) monomial pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor(pub BTreeSet<(Mono, Mono)>);

impl Tensor {
    pub fn one() -> Self {
        Tensor(BTreeSet::from([(0, 0)]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn toggle(&mut self, t: (Mono, Mono)) {
        if !self.0.remove(&t) {
            self.0.insert(t);
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        Tensor(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn mul(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::default();
        for a in &self.0 {
            for b in &other.0 {
                out.toggle((a.0 + b.0, a.1 + b.1));
            }
        }
        out
    }

    pub fn frobenius(&self, j: u32) -> Tensor {
        Tensor(self.0.iter().map(|&(l, r)| (frobenius(l, j), frobenius(r, j))).collect())
    }

    pub fn pow(&self, e: u32) -> Tensor {
        let mut out = Tensor::one();
        for j in 0..32 {
            if e >> j & 1 == 1 {
                out = out.mul(&self.frobenius(j));
            }
        }
        out
    }

    /// Right legs grouped by left monomial.
    pub fn by_left(&self) -> BTreeMap<Mono, F2Poly> {
        let mut out: BTreeMap<Mono, F2Poly> = BTreeMap::new();
        for &(l, r) in &self.0 {
            out.entry(l).or_default().toggle(r);
        }
        out
    }

    /// (ε ⊗ 1): the terms whose left leg is 1.
    pub fn left_counit(&self) -> F2Poly {
        F2Poly(self.0.iter().filter(|t| t.0 == 0).map(|t| t.1).collect())
    }

    /// (1 ⊗ ε): the terms whose right leg is 1.
    pub fn right_counit(&self) -> F2Poly {
        F2Poly(self.0.iter().filter(|t| t.1 == 0).map(|t| t.0).collect())
    }

    pub fn text(&self, coords: Coordinates) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut v: Vec<(Mono, Mono)> = self.0.iter().copied().collect();
        v.sort_by_key(|&(l, r)| std::cmp::Reverse((key(l), key(r))));
        v.into_iter()
            .map(|(l, r)| format!("{}⊗{}", monomial_text(l, coords), monomial_text(r, coords)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Renders `L⊗R` with `R` parenthesized when it has several terms.
pub fn leg_text(l: Mono, r: &F2Poly, coords: Coordinates) -> String {
    let rt = r.text(coords);
    if r.0.len() > 1 {
        format!("{}⊗({rt})", monomial_text(l, coords))
    } else {
        format!("{}⊗{rt}", monomial_text(l, coords))
    }
}

/// An element of 𝔸 together with the coordinates it is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSteenrodElement {
    pub coords: Coordinates,
    pub poly: F2Poly,
}

impl DualSteenrodElement {
    pub fn text(&self) -> String {
        self.poly.text(self.coords)
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.degree()
    }
}

/// Structure maps of 𝔸 through a degree cutoff. Only the generators ξi with
/// 2^i - 1 ≤ cutoff exist.
#[derive(Clone, Debug)]
pub struct DualSteenrod {
    cutoff: u32,
    ngens: usize,
    delta_milnor: Vec<Tensor>,
    delta_conjugate: Vec<Tensor>,
    chi: Vec<F2Poly>,
    monomials: Vec<Vec<Mono>>,
    index: Vec<HashMap<Mono, usize>>,
}

impl DualSteenrod {
    pub fn new(cutoff: u32) -> Result<Self> {
        if cutoff > MAX_CUTOFF {
            return Err(Error::Invalid(format!("cutoff {cutoff} exceeds {MAX_CUTOFF}")));
        }
        let ngens = (0..MAX_GENS).take_while(|&i| gen_degree(i) <= cutoff).count();
        // ξ0 = 1 so that the sums below run over 0..=k.
        let xi = |k: usize| if k == 0 { 0 } else { generator(k - 1) };
        let mut delta_milnor = Vec::new();
        let mut delta_conjugate = Vec::new();
        let mut chi: Vec<F2Poly> = vec![F2Poly::one()];
        for k in 1..=ngens {
            let mut dm = Tensor::default();
            let mut dc = Tensor::default();
            for i in 0..=k {
                dm.toggle((frobenius(xi(k - i), i as u32), xi(i)));
                dc.toggle((xi(i), frobenius(xi(k - i), i as u32)));
            }
            delta_milnor.push(dm);
            delta_conjugate.push(dc);
            // Σ_{i=0}^{k} ξ_{k-i}^{2^i} χ(ξ_i) = 0 solved for the i = k term.
            let mut c = F2Poly::zero();
            for (i, ci) in chi.iter().enumerate().take(k) {
                c = c.add(&F2Poly::monomial(frobenius(xi(k - i), i as u32)).mul(ci));
            }
            chi.push(c);
        }
        chi.remove(0);
        let mut monomials = Vec::new();
        let mut index = Vec::new();
        for d in 0..=cutoff {
            let mut ms = Vec::new();
            enumerate(ngens, d, 0, 0, &mut ms);
            ms.sort_by_key(|&m| std::cmp::Reverse(key(m)));
            index.push(ms.iter().enumerate().map(|(i, &m)| (m, i)).collect());
            monomials.push(ms);
        }
        Ok(DualSteenrod {
            cutoff,
            ngens,
            delta_milnor,
            delta_conjugate,
            chi,
            monomials,
            index,
        })
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Monomials of degree `d`, in descending graded order.
    pub fn monomials(&self, d: u32) -> &[Mono] {
        &self.monomials[d as usize]
    }

    pub fn dim(&self, d: u32) -> usize {
        self.monomials.get(d as usize).map_or(0, |v| v.len())
    }

    /// Bit vector of a homogeneous polynomial of degree `d` over the
    /// monomials of that degree.
    pub fn vector(&self, p: &F2Poly, d: u32) -> Vec<u64> {
        let n = self.dim(d);
        let mut v = vec![0u64; n.div_ceil(64)];
        for m in &p.0 {
            let i = self.index[d as usize][m];
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    }

    pub fn from_vector(&self, v: &[u64], d: u32) -> F2Poly {
        let ms = self.monomials(d);
        F2Poly(
            (0..ms.len())
                .filter(|&i| v[i / 64] >> (i % 64) & 1 == 1)
                .map(|i| ms[i])
                .collect(),
        )
    }

    fn check(&self, x: &F2Poly) -> Result<()> {
        let d = x.max_degree();
        if d > self.cutoff {
            return Err(Error::Invalid(format!("degree {d} exceeds cutoff {}", self.cutoff)));
        }
        Ok(())
    }

    fn tensor_map(&self, images: &[Tensor], x: &F2Poly) -> Tensor {
        let mut out = Tensor::default();
        let mut cache: HashMap<(usize, u32), Tensor> = HashMap::new();
        for &m in &x.0 {
            let mut t = Tensor::one();
            for (i, img) in images.iter().enumerate() {
                let e = exponent(m, i);
                if e > 0 {
                    let f = cache.entry((i, e)).or_insert_with(|| img.pow(e));
                    t = t.mul(f);
                }
            }
            out = out.add(&t);
        }
        out
    }

    fn ring_map(&self, images: &[F2Poly], x: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero();
        let mut cache: HashMap<(usize, u32), F2Poly> = HashMap::new();
        for &m in &x.0 {
            let mut t = F2Poly::one();
            for (i, img) in images.iter().enumerate() {
                let e = exponent(m, i);
                if e > 0 {
                    let f = cache.entry((i, e)).or_insert_with(|| img.pow(e));
                    t = t.mul(f);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Δ in Milnor coordinates, Δ(ξk) = Σ ξ_{k-i}^{2^i} ⊗ ξi.
    pub fn coproduct(&self, x: &F2Poly) -> Result<Tensor> {
        self.check(x)?;
        Ok(self.tensor_map(&self.delta_milnor, x))
    }

    /// Δ in conjugate coordinates, Δ(ξ̄k) = Σ ξ̄i ⊗ ξ̄_{k-i}^{2^i}.
    pub fn coproduct_conjugate(&self, x: &F2Poly) -> Result<Tensor> {
        self.check(x)?;
        Ok(self.tensor_map(&self.delta_conjugate, x))
    }

    pub fn coproduct_in(&self, x: &DualSteenrodElement) -> Result<Tensor> {
        match x.coords {
            Coordinates::Milnor => self.coproduct(&x.poly),
            Coordinates::Conjugate => self.coproduct_conjugate(&x.poly),
        }
    }

    /// χ(ξi) in Milnor coordinates.
    pub fn chi_generators(&self) -> &[F2Poly] {
        &self.chi
    }

    /// The antipode, a ring map.
    pub fn conjugate(&self, x: &F2Poly) -> Result<F2Poly> {
        self.check(x)?;
        Ok(self.ring_map(&self.chi, x))
    }

    /// Rewrites a Milnor-coordinate polynomial in the ξ̄i. Since χ² = 1 the
    /// substitution ξi = χ(ξ̄i) has the same shape as χ itself.
    pub fn to_conjugate(&self, x: &F2Poly) -> Result<F2Poly> {
        self.conjugate(x)
    }

    pub fn from_conjugate(&self, x: &F2Poly) -> Result<F2Poly> {
        self.conjugate(x)
    }

    pub fn convert(&self, x: &DualSteenrodElement, to: Coordinates) -> Result<DualSteenrodElement> {
        let poly = if x.coords == to { x.poly.clone() } else { self.conjugate(&x.poly)? };
        Ok(DualSteenrodElement { coords: to, poly })
    }

    /// Σ_{i=0}^{k} ξ_{k-i}^{2^i} χ(ξi); the antipode axiom says this is 0.
    pub fn antipode_sum(&self, k: usize) -> F2Poly {
        let mut s = F2Poly::zero();
        for i in 0..=k {
            let left = if k - i == 0 { 0 } else { frobenius(generator(k - i - 1), i as u32) };
            let right = if i == 0 { F2Poly::one() } else { self.chi[i - 1].clone() };
            s = s.add(&F2Poly::monomial(left).mul(&right));
        }
        s
    }

    /// μ(χ ⊗ 1)Δ(x), which equals ε(x) for a Hopf algebra.
    pub fn antipode_contraction(&self, x: &F2Poly) -> Result<F2Poly> {
        let t = self.coproduct(x)?;
        let mut out = F2Poly::zero();
        for (l, r) in t.by_left() {
            out = out.add(&self.conjugate(&F2Poly::monomial(l))?.mul(&r));
        }
        Ok(out)
    }

    /// F_2 ring with both ξi and ξ̄i as generators, used for parsing.
    pub fn text_ring(&self) -> Arc<PolyRing> {
        let mut gens: Vec<(String, u32)> = Vec::new();
        for c in [Coordinates::Milnor, Coordinates::Conjugate] {
            for i in 0..self.ngens {
                gens.push((format!("{}{}", c.prefix(), i + 1), gen_degree(i)));
            }
        }
        PolyRing::new(BaseRing::prime(2).expect("2 is prime"), &gens)
    }

    /// Parses text in the ξi and ξ̄i (written `xi3`, `xibar3`, mixing
    /// allowed) and rewrites it in the requested coordinates.
    pub fn parse(&self, text: &str, to: Coordinates) -> Result<DualSteenrodElement> {
        let ring = self.text_ring();
        let g = GradedPolynomial::parse(&ring, text)?;
        self.from_graded(&g, to)
    }

    pub fn from_graded(&self, g: &GradedPolynomial, to: Coordinates) -> Result<DualSteenrodElement> {
        let n = self.ngens;
        let mut out = F2Poly::zero();
        for (m, c) in g.terms() {
            if c.is_zero() {
                continue;
            }
            if m.weight > self.cutoff {
                return Err(Error::Invalid(format!("degree {} exceeds cutoff {}", m.weight, self.cutoff)));
            }
            let mut parts = [0 as Mono; 2];
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    parts[i / n] += e as Mono * generator(i % n);
                }
            }
            let (milnor, conj) = (F2Poly::monomial(parts[0]), F2Poly::monomial(parts[1]));
            let term = match to {
                Coordinates::Milnor => milnor.mul(&self.from_conjugate(&conj)?),
                Coordinates::Conjugate => self.to_conjugate(&milnor)?.mul(&conj),
            };
            out = out.add(&term);
        }
        Ok(DualSteenrodElement { coords: to, poly: out })
    }

    /// The element as a graded polynomial over Z/2 in the generators of its
    /// coordinates.
    pub fn to_graded(&self, x: &DualSteenrodElement) -> GradedPolynomial {
        let ring = self.text_ring();
        let off = match x.coords {
            Coordinates::Milnor => 0,
            Coordinates::Conjugate => self.ngens,
        };
        let mut g = ring.zero();
        for &m in &x.poly.0 {
            let mut exps = vec![0u32; ring.ngens()];
            for i in 0..self.ngens {
                exps[off + i] = exponent(m, i);
            }
            g.add_term(ring.monomial_from_exps(&exps), &ring.base().one());
        }
        g
    }
}

fn enumerate(ngens: usize, d: u32, i: usize, acc: Mono, out: &mut Vec<Mono>) {
    if d == 0 {
        out.push(acc);
        return;
    }
    if i == ngens {
        return;
    }
    let w = gen_degree(i);
    let mut e = 0;
    while e * w <= d {
        enumerate(ngens, d - e * w, i + 1, acc + e as Mono * generator(i), out);
        e += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_conjugates() {
        let a = DualSteenrod::new(16).unwrap();
        let c: Vec<String> = a.chi_generators().iter().map(|p| p.text(Coordinates::Milnor)).collect();
        assert_eq!(c[0], "xi1");
        assert_eq!(c[1], "xi2 + xi1^3");
        let x = a.parse("xi2", Coordinates::Milnor).unwrap();
        assert_eq!(a.coproduct(&x.poly).unwrap().text(Coordinates::Milnor), "xi2⊗1 + xi1^2⊗xi1 + 1⊗xi2");
    }

    #[test]
    fn cutoff_limits() {
        assert!(DualSteenrod::new(256).is_err());
        let a = DualSteenrod::new(10).unwrap();
        assert_eq!(a.ngens(), 3);
        let x = F2Poly::monomial(generator(0)).pow(11);
        assert!(a.coproduct(&x).is_err());
    }
}
