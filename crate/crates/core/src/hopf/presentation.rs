//! Hopf algebroids (A, Γ) with Γ = A[g_1, ..., g_m] (or a quotient by
//! idempotent relations g^2 = g), described by structure maps on
//! generators.
//!
//! An element of the s-fold tensor power Γ ⊗_A ... ⊗_A Γ is stored in
//! left-normal form: a polynomial in the A-generators (sitting at the far
//! left) and one copy of the Γ-generators per slot. An A-element sitting
//! just after slot k is rewritten by pushing it left through η_R, which is
//! the map `phi(s, k)`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{GradedPolynomial, Monomial, PolyRing};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct HopfAlgebroidPresentation {
    pub name: String,
    /// A.
    pub a: Arc<PolyRing>,
    /// Γ: the A-generators followed by the Γ-generators.
    pub gamma: Arc<PolyRing>,
    /// Per Γ-generator: subject to g^2 = g.
    pub idempotent: Vec<bool>,
    /// Per A-generator, its image in Γ.
    pub eta_r: Vec<GradedPolynomial>,
    /// Per Γ-generator, its coproduct in `tensor_ring(2)`.
    pub delta: Vec<GradedPolynomial>,
    /// Per Γ-generator, its counit in A.
    pub epsilon: Vec<GradedPolynomial>,
    /// Per Γ-generator, its conjugate in Γ. On A, χ is η_R.
    pub chi: Vec<GradedPolynomial>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    /// Idempotent relations are respected by Δ, ε, χ.
    pub relations: bool,
    /// ε∘η_R = id on A.
    pub counit_eta: bool,
    /// (ε⊗1)Δ = (1⊗ε)Δ = id.
    pub counit: bool,
    /// All coface identities through T_3, which include coassociativity and
    /// the compatibility of Δ with both units.
    pub cosimplicial: bool,
    /// Coassociativity rechecked on every Γ-monomial through `basis_depth`.
    pub coassociative_on_basis: bool,
    pub basis_depth: u32,
    pub basis_checked: usize,
    /// χ∘χ = id.
    pub conjugation: bool,
    /// μ(χ⊗1)Δ = η_R ε and μ(1⊗χ)Δ = η_L ε on generators.
    pub antipode: bool,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

impl HopfAlgebroidPresentation {
    pub fn na(&self) -> usize {
        self.a.ngens()
    }

    pub fn ng(&self) -> usize {
        self.gamma.ngens() - self.na()
    }

    pub fn gamma_names(&self) -> &[String] {
        &self.gamma.names()[self.na()..]
    }

    pub fn gamma_weights(&self) -> &[u32] {
        &self.gamma.weights()[self.na()..]
    }

    /// A[g^(1), ..., g^(s)], the k-th copy of g named `g{k}`.
    pub fn tensor_ring(&self, s: usize) -> Arc<PolyRing> {
        let mut gens: Vec<(String, u32)> = self
            .a
            .names()
            .iter()
            .cloned()
            .zip(self.a.weights().iter().copied())
            .collect();
        for k in 1..=s {
            for (n, w) in self.gamma_names().iter().zip(self.gamma_weights()) {
                gens.push((format!("{n}{k}"), *w));
            }
        }
        PolyRing::new(self.a.base(), &gens)
    }

    /// Index of generator g of slot k (1-based) in a tensor ring.
    pub fn slot_index(&self, k: usize, g: usize) -> usize {
        self.na() + (k - 1) * self.ng() + g
    }

    /// Slot of a tensor-ring generator; 0 for A.
    pub fn slot_of(&self, idx: usize) -> usize {
        if idx < self.na() {
            0
        } else {
            (idx - self.na()) / self.ng() + 1
        }
    }

    fn is_idempotent_index(&self, idx: usize) -> bool {
        idx >= self.na() && self.idempotent[(idx - self.na()) % self.ng()]
    }

    /// Reduces exponents of idempotent generators to at most 1.
    pub fn clamp(&self, x: &GradedPolynomial) -> GradedPolynomial {
        if !self.idempotent.iter().any(|&b| b) {
            return x.clone();
        }
        let ring = x.ring();
        let mut out = ring.zero();
        for (m, c) in x.terms() {
            let exps: Vec<u32> = m
                .exps
                .iter()
                .enumerate()
                .map(|(i, &e)| if self.is_idempotent_index(i) { e.min(1) } else { e })
                .collect();
            out.add_term(ring.monomial_from_exps(&exps), c);
        }
        out
    }

    /// Ring map defined by generator images, followed by clamping.
    pub fn apply(
        &self,
        x: &GradedPolynomial,
        images: &[GradedPolynomial],
        target: &Arc<PolyRing>,
    ) -> GradedPolynomial {
        self.clamp(&x.substitute(images, target))
    }

    /// Images in T_s of the A-generators when they sit just after slot k.
    pub fn phi(&self, s: usize, k: usize) -> Vec<GradedPolynomial> {
        let ring = self.tensor_ring(s);
        let mut cur: Vec<GradedPolynomial> = (0..self.na()).map(|i| ring.gen(i)).collect();
        for j in 1..=k {
            let mut images = cur.clone();
            images.extend((0..self.ng()).map(|g| ring.gen(self.slot_index(j, g))));
            cur = self
                .eta_r
                .iter()
                .map(|e| self.apply(e, &images, &ring))
                .collect();
        }
        cur
    }

    /// Places an element of Γ in slot k of T_s.
    pub fn place(&self, x: &GradedPolynomial, s: usize, k: usize) -> GradedPolynomial {
        let ring = self.tensor_ring(s);
        let mut images = self.phi(s, k - 1);
        images.extend((0..self.ng()).map(|g| ring.gen(self.slot_index(k, g))));
        self.apply(x, &images, &ring)
    }

    /// Places an element of Γ ⊗_A Γ in slots k, k+1 of T_s.
    pub fn place2(&self, x: &GradedPolynomial, s: usize, k: usize) -> GradedPolynomial {
        let ring = self.tensor_ring(s);
        let mut images = self.phi(s, k - 1);
        for j in [k, k + 1] {
            images.extend((0..self.ng()).map(|g| ring.gen(self.slot_index(j, g))));
        }
        self.apply(x, &images, &ring)
    }

    /// Images of the generators of T_s under the coface δ^i: T_s -> T_(s+1),
    /// i = 0..=s+1. δ^0 inserts 1 on the left, δ^i applies Δ to slot i and
    /// δ^(s+1) inserts 1 on the right.
    pub fn coface(&self, s: usize, i: usize) -> Vec<GradedPolynomial> {
        assert!(i <= s + 1);
        let t = self.tensor_ring(s + 1);
        let mut images = if i == 0 {
            self.phi(s + 1, 1)
        } else {
            (0..self.na()).map(|a| t.gen(a)).collect()
        };
        for k in 1..=s {
            for g in 0..self.ng() {
                let img = if k < i || i == s + 1 {
                    t.gen(self.slot_index(k, g))
                } else if k == i {
                    self.place2(&self.delta[g], s + 1, i)
                } else {
                    t.gen(self.slot_index(k + 1, g))
                };
                images.push(img);
            }
        }
        images
    }

    /// Images of the generators of T_(s+1) under the codegeneracy σ^j:
    /// T_(s+1) -> T_s, j = 0..=s, applying ε to slot j+1.
    pub fn codegeneracy(&self, s: usize, j: usize) -> Vec<GradedPolynomial> {
        assert!(j <= s);
        let t = self.tensor_ring(s);
        let mut images: Vec<GradedPolynomial> = (0..self.na()).map(|a| t.gen(a)).collect();
        let here = self.phi(s, j);
        for k in 1..=s + 1 {
            for g in 0..self.ng() {
                let img = if k <= j {
                    t.gen(self.slot_index(k, g))
                } else if k == j + 1 {
                    self.epsilon[g].substitute(&here, &t)
                } else {
                    t.gen(self.slot_index(k - 1, g))
                };
                images.push(img);
            }
        }
        images
    }

    /// χ as a ring map Γ -> Γ: η_R on A, the given images on Γ-generators.
    pub fn chi_images(&self) -> Vec<GradedPolynomial> {
        let mut v = self.eta_r.clone();
        v.extend(self.chi.iter().cloned());
        v
    }

    pub fn apply_chi(&self, x: &GradedPolynomial) -> GradedPolynomial {
        self.apply(x, &self.chi_images(), &self.gamma)
    }

    /// Γ as T_1, and back.
    pub fn to_t1(&self, x: &GradedPolynomial) -> GradedPolynomial {
        x.rename(&self.tensor_ring(1))
    }

    pub fn from_t1(&self, x: &GradedPolynomial) -> GradedPolynomial {
        x.rename(&self.gamma)
    }

    /// Gamma-only monomials (no A part) of weight at most `w`, nonconstant,
    /// idempotent exponents at most 1. Weight-zero generators must be
    /// idempotent for this to be finite.
    pub fn gamma_monomials(&self, w: u32) -> Vec<(u32, Vec<u32>)> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.ng()];
        self.gamma_rec(0, w, 0, &mut exps, &mut out);
        out.retain(|(_, e)| e.iter().any(|&x| x > 0));
        out.sort();
        out
    }

    fn gamma_rec(&self, k: usize, cap: u32, used: u32, exps: &mut Vec<u32>, out: &mut Vec<(u32, Vec<u32>)>) {
        if k == self.ng() {
            out.push((used, exps.clone()));
            return;
        }
        let w = self.gamma_weights()[k];
        let max = if self.idempotent[k] {
            1
        } else if w == 0 {
            0
        } else {
            (cap - used) / w
        };
        for e in 0..=max {
            if used + e * w > cap {
                break;
            }
            exps[k] = e;
            self.gamma_rec(k + 1, cap, used + e * w, exps, out);
        }
        exps[k] = 0;
    }

    /// Checks the structure maps against the Hopf algebroid axioms.
    pub fn verify(&self, basis_depth: u32) -> AxiomReport {
        let mut failures = Vec::new();
        let mut fail = |what: &str, detail: String| failures.push(format!("{what}: {detail}"));

        // Idempotent relations.
        let mut relations = true;
        for g in 0..self.ng() {
            if !self.idempotent[g] {
                continue;
            }
            let d = &self.delta[g];
            let c = &self.chi[g];
            let e = &self.epsilon[g];
            let ok = self.clamp(&(d * d)) == *d && self.clamp(&(c * c)) == *c && (e * e) == *e;
            if !ok {
                relations = false;
                fail("relations", self.gamma_names()[g].clone());
            }
        }

        let gens = |s: usize| -> Vec<GradedPolynomial> {
            let r = self.tensor_ring(s);
            r.gens()
        };
        // σ^j δ^i = id for i = j, j + 1.
        let mut counit_eta = true;
        let mut counit = true;
        for s in 0..=1usize {
            let src = self.tensor_ring(s);
            for (i, j) in [(0usize, 0usize), (1, 0), (1, 1), (2, 1)] {
                if i > s + 1 || j > s {
                    continue;
                }
                let up = self.coface(s, i);
                let down = self.codegeneracy(s, j);
                let mid = self.tensor_ring(s + 1);
                for (n, x) in gens(s).iter().enumerate() {
                    let y = self.apply(&self.apply(x, &up, &mid), &down, &src);
                    if y != *x {
                        if s == 0 {
                            counit_eta = false;
                        } else {
                            counit = false;
                        }
                        fail("counit", format!("s={s} i={i} j={j} gen {}", src.name(n)));
                    }
                }
            }
        }

        // δ^j δ^i = δ^i δ^(j-1) for i < j.
        let mut cosimplicial = true;
        for s in 0..=1usize {
            let t1 = self.tensor_ring(s + 1);
            let t2 = self.tensor_ring(s + 2);
            for j in 1..=s + 2 {
                for i in 0..j {
                    if i > s + 1 {
                        continue;
                    }
                    let (a1, a2) = (self.coface(s, i), self.coface(s + 1, j));
                    let (b1, b2) = (self.coface(s, j - 1), self.coface(s + 1, i));
                    for (n, x) in gens(s).iter().enumerate() {
                        let l = self.apply(&self.apply(x, &a1, &t1), &a2, &t2);
                        let r = self.apply(&self.apply(x, &b1, &t1), &b2, &t2);
                        if l != r {
                            cosimplicial = false;
                            fail("cosimplicial", format!("s={s} i={i} j={j} gen {}", n));
                        }
                    }
                }
            }
        }

        // Coassociativity on Γ-monomials, as a redundant direct check.
        let mut coassociative_on_basis = true;
        let mons = self.gamma_monomials(basis_depth);
        let t1 = self.tensor_ring(1);
        let t2 = self.tensor_ring(2);
        let t3 = self.tensor_ring(3);
        let d1 = self.coface(1, 1);
        let (l2, r2) = (self.coface(2, 1), self.coface(2, 2));
        for (_, e) in &mons {
            let mut exps = vec![0u32; self.na()];
            exps.extend(e.iter().copied());
            let m: Monomial = t1.monomial_from_exps(&exps);
            let x = GradedPolynomial::monomial(&t1, m, t1.base().one());
            let dx = self.apply(&x, &d1, &t2);
            if self.apply(&dx, &l2, &t3) != self.apply(&dx, &r2, &t3) {
                coassociative_on_basis = false;
                fail("coassociativity", self.to_text_t(&x));
            }
        }

        // χ∘χ = id on A and on Γ-generators.
        let mut conjugation = true;
        for (n, x) in self.gamma.gens().iter().enumerate() {
            if self.apply_chi(&self.apply_chi(x)) != *x {
                conjugation = false;
                fail("conjugation", self.gamma.name(n).to_string());
            }
        }

        // Antipode identities.
        let mut antipode = true;
        let t2r = self.tensor_ring(2);
        let mut left = self.eta_r.clone();
        left.extend((0..self.ng()).map(|g| self.chi[g].clone()));
        left.extend((0..self.ng()).map(|g| self.gamma.gen(self.na() + g)));
        let mut right: Vec<GradedPolynomial> = (0..self.na()).map(|a| self.gamma.gen(a)).collect();
        right.extend((0..self.ng()).map(|g| self.gamma.gen(self.na() + g)));
        right.extend((0..self.ng()).map(|g| self.chi[g].clone()));
        for g in 0..self.ng() {
            let d = self.delta[g].embed(&t2r);
            let want_l = self.epsilon[g].substitute(&self.eta_r, &self.gamma);
            let want_r = self.epsilon[g].embed(&self.gamma);
            if self.apply(&d, &left, &self.gamma) != want_l
                || self.apply(&d, &right, &self.gamma) != want_r
            {
                antipode = false;
                fail("antipode", self.gamma_names()[g].clone());
            }
        }
        AxiomReport {
            relations,
            counit_eta,
            counit,
            cosimplicial,
            coassociative_on_basis,
            basis_depth,
            basis_checked: mons.len(),
            conjugation,
            antipode,
            failures,
        }
    }

    /// Verifies and returns self, or reports the failed axioms.
    pub fn checked(self, basis_depth: u32) -> Result<Self> {
        let rep = self.verify(basis_depth);
        if rep.holds() {
            Ok(self)
        } else {
            Err(Error::Invariant(format!(
                "{} is not a Hopf algebroid: {}",
                self.name,
                rep.failures.join("; ")
            )))
        }
    }

    fn to_text_t(&self, x: &GradedPolynomial) -> String {
        x.to_text()
    }

    /// An element of T_s written with ⊗ between slots.
    pub fn tensor_text(&self, x: &GradedPolynomial, s: usize) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let ring = x.ring();
        let mut parts = Vec::new();
        for (m, c) in x.terms().rev() {
            let mut slots: Vec<Vec<String>> = vec![Vec::new(); s.max(1)];
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let k = self.slot_of(i);
                let name = if k == 0 {
                    ring.name(i).to_string()
                } else {
                    self.gamma_names()[(i - self.na()) % self.ng()].clone()
                };
                let f = if e == 1 { name } else { format!("{name}^{e}") };
                slots[k.max(1) - 1].push(f);
            }
            let body: Vec<String> = slots
                .iter()
                .map(|v| if v.is_empty() { "1".into() } else { v.join("*") })
                .collect();
            let body = body.join("⊗");
            parts.push(if c.is_one() {
                body
            } else {
                format!("{c}*{body}")
            });
        }
        parts.join(" + ")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationSummary {
    pub name: String,
    pub a: Vec<(String, u32)>,
    pub gamma: Vec<(String, u32)>,
    pub eta_r: Vec<(String, String)>,
    pub delta: Vec<(String, String)>,
    pub epsilon: Vec<(String, String)>,
    pub chi: Vec<(String, String)>,
    pub axioms: AxiomReport,
}

impl HopfAlgebroidPresentation {
    pub fn summary(&self, basis_depth: u32) -> PresentationSummary {
        let a: Vec<(String, u32)> = self
            .a
            .names()
            .iter()
            .cloned()
            .zip(self.a.weights().iter().copied())
            .collect();
        let names = self.gamma_names().to_vec();
        PresentationSummary {
            name: self.name.clone(),
            gamma: names
                .iter()
                .cloned()
                .zip(self.gamma_weights().iter().copied())
                .collect(),
            eta_r: a
                .iter()
                .zip(&self.eta_r)
                .map(|((n, _), e)| (n.clone(), e.to_text()))
                .collect(),
            delta: names
                .iter()
                .zip(&self.delta)
                .map(|(n, d)| (n.clone(), self.tensor_text(d, 2)))
                .collect(),
            epsilon: names
                .iter()
                .zip(&self.epsilon)
                .map(|(n, e)| (n.clone(), e.to_text()))
                .collect(),
            chi: names
                .iter()
                .zip(&self.chi)
                .map(|(n, c)| (n.clone(), c.to_text()))
                .collect(),
            a,
            axioms: self.verify(basis_depth),
        }
    }
}
