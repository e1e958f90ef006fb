//! Candidate subalgebras of 𝔸 given by generators, and their bases.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{Gf2Basis, PoincareSeries};
use crate::error::{Error, Result};

use super::element::{gen_degree, generator, Coordinates, DualSteenrod, F2Poly};

#[derive(Clone, Debug, Serialize)]
pub struct SpecGenerator {
    pub label: String,
    pub degree: u32,
    /// In conjugate coordinates.
    #[serde(skip)]
    pub element: F2Poly,
}

/// A subalgebra of 𝔸 named by generators, instantiated through a cutoff.
#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraSpec {
    pub name: String,
    pub cutoff: u32,
    pub generators: Vec<SpecGenerator>,
    /// How the generator list continues past the listed exponents.
    pub tail: String,
}

impl SubalgebraSpec {
    /// F_2[ξ̄1^{e1}, ξ̄2^{e2}, ...] with ei = 1 past the end of `exps`.
    pub fn conjugate_powers(name: &str, a: &DualSteenrod, exps: &[u32]) -> Self {
        let mut generators = Vec::new();
        for i in 0..a.ngens() {
            let e = exps.get(i).copied().unwrap_or(1);
            let degree = e * gen_degree(i);
            if degree > a.cutoff() {
                continue;
            }
            let label = if e == 1 { format!("xibar{}", i + 1) } else { format!("xibar{}^{e}", i + 1) };
            generators.push(SpecGenerator {
                label,
                degree,
                element: F2Poly::monomial(generator(i)).pow(e),
            });
        }
        SpecGenerator::sort(&mut generators);
        SubalgebraSpec {
            name: name.into(),
            cutoff: a.cutoff(),
            generators,
            tail: format!("xibar_i for i > {}", exps.len()),
        }
    }

    /// The homology of BP⟨n⟩: squares of ξ̄1, ..., ξ̄_{n+1}, then ξ̄i.
    pub fn bp(n: usize, a: &DualSteenrod) -> Self {
        Self::conjugate_powers(&format!("bp:{n}"), a, &vec![2; n + 1])
    }

    /// ko, ku, tmf, bp:<n>, hz (= bp:0), squares (all ξ̄i^2) or dual (𝔸).
    pub fn named(name: &str, a: &DualSteenrod) -> Result<Self> {
        Ok(match name {
            "ko" => Self::conjugate_powers("ko", a, &[4, 2]),
            "ku" => Self::conjugate_powers("ku", a, &[2, 2]),
            "tmf" => Self::conjugate_powers("tmf", a, &[8, 4, 2]),
            "hz" => Self::conjugate_powers("hz", a, &[2]),
            "dual" => Self::conjugate_powers("dual", a, &[]),
            "squares" => {
                let mut s = Self::conjugate_powers("squares", a, &vec![2; a.ngens()]);
                s.tail = "none".into();
                s
            }
            _ => match name.strip_prefix("bp:").map(str::parse::<usize>) {
                Some(Ok(n)) => Self::bp(n, a),
                _ => return Err(Error::Unknown(format!("subalgebra {name}"))),
            },
        })
    }

    /// Generators given as text in the ξi and/or ξ̄i. Each must be
    /// homogeneous and nonzero; those above the cutoff are dropped.
    pub fn custom<S: AsRef<str>>(name: &str, a: &DualSteenrod, texts: &[S]) -> Result<Self> {
        let mut generators = Vec::new();
        for t in texts {
            let x = a.parse(t.as_ref(), Coordinates::Conjugate)?;
            let Some(degree) = x.poly.degree() else {
                return Err(Error::Invalid(format!("generator {} is zero or not homogeneous", t.as_ref())));
            };
            if degree == 0 {
                return Err(Error::Invalid(format!("generator {} has degree 0", t.as_ref())));
            }
            generators.push(SpecGenerator {
                label: t.as_ref().to_string(),
                degree,
                element: x.poly,
            });
        }
        SpecGenerator::sort(&mut generators);
        Ok(SubalgebraSpec {
            name: name.into(),
            cutoff: a.cutoff(),
            generators,
            tail: "none".into(),
        })
    }

    /// Poincaré series of a polynomial algebra on the generator degrees.
    /// Agrees with `basis(..).series()` exactly when the generators are
    /// algebraically independent through the cutoff.
    pub fn free_series(&self) -> PoincareSeries {
        let w: Vec<u32> = self.generators.iter().map(|g| g.degree).collect();
        PoincareSeries::polynomial(&w, self.cutoff)
    }

    pub fn generator_labels(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.label.clone()).collect()
    }

    pub fn basis(&self, a: &DualSteenrod) -> SubalgebraBasis {
        SubalgebraBasis::build(a, &self.generators, self.cutoff.min(a.cutoff()))
    }
}

impl SpecGenerator {
    fn sort(g: &mut [SpecGenerator]) {
        g.sort_by(|x, y| x.degree.cmp(&y.degree).then_with(|| x.label.cmp(&y.label)));
    }
}

/// Per-degree bases of the span of generator products, in conjugate
/// coordinates, with their row-reduced spans.
#[derive(Clone, Debug)]
pub struct SubalgebraBasis {
    pub cutoff: u32,
    pub elements: Vec<Vec<F2Poly>>,
    pub spans: Vec<Gf2Basis>,
}

impl SubalgebraBasis {
    pub fn build(a: &DualSteenrod, gens: &[SpecGenerator], cutoff: u32) -> Self {
        let mut elements = Vec::new();
        let mut spans = Vec::new();
        let mut powers: HashMap<(usize, u32), F2Poly> = HashMap::new();
        for d in 0..=cutoff {
            let mut span = Gf2Basis::new(a.dim(d));
            let mut els = Vec::new();
            let mut exps = Vec::new();
            products(gens, d, 0, &mut Vec::new(), &mut exps);
            for e in exps {
                let mut p = F2Poly::one();
                for (j, &k) in e.iter().enumerate() {
                    if k > 0 {
                        let f = powers.entry((j, k)).or_insert_with(|| gens[j].element.pow(k));
                        p = p.mul(f);
                    }
                }
                if span.insert(&a.vector(&p, d)) {
                    els.push(p);
                }
            }
            elements.push(els);
            spans.push(span);
        }
        SubalgebraBasis { cutoff, elements, spans }
    }

    pub fn dim(&self, d: u32) -> usize {
        self.elements.get(d as usize).map_or(0, |v| v.len())
    }

    pub fn series(&self) -> PoincareSeries {
        PoincareSeries {
            ranks: self.elements.iter().map(|v| v.len() as i64).collect(),
        }
    }

    /// Whether a homogeneous element of degree `d` (conjugate coordinates)
    /// lies in the span.
    pub fn contains(&self, a: &DualSteenrod, p: &F2Poly, d: u32) -> bool {
        if p.is_zero() {
            return true;
        }
        match self.spans.get(d as usize) {
            Some(s) => s.contains(&a.vector(p, d)),
            None => false,
        }
    }
}

fn products(gens: &[SpecGenerator], d: u32, j: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if j == gens.len() {
        if d == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let w = gens[j].degree;
    let mut k = 0;
    while k * w <= d {
        cur.push(k);
        products(gens, d - k * w, j + 1, cur, out);
        cur.pop();
        k += 1;
    }
}
