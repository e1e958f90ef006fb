//! Is the span of a subalgebra closed under the left coaction, i.e. does Δ
//! carry it into 𝔸 ⊗ C?

use serde::Serialize;

use crate::error::Result;

use super::element::{degree, key, leg_text, Coordinates, DualSteenrod, F2Poly, Tensor};
use super::spec::{SubalgebraBasis, SubalgebraSpec};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClosureWitness {
    pub degree: u32,
    pub element: String,
    /// `L⊗R` with R the right leg of L, which is not in C.
    pub term: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureRoute {
    pub coordinates: Coordinates,
    pub checked_through: u32,
    pub elements_checked: usize,
    pub closed: bool,
    pub witness: Option<ClosureWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub spec: String,
    pub generators: Vec<String>,
    pub cutoff: u32,
    pub closed: bool,
    /// Combinatorial check with Δ(ξ̄k) = Σ ξ̄i ⊗ ξ̄_{k-i}^{2^i}.
    pub conjugate: ClosureRoute,
    /// Independent check after rewriting the basis in Milnor coordinates.
    pub milnor: ClosureRoute,
    pub witness: Option<ClosureWitness>,
}

/// Runs both routes, the Milnor one only through `milnor_cutoff`.
pub fn comodule_closure_check(
    a: &DualSteenrod,
    spec: &SubalgebraSpec,
    cutoff: u32,
    milnor_cutoff: u32,
) -> Result<ClosureReport> {
    let cutoff = cutoff.min(a.cutoff()).min(spec.cutoff);
    let basis = spec.basis(a);
    let conjugate = route(a, &basis, cutoff, Coordinates::Conjugate)?;
    let milnor = route(a, &basis, milnor_cutoff.min(cutoff), Coordinates::Milnor)?;
    let witness = milnor.witness.clone().or_else(|| conjugate.witness.clone());
    Ok(ClosureReport {
        spec: spec.name.clone(),
        generators: spec.generator_labels(),
        cutoff,
        closed: conjugate.closed && milnor.closed,
        conjugate,
        milnor,
        witness,
    })
}

fn route(a: &DualSteenrod, basis: &SubalgebraBasis, cutoff: u32, coords: Coordinates) -> Result<ClosureRoute> {
    // In Milnor coordinates the basis and its spans are rewritten first.
    let rewritten;
    let basis = match coords {
        Coordinates::Conjugate => basis,
        Coordinates::Milnor => {
            rewritten = rewrite_milnor(a, basis, cutoff)?;
            &rewritten
        }
    };
    let mut checked = 0;
    for d in 0..=cutoff {
        for x in &basis.elements[d as usize] {
            checked += 1;
            let t = match coords {
                Coordinates::Conjugate => a.coproduct_conjugate(x)?,
                Coordinates::Milnor => a.coproduct(x)?,
            };
            if let Some(term) = first_leg_outside(&t, |r, e| basis.contains(a, r, e), coords) {
                return Ok(ClosureRoute {
                    coordinates: coords,
                    checked_through: cutoff,
                    elements_checked: checked,
                    closed: false,
                    witness: Some(ClosureWitness {
                        degree: d,
                        element: x.text(coords),
                        term,
                    }),
                });
            }
        }
    }
    Ok(ClosureRoute {
        coordinates: coords,
        checked_through: cutoff,
        elements_checked: checked,
        closed: true,
        witness: None,
    })
}

/// First left monomial, in descending order, whose right leg fails `inside`.
pub(crate) fn first_leg_outside<F: Fn(&F2Poly, u32) -> bool>(
    t: &Tensor,
    inside: F,
    coords: Coordinates,
) -> Option<String> {
    let groups = t.by_left();
    let mut lefts: Vec<u64> = groups.keys().copied().collect();
    lefts.sort_by_key(|&l| std::cmp::Reverse(key(l)));
    for l in lefts {
        let r = &groups[&l];
        let Some(e) = r.degree() else {
            return Some(leg_text(l, r, coords));
        };
        if !inside(r, e) {
            return Some(leg_text(l, r, coords));
        }
    }
    None
}

fn rewrite_milnor(a: &DualSteenrod, basis: &SubalgebraBasis, cutoff: u32) -> Result<SubalgebraBasis> {
    let mut elements = Vec::new();
    let mut spans = Vec::new();
    for d in 0..=cutoff {
        let mut span = crate::algebra::Gf2Basis::new(a.dim(d));
        let mut els = Vec::new();
        for x in &basis.elements[d as usize] {
            let y = a.from_conjugate(x)?;
            debug_assert!(y.0.iter().all(|&m| degree(m) == d));
            span.insert(&a.vector(&y, d));
            els.push(y);
        }
        elements.push(els);
        spans.push(span);
    }
    Ok(SubalgebraBasis { cutoff, elements, spans })
}
