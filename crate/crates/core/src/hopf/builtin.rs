//! The Weierstrass Hopf algebroid, synthesized from the transformation
//! laws, and the small built-in examples.

use crate::algebra::{BaseRing, GradedPolynomial, PolyRing};
use crate::elliptic::{transform, CoordinateChange, WeierstrassCurve};
use crate::error::{Error, Result};

use super::presentation::HopfAlgebroidPresentation;

/// Depth through which built-in presentations are rechecked monomialwise.
pub const BASIS_DEPTH: u32 = 24;

/// (Z[a1, ..., a6], Z[a1, ..., a6][r, s, t]) with η_R read off the
/// transformation laws at u = 1 and Δ obtained by composing two generic
/// coordinate changes, the left tensor factor being applied first.
pub fn synthesize_weierstrass_algebroid() -> Result<HopfAlgebroidPresentation> {
    let a = WeierstrassCurve::universal_ring(BaseRing::Integers);
    let gamma = a.extend(&[("r", 4), ("s", 2), ("t", 6)]);
    let na = a.ngens();
    let change = |ring: &std::sync::Arc<PolyRing>, off: usize| CoordinateChange {
        u: ring.base().one(),
        r: ring.gen(off),
        s: ring.gen(off + 1),
        t: ring.gen(off + 2),
    };
    let c = WeierstrassCurve::over_universal(&gamma);
    let g = change(&gamma, na);
    let eta_r = transform(&c, &g)?.a.to_vec();

    let mut h = HopfAlgebroidPresentation {
        name: "weierstrass".into(),
        a: a.clone(),
        gamma: gamma.clone(),
        idempotent: vec![false; 3],
        eta_r,
        delta: Vec::new(),
        epsilon: vec![a.zero(); 3],
        chi: Vec::new(),
    };
    let t2 = h.tensor_ring(2);
    let first = change(&t2, h.slot_index(1, 0));
    let second = change(&t2, h.slot_index(2, 0));
    let comp = first.then(&second);
    if !comp.u.is_one() {
        return Err(Error::Invariant("composite of unit-scale changes has u != 1".into()));
    }
    h.delta = vec![comp.r, comp.s, comp.t];
    let inv = g.inverse()?;
    h.chi = vec![inv.r, inv.s, inv.t];
    h.checked(BASIS_DEPTH)
}

/// (Z[b, c], Z[b, c, t]) with η_R(b) = b + 2t, η_R(c) = c + t^2 + bt.
pub fn mqd() -> Result<HopfAlgebroidPresentation> {
    let a = PolyRing::new(BaseRing::Integers, &[("b", 2), ("c", 4)]);
    let gamma = a.extend(&[("t", 2)]);
    let p = |s: &str| GradedPolynomial::parse(&gamma, s);
    let h = HopfAlgebroidPresentation {
        name: "mqd".into(),
        a: a.clone(),
        gamma: gamma.clone(),
        idempotent: vec![false],
        eta_r: vec![p("b + 2*t")?, p("c + t^2 + b*t")?],
        delta: Vec::new(),
        epsilon: vec![a.zero()],
        chi: vec![p("-1*t")?],
    };
    let t2 = h.tensor_ring(2);
    let delta = GradedPolynomial::parse(&t2, "t1 + t2")?;
    HopfAlgebroidPresentation {
        delta: vec![delta],
        ..h
    }
    .checked(BASIS_DEPTH)
}

/// Functions on the group of order two over Z: Γ = Z[e]/(e^2 - e) with e
/// the indicator of the nontrivial element.
pub fn z2_group() -> Result<HopfAlgebroidPresentation> {
    let a = PolyRing::new::<&str>(BaseRing::Integers, &[]);
    let gamma = a.extend(&[("e", 0)]);
    let h = HopfAlgebroidPresentation {
        name: "z2_group".into(),
        a: a.clone(),
        gamma: gamma.clone(),
        idempotent: vec![true],
        eta_r: Vec::new(),
        delta: Vec::new(),
        epsilon: vec![a.zero()],
        chi: vec![gamma.gen(0)],
    };
    let t2 = h.tensor_ring(2);
    let delta = GradedPolynomial::parse(&t2, "e1 + e2 - 2*e1*e2")?;
    HopfAlgebroidPresentation {
        delta: vec![delta],
        ..h
    }
    .checked(BASIS_DEPTH)
}

pub fn builtin_algebroid(name: &str) -> Result<HopfAlgebroidPresentation> {
    match name {
        "weierstrass" => synthesize_weierstrass_algebroid(),
        "mqd" => mqd(),
        "z2_group" | "z2" => z2_group(),
        _ => Err(Error::Unknown(format!("algebroid {name}"))),
    }
}
