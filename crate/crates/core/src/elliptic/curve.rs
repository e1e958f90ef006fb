//! Weierstrass cubics, coordinate changes and the classical invariants.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{BaseRing, Coefficient, GradedPolynomial, PolyRing};
use crate::error::{Error, Result};

/// Weights of a1, a2, a3, a4, a6.
pub const A_WEIGHTS: [u32; 5] = [2, 4, 6, 8, 12];
pub const A_NAMES: [&str; 5] = ["a1", "a2", "a3", "a4", "a6"];

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`, coefficients in a
/// common ring. Nodal and cuspidal curves are allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve {
    pub a: [GradedPolynomial; 5],
}

impl WeierstrassCurve {
    pub fn new(a: [GradedPolynomial; 5]) -> Result<Self> {
        let mut ring = a[0].ring().clone();
        for x in &a[1..] {
            ring = crate::algebra::poly::common_ring(&ring, x.ring())?;
        }
        Ok(WeierstrassCurve {
            a: a.map(|x| x.embed(&ring)),
        })
    }

    /// The ring `base[a1, a2, a3, a4, a6]` with its universal curve.
    pub fn universal_ring(base: BaseRing) -> Arc<PolyRing> {
        let gens: Vec<(&str, u32)> = A_NAMES.iter().copied().zip(A_WEIGHTS).collect();
        PolyRing::new(base, &gens)
    }

    pub fn universal(base: BaseRing) -> Self {
        Self::over_universal(&Self::universal_ring(base))
    }

    /// Universal curve in a ring whose first five generators are the a_i.
    pub fn over_universal(ring: &Arc<PolyRing>) -> Self {
        WeierstrassCurve {
            a: std::array::from_fn(|i| ring.gen(i)),
        }
    }

    /// A curve with integer coefficients, over the ring with no generators.
    pub fn numeric(base: BaseRing, a: [i64; 5]) -> Self {
        let ring = PolyRing::new::<&str>(base, &[]);
        WeierstrassCurve {
            a: a.map(|x| ring.constant(x)),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.a[0].ring()
    }

    pub fn a1(&self) -> &GradedPolynomial {
        &self.a[0]
    }
    pub fn a2(&self) -> &GradedPolynomial {
        &self.a[1]
    }
    pub fn a3(&self) -> &GradedPolynomial {
        &self.a[2]
    }
    pub fn a4(&self) -> &GradedPolynomial {
        &self.a[3]
    }
    pub fn a6(&self) -> &GradedPolynomial {
        &self.a[4]
    }

    /// Every coefficient is homogeneous of its nominal weight (zero allowed).
    pub fn is_graded(&self) -> bool {
        self.a
            .iter()
            .zip(A_WEIGHTS)
            .all(|(x, w)| x.is_zero() || x.homogeneous_weight() == Some(w))
    }

    pub fn embed(&self, ring: &Arc<PolyRing>) -> Self {
        WeierstrassCurve {
            a: self.a.clone().map(|x| x.embed(ring)),
        }
    }

    /// Same curve with coefficients reduced into `ring` (same generators,
    /// prime base).
    pub fn reduce_mod(&self, ring: &Arc<PolyRing>) -> Self {
        WeierstrassCurve {
            a: self.a.clone().map(|x| x.reduce_mod(ring)),
        }
    }

    pub fn texts(&self) -> [String; 5] {
        self.a.clone().map(|x| x.to_text())
    }
}

/// `x = u^2 x' + r`, `y = u^3 y' + s u^2 x' + t`. The scale `u` is a unit
/// scalar of the base ring.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateChange {
    pub u: Coefficient,
    pub r: GradedPolynomial,
    pub s: GradedPolynomial,
    pub t: GradedPolynomial,
}

impl CoordinateChange {
    pub fn identity(ring: &Arc<PolyRing>) -> Self {
        CoordinateChange {
            u: ring.base().one(),
            r: ring.zero(),
            s: ring.zero(),
            t: ring.zero(),
        }
    }

    pub fn numeric(ring: &Arc<PolyRing>, u: i64, r: i64, s: i64, t: i64) -> Self {
        CoordinateChange {
            u: ring.base().from_i64(u),
            r: ring.constant(r),
            s: ring.constant(s),
            t: ring.constant(t),
        }
    }

    /// The change "first `self`, then `next`": if `self` carries C to C'
    /// and `next` carries C' to C'', the result carries C to C''.
    pub fn then(&self, next: &CoordinateChange) -> CoordinateChange {
        let u1 = &self.u;
        let u1sq = u1.mul(u1);
        let r = &self.r + &next.r.scale(&u1sq);
        let s = &self.s + &next.s.scale(u1);
        let t = &(&self.t + &next.t.scale(&u1sq.mul(u1))) + &(&self.s * &next.r).scale(&u1sq);
        CoordinateChange {
            u: u1.mul(&next.u),
            r,
            s,
            t,
        }
    }

    /// The change undoing `self`.
    pub fn inverse(&self) -> Result<CoordinateChange> {
        let v = self
            .u
            .inverse()
            .ok_or_else(|| Error::NotAUnit(self.u.to_string()))?;
        let v2 = v.mul(&v);
        let v3 = v2.mul(&v);
        Ok(CoordinateChange {
            r: self.r.scale(&v2).neg(),
            s: self.s.scale(&v).neg(),
            t: (&(&self.r * &self.s) - &self.t).scale(&v3),
            u: v,
        })
    }
}

/// Applies the change, returning the curve in the primed coordinates.
pub fn transform(c: &WeierstrassCurve, g: &CoordinateChange) -> Result<WeierstrassCurve> {
    let uinv = g
        .u
        .inverse()
        .ok_or_else(|| Error::NotAUnit(g.u.to_string()))?;
    let ring = [&g.r, &g.s, &g.t]
        .iter()
        .try_fold(c.ring().clone(), |acc, p| crate::algebra::poly::common_ring(&acc, p.ring()))?;
    let c = c.embed(&ring);
    let (r, s, t) = (g.r.embed(&ring), g.s.embed(&ring), g.t.embed(&ring));
    let [a1, a2, a3, a4, a6] = &c.a;
    let k = |n: i64| ring.constant(n);
    let rs = &r * &s;
    let na1 = a1 + &(&k(2) * &s);
    let na2 = &(&(a2 - &(&s * a1)) + &(&k(3) * &r)) - &(&s * &s);
    let na3 = &(a3 + &(&r * a1)) + &(&k(2) * &t);
    let na4 = &(&(&(&(a4 - &(&s * a3)) + &(&k(2) * &(a2 * &r))) - &(&(&t + &rs) * a1))
        + &(&k(3) * &(&r * &r)))
        - &(&k(2) * &(&s * &t));
    let r2 = &r * &r;
    let na6 = &(&(&(&(&(a6 + &(&r * a4)) + &(&r2 * a2)) + &(&r2 * &r)) - &(&t * a3)) - &(&t * &t))
        - &(&(&r * &t) * a1);
    let scale = |p: GradedPolynomial, e: u32| p.scale(&uinv.pow(e));
    Ok(WeierstrassCurve {
        a: [
            scale(na1, 1),
            scale(na2, 2),
            scale(na3, 3),
            scale(na4, 4),
            scale(na6, 6),
        ],
    })
}

/// The quantities b2, b4, b6, b8, c4, c6 and the discriminant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Invariants {
    #[serde(serialize_with = "ser_text")]
    pub b2: GradedPolynomial,
    #[serde(serialize_with = "ser_text")]
    pub b4: GradedPolynomial,
    #[serde(serialize_with = "ser_text")]
    pub b6: GradedPolynomial,
    #[serde(serialize_with = "ser_text")]
    pub b8: GradedPolynomial,
    #[serde(serialize_with = "ser_text")]
    pub c4: GradedPolynomial,
    #[serde(serialize_with = "ser_text")]
    pub c6: GradedPolynomial,
    #[serde(serialize_with = "ser_text", rename = "delta")]
    pub discriminant: GradedPolynomial,
}

pub(crate) fn ser_text<S: serde::Serializer>(
    p: &GradedPolynomial,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text())
}

pub fn invariants(c: &WeierstrassCurve) -> Invariants {
    let ring = c.ring();
    let k = |n: i64| ring.constant(n);
    let [a1, a2, a3, a4, a6] = &c.a;
    let b2 = &(a1 * a1) + &(&k(4) * a2);
    let b4 = &(&k(2) * a4) + &(a1 * a3);
    let b6 = &(a3 * a3) + &(&k(4) * a6);
    let b8 = &(&(&(&(&(a1 * a1) * a6) + &(&k(4) * &(a2 * a6))) - &(&(a1 * a3) * a4))
        + &(&(a3 * a3) * a2))
        - &(a4 * a4);
    let c4 = &(&b2 * &b2) - &(&k(24) * &b4);
    let c6 = &(&(&(&b2 * &b2) * &b2).neg() + &(&k(36) * &(&b2 * &b4))) - &(&k(216) * &b6);
    let disc = &(&(&(&(&b2 * &b2) * &b8).neg() - &(&k(8) * &b4.pow(3))) - &(&k(27) * &(&b6 * &b6)))
        + &(&k(9) * &(&(&b2 * &b4) * &b6));
    Invariants {
        b2,
        b4,
        b6,
        b8,
        c4,
        c6,
        discriminant: disc,
    }
}
