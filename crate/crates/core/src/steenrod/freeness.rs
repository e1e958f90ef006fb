//! Graded freeness of one subalgebra over another, the forcing steps of the
//! uniqueness arguments, and the dual A(2) pattern.

use serde::Serialize;

use crate::algebra::{gf2_left_kernel, Gf2Basis, PoincareSeries};
use crate::error::{Error, Result};

use super::element::{gen_degree, Coordinates, DualSteenrod, F2Poly};
use super::primitives::{primitives, PrimitiveTarget};
use super::spec::{SubalgebraBasis, SubalgebraSpec};

#[derive(Clone, Debug, Serialize)]
pub struct FreenessReport {
    pub big: String,
    pub small: String,
    pub cutoff: u32,
    pub expected_cells: Vec<u32>,
    /// Degrees of the lifted module generators.
    pub cells: Vec<u32>,
    /// Lifts in conjugate coordinates.
    pub lifts: Vec<String>,
    pub series_identity: bool,
    /// Products (small basis) × (lifts) are independent in every degree.
    pub independent: bool,
    /// ... and span the big algebra in every degree.
    pub generates: bool,
    pub free: bool,
}

/// Checks that `big` is free over `small` on cells in the expected degrees,
/// by the Poincaré series and by lifting a basis of big ⊗_small F_2.
pub fn freeness_rank_check(
    a: &DualSteenrod,
    big: &SubalgebraSpec,
    small: &SubalgebraSpec,
    expected_cells: &[u32],
    cutoff: u32,
) -> Result<FreenessReport> {
    let cutoff = cutoff.min(a.cutoff());
    let bb = big.basis(a);
    let sb = small.basis(a);
    for d in 0..=cutoff {
        for x in &sb.elements[d as usize] {
            if !bb.contains(a, x, d) {
                return Err(Error::Invalid(format!(
                    "{} is not contained in {}: {} in degree {d}",
                    small.name,
                    big.name,
                    x.text(Coordinates::Conjugate)
                )));
            }
        }
    }
    let mut expected = expected_cells.to_vec();
    expected.sort_unstable();
    let cells_series = PoincareSeries::from_weights(expected.iter().copied(), cutoff);
    let series_identity = bb.series() == sb.series().mul(&cells_series);

    let mut lifts: Vec<(u32, F2Poly)> = Vec::new();
    let mut independent = true;
    let mut generates = true;
    for d in 0..=cutoff {
        // Decomposables small_{>0} · big in degree d.
        let mut dec = Gf2Basis::new(a.dim(d));
        for e in 1..=d {
            for s in &sb.elements[e as usize] {
                for b in &bb.elements[(d - e) as usize] {
                    dec.insert(&a.vector(&s.mul(b), d));
                }
            }
        }
        for b in &bb.elements[d as usize] {
            if dec.insert(&a.vector(b, d)) {
                lifts.push((d, b.clone()));
            }
        }
        // small · lifts in degree d must be a basis of big_d.
        let mut span = Gf2Basis::new(a.dim(d));
        for (e, g) in &lifts {
            for s in &sb.elements[(d - e) as usize] {
                independent &= span.insert(&a.vector(&s.mul(g), d));
            }
        }
        generates &= span.rank() == bb.dim(d);
    }
    let cells: Vec<u32> = lifts.iter().map(|l| l.0).collect();
    let free = series_identity && independent && generates && cells == expected;
    Ok(FreenessReport {
        big: big.name.clone(),
        small: small.name.clone(),
        cutoff,
        expected_cells: expected,
        lifts: lifts.iter().map(|l| l.1.text(Coordinates::Conjugate)).collect(),
        cells,
        series_identity,
        independent,
        generates,
        free,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NonPrimitivity {
    pub element: String,
    pub degree: u32,
    pub modulo: Vec<String>,
    /// The check only constrains candidates when every right leg of a
    /// positive-degree left factor lies below the forced window.
    pub applicable: bool,
    pub non_primitive: bool,
    pub term: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub ambient: String,
    pub probe_depth: u32,
    pub lowest_degree: u32,
    pub target_rank_at_lowest: i64,
    /// Prim(𝔸) in the lowest degree, Milnor coordinates.
    pub primitives_at_lowest: Vec<String>,
    pub forced: bool,
    /// Prim(𝔸) ∩ ambient there; forced when its rank is the target's.
    pub forced_generators: Vec<String>,
    /// Below this degree any candidate agrees with the algebra generated by
    /// the forced generators.
    pub forced_below: u32,
    pub witness: Option<NonPrimitivity>,
    /// Listed lifts independent in ambient ⊗ F_2 over the forced algebra.
    pub lifts_independent: Option<bool>,
    pub holds: bool,
}

/// Forcing steps for a subcomodule algebra of `ambient` with graded
/// dimension `target`: the lowest-degree generator must be a Hopf
/// primitive, which pins it down when Prim ∩ ambient has the target rank.
/// Then `witness` is tested for primitivity modulo the forced algebra and
/// `lifts` for independence over it.
pub fn uniqueness_probe(
    a: &DualSteenrod,
    ambient: &SubalgebraSpec,
    target: &PoincareSeries,
    probe_depth: u32,
    witness: Option<&str>,
    lifts: &[&str],
) -> Result<UniquenessReport> {
    let depth = probe_depth.min(a.cutoff()).min(target.cutoff());
    let Some(d0) = (1..=depth).find(|&d| target.at(d) != 0) else {
        return Err(Error::Invalid(format!("target has no positive-degree class through {depth}")));
    };
    let amb = ambient.basis(a);
    // Prim(𝔸)_{d0} in conjugate coordinates, intersected with the ambient.
    let prim = primitives(a, &PrimitiveTarget::Dual, d0..=d0)?;
    let mut pvecs = Vec::new();
    for t in prim.degrees.iter().flat_map(|x| &x.basis) {
        let p = a.parse(t, Coordinates::Conjugate)?.poly;
        pvecs.push(a.vector(&p, d0));
    }
    let mut rows = pvecs.clone();
    rows.extend(amb.elements[d0 as usize].iter().map(|x| a.vector(x, d0)));
    let mut meet = Gf2Basis::new(a.dim(d0));
    for k in gf2_left_kernel(&rows, a.dim(d0)) {
        let mut v = vec![0u64; a.dim(d0).div_ceil(64)];
        for (i, p) in pvecs.iter().enumerate() {
            if k[i / 64] >> (i % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(p) {
                    *x ^= y;
                }
            }
        }
        meet.insert(&v);
    }
    let meet_elems: Vec<F2Poly> = meet.rows().iter().map(|r| a.from_vector(r, d0)).collect();
    let forced = meet_elems.len() as i64 == target.at(d0);
    let milnor: Vec<String> = meet_elems
        .iter()
        .map(|x| Ok(a.from_conjugate(x)?.text(Coordinates::Milnor)))
        .collect::<Result<_>>()?;

    let forced_spec = SubalgebraSpec::custom("forced", a, &milnor)?;
    let fb = forced_spec.basis(a);
    let forced_below = (d0 + 1..=depth)
        .find(|&d| target.at(d) != fb.dim(d) as i64)
        .unwrap_or(depth + 1);

    let witness = match witness {
        Some(w) => Some(non_primitivity(a, w, &fb, &milnor, forced_below)?),
        None => None,
    };
    let lifts_independent = if lifts.is_empty() {
        None
    } else {
        Some(lifts_independent(a, &amb, &fb, lifts)?)
    };
    let holds = forced
        && witness.as_ref().is_none_or(|w| w.applicable && w.non_primitive)
        && lifts_independent.unwrap_or(true);
    Ok(UniquenessReport {
        ambient: ambient.name.clone(),
        probe_depth: depth,
        lowest_degree: d0,
        target_rank_at_lowest: target.at(d0),
        primitives_at_lowest: prim.degrees.iter().flat_map(|x| x.basis.clone()).collect(),
        forced,
        forced_generators: milnor,
        forced_below,
        witness,
        lifts_independent,
        holds,
    })
}

/// Δx ≡ x⊗1 + 1⊗x modulo 𝔸 ⊗ D_{>0}? Right legs of left factors of
/// positive degree must lie in D.
fn non_primitivity(
    a: &DualSteenrod,
    text: &str,
    d: &SubalgebraBasis,
    modulo: &[String],
    forced_below: u32,
) -> Result<NonPrimitivity> {
    let x = a.parse(text, Coordinates::Conjugate)?;
    let Some(deg) = x.poly.degree() else {
        return Err(Error::Invalid(format!("{text} is zero or not homogeneous")));
    };
    let t = a.coproduct_conjugate(&x.poly)?;
    let trimmed = super::element::Tensor(t.0.into_iter().filter(|&(l, _)| l != 0).collect());
    let term = super::closure::first_leg_outside(
        &trimmed,
        |r, e| e == 0 || d.contains(a, r, e),
        Coordinates::Conjugate,
    );
    Ok(NonPrimitivity {
        element: x.text(),
        degree: deg,
        modulo: modulo.to_vec(),
        applicable: deg <= forced_below,
        non_primitive: term.is_some(),
        term,
    })
}

/// Per degree, the lifts together with D_{>0} · ambient are independent.
fn lifts_independent(a: &DualSteenrod, amb: &SubalgebraBasis, d: &SubalgebraBasis, lifts: &[&str]) -> Result<bool> {
    let mut by_degree: std::collections::BTreeMap<u32, Vec<F2Poly>> = Default::default();
    for l in lifts {
        let x = a.parse(l, Coordinates::Conjugate)?;
        let Some(e) = x.poly.degree() else {
            return Err(Error::Invalid(format!("{l} is zero or not homogeneous")));
        };
        if !amb.contains(a, &x.poly, e) {
            return Ok(false);
        }
        by_degree.entry(e).or_default().push(x.poly);
    }
    for (deg, xs) in by_degree {
        let mut span = Gf2Basis::new(a.dim(deg));
        for e in 1..=deg {
            for s in d.elements.get(e as usize).into_iter().flatten() {
                for b in &amb.elements[(deg - e) as usize] {
                    span.insert(&a.vector(&s.mul(b), deg));
                }
            }
        }
        for x in xs {
            if !span.insert(&a.vector(&x, deg)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct PatternReport {
    pub cutoff: u32,
    /// PS(𝔸)/PS(spec), coefficientwise.
    pub ranks: Vec<i64>,
    pub nonnegative: bool,
    pub top: Option<u32>,
    pub total: i64,
}

/// PS(𝔸) / PS(spec) through the cutoff.
pub fn quotient_pattern(a: &DualSteenrod, spec: &SubalgebraSpec) -> PatternReport {
    let cutoff = a.cutoff().min(spec.cutoff);
    let weights: Vec<u32> = (0..a.ngens()).map(gen_degree).collect();
    let full = PoincareSeries::polynomial(&weights, cutoff);
    let q = full.div(&spec.basis(a).series());
    PatternReport {
        cutoff,
        nonnegative: q.ranks.iter().all(|&r| r >= 0),
        top: q.top(),
        total: q.total(),
        ranks: q.ranks,
    }
}
