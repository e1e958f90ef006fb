//! Degreewise regularity checks for homogeneous sequences in graded
//! polynomial rings, and the Landweber-style report for a curve.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::curve::{invariants, WeierstrassCurve};
use super::fgl::hasse_coefficients;
use crate::algebra::{FieldKind, GradedPolynomial, PoincareSeries, PolyRing, Subspace, WeightBasis};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    /// No zero divisor was found on any successive quotient through `cutoff`.
    pub regular: bool,
    pub cutoff: u32,
    pub field: String,
    /// The sequence actually decided, as text. In p-local mode this is
    /// `p` followed by the remaining elements reduced mod p.
    pub decided: Vec<String>,
    /// First failure: (position in the input list, weight).
    pub failure: Option<(usize, u32)>,
    /// Ranks of the final quotient at weights 0..=cutoff.
    pub quotient_ranks: Vec<usize>,
    pub quotient_total: usize,
    /// The final quotient vanishes on a run of weights at least as long as
    /// the largest generator weight, so it vanishes beyond.
    pub quotient_finite: bool,
    /// Ranks agree with PS(R) * prod(1 - q^d_i) through the cutoff.
    pub hilbert_match: bool,
    /// Finite quotient and as many elements as generators: the dimension
    /// count then forces regularity in every degree.
    pub certified_all_degrees: bool,
}

struct Graded {
    gens: Vec<usize>,
    bases: Vec<WeightBasis>,
}

impl Graded {
    fn new(ring: &Arc<PolyRing>, cutoff: u32) -> Self {
        let gens: Vec<usize> = (0..ring.ngens()).collect();
        let bases = (0..=cutoff).map(|w| WeightBasis::new(ring, &gens, w)).collect();
        Graded {
            gens,
            bases,
        }
    }
}

/// Decides, weight by weight through `cutoff`, whether `elements` form a
/// regular sequence on the polynomial ring `ring`.
///
/// With `p = Some(p)` the ring is read as a polynomial ring over the
/// integers localized at p: the sequence `(p, x_1, ..., x_n)` is decided
/// (constants equal to p times a unit are absorbed into the leading p), by
/// working over F_p. Regularity of that sequence implies regularity of the
/// x_i. With `p = None` the check runs over the rationals.
pub fn graded_regular_sequence_check(
    ring: &Arc<PolyRing>,
    elements: &[GradedPolynomial],
    p: Option<u64>,
    cutoff: u32,
) -> Result<RegularityReport> {
    if ring.weights().contains(&0) {
        return Err(Error::Invalid("generators must have positive weight".into()));
    }
    let field = match p {
        Some(p) => {
            if !crate::algebra::coeff::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            FieldKind::Prime(p)
        }
        None => FieldKind::Rationals,
    };
    let fring = ring.with_base(field.carrier());
    let mut decided = Vec::new();
    let mut seq: Vec<(usize, GradedPolynomial, u32)> = Vec::new();
    let mut p_seen = 0usize;
    let mut unit_seen = None;
    for (i, x) in elements.iter().enumerate() {
        let x = x.embed(ring);
        if !x.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if x.is_constant() && !x.is_zero() {
            let c = x.constant_term().to_bigint();
            match p {
                Some(p) => {
                    let pb = BigInt::from(p);
                    let (q, r) = c.div_rem(&pb);
                    if r.is_zero() && !q.mod_floor(&pb).is_zero() {
                        p_seen += 1;
                        if p_seen > 1 {
                            unit_seen.get_or_insert(i);
                        }
                        continue;
                    }
                    if !r.is_zero() {
                        unit_seen.get_or_insert(i);
                        continue;
                    }
                    return Err(Error::Invalid(format!(
                        "constant {c} is neither a unit nor p times a unit"
                    )));
                }
                None => {
                    if c.abs() > BigInt::zero() {
                        unit_seen.get_or_insert(i);
                        continue;
                    }
                }
            }
        }
        let fx = if p.is_some() { x.reduce_mod(&fring) } else { x };
        let w = fx.homogeneous_weight().unwrap_or(0);
        seq.push((i, fx, w));
    }
    if let Some(p) = p {
        decided.push(p.to_string());
    }
    decided.extend(seq.iter().map(|(_, x, _)| x.to_text()));

    let g = Graded::new(&fring, cutoff);
    let mut spans: Vec<Subspace> = g
        .bases
        .iter()
        .map(|b| Subspace::new(field, b.len()))
        .collect();
    let mut failure = None;
    if let Some(i) = unit_seen {
        // A unit (or a repeated p) kills the quotient outright.
        failure = Some((i, 0));
    }
    for (idx, x, d) in &seq {
        if x.is_zero() {
            failure.get_or_insert((*idx, 0));
            continue;
        }
        // Standard monomials of Q_k(w - d), taken before this element is added.
        let before: Vec<Vec<usize>> = spans.iter().map(|s| s.free_columns()).collect();
        for w in 0..=cutoff {
            if w < *d {
                continue;
            }
            let src = (w - d) as usize;
            let old_rank = spans[w as usize].rank();
            let mut added = 0usize;
            for &col in &before[src] {
                let m = &g.bases[src].monomials[col];
                let prod = x.mul_monomial(m, &fring.base().one());
                if spans[w as usize].insert(&g.bases[w as usize].coordinates(&prod)) {
                    added += 1;
                }
            }
            debug_assert_eq!(spans[w as usize].rank(), old_rank + added);
            if added != before[src].len() && failure.is_none() {
                failure = Some((*idx, w));
            }
        }
    }
    let _ = &g.gens;
    let quotient_ranks: Vec<usize> = spans
        .iter()
        .zip(&g.bases)
        .map(|(s, b)| b.len() - s.rank())
        .collect();
    let quotient_total = quotient_ranks.iter().sum();
    let maxw = *fring.weights().iter().max().unwrap_or(&1) as usize;
    let mut run = 0usize;
    let mut quotient_finite = false;
    for &r in &quotient_ranks {
        if r == 0 {
            run += 1;
            if run >= maxw {
                quotient_finite = true;
                break;
            }
        } else {
            run = 0;
        }
    }
    let mut expect = PoincareSeries::polynomial(fring.weights(), cutoff);
    for (_, _, d) in &seq {
        expect = expect.times_one_minus(*d);
    }
    let hilbert_match = unit_seen.is_none()
        && expect
            .ranks
            .iter()
            .zip(&quotient_ranks)
            .all(|(a, b)| *a == *b as i64);
    let regular = failure.is_none();
    let certified_all_degrees = regular && quotient_finite && seq.len() == fring.ngens();
    Ok(RegularityReport {
        regular,
        cutoff,
        field: field.to_string(),
        decided,
        failure,
        quotient_ranks,
        quotient_total,
        quotient_finite,
        hilbert_match,
        certified_all_degrees,
    })
}

/// Whether `x` lies in the ideal generated by `ideal` (all homogeneous),
/// decided in the single weight of `x` over `field`.
pub fn ideal_membership(
    ring: &Arc<PolyRing>,
    ideal: &[GradedPolynomial],
    x: &GradedPolynomial,
    field: FieldKind,
) -> Result<bool> {
    let fring = ring.with_base(field.carrier());
    let conv = |p: &GradedPolynomial| match field {
        FieldKind::Prime(_) => p.embed(ring).reduce_mod(&fring),
        FieldKind::Rationals => p.embed(ring),
    };
    let x = conv(x);
    if x.is_zero() {
        return Ok(true);
    }
    let w = x.homogeneous_weight().ok_or(Error::NotHomogeneous)?;
    let gens: Vec<usize> = (0..fring.ngens()).collect();
    let basis = WeightBasis::new(&fring, &gens, w);
    let mut span = Subspace::new(field, basis.len());
    for f in ideal {
        let f = conv(f);
        if f.is_zero() {
            continue;
        }
        if f.is_constant() {
            return Ok(true);
        }
        let d = f.homogeneous_weight().ok_or(Error::NotHomogeneous)?;
        if d > w {
            continue;
        }
        for m in fring.monomials_of_weight(w - d) {
            span.insert(&basis.coordinates(&f.mul_monomial(&m, &fring.base().one())));
        }
    }
    Ok(span.contains(&basis.coordinates(&x)))
}

#[derive(Clone, Debug, Serialize)]
pub struct LandweberReport {
    pub prime: u64,
    pub heights: u32,
    pub v: Vec<String>,
    pub regularity: RegularityReport,
    /// Smallest M with c4^M in (p, v_1, ..., v_h), if found.
    pub c4_power: Option<u32>,
    /// Smallest M with Delta^M in (p, v_1, ..., v_h), if found.
    pub delta_power: Option<u32>,
    pub max_power: u32,
    /// The vanishing locus of (p, v_1, ..., v_h) lies in the cuspidal locus.
    pub cuspidal_containment: bool,
    pub note: String,
}

/// Checks that (p, v_1, ..., v_h) is regular on the base ring of `c` and
/// that c4 and Delta have powers in the ideal it generates.
pub fn landweber_report(
    c: &WeierstrassCurve,
    p: u64,
    heights: u32,
    cutoff: u32,
    max_power: u32,
) -> Result<LandweberReport> {
    let ring = c.ring().clone();
    let order = (p.pow(heights) as usize).max(2);
    let h = hasse_coefficients(c, p, heights, order)?;
    let regularity = graded_regular_sequence_check(&ring, &h.values, Some(p), cutoff)?;
    let inv = invariants(c);
    let field = FieldKind::Prime(p);
    let ideal: Vec<GradedPolynomial> = h.values[1..].to_vec();
    let find = |x: &GradedPolynomial| -> Result<Option<u32>> {
        let mut pw = ring.one();
        for m in 1..=max_power {
            pw = &pw * x;
            if ideal_membership(&ring, &ideal, &pw, field)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    };
    let c4_power = find(&inv.c4)?;
    let delta_power = find(&inv.discriminant)?;
    Ok(LandweberReport {
        prime: p,
        heights,
        v: h.v.clone(),
        regularity,
        c4_power,
        delta_power,
        max_power,
        cuspidal_containment: c4_power.is_some() && delta_power.is_some(),
        note: "v_i are literal coefficients of z^(p^i) in [p](z); their signs depend on the coordinate -x/y".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BaseRing;

    #[test]
    fn two_variables_regular() {
        let r = PolyRing::new(BaseRing::Integers, &[("x", 2), ("y", 2)]);
        let rep = graded_regular_sequence_check(&r, &r.gens(), None, 10).unwrap();
        assert!(rep.regular);
        assert_eq!(rep.quotient_total, 1);
        assert_eq!(rep.quotient_ranks[0], 1);
        assert!(rep.certified_all_degrees);
    }

    #[test]
    fn repeated_element_not_regular() {
        let r = PolyRing::new(BaseRing::Integers, &[("x", 2)]);
        let x = r.var("x").unwrap();
        let rep = graded_regular_sequence_check(&r, &[x.clone(), x], None, 10).unwrap();
        assert!(!rep.regular);
    }

    #[test]
    fn p_alone_on_integers() {
        let r = PolyRing::new::<&str>(BaseRing::Integers, &[]);
        let rep = graded_regular_sequence_check(&r, &[r.constant(5)], Some(5), 4).unwrap();
        assert!(rep.regular);
        assert_eq!(rep.quotient_total, 1);
    }

    #[test]
    fn zero_divisor_detected() {
        let r = PolyRing::new(BaseRing::Integers, &[("x", 2), ("y", 2)]);
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let rep = graded_regular_sequence_check(&r, &[&x * &y, x.clone()], None, 8).unwrap();
        assert!(!rep.regular);
        assert_eq!(rep.failure, Some((1, 4)));
    }
}
