use mcub_core::algebra::{BaseRing, Coefficient, GradedPolynomial, PolyRing, TruncatedSeries};
use mcub_core::elliptic::{
    fgl_from_curve, graded_regular_sequence_check, hasse_coefficients, invariants, landweber_report,
    transform, CoordinateChange, WeierstrassCurve,
};
use proptest::prelude::*;
use std::sync::Arc;

const P: u64 = 1_000_003;

fn parse(ring: &Arc<PolyRing>, s: &str) -> GradedPolynomial {
    GradedPolynomial::parse(ring, s).unwrap()
}

fn series_from(z: &TruncatedSeries, coeffs: &[GradedPolynomial]) -> TruncatedSeries {
    let mut out = z.like(z.ring().zero());
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() && k <= z.order() {
            out = out.try_add(&z.pow(k as u32).scale(c)).unwrap();
        }
    }
    out
}

/// F(x, y) = exp(log x + log y) with log the integral of the invariant
/// differential `dx / (2y + a1 x + a3)` written in z = -x/y. This never
/// uses the chord construction, so it checks it independently.
fn law_from_logarithm(c: &WeierstrassCurve, order: usize) -> TruncatedSeries {
    let base = c.ring().clone();
    let field = base.base();
    let s1 = TruncatedSeries::zero(&base, &["z"], order + 3);
    let z = s1.var(0);
    // w = z^3 U(z) as a fixed point, computed here from scratch.
    let [a1, a2, a3, a4, a6] = &c.a;
    let mut w = z.like(base.zero());
    for _ in 0..order + 4 {
        let w2 = w.try_mul(&w).unwrap();
        w = z
            .pow(3)
            .try_add(&z.try_mul(&w).unwrap().scale(a1))
            .unwrap()
            .try_add(&z.pow(2).try_mul(&w).unwrap().scale(a2))
            .unwrap()
            .try_add(&w2.scale(a3))
            .unwrap()
            .try_add(&z.try_mul(&w2).unwrap().scale(a4))
            .unwrap()
            .try_add(&w2.try_mul(&w).unwrap().scale(a6))
            .unwrap();
    }
    let wc = w.coefficients();
    let u: Vec<GradedPolynomial> = wc[3..].to_vec();
    let s = TruncatedSeries::zero(&base, &["z"], order);
    let z = s.var(0);
    let useries = series_from(&z, &u);
    let du: Vec<GradedPolynomial> = (0..order)
        .map(|k| u.get(k + 1).map(|c| c.scale_i64(k as i64 + 1)).unwrap_or(base.zero()))
        .collect();
    let zdu = z.try_mul(&series_from(&z, &du)).unwrap();
    let num = useries.scale_i64(2).try_add(&zdu).unwrap();
    let two = z.constant(&base.constant(2));
    let den = useries
        .try_mul(
            &two.try_sub(&z.scale(a1))
                .unwrap()
                .try_sub(&z.pow(3).try_mul(&useries).unwrap().scale(a3))
                .unwrap(),
        )
        .unwrap();
    let p = num.try_mul(&den.inverse().unwrap()).unwrap();
    let pc = p.coefficients();
    let mut logc = vec![base.zero()];
    for (k, c) in pc.iter().enumerate().take(order) {
        let inv = field.from_i64(k as i64 + 1).inverse().unwrap();
        logc.push(c.scale(&inv));
    }
    let log = series_from(&z, &logc);
    let exp = log.functional_inverse(order).unwrap();
    let s2 = TruncatedSeries::zero(&base, &["x", "y"], order);
    let lx = log.substitute(&[s2.var(0)]).unwrap();
    let ly = log.substitute(&[s2.var(1)]).unwrap();
    exp.substitute(&[lx.try_add(&ly).unwrap()]).unwrap()
}

#[test]
fn chord_law_matches_logarithm_universal() {
    let c = WeierstrassCurve::universal(BaseRing::prime(P).unwrap());
    let f = fgl_from_curve(&c, 6).unwrap();
    let g = law_from_logarithm(&c, 6);
    assert_eq!(f.law, g);
}

#[test]
fn chord_law_matches_logarithm_numeric() {
    let c = WeierstrassCurve::numeric(BaseRing::prime(P).unwrap(), [1, -1, 3, 2, -5]);
    let f = fgl_from_curve(&c, 9).unwrap();
    assert_eq!(f.law, law_from_logarithm(&c, 9));
}

#[test]
fn two_series_for_alpha_curve() {
    let ring = PolyRing::new(BaseRing::Integers, &[("a1", 2), ("a3", 6)]);
    let c = WeierstrassCurve::new([
        ring.var("a1").unwrap(),
        ring.zero(),
        ring.var("a3").unwrap(),
        ring.zero(),
        ring.zero(),
    ])
    .unwrap();
    let h = hasse_coefficients(&c, 2, 2, 4).unwrap();
    assert_eq!(h.v, vec!["2", "-1*a1", "-7*a3"]);
}

#[test]
fn three_series_through_order_ten() {
    let ring = PolyRing::new(BaseRing::Integers, &[("a2", 4), ("a4", 8)]);
    let c = WeierstrassCurve::new([
        ring.zero(),
        ring.var("a2").unwrap(),
        ring.zero(),
        ring.var("a4").unwrap(),
        ring.zero(),
    ])
    .unwrap();
    let h = hasse_coefficients(&c, 3, 2, 10).unwrap();
    assert_eq!(h.values[0], ring.constant(3));
    assert_eq!(h.values[1], parse(&ring, "-8*a2"));
    let a2 = ring.index_of("a2").unwrap();
    let v2_mod_a2 = h.values[2].retain(|m| m.exps[a2] == 0);
    assert_eq!(v2_mod_a2, parse(&ring, "2432*a4^2"));
}

#[test]
fn regular_sequence_c4_delta() {
    let c = WeierstrassCurve::universal(BaseRing::Integers);
    let inv = invariants(&c);
    let r = c.ring();
    let seq = vec![
        inv.c4.clone(),
        inv.discriminant.clone(),
        c.a2().clone(),
        c.a4().clone(),
        c.a6().clone(),
    ];
    let rep = graded_regular_sequence_check(r, &seq, Some(2), 48).unwrap();
    assert!(rep.regular, "{:?}", rep.failure);
    assert!(rep.certified_all_degrees);
    assert!(rep.hilbert_match);
    // Oracle: the quotient is F2[a1, a3]/(a1^4, a3^4 + a1^3 a3^3), whose
    // ranks come from (1 - q^8)(1 - q^24)/((1 - q^2)(1 - q^6)).
    let mut want = mcub_core::algebra::PoincareSeries::polynomial(&[2, 6], 48);
    want = want.times_one_minus(8).times_one_minus(24);
    let got: Vec<i64> = rep.quotient_ranks.iter().map(|&r| r as i64).collect();
    assert_eq!(got, want.ranks);
    assert_eq!(rep.quotient_total, 16);
}

#[test]
fn landweber_alpha_curve_cuspidal() {
    let ring = PolyRing::new(BaseRing::Integers, &[("a1", 2), ("a3", 6)]);
    let c = WeierstrassCurve::new([
        ring.var("a1").unwrap(),
        ring.zero(),
        ring.var("a3").unwrap(),
        ring.zero(),
        ring.zero(),
    ])
    .unwrap();
    let rep = landweber_report(&c, 2, 2, 24, 4).unwrap();
    assert!(rep.regularity.regular);
    assert_eq!(rep.regularity.quotient_total, 1);
    assert!(rep.cuspidal_containment);
    assert_eq!(rep.c4_power, Some(1));
}

#[test]
fn landweber_short_form_at_five() {
    let ring = PolyRing::new(BaseRing::Integers, &[("A", 8), ("B", 12)]);
    let c = WeierstrassCurve::new([
        ring.zero(),
        ring.zero(),
        ring.zero(),
        ring.var("A").unwrap(),
        ring.var("B").unwrap(),
    ])
    .unwrap();
    let rep = landweber_report(&c, 5, 2, 120, 8).unwrap();
    assert!(rep.regularity.regular);
    assert!(rep.regularity.certified_all_degrees);
    assert!(rep.cuspidal_containment);
    // Independent count: F5[A,B]/(v1, v2) with v1, v2 of weights 8 and 48
    // is a complete intersection; its rank is (48 * 8)/(8 * 12) = 4.
    assert_eq!(rep.regularity.quotient_total, 4);
}

fn small_curve() -> impl Strategy<Value = [i64; 5]> {
    prop::array::uniform5(-6i64..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn discriminant_identity(a in small_curve()) {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, a);
        let inv = invariants(&c);
        let lhs = &inv.c4.pow(3) - &inv.c6.pow(2);
        prop_assert_eq!(lhs, inv.discriminant.scale_i64(1728));
    }

    #[test]
    fn fgl_axioms(a in small_curve()) {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, a);
        let f = fgl_from_curve(&c, 5).unwrap();
        let base = c.ring().clone();
        let s2 = TruncatedSeries::zero(&base, &["x", "y"], 5);
        let (x, y) = (s2.var(0), s2.var(1));
        let zero = s2.like(base.zero());
        prop_assert_eq!(f.law.substitute(&[x.clone(), zero.clone()]).unwrap(), x.clone());
        prop_assert_eq!(f.law.substitute(&[zero, y.clone()]).unwrap(), y.clone());
        prop_assert_eq!(f.law.substitute(&[y.clone(), x.clone()]).unwrap(), f.law.clone());
        let s3 = TruncatedSeries::zero(&base, &["x", "y", "z"], 5);
        let (x3, y3, z3) = (s3.var(0), s3.var(1), s3.var(2));
        let xy = f.law.substitute(&[x3.clone(), y3.clone()]).unwrap();
        let yz = f.law.substitute(&[y3, z3.clone()]).unwrap();
        let left = f.law.substitute(&[xy, z3]).unwrap();
        let right = f.law.substitute(&[x3, yz]).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn n_series_compose(a in small_curve(), m in 1i64..=3, n in -2i64..=3) {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, a);
        let f = fgl_from_curve(&c, 5).unwrap();
        let sm = f.n_series(m).unwrap();
        let sn = f.n_series(n).unwrap();
        let mn = f.n_series(m * n).unwrap();
        prop_assert_eq!(sm.substitute(&[sn]).unwrap(), mn);
    }

    #[test]
    fn covariance_of_invariants(a in small_curve(), r in -3i64..=3, s in -3i64..=3, t in -3i64..=3, neg in any::<bool>()) {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, a);
        let u = if neg { -1 } else { 1 };
        let g = CoordinateChange::numeric(c.ring(), u, r, s, t);
        let d = transform(&c, &g).unwrap();
        let (i, j) = (invariants(&c), invariants(&d));
        prop_assert_eq!(&i.c4.pow(3) * &j.discriminant, &j.c4.pow(3) * &i.discriminant);
        prop_assert_eq!(j.c4.scale(&Coefficient::Integer((u as i64).pow(4).into())), i.c4);
    }

    #[test]
    fn functoriality(a in small_curve(), g1 in prop::array::uniform3(-3i64..=3), g2 in prop::array::uniform3(-3i64..=3)) {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, a);
        let h1 = CoordinateChange::numeric(c.ring(), 1, g1[0], g1[1], g1[2]);
        let h2 = CoordinateChange::numeric(c.ring(), -1, g2[0], g2[1], g2[2]);
        let two_step = transform(&transform(&c, &h1).unwrap(), &h2).unwrap();
        prop_assert_eq!(two_step, transform(&c, &h1.then(&h2)).unwrap());
    }
}
