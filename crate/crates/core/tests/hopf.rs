use std::collections::HashMap;

use mcub_core::algebra::{BaseRing, FieldKind, GradedPolynomial, Subspace};
use mcub_core::elliptic::{invariants, transform, CoordinateChange, WeierstrassCurve};
use mcub_core::hopf::{
    builtin_algebroid, cobar_cohomology, invariants_h0, mqd, synthesize_weierstrass_algebroid,
    z2_group, Coefficients, Comodule, HopfAlgebroidPresentation,
};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Rank of ker(f ↦ f(a') - f) on weight w of Z[a1..a6], with a' the
/// coefficients of the universal curve moved by (1, r, s, t). This uses the
/// transformation laws directly, not the presentation.
fn weierstrass_invariant_rank(w: u32) -> usize {
    let c = WeierstrassCurve::universal(BaseRing::Integers);
    let ring = c.ring().extend(&[("r", 4), ("s", 2), ("t", 6)]);
    let ce = c.embed(&ring);
    let g = CoordinateChange {
        u: ring.base().one(),
        r: ring.var("r").unwrap(),
        s: ring.var("s").unwrap(),
        t: ring.var("t").unwrap(),
    };
    let moved = transform(&ce, &g).unwrap();
    let mut images = moved.a.to_vec();
    images.extend(["r", "s", "t"].map(|n| ring.var(n).unwrap()));
    let src = c.ring().monomials_of_weight(w);
    let mut cols: HashMap<_, usize> = HashMap::new();
    let mut span = Subspace::new(FieldKind::Rationals, 4096);
    let mut rank = 0;
    for m in &src {
        let f = GradedPolynomial::monomial(c.ring(), m.clone(), ring.base().one()).embed(&ring);
        let d = &f.substitute(&images, &ring) - &f;
        let v: Vec<(usize, BigInt)> = d
            .terms()
            .map(|(mm, k)| {
                let n = cols.len();
                (*cols.entry(mm.clone()).or_insert(n), k.to_bigint())
            })
            .collect();
        if span.insert(&v) {
            rank += 1;
        }
    }
    src.len() - rank
}

#[test]
fn weierstrass_h0_oracle_and_cobar() {
    let h = synthesize_weierstrass_algebroid().unwrap();
    let inv = invariants_h0(&h, &Comodule::Unit, -12..=12).unwrap();
    let chart = cobar_cohomology(&h, &Comodule::Unit, 0, -24..=24, Coefficients::Integers, 20000).unwrap();
    for b in &inv {
        let oracle = if b.twist < 0 { 0 } else { weierstrass_invariant_rank(2 * b.twist as u32) };
        assert_eq!(b.rank, oracle, "twist {}", b.twist);
        let cobar = chart.cell(0, 2 * b.twist).map_or(0, |c| c.rank);
        assert_eq!(cobar, b.rank, "twist {}", b.twist);
    }
    let by = |j: i64| inv.iter().find(|b| b.twist == j).unwrap();
    assert_eq!(by(0).basis, vec!["1"]);
    assert_eq!(by(4).rank, 1);
    assert_eq!(by(12).rank, 2);
    let c4 = invariants(&WeierstrassCurve::universal(BaseRing::Integers)).c4;
    assert_eq!(by(4).basis, vec![c4.to_text()]);
}

#[test]
fn mqd_h0() {
    let h = mqd().unwrap();
    let inv = invariants_h0(&h, &Comodule::Unit, -12..=12).unwrap();
    let chart = cobar_cohomology(&h, &Comodule::Unit, 0, -24..=24, Coefficients::Integers, 20000).unwrap();
    for b in &inv {
        assert_eq!(chart.cell(0, 2 * b.twist).map_or(0, |c| c.rank), b.rank);
    }
    let two = inv.iter().find(|b| b.twist == 2).unwrap();
    assert_eq!(two.basis, vec!["1*b^2 + -4*c"]);
    // Z[b, c] invariants are Z[b^2 - 4c]: one class in every even twist.
    for b in &inv {
        let want = usize::from(b.twist >= 0 && b.twist % 2 == 0);
        assert_eq!(b.rank, want, "twist {}", b.twist);
    }
}

#[test]
fn z2_closed_form() {
    let h = z2_group().unwrap();
    let sign = GradedPolynomial::parse(&h.gamma, "1 - 2*e").unwrap();
    let chart = cobar_cohomology(&h, &Comodule::Character(sign), 6, -8..=8, Coefficients::Integers, 100).unwrap();
    for s in 0..=6usize {
        for t in -8..=8i64 {
            let got = chart.cell(s, t).map(|c| (c.rank, c.torsion.clone()));
            let want = if t % 2 != 0 {
                None
            } else {
                let j = t / 2;
                if s == 0 && j.rem_euclid(2) == 0 {
                    Some((1, vec![]))
                } else if s > 0 && (s as i64 - j).rem_euclid(2) == 0 {
                    Some((0, vec![2]))
                } else {
                    None
                }
            };
            assert_eq!(got, want, "(s, t) = ({s}, {t})");
        }
    }
}

#[test]
fn local_coefficients_drop_odd_torsion() {
    let h = z2_group().unwrap();
    let sign = GradedPolynomial::parse(&h.gamma, "1 - 2*e").unwrap();
    let c = cobar_cohomology(&h, &Comodule::Character(sign.clone()), 3, 0..=2, Coefficients::Local(3), 100).unwrap();
    assert!(c.cells.iter().all(|x| x.torsion.is_empty()));
    let m = cobar_cohomology(&h, &Comodule::Character(sign), 3, 0..=0, Coefficients::ModP(2), 100).unwrap();
    // Over F_2 every cochain group is F_2 and every differential is zero.
    assert_eq!(m.cells.len(), 4);
}

#[test]
fn window_bound_reported() {
    let h = synthesize_weierstrass_algebroid().unwrap();
    let r = cobar_cohomology(&h, &Comodule::Unit, 2, 24..=24, Coefficients::Integers, 500);
    assert!(matches!(r, Err(mcub_core::Error::WindowTooLarge(_))));
}

fn acyclic(h: &HopfAlgebroidPresentation, s_max: usize, t_max: i64) {
    let c = cobar_cohomology(h, &Comodule::Extended, s_max, 0..=t_max, Coefficients::Integers, 20000).unwrap();
    for cell in &c.cells {
        assert_eq!(cell.s, 0, "{cell:?}");
        assert!(cell.torsion.is_empty());
        assert_eq!(cell.rank, h.a.monomials_of_weight(cell.t as u32).len());
    }
}

#[test]
fn extended_comodules_are_acyclic() {
    acyclic(&mqd().unwrap(), 2, 8);
    acyclic(&z2_group().unwrap(), 3, 0);
    acyclic(&synthesize_weierstrass_algebroid().unwrap(), 1, 8);
}

#[test]
fn unknown_name() {
    assert!(builtin_algebroid("nope").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // The coproduct evaluated at two numeric changes is their composite.
    #[test]
    fn coproduct_is_composition(a in prop::array::uniform5(-5i64..=5), g1 in prop::array::uniform3(-4i64..=4), g2 in prop::array::uniform3(-4i64..=4)) {
        let h = synthesize_weierstrass_algebroid().unwrap();
        let c = WeierstrassCurve::numeric(BaseRing::Integers, a);
        let t2 = h.tensor_ring(2);
        let point = mcub_core::algebra::PolyRing::new::<&str>(BaseRing::Integers, &[]);
        let mut images: Vec<GradedPolynomial> = a.iter().map(|&x| point.constant(x)).collect();
        images.extend(g1.iter().chain(&g2).map(|&x| point.constant(x)));
        let ev: Vec<i64> = h.delta.iter()
            .map(|d| d.embed(&t2).substitute(&images, &point).constant_term().to_i64().unwrap())
            .collect();
        let h1 = CoordinateChange::numeric(c.ring(), 1, g1[0], g1[1], g1[2]);
        let h2 = CoordinateChange::numeric(c.ring(), 1, g2[0], g2[1], g2[2]);
        let comp = CoordinateChange::numeric(c.ring(), 1, ev[0], ev[1], ev[2]);
        let two = transform(&transform(&c, &h1).unwrap(), &h2).unwrap();
        prop_assert_eq!(two, transform(&c, &comp).unwrap());
    }

    #[test]
    fn small_extended_windows(t in 0i64..=10, s in 0usize..=2) {
        let h = mqd().unwrap();
        let c = cobar_cohomology(&h, &Comodule::Extended, s, t..=t, Coefficients::Integers, 20000).unwrap();
        let higher: Vec<_> = c.cells.iter().filter(|x| x.s > 0).collect();
        prop_assert!(higher.is_empty());
    }
}
