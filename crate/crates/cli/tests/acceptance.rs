//! One PASS/FAIL line per acceptance criterion. Criteria listed in
//! `EXPECTED_FAILURES` are run in full and reported, but do not fail the
//! suite; every other criterion must pass within its time limit.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mcub_cli::chart::{Arrow, ChartRender};
use mcub_core::algebra::{BaseRing, FieldKind, GradedPolynomial, PoincareSeries, PolyRing};
use mcub_core::covers::{cech_weighted_projective, cover_fiber, cover_spec, descent_assemble};
use mcub_core::elliptic::{
    fgl_from_curve, graded_regular_sequence_check, hasse_coefficients, invariants, landweber_report, WeierstrassCurve,
};
use mcub_core::hopf::{
    cobar_cohomology, invariants_h0, ku_cp2_involution, mqd, synthesize_weierstrass_algebroid, z2_group, Coefficients,
    Comodule, HopfAlgebroidPresentation,
};
use mcub_core::steenrod::{primitives, verify_target, Coordinates, DualSteenrod, PrimitiveTarget};

/// The quotient of F_5[A, B] by (v1, v2) has rank 4, not 8; see the notes
/// on criterion 6.
const EXPECTED_FAILURES: [&str; 1] = ["6b"];

const DEFAULT_LIMIT: Duration = Duration::from_secs(60);
const LIMIT_2: Duration = Duration::from_secs(10);
const LIMIT_10: Duration = Duration::from_secs(300);

const SEED: u64 = 0x6d63_7562;
const RANDOM_CURVES: usize = 100;
const STEENROD_CUTOFF: u32 = 64;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn parse(ring: &std::sync::Arc<PolyRing>, s: &str) -> GradedPolynomial {
    GradedPolynomial::parse(ring, s).unwrap()
}

fn c1_two_series() -> Result<String, String> {
    let c = WeierstrassCurve::universal(BaseRing::Integers);
    let f = fgl_from_curve(&c, 4).map_err(|e| e.to_string())?;
    let s = f.n_series(2).map_err(|e| e.to_string())?;
    let want = ["2", "-a1", "-2*a2", "a1*a2 - 7*a3"];
    for (k, w) in (1..=4).zip(want) {
        let got = s.coeff(&[k]);
        ensure!(got == parse(c.ring(), w), "z^{k}: got {}, want {w}", got.to_text());
    }
    Ok("2, -a1, -2a2, a1a2 - 7a3".into())
}

fn c2_three_series() -> Result<String, String> {
    let ring = PolyRing::new(BaseRing::Integers, &[("a2", 4), ("a4", 8)]);
    let c = WeierstrassCurve::new([ring.zero(), ring.gen(0), ring.zero(), ring.gen(1), ring.zero()]).unwrap();
    let h = hasse_coefficients(&c, 3, 2, 10).map_err(|e| e.to_string())?;
    ensure!(h.values[1] == parse(&ring, "-8*a2"), "v1 = {}", h.v[1]);
    let v2 = h.values[2].retain(|m| m.exps[0] == 0);
    ensure!(v2 == parse(&ring, "2432*a4^2"), "v2 mod a2 = {}", v2.to_text());
    Ok(format!("v1 = {}, v2 = 2432*a4^2 mod (a2)", h.v[1]))
}

/// Weighted Bezout: when the top-weight parts of the cover relations form
/// a regular sequence, the fiber rank is the product of relation weights
/// over the product of variable weights.
fn bezout_rank(c: &WeierstrassCurve, p: u64, field: FieldKind) -> Result<usize, String> {
    let spec = cover_spec(c, p).map_err(|e| e.to_string())?;
    let tops: Vec<_> = spec.relations.iter().map(|r| r.homogeneous_part(r.max_weight().unwrap())).collect();
    let q = match field {
        FieldKind::Prime(q) => Some(q),
        FieldKind::Rationals => None,
    };
    let rep = graded_regular_sequence_check(&spec.ring, &tops, q, 40).map_err(|e| e.to_string())?;
    ensure!(rep.regular && rep.quotient_finite, "top parts not regular");
    let num: u32 = tops.iter().map(|t| t.homogeneous_weight().unwrap()).product();
    let den: u32 = spec.ring.weights().iter().product();
    ensure!(rep.quotient_total as u32 == num / den, "Bezout count disagrees with the Hilbert series");
    Ok(rep.quotient_total)
}

fn c3_cover_fibers() -> Result<String, String> {
    let cusp = WeierstrassCurve::numeric(BaseRing::Integers, [0; 5]);
    let f = cover_fiber(&cusp, 2, FieldKind::Prime(2), 36).map_err(|e| e.to_string())?;
    let basis: BTreeSet<&str> = f.basis.iter().map(String::as_str).collect();
    let want: BTreeSet<&str> = ["1", "s", "s^2", "s^3", "t", "s*t", "s^2*t", "s^3*t"].into();
    ensure!(basis == want, "p = 2 basis {:?}", f.basis);
    let idx = |b: &str| f.basis.iter().position(|x| x == b).unwrap();
    ensure!(f.products[idx("s")][idx("s^3")] == "0", "s^4 = {}", f.products[idx("s")][idx("s^3")]);
    ensure!(f.products[idx("t")][idx("t")] == "0", "t^2 = {}", f.products[idx("t")][idx("t")]);
    ensure!(f.products[idx("s")][idx("s^2*t")] == "s^3*t", "s*s^2t");
    ensure!(f.associative && f.unital && f.stable, "p = 2 fiber not a stable unital algebra");

    let g = cover_fiber(&cusp, 3, FieldKind::Prime(3), 24).map_err(|e| e.to_string())?;
    ensure!(g.basis == ["1", "r", "r^2"], "p = 3 basis {:?}", g.basis);
    ensure!(g.products[1][2] == "0", "r^3 = {}", g.products[1][2]);

    // Three curves that are not cuspidal over Q or over F_5.
    let curves = [[0, 0, 0, -1, 0], [0, 0, 1, -1, 0], [1, -1, 0, 0, 1]];
    for a in curves {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, a);
        let inv = invariants(&c);
        let (c4, d) = (inv.c4.constant_term().to_i64().unwrap(), inv.discriminant.constant_term().to_i64().unwrap());
        ensure!(d != 0 || c4 != 0, "{a:?} is cuspidal");
        ensure!(d % 5 != 0 || c4 % 5 != 0, "{a:?} is cuspidal mod 5");
        for field in [FieldKind::Rationals, FieldKind::Prime(5)] {
            let f = cover_fiber(&c, 2, field, 36).map_err(|e| e.to_string())?;
            let oracle = bezout_rank(&c, 2, field)?;
            ensure!(f.rank == 8 && oracle == 8, "{a:?} over {field}: rank {}, oracle {oracle}", f.rank);
        }
    }
    Ok("Z/2[s,t]/(s^4,t^2), Z/3[r]/(r^3), rank 8 over Q and F5 for 3 curves".into())
}

fn c4_invariants() -> Result<String, String> {
    let ring = PolyRing::new(BaseRing::prime(2).unwrap(), &[("alpha1", 2), ("alpha3", 6)]);
    let c = WeierstrassCurve::new([ring.gen(0), ring.zero(), ring.gen(1), ring.zero(), ring.zero()]).unwrap();
    let inv = invariants(&c);
    ensure!(inv.c4 == parse(&ring, "alpha1^4"), "c4 = {}", inv.c4.to_text());
    ensure!(
        inv.discriminant == parse(&ring, "alpha1^3*alpha3^3 + alpha3^4"),
        "delta = {}",
        inv.discriminant.to_text()
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_CURVES {
        let a: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-1000..=1000));
        let inv = invariants(&WeierstrassCurve::numeric(BaseRing::Integers, a));
        let lhs = &inv.c4.pow(3) - &inv.c6.pow(2);
        ensure!(lhs == inv.discriminant.scale_i64(1728), "identity fails for {a:?}");
    }
    Ok(format!("mod 2 values; c4^3 - c6^2 = 1728 delta on {RANDOM_CURVES} random curves"))
}

fn c5_descent() -> Result<String, String> {
    let page = cech_weighted_projective((1, 3), ["alpha1", "alpha3"], -12..=24).map_err(|e| e.to_string())?;
    let t = descent_assemble(&page, -23..=48).map_err(|e| e.to_string())?;
    // Oracle: monomials alpha1^i alpha3^k with 2i + 6k = d.
    let oracle = PoincareSeries::polynomial(&[2, 6], 48);
    for d in 0..=48 {
        let e = t.at(d).unwrap();
        ensure!(e.rank as i64 == oracle.at(d as u32) && e.torsion.is_empty(), "degree {d}: rank {}", e.rank);
    }
    let neg = t.first_negative();
    ensure!(neg == Some(-9), "first negative class in degree {neg:?}");
    let src = &t.at(-9).unwrap().sources;
    ensure!(
        t.at(-9).unwrap().rank == 1 && src.iter().any(|s| s.ends_with(": alpha1^-1*alpha3^-1")),
        "degree -9 sources {src:?}"
    );
    let page = cech_weighted_projective((4, 6), ["c4", "c6"], -30..=6).map_err(|e| e.to_string())?;
    let t = descent_assemble(&page, -59..=12).map_err(|e| e.to_string())?;
    for j in -20..0 {
        let e = t.at(j).unwrap();
        ensure!(e.rank == 0 && e.torsion.is_empty(), "P(4,6) class in degree {j}");
    }
    ensure!(t.at(-21).unwrap().rank > 0, "no class in degree -21");
    Ok("P(1,3) polynomial through 48, first negative alpha1^-1 alpha3^-1 in -9; P(4,6) gap ends at -21".into())
}

fn c6a_weierstrass_regular() -> Result<String, String> {
    let c = WeierstrassCurve::universal(BaseRing::Integers);
    let inv = invariants(&c);
    let seq = vec![inv.c4, inv.discriminant, c.a2().clone(), c.a4().clone(), c.a6().clone()];
    let rep = graded_regular_sequence_check(c.ring(), &seq, Some(2), 48).map_err(|e| e.to_string())?;
    ensure!(rep.regular, "not regular: {:?}", rep.failure);
    // Oracle: the quotient is F2[a1, a3]/(a1^4, a3^4 + a1^3 a3^3).
    let want = PoincareSeries::polynomial(&[2, 6], 48).times_one_minus(8).times_one_minus(24);
    let got: Vec<i64> = rep.quotient_ranks.iter().map(|&r| r as i64).collect();
    ensure!(got == want.ranks, "quotient ranks {got:?}");
    Ok(format!("regular through 48, quotient rank {}", rep.quotient_total))
}

fn c6b_short_form_regular() -> Result<String, String> {
    let ring = PolyRing::new(BaseRing::Integers, &[("A", 8), ("B", 12)]);
    let c = WeierstrassCurve::new([ring.zero(), ring.zero(), ring.zero(), ring.gen(0), ring.gen(1)]).unwrap();
    let rep = landweber_report(&c, 5, 2, 120, 8).map_err(|e| e.to_string())?;
    ensure!(rep.regularity.regular, "(5, v1, v2) not regular");
    // Oracle: v1, v2 have weights 8 and 48, so the complete intersection
    // F5[A, B]/(v1, v2) has rank (8 * 48)/(8 * 12).
    let oracle = (8 * 48) / (8 * 12);
    ensure!(rep.regularity.quotient_total == oracle, "quotient rank {}, oracle {oracle}", rep.regularity.quotient_total);
    let stated = (5 - 1) * (5 * 5 - 1) / 12;
    ensure!(
        rep.regularity.quotient_total == stated,
        "regular, but quotient rank is {} (= (p-1)(p^2-1)/24), not {stated}",
        rep.regularity.quotient_total
    );
    Ok(format!("regular, quotient rank {stated}"))
}

fn h0_matches(h: &HopfAlgebroidPresentation) -> Result<(), String> {
    let inv = invariants_h0(h, &Comodule::Unit, -12..=12).map_err(|e| e.to_string())?;
    let chart =
        cobar_cohomology(h, &Comodule::Unit, 0, -24..=24, Coefficients::Integers, 20000).map_err(|e| e.to_string())?;
    for b in &inv {
        let cobar = chart.cell(0, 2 * b.twist).map_or(0, |c| c.rank);
        ensure!(cobar == b.rank, "{}: twist {} cobar {cobar} oracle {}", h.name, b.twist, b.rank);
    }
    Ok(())
}

fn c7_hopf() -> Result<String, String> {
    let w = synthesize_weierstrass_algebroid().map_err(|e| e.to_string())?;
    let s = w.summary(24);
    ensure!(s.axioms.holds(), "axioms: {:?}", s.axioms.failures);
    let q = mqd().map_err(|e| e.to_string())?;
    h0_matches(&w)?;
    h0_matches(&q)?;
    // Extended comodules on random small windows.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut windows = 0;
    for (h, s_cap, t_cap) in [(&q, 2usize, 8i64), (&w, 1, 8)] {
        for _ in 0..4 {
            let s_max = rng.gen_range(0..=s_cap);
            let t = 2 * rng.gen_range(0..=t_cap / 2);
            let c = cobar_cohomology(h, &Comodule::Extended, s_max, t..=t, Coefficients::Integers, 20000)
                .map_err(|e| e.to_string())?;
            for cell in &c.cells {
                ensure!(cell.s == 0 && cell.torsion.is_empty(), "{}: extended class at {cell:?}", h.name);
                ensure!(cell.rank == h.a.monomials_of_weight(cell.t as u32).len(), "{}: H0 of extended at t = {t}", h.name);
            }
            windows += 1;
        }
    }
    Ok(format!("axioms through 24; H0 = oracle for |j| <= 12; {windows} extended windows acyclic"))
}

/// Fig. 2: ℤ/2 acting on KU by the sign character on ω.
fn c8_z2_chart() -> Result<String, String> {
    let h = z2_group().map_err(|e| e.to_string())?;
    let sign = GradedPolynomial::parse(&h.gamma, "1 - 2*e").unwrap();
    let chart = cobar_cohomology(&h, &Comodule::Character(sign), 6, -8..=14, Coefficients::Integers, 100)
        .map_err(|e| e.to_string())?;
    // Closed form: H^0 = Z in twists j ≡ 0 (2), H^s = Z/2 for s > 0 and s ≡ j (2).
    for s in 0..=6usize {
        for t in -8..=14i64 {
            let got = chart.cell(s, t).map(|c| (c.rank, c.torsion.clone()));
            let want = if t % 2 != 0 {
                None
            } else if s == 0 {
                ((t / 2).rem_euclid(2) == 0).then(|| (1, vec![]))
            } else {
                ((s as i64 - t / 2).rem_euclid(2) == 0).then(|| (0, vec![2]))
            };
            ensure!(got == want, "(s, t) = ({s}, {t}): {got:?} vs {want:?}");
        }
    }
    let mut r = ChartRender::new(chart.clone());
    r.x_range = (-8, 8);
    r.s_max = 6;
    // The d3 differentials of the figure, supplied as data.
    for (x, s) in [(4, 0), (5, 1), (6, 2), (-3, 1), (-2, 2), (-1, 3)] {
        r.arrows.push(Arrow {
            from: (s as usize, x + s),
            to: (s as usize + 3, x - 1 + s + 3),
            label: Some("d3".into()),
        });
    }
    let svg = r.to_svg().map_err(|e| e.to_string())?;
    let mut placed: BTreeMap<(i64, i64), String> = BTreeMap::new();
    for line in svg.lines().filter(|l| l.starts_with(r#"<g class="cell""#)) {
        let attr = |k: &str| -> String {
            let i = line.find(&format!("{k}=\"")).unwrap() + k.len() + 2;
            line[i..].split('"').next().unwrap().to_string()
        };
        placed.insert((attr("data-x").parse().unwrap(), attr("data-y").parse().unwrap()), attr("data-glyphs"));
    }
    let in_window = chart.cells.iter().filter(|c| c.s <= 6 && (c.t - c.s as i64).abs() <= 8).count();
    ensure!(placed.len() == in_window, "{} clusters for {in_window} cells", placed.len());
    for b in [(0, 0), (4, 0), (-4, 0)] {
        ensure!(placed.get(&b).map(String::as_str) == Some("box"), "no box at {b:?}");
    }
    let dots = [
        (1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (5, 1), (6, 2),
        (-3, 1), (-2, 2), (-1, 3), (-4, 4), (-3, 5), (-2, 6),
    ];
    for d in dots {
        ensure!(placed.get(&d).map(String::as_str) == Some("dot"), "no dot at {d:?}");
    }
    for ((x, y), g) in &placed {
        let want = if *y == 0 { "box" } else { "dot" };
        ensure!(g == want, "unexpected {g} at ({x}, {y})");
    }
    let arrows = svg.matches(r#"class="arrow""#).count();
    ensure!(arrows == 6, "{arrows} arrows drawn for 6 supplied");
    Ok(format!("closed form through s = 6; {} glyph clusters match the figure", placed.len()))
}

fn c9_kucp2() -> Result<String, String> {
    let inv = ku_cp2_involution().map_err(|e| e.to_string())?;
    ensure!(inv.matrix == vec![vec![-1, 0], vec![1, 1]], "matrix {:?}", inv.matrix);
    ensure!(inv.images == ["-α + β", "β"], "images {:?}", inv.images);
    ensure!(inv.squares_to_identity && inv.conjugate_is_swap, "not conjugate to the swap");
    ensure!(inv.permutation_basis_text == ["α", "-α + β"], "basis {:?}", inv.permutation_basis_text);
    Ok("α ↦ -α + β, β ↦ β; swap in {α, -α + β}".into())
}

fn c10_steenrod() -> Result<String, String> {
    let a = DualSteenrod::new(STEENROD_CUTOFF).map_err(|e| e.to_string())?;
    let xb2 = a.chi_generators()[1].text(Coordinates::Milnor);
    ensure!(xb2 == "xi2 + xi1^3", "xibar2 = {xb2}");
    for k in 1..=6 {
        ensure!(a.antipode_sum(k).is_zero(), "antipode identity fails for k = {k}");
    }
    let p = primitives(&a, &PrimitiveTarget::Dual, 0..=16).map_err(|e| e.to_string())?;
    let found: Vec<String> = p.degrees.iter().flat_map(|d| d.basis.clone()).collect();
    ensure!(found == ["xi1", "xi1^2", "xi1^4", "xi1^8", "xi1^16"], "Prim through 16: {found:?}");

    let c = STEENROD_CUTOFF;
    let ku = verify_target(&a, "ku", c, c).map_err(|e| e.to_string())?;
    ensure!(ku.holds, "ku checks fail");
    ensure!(ku.freeness.as_ref().unwrap().cells == [0, 2], "ku over ko cells");
    let ko = verify_target(&a, "ko", c, c).map_err(|e| e.to_string())?;
    ensure!(ko.holds, "ko checks fail");
    let u = ko.uniqueness.as_ref().unwrap();
    ensure!(u.forced && u.forced_generators == ["xi1^4"], "ko forced {:?}", u.forced_generators);
    let tmf = verify_target(&a, "tmf", c, c).map_err(|e| e.to_string())?;
    ensure!(tmf.holds, "tmf checks fail");
    ensure!(tmf.freeness.as_ref().unwrap().cells == [0, 2, 4, 6, 6, 8, 10, 12], "bp:2 over tmf cells");
    let u = tmf.uniqueness.as_ref().unwrap();
    ensure!(u.forced && u.forced_generators == ["xi1^8"], "tmf forced {:?}", u.forced_generators);
    let w = u.witness.as_ref().unwrap();
    ensure!(w.degree == 12 && w.applicable && w.non_primitive, "degree-12 witness {w:?}");
    ensure!(u.lifts_independent == Some(true), "lifts");
    Ok(format!("conjugates, Prim, ko/ku/tmf closure, freeness and uniqueness through {c}"))
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_mcub")).args(args).env_remove("MCUB_OUT_DIR").output().unwrap();
    (out.status.code(), out.stdout)
}

fn c11_determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().unwrap();
    let chart = dir.path().join("z2.json");
    let chart = chart.to_str().unwrap();
    let (code, _) = run_cli(&[
        "hopf", "cobar", "--algebroid", "z2", "--comodule", "sign", "--s-max", "6", "--t-range", "-8..14", "--out", chart,
    ]);
    ensure!(code == Some(0), "writing the chart exited {code:?}");
    let commands: Vec<Vec<&str>> = vec![
        vec!["curve", "invariants", "--curve", "alpha1,0,alpha3,0,0", "--prime", "2"],
        vec!["curve", "invariants", "--random", "20"],
        vec!["curve", "invariants", "--random", "20", "--seed", "7", "--format", "tsv"],
        vec!["curve", "fgl", "--order", "4"],
        vec!["curve", "nseries", "--curve", "a1,0,a3,0,0", "--n", "2", "--order", "4"],
        vec!["curve", "hasse", "--curve", "0,a2,0,a4,0", "--prime", "3", "--order", "10"],
        vec!["curve", "landweber", "--curve", "a1,0,a3,0,0", "--cutoff", "24"],
        vec!["cover", "fiber", "--cusp", "--prime", "2", "--field", "F2"],
        vec!["cover", "fiber", "--cusp", "--prime", "3", "--format", "tsv"],
        vec!["cech", "--weights", "1,3", "--twists", "-6..6"],
        vec!["descent", "--weights", "4,6", "--degrees", "-24..12", "--format", "tsv"],
        vec!["tmf-mu", "--twists", "-4..4", "--specialized"],
        vec!["hopf", "synthesize", "--algebroid", "mqd"],
        vec!["hopf", "cobar", "--algebroid", "mqd", "--s-max", "1", "--t-range", "0..8"],
        vec!["hopf", "cobar", "--algebroid", "z2", "--comodule", "sign", "--s-max", "4", "--t-range", "-4..4", "--format", "svg"],
        vec!["hopf", "h0", "--algebroid", "mqd", "--twists", "-2..4"],
        vec!["hopf", "kucp2"],
        vec!["steenrod", "conjugate", "--element", "xibar3", "--cutoff", "16"],
        vec!["steenrod", "coproduct", "--element", "xibar3", "--coords", "conjugate", "--cutoff", "16"],
        vec!["steenrod", "verify", "--target", "ko", "--cutoff", "24"],
        vec!["steenrod", "primitives", "--quotient", "squares", "--window", "0..15"],
        vec!["chart", "render", "--input", chart, "--x-range", "-8..8"],
        vec!["chart", "render", "--input", chart, "--format", "tsv"],
    ];
    for args in &commands {
        let first = run_cli(args);
        let second = run_cli(args);
        ensure!(first.0 == Some(0), "{args:?} exited {:?}", first.0);
        ensure!(!first.1.is_empty(), "{args:?} printed nothing");
        ensure!(first == second, "{args:?} differs between runs");
    }
    Ok(format!("{} commands byte-identical across reruns", commands.len()))
}

#[test]
fn acceptance() {
    // Start on a fresh line; the harness prints "test acceptance ... " first.
    println!();
    let criteria: Vec<(&str, &str, Duration, Check)> = vec![
        ("1", "[2]-series of the universal curve", DEFAULT_LIMIT, c1_two_series),
        ("2", "[3]-series through order 10", LIMIT_2, c2_three_series),
        ("3", "cover fibers", DEFAULT_LIMIT, c3_cover_fibers),
        ("4", "invariants mod 2 and the discriminant identity", DEFAULT_LIMIT, c4_invariants),
        ("5", "Čech pages and descent", DEFAULT_LIMIT, c5_descent),
        ("6a", "(c4, Δ, a2, a4, a6) regular at 2", DEFAULT_LIMIT, c6a_weierstrass_regular),
        ("6b", "(5, v1, v2) regular with quotient rank 8", DEFAULT_LIMIT, c6b_short_form_regular),
        ("7", "Hopf algebroid axioms, H0 and acyclicity", DEFAULT_LIMIT, c7_hopf),
        ("8", "Z/2 descent chart", DEFAULT_LIMIT, c8_z2_chart),
        ("9", "KU(CP^2) involution", DEFAULT_LIMIT, c9_kucp2),
        ("10", "dual Steenrod checks through degree 64", LIMIT_10, c10_steenrod),
        ("11", "CLI determinism", DEFAULT_LIMIT, c11_determinism),
    ];
    let mut failed = BTreeSet::new();
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let r = match r {
            Ok(msg) if took > limit => Err(format!("{msg}, but took {took:.2?} > {limit:?}")),
            other => other,
        };
        match r {
            Ok(msg) => println!("PASS {id:>3} {name}: {msg} [{took:.2?}]"),
            Err(msg) => {
                let tag = if EXPECTED_FAILURES.contains(&id) { " (expected)" } else { "" };
                println!("FAIL {id:>3} {name}: {msg} [{took:.2?}]{tag}");
                failed.insert(id);
            }
        }
    }
    let expected: BTreeSet<&str> = EXPECTED_FAILURES.into();
    assert_eq!(failed, expected, "unexpected acceptance results");
}
