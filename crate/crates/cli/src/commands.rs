//! One function per verb. Each returns an [`Output`] holding the JSON
//! report, a table for TSV, and an SVG when the verb draws a chart.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use anyhow::{anyhow, bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use mcub_core::algebra::poly::identifiers;
use mcub_core::algebra::{BaseRing, FieldKind, GradedPolynomial, PolyRing};
use mcub_core::covers::{cech_weighted_projective, cover_fiber, descent_assemble, tmf_mu_page, MuMode, TwoRowPage};
use mcub_core::elliptic::curve::{A_NAMES, A_WEIGHTS};
use mcub_core::elliptic::{fgl_from_curve, hasse_coefficients, invariants, landweber_report, WeierstrassCurve};
use mcub_core::hopf::{
    builtin_algebroid, cobar_cohomology, invariants_h0, ku_cp2_involution, BigradedChart, Coefficients, Comodule,
    HopfAlgebroidPresentation,
};
use mcub_core::steenrod::{
    comodule_closure_check, primitives, verify_target, Coordinates, DualSteenrod, PrimitiveTarget, SubalgebraSpec,
};

use crate::args::{
    CechArgs, ChartCommand, Cli, Command, CoverCommand, CurveCommand, DescentArgs, HopfCommand, SteenrodCommand,
    TmfMuArgs,
};
use crate::chart::{Arrow, ChartRender};
use crate::emit::{Output, Table};

pub fn dispatch(cli: &Cli) -> Result<Output> {
    if cli.cutoff == Some(0) {
        bail!("--cutoff must be positive");
    }
    if let Some(p) = cli.prime {
        if BaseRing::prime(p).is_err() {
            bail!("--prime {p} is not a prime");
        }
    }
    match &cli.command {
        Command::Curve(c) => curve(cli, c),
        Command::Cover(c) => cover(cli, c),
        Command::Cech(a) => cech(a),
        Command::Descent(a) => descent(a),
        Command::TmfMu(a) => tmf_mu(cli, a),
        Command::Hopf(c) => hopf(cli, c),
        Command::Steenrod(c) => steenrod(cli, c),
        Command::Chart(c) => chart(c),
    }
}

/// `a..b` or a single integer, inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: i64 = a.trim().parse().with_context(|| format!("range start in {s:?}"))?;
    let b: i64 = b.trim().parse().with_context(|| format!("range end in {s:?}"))?;
    if a > b {
        bail!("empty range {s:?}");
    }
    Ok(a..=b)
}

fn parse_pair(s: &str) -> Result<(u32, u32)> {
    let v: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("weights {s:?}"))?;
    match v[..] {
        [a, b] if a > 0 && b > 0 => Ok((a, b)),
        _ => bail!("expected two positive weights, got {s:?}"),
    }
}

fn names(weights: (u32, u32), names: &Option<String>) -> Result<[String; 2]> {
    match names {
        None => Ok([format!("alpha{}", weights.0), format!("alpha{}", weights.1)]),
        Some(n) => {
            let v: Vec<String> = n.split(',').map(|x| x.trim().to_string()).collect();
            match <[String; 2]>::try_from(v) {
                Ok(a) => Ok(a),
                Err(_) => bail!("expected two names, got {n:?}"),
            }
        }
    }
}

fn base_ring(prime: Option<u64>) -> Result<BaseRing> {
    Ok(match prime {
        Some(p) => BaseRing::prime(p)?,
        None => BaseRing::Integers,
    })
}

/// Five coefficients a1,a2,a3,a4,a6. A coefficient that is a bare name
/// takes the weight of its slot; any other name must end in digits n and
/// gets weight 2n.
fn a_consts(c: &WeierstrassCurve) -> bool {
    [c.a1(), c.a2(), c.a3(), c.a4(), c.a6()].iter().all(|x| x.is_constant())
}

pub fn parse_curve(spec: &str, base: BaseRing) -> Result<WeierstrassCurve> {
    if spec.trim() == "universal" {
        return Ok(WeierstrassCurve::universal(base));
    }
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        bail!("a curve needs five coefficients a1,a2,a3,a4,a6, got {}", parts.len());
    }
    let mut weights: Vec<(String, u32)> = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let ids = identifiers(p)?;
        if ids.len() == 1 && ids[0] == *p {
            assign_weight(&mut weights, p, A_WEIGHTS[i])?;
        }
    }
    for p in &parts {
        for id in identifiers(p)? {
            if weights.iter().any(|x| x.0 == id) {
                continue;
            }
            let digits: String = id.chars().rev().take_while(|c| c.is_ascii_digit()).collect();
            let n: u32 = digits
                .chars()
                .rev()
                .collect::<String>()
                .parse()
                .map_err(|_| anyhow!("cannot infer the weight of {id}; use it alone in a slot or end its name in digits"))?;
            assign_weight(&mut weights, &id, 2 * n)?;
        }
    }
    let ring = PolyRing::new(base, &weights);
    let a: Vec<GradedPolynomial> = parts
        .iter()
        .map(|p| GradedPolynomial::parse(&ring, p))
        .collect::<std::result::Result<_, _>>()?;
    let c = WeierstrassCurve::new(a.try_into().expect("five coefficients"))?;
    // Integer curves are ungraded specializations and are taken as they are.
    let numeric = a_consts(&c);
    if !numeric && !c.is_graded() {
        bail!("coefficient a_i must have weight 2i");
    }
    Ok(c)
}

fn assign_weight(weights: &mut Vec<(String, u32)>, name: &str, w: u32) -> Result<()> {
    match weights.iter().find(|x| x.0 == name) {
        Some((_, old)) if *old != w => bail!("{name} would have weights {old} and {w}"),
        Some(_) => Ok(()),
        None => {
            weights.push((name.to_string(), w));
            Ok(())
        }
    }
}

fn curve_row(c: &WeierstrassCurve) -> BTreeMap<&'static str, String> {
    A_NAMES.iter().copied().zip(c.texts()).collect()
}

#[derive(Serialize)]
struct InvariantsOut {
    curve: BTreeMap<&'static str, String>,
    prime: Option<u64>,
    invariants: mcub_core::elliptic::Invariants,
    /// c4^3 - c6^2 = 1728 Δ.
    identity: bool,
}

#[derive(Serialize)]
struct RandomInvariantsOut {
    seed: u64,
    bound: i64,
    count: usize,
    curves: Vec<InvariantsOut>,
    all_hold: bool,
}

fn identity_holds(inv: &mcub_core::elliptic::Invariants) -> bool {
    let lhs = &inv.c4.pow(3) - &inv.c6.pow(2);
    lhs == inv.discriminant.scale_i64(1728)
}

fn curve(cli: &Cli, c: &CurveCommand) -> Result<Output> {
    let base = base_ring(cli.prime)?;
    match c {
        CurveCommand::Invariants { curve, random, bound } => {
            let mut table = Table::new(["a1", "a2", "a3", "a4", "a6", "c4", "c6", "delta", "identity"]);
            let mut row = |o: &InvariantsOut| {
                let mut r: Vec<String> = o.curve.values().cloned().collect();
                r.extend([o.invariants.c4.to_text(), o.invariants.c6.to_text(), o.invariants.discriminant.to_text()]);
                r.push(o.identity.to_string());
                table.push(r);
            };
            let one = |cv: WeierstrassCurve| {
                let inv = invariants(&cv);
                InvariantsOut {
                    curve: curve_row(&cv),
                    prime: cli.prime,
                    identity: identity_holds(&inv),
                    invariants: inv,
                }
            };
            if let Some(n) = random {
                if *bound <= 0 {
                    bail!("--bound must be positive");
                }
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let mut curves = Vec::new();
                for _ in 0..*n {
                    let a: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-bound..=*bound));
                    curves.push(one(WeierstrassCurve::numeric(base, a)));
                }
                curves.iter().for_each(&mut row);
                let all_hold = curves.iter().all(|c| c.identity);
                let out = RandomInvariantsOut {
                    seed: cli.seed,
                    bound: *bound,
                    count: *n,
                    curves,
                    all_hold,
                };
                return Output::new("curve-invariants", &out, table, all_hold);
            }
            let o = one(parse_curve(&curve.curve, base)?);
            row(&o);
            let holds = o.identity;
            Output::new("curve-invariants", &o, table, holds)
        }
        CurveCommand::Fgl { curve, order } => {
            let cv = parse_curve(&curve.curve, base)?;
            let f = fgl_from_curve(&cv, *order)?;
            let mut table = Table::new(["x", "y", "coefficient"]);
            let mut terms = Vec::new();
            for total in 1..=*order as u32 {
                for i in (0..=total).rev() {
                    let k = f.law.coeff(&[i, total - i]);
                    if !k.is_zero() {
                        table.push([i.to_string(), (total - i).to_string(), k.to_text()]);
                        terms.push(SeriesTerm2 {
                            x: i,
                            y: total - i,
                            coefficient: k.to_text(),
                        });
                    }
                }
            }
            let out = FglOut {
                curve: curve_row(&cv),
                order: *order,
                law: f.law.to_text(),
                terms,
            };
            Output::new("curve-fgl", &out, table, true)
        }
        CurveCommand::Nseries { curve, n, order } => {
            let cv = parse_curve(&curve.curve, base)?;
            let f = fgl_from_curve(&cv, (*order).max(2))?;
            let s = f.n_series(*n)?;
            let mut table = Table::new(["power", "coefficient"]);
            let mut coefficients = Vec::new();
            for k in 1..=*order as u32 {
                let c = s.coeff(&[k]).to_text();
                table.push([k.to_string(), c.clone()]);
                coefficients.push(SeriesTerm { power: k, coefficient: c });
            }
            let out = NSeriesOut {
                curve: curve_row(&cv),
                n: *n,
                order: *order,
                coefficients,
            };
            Output::new("curve-nseries", &out, table, true)
        }
        CurveCommand::Hasse { curve, heights, order } => {
            let p = cli.prime.unwrap_or(2);
            let cv = parse_curve(&curve.curve, BaseRing::Integers)?;
            let order = order.unwrap_or((p.pow(*heights) as usize).max(2));
            let h = hasse_coefficients(&cv, p, *heights, order)?;
            let mut table = Table::new(["i", "v_i"]);
            for (i, v) in h.v.iter().enumerate() {
                table.push([i.to_string(), v.clone()]);
            }
            Output::new("curve-hasse", &h, table, true)
        }
        CurveCommand::Landweber { curve, heights, max_power } => {
            let p = cli.prime.unwrap_or(2);
            let cv = parse_curve(&curve.curve, BaseRing::Integers)?;
            let r = landweber_report(&cv, p, *heights, cli.cutoff.unwrap_or(48), *max_power)?;
            let mut table = Table::new(["check", "value"]);
            table.push(["regular".to_string(), r.regularity.regular.to_string()]);
            table.push(["quotient_total".to_string(), r.regularity.quotient_total.to_string()]);
            table.push(["certified_all_degrees".to_string(), r.regularity.certified_all_degrees.to_string()]);
            table.push(["c4_power".to_string(), opt(r.c4_power)]);
            table.push(["delta_power".to_string(), opt(r.delta_power)]);
            table.push(["cuspidal_containment".to_string(), r.cuspidal_containment.to_string()]);
            let holds = r.regularity.regular;
            Output::new("curve-landweber", &r, table, holds)
        }
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

#[derive(Serialize)]
struct SeriesTerm {
    power: u32,
    coefficient: String,
}

#[derive(Serialize)]
struct SeriesTerm2 {
    x: u32,
    y: u32,
    coefficient: String,
}

#[derive(Serialize)]
struct FglOut {
    curve: BTreeMap<&'static str, String>,
    order: usize,
    law: String,
    terms: Vec<SeriesTerm2>,
}

#[derive(Serialize)]
struct NSeriesOut {
    curve: BTreeMap<&'static str, String>,
    n: i64,
    order: usize,
    coefficients: Vec<SeriesTerm>,
}

fn parse_field(s: &str) -> Result<FieldKind> {
    match s.trim() {
        "Q" | "QQ" => Ok(FieldKind::Rationals),
        f => match f.strip_prefix('F').map(str::parse::<u64>) {
            Some(Ok(q)) => Ok(FieldKind::Prime(q)),
            _ => bail!("field must be Q or F<prime>, got {s:?}"),
        },
    }
}

fn cover(cli: &Cli, c: &CoverCommand) -> Result<Output> {
    let CoverCommand::Fiber { cusp, curve, field } = c;
    let p = cli.prime.unwrap_or(2);
    let a: [i64; 5] = match (cusp, curve) {
        (true, _) | (false, None) => [0; 5],
        (false, Some(s)) => {
            let v: Vec<i64> = s
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .with_context(|| format!("cover fibers need integer coefficients, got {s:?}"))?;
            v.try_into().map_err(|_| anyhow!("a curve needs five coefficients"))?
        }
    };
    let field = match field {
        Some(f) => parse_field(f)?,
        None => FieldKind::Prime(p),
    };
    let cutoff = cli.cutoff.unwrap_or(if p == 2 { 36 } else { 24 });
    let cv = WeierstrassCurve::numeric(BaseRing::Integers, a);
    let f = cover_fiber(&cv, p, field, cutoff)?;
    let mut table = Table::new(["index", "basis", "weight"]);
    for (i, (b, w)) in f.basis.iter().zip(&f.basis_weights).enumerate() {
        table.push([i.to_string(), b.clone(), w.to_string()]);
    }
    let holds = f.stable && f.associative && f.unital;
    Output::new("cover-fiber", &f, table, holds)
}

fn page_table(page: &TwoRowPage) -> Table {
    let mut t = Table::new(["twist", "h0_rank", "h1_rank", "h0", "h1", "h1_torsion"]);
    for e in &page.entries {
        t.push([
            e.twist.to_string(),
            e.h0_rank.to_string(),
            e.h1_rank.to_string(),
            e.h0.join(", "),
            e.h1.join(", "),
            e.h1_torsion.join(", "),
        ]);
    }
    t
}

fn cech(a: &CechArgs) -> Result<Output> {
    let w = parse_pair(&a.weights)?;
    let n = names(w, &a.names)?;
    let page = cech_weighted_projective(w, [&n[0], &n[1]], parse_range(&a.twists)?)?;
    let table = page_table(&page);
    Output::new("cech", &page, table, true)
}

#[derive(Serialize)]
struct DescentOut {
    weights: (u32, u32),
    table: mcub_core::covers::cech::HomotopyTable,
    first_negative: Option<i64>,
}

fn descent(a: &DescentArgs) -> Result<Output> {
    let w = parse_pair(&a.weights)?;
    let n = names(w, &a.names)?;
    let degrees = parse_range(&a.degrees)?;
    let twists = degrees.start().div_euclid(2)..=(degrees.end() + 1).div_euclid(2);
    let page = cech_weighted_projective(w, [&n[0], &n[1]], twists)?;
    let t = descent_assemble(&page, degrees)?;
    let mut table = Table::new(["degree", "rank", "torsion", "sources"]);
    for e in &t.entries {
        table.push([e.degree.to_string(), e.rank.to_string(), e.torsion.join(", "), e.sources.join("; ")]);
    }
    let out = DescentOut {
        weights: w,
        first_negative: t.first_negative(),
        table: t,
    };
    Output::new("descent", &out, table, true)
}

fn tmf_mu(cli: &Cli, a: &TmfMuArgs) -> Result<Output> {
    let mode = if a.specialized { MuMode::Specialized } else { MuMode::Full };
    let page = tmf_mu_page(cli.prime.unwrap_or(2), parse_range(&a.twists)?, a.e_cutoff, mode)?;
    let table = page_table(&page);
    Output::new("tmf-mu", &page, table, true)
}

fn comodule(h: &HopfAlgebroidPresentation, s: &str) -> Result<Comodule> {
    Ok(match s {
        "unit" => Comodule::Unit,
        "extended" => Comodule::Extended,
        "sign" => Comodule::Character(GradedPolynomial::parse(&h.gamma, "1 - 2*e")?),
        _ => match s.strip_prefix("character:") {
            Some(t) => Comodule::Character(GradedPolynomial::parse(&h.gamma, t)?),
            None => bail!("comodule must be unit, extended, sign or character:<element>, got {s:?}"),
        },
    })
}

fn coefficients(s: &str, prime: Option<u64>) -> Result<Coefficients> {
    let p = prime.unwrap_or(2);
    Ok(match s {
        "Z" => Coefficients::Integers,
        "local" => Coefficients::Local(p),
        "mod" => Coefficients::ModP(p),
        _ => bail!("coefficients must be Z, local or mod, got {s:?}"),
    })
}

pub fn chart_table(c: &BigradedChart) -> Table {
    let mut t = Table::new(["s", "t", "t-s", "rank", "torsion"]);
    for cell in &c.cells {
        let tors: Vec<String> = cell.torsion.iter().map(|x| x.to_string()).collect();
        t.push([
            cell.s.to_string(),
            cell.t.to_string(),
            (cell.t - cell.s as i64).to_string(),
            cell.rank.to_string(),
            tors.join(", "),
        ]);
    }
    t
}

fn hopf(cli: &Cli, c: &HopfCommand) -> Result<Output> {
    match c {
        HopfCommand::Synthesize { algebroid, depth } => {
            let h = builtin_algebroid(algebroid)?;
            let s = h.summary(*depth);
            let mut table = Table::new(["kind", "name", "value"]);
            for (n, w) in &s.a {
                table.push(["A".to_string(), n.clone(), w.to_string()]);
            }
            for (n, w) in &s.gamma {
                table.push(["Gamma".to_string(), n.clone(), w.to_string()]);
            }
            for (kind, list) in [("eta_R", &s.eta_r), ("Delta", &s.delta), ("epsilon", &s.epsilon), ("chi", &s.chi)] {
                for (n, v) in list {
                    table.push([kind.to_string(), n.clone(), v.clone()]);
                }
            }
            table.push(["axioms".to_string(), "holds".to_string(), s.axioms.holds().to_string()]);
            let holds = s.axioms.holds();
            Output::new("hopf-synthesize", &s, table, holds)
        }
        HopfCommand::Cobar {
            algebroid,
            comodule: m,
            s_max,
            t_range,
            coefficients: k,
            max_dim,
        } => {
            let h = builtin_algebroid(algebroid)?;
            let m = comodule(&h, m)?;
            let chart = cobar_cohomology(&h, &m, *s_max, parse_range(t_range)?, coefficients(k, cli.prime)?, *max_dim)?;
            let table = chart_table(&chart);
            let mut out = Output::new("hopf-cobar", &chart, table, true)?;
            out.svg = Some(ChartRender::new(chart).to_svg()?);
            Ok(out)
        }
        HopfCommand::H0 {
            algebroid,
            comodule: m,
            twists,
        } => {
            let h = builtin_algebroid(algebroid)?;
            let m = comodule(&h, m)?;
            let inv = invariants_h0(&h, &m, parse_range(twists)?)?;
            let mut table = Table::new(["twist", "rank", "basis"]);
            for b in &inv {
                table.push([b.twist.to_string(), b.rank.to_string(), b.basis.join("; ")]);
            }
            Output::new("hopf-h0", &inv, table, true)
        }
        HopfCommand::Kucp2 => {
            let inv = ku_cp2_involution()?;
            let mut table = Table::new(["basis", "image"]);
            for (b, img) in ["α", "β"].iter().zip(&inv.images) {
                table.push([b.to_string(), img.clone()]);
            }
            let holds = inv.squares_to_identity && inv.conjugate_is_swap;
            Output::new("hopf-kucp2", &inv, table, holds)
        }
    }
}

#[derive(Serialize)]
struct ElementOut {
    input: String,
    degree: Option<u32>,
    milnor: String,
    conjugate: String,
    /// χ(x), in Milnor coordinates.
    chi: String,
}

#[derive(Serialize)]
struct ConjugateRow {
    k: usize,
    degree: u32,
    /// ξ̄k in Milnor coordinates.
    milnor: String,
    /// Σ ξ_{k-i}^{2^i} ξ̄i = 0.
    antipode_identity: bool,
}

#[derive(Serialize)]
struct ConjugateOut {
    cutoff: u32,
    element: Option<ElementOut>,
    conjugates: Vec<ConjugateRow>,
    holds: bool,
}

#[derive(Serialize)]
struct CoproductOut {
    element: String,
    coordinates: Coordinates,
    degree: Option<u32>,
    coproduct: String,
    terms: usize,
}

#[derive(Serialize)]
struct ClosureOnly {
    report: mcub_core::steenrod::ClosureReport,
    holds: bool,
}

fn steenrod(cli: &Cli, c: &SteenrodCommand) -> Result<Output> {
    match c {
        SteenrodCommand::Conjugate { element, through } => {
            let cutoff = cli.cutoff.unwrap_or(64);
            let a = DualSteenrod::new(cutoff)?;
            let through = &through.unwrap_or(a.ngens().min(6));
            if *through > a.ngens() {
                bail!("xibar{through} has degree {} above the cutoff {cutoff}", (1u64 << through) - 1);
            }
            let mut table = Table::new(["name", "degree", "milnor", "conjugate", "antipode_identity"]);
            let element = match element {
                Some(text) => {
                    let x = a.parse(text, Coordinates::Milnor)?;
                    let conj = a.convert(&x, Coordinates::Conjugate)?;
                    let chi = a.conjugate(&x.poly)?.text(Coordinates::Milnor);
                    let e = ElementOut {
                        input: text.clone(),
                        degree: x.degree(),
                        milnor: x.text(),
                        conjugate: conj.text(),
                        chi,
                    };
                    table.push(["element".to_string(), opt(e.degree), e.milnor.clone(), e.conjugate.clone(), "-".into()]);
                    Some(e)
                }
                None => None,
            };
            let mut conjugates = Vec::new();
            for k in 1..=*through {
                let row = ConjugateRow {
                    k,
                    degree: (1u32 << k) - 1,
                    milnor: a.chi_generators()[k - 1].text(Coordinates::Milnor),
                    antipode_identity: a.antipode_sum(k).is_zero(),
                };
                table.push([
                    format!("xibar{k}"),
                    row.degree.to_string(),
                    row.milnor.clone(),
                    format!("xibar{k}"),
                    row.antipode_identity.to_string(),
                ]);
                conjugates.push(row);
            }
            let holds = conjugates.iter().all(|r| r.antipode_identity);
            let out = ConjugateOut {
                cutoff,
                element,
                conjugates,
                holds,
            };
            Output::new("steenrod-conjugate", &out, table, holds)
        }
        SteenrodCommand::Coproduct { element, coords } => {
            let coords = match coords.as_str() {
                "milnor" => Coordinates::Milnor,
                "conjugate" => Coordinates::Conjugate,
                _ => bail!("coordinates must be milnor or conjugate, got {coords:?}"),
            };
            let a = DualSteenrod::new(cli.cutoff.unwrap_or(64))?;
            let x = a.parse(element, coords)?;
            let t = a.coproduct_in(&x)?;
            let mut table = Table::new(["left", "right"]);
            let groups = t.by_left();
            let mut lefts: Vec<_> = groups.keys().copied().collect();
            lefts.sort_by_key(|&l| std::cmp::Reverse((mcub_core::steenrod::element::degree(l), l)));
            for l in lefts {
                table.push([
                    mcub_core::steenrod::element::monomial_text(l, coords),
                    groups[&l].text(coords),
                ]);
            }
            let out = CoproductOut {
                element: x.text(),
                coordinates: coords,
                degree: x.degree(),
                coproduct: t.text(coords),
                terms: t.0.len(),
            };
            Output::new("steenrod-coproduct", &out, table, true)
        }
        SteenrodCommand::Verify {
            target,
            generators,
            milnor_cutoff,
        } => {
            let cutoff = cli.cutoff.unwrap_or(64);
            let a = DualSteenrod::new(cutoff)?;
            let mc = milnor_cutoff.unwrap_or(cutoff);
            let mut table = Table::new(["check", "result", "detail"]);
            match (target, generators) {
                (Some(t), None) => {
                    let r = verify_target(&a, t, cutoff, mc)?;
                    table.push(["closure (conjugate)".to_string(), r.closure.conjugate.closed.to_string(), witness(&r.closure.conjugate.witness)]);
                    table.push(["closure (milnor)".to_string(), r.closure.milnor.closed.to_string(), witness(&r.closure.milnor.witness)]);
                    table.push(["poincare series".to_string(), r.series_matches_generators.to_string(), r.generators.join(", ")]);
                    if let Some(f) = &r.freeness {
                        let cells: Vec<String> = f.cells.iter().map(|c| c.to_string()).collect();
                        table.push([format!("free over {}", f.small), f.free.to_string(), cells.join(", ")]);
                    }
                    if let Some(u) = &r.uniqueness {
                        table.push(["uniqueness".to_string(), u.holds.to_string(), u.forced_generators.join(", ")]);
                    }
                    if let Some(p) = &r.pattern {
                        table.push(["quotient pattern".to_string(), p.holds.to_string(), format!("top {} total {}", opt(p.report.top), p.report.total)]);
                    }
                    table.push(["holds".to_string(), r.holds.to_string(), String::new()]);
                    let holds = r.holds;
                    Output::new("steenrod-verify", &r, table, holds)
                }
                (None, Some(g)) => {
                    let gens: Vec<&str> = g.split(',').map(str::trim).collect();
                    let spec = SubalgebraSpec::custom("custom", &a, &gens)?;
                    let r = comodule_closure_check(&a, &spec, cutoff, mc)?;
                    table.push(["closure (conjugate)".to_string(), r.conjugate.closed.to_string(), witness(&r.conjugate.witness)]);
                    table.push(["closure (milnor)".to_string(), r.milnor.closed.to_string(), witness(&r.milnor.witness)]);
                    let holds = r.closed;
                    Output::new("steenrod-verify", &ClosureOnly { report: r, holds }, table, holds)
                }
                _ => bail!("give exactly one of --target and --generators"),
            }
        }
        SteenrodCommand::Primitives { quotient, window } => {
            let w = parse_range(window)?;
            if *w.start() < 0 {
                bail!("window must be nonnegative");
            }
            let (lo, hi) = (*w.start() as u32, *w.end() as u32);
            let a = DualSteenrod::new(cli.cutoff.unwrap_or(hi).max(hi))?;
            let target = match quotient.as_str() {
                "dual" => PrimitiveTarget::Dual,
                "ground" => PrimitiveTarget::Ground,
                q => match q.strip_prefix("gens:") {
                    Some(list) => {
                        let gens: Vec<&str> = list.split(',').map(str::trim).collect();
                        PrimitiveTarget::Quotient(SubalgebraSpec::custom("custom", &a, &gens)?)
                    }
                    None => PrimitiveTarget::Quotient(SubalgebraSpec::named(q, &a)?),
                },
            };
            let r = primitives(&a, &target, lo..=hi)?;
            let mut table = Table::new(["degree", "rank", "basis"]);
            for d in &r.degrees {
                table.push([d.degree.to_string(), d.rank.to_string(), d.basis.join(", ")]);
            }
            Output::new("steenrod-primitives", &r, table, true)
        }
    }
}

fn witness(w: &Option<mcub_core::steenrod::ClosureWitness>) -> String {
    w.as_ref().map_or_else(String::new, |w| format!("{} in degree {}: {}", w.element, w.degree, w.term))
}

fn chart(c: &ChartCommand) -> Result<Output> {
    let ChartCommand::Render {
        input,
        arrows,
        x_range,
        s_max,
    } = c;
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let chart: BigradedChart = serde_json::from_str(&text).with_context(|| format!("parsing {}", input.display()))?;
    let mut r = ChartRender::new(chart.clone());
    if let Some(path) = arrows {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        r.arrows = serde_json::from_str::<Vec<Arrow>>(&text).with_context(|| format!("parsing {}", path.display()))?;
    }
    if let Some(x) = x_range {
        let x = parse_range(x)?;
        r.x_range = (*x.start(), *x.end());
    }
    if let Some(s) = s_max {
        r.s_max = *s;
    }
    let svg = r.to_svg()?;
    let table = chart_table(&chart);
    let mut out = Output::new("chart", &chart, table, true)?;
    out.svg = Some(svg);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-6..6").unwrap(), -6..=6);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert_eq!(parse_range("0..=2").unwrap(), 0..=2);
        assert!(parse_range("4..1").is_err());
    }

    #[test]
    fn curve_weights() {
        let c = parse_curve("alpha1,0,alpha3,0,0", BaseRing::Integers).unwrap();
        assert_eq!(c.ring().weights(), &[2, 6]);
        let c = parse_curve("a1,0,a3,0,0", BaseRing::Integers).unwrap();
        assert_eq!(c.texts()[2], "1*a3");
        assert!(parse_curve("x,0,x,0,0", BaseRing::Integers).is_err());
        assert!(parse_curve("0,0,0", BaseRing::Integers).is_err());
        assert!(parse_curve("1,0,0,-1,0", BaseRing::Integers).is_ok());
        assert!(parse_curve("a1,0,0,-1,0", BaseRing::Integers).is_err());
        let c = parse_curve("0,0,0,A,B", BaseRing::Integers).unwrap();
        assert_eq!(c.ring().weights(), &[8, 12]);
    }
}
