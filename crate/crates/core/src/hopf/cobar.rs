//! The normalized cobar complex of a Hopf algebroid with coefficients in a
//! comodule, cell by cell, and the direct H^0 oracle.
//!
//! C^s is spanned by monomials of T_s in which every slot is nonconstant.
//! Since ε kills every Γ-generator this is the intersection of the kernels
//! of the codegeneracies, a subcomplex with the same cohomology; the
//! differential is checked to stay inside it.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::presentation::HopfAlgebroidPresentation;
use crate::algebra::{
    hermite_rows, invariant_factors, smith_normal_form, FieldKind, GradedPolynomial, IntegerMatrix,
    Monomial, Subspace,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    /// Integers localized at p: torsion away from p is dropped.
    Local(u64),
    ModP(u64),
}

impl std::fmt::Display for Coefficients {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Local(p) => write!(f, "Z_({p})"),
            Coefficients::ModP(p) => write!(f, "Z/{p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Comodule {
    /// A itself; cell (s, t) is the weight-t part, i.e. the twist ω^(t/2).
    Unit,
    /// A with coaction 1 ↦ λ^j on ω^j, for weight-zero algebroids; cell
    /// (s, 2j) uses λ^j.
    Character(GradedPolynomial),
    /// Γ with coaction Δ.
    Extended,
}

impl Comodule {
    fn label(&self) -> String {
        match self {
            Comodule::Unit => "unit".into(),
            Comodule::Character(l) => format!("character {}", l.to_text()),
            Comodule::Extended => "extended".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartCell {
    pub s: usize,
    pub t: i64,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// E_2^(s,t); cells not listed are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedChart {
    pub algebroid: String,
    pub comodule: String,
    pub coefficients: String,
    pub s_max: usize,
    pub t_min: i64,
    pub t_max: i64,
    pub cells: Vec<ChartCell>,
}

impl BigradedChart {
    pub fn cell(&self, s: usize, t: i64) -> Option<&ChartCell> {
        self.cells.iter().find(|c| c.s == s && c.t == t)
    }
}

/// Cochains C^s in one weight, with the differential to C^(s+1).
struct Level {
    basis: Vec<Monomial>,
    /// d of each basis element, as monomial -> coefficient.
    images: Vec<BTreeMap<Monomial, BigInt>>,
}

struct Cell<'a> {
    h: &'a HopfAlgebroidPresentation,
    comodule: &'a Comodule,
    /// Weight of the cochains.
    weight: u32,
    /// Character power, for `Comodule::Character`.
    power: u32,
}

impl Cell<'_> {
    /// Number of tensor slots carried by C^s.
    fn slots(&self, s: usize) -> usize {
        match self.comodule {
            Comodule::Extended => s + 1,
            _ => s,
        }
    }

    fn basis(&self, s: usize) -> Vec<Monomial> {
        let h = self.h;
        let n = self.slots(s);
        let ring = h.tensor_ring(n);
        let nonconst = h.gamma_monomials(self.weight);
        let mut with_one = nonconst.clone();
        with_one.insert(0, (0, vec![0; h.ng()]));
        let mut out = Vec::new();
        let mut chosen: Vec<&Vec<u32>> = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn rec<'b>(
            h: &HopfAlgebroidPresentation,
            ring: &std::sync::Arc<crate::algebra::PolyRing>,
            k: usize,
            n: usize,
            extended: bool,
            left: u32,
            nonconst: &'b [(u32, Vec<u32>)],
            with_one: &'b [(u32, Vec<u32>)],
            chosen: &mut Vec<&'b Vec<u32>>,
            out: &mut Vec<Monomial>,
        ) {
            if k == n {
                for m in h.a.monomials_of_weight(left) {
                    let mut exps: Vec<u32> = m.exps.to_vec();
                    for c in chosen.iter() {
                        exps.extend(c.iter().copied());
                    }
                    out.push(ring.monomial_from_exps(&exps));
                }
                return;
            }
            let pool = if extended && k == n - 1 { with_one } else { nonconst };
            for (w, e) in pool {
                if *w > left {
                    continue;
                }
                chosen.push(e);
                rec(h, ring, k + 1, n, extended, left - w, nonconst, with_one, chosen, out);
                chosen.pop();
            }
        }
        let extended = matches!(self.comodule, Comodule::Extended);
        rec(h, &ring, 0, n, extended, self.weight, &nonconst, &with_one, &mut chosen, &mut out);
        out.sort();
        out
    }

    /// Whether a monomial of T_n lies in the normalized complex.
    fn normalized(&self, m: &Monomial, n: usize, extended: bool) -> bool {
        let h = self.h;
        (1..=n).all(|k| {
            (extended && k == n)
                || (0..h.ng()).any(|g| m.exps[h.slot_index(k, g)] > 0)
        })
    }

    fn level(&self, s: usize) -> Result<Level> {
        let h = self.h;
        let basis = self.basis(s);
        let n = self.slots(s);
        let target = h.tensor_ring(n + 1);
        let extended = matches!(self.comodule, Comodule::Extended);
        let last = if extended { n } else { n + 1 };
        let faces: Vec<Vec<GradedPolynomial>> = (0..=last).map(|i| h.coface(n, i)).collect();
        let lambda = match self.comodule {
            Comodule::Character(l) if self.power > 0 => {
                let p = h.clamp(&l.pow(self.power));
                Some(h.place(&p, n + 1, n + 1))
            }
            _ => None,
        };
        let src = h.tensor_ring(n);
        let mut images = Vec::with_capacity(basis.len());
        for m in &basis {
            let x = GradedPolynomial::monomial(&src, m.clone(), src.base().one());
            let mut d = target.zero();
            for (i, f) in faces.iter().enumerate() {
                let mut y = h.apply(&x, f, &target);
                if i == n + 1 && !extended {
                    if let Some(l) = &lambda {
                        y = h.clamp(&(&y * l));
                    }
                }
                d = if i % 2 == 0 { &d + &y } else { &d - &y };
            }
            let mut row = BTreeMap::new();
            for (mm, c) in d.terms() {
                if !self.normalized(mm, n + 1, extended) {
                    return Err(Error::Invariant(format!(
                        "cobar differential leaves the normalized complex at s = {s}"
                    )));
                }
                row.insert(mm.clone(), c.to_bigint());
            }
            images.push(row);
        }
        Ok(Level { basis, images })
    }
}

fn rank_of(rows: &[BTreeMap<Monomial, BigInt>], kind: FieldKind) -> usize {
    let mut cols: HashMap<&Monomial, usize> = HashMap::new();
    for r in rows {
        for m in r.keys() {
            let n = cols.len();
            cols.entry(m).or_insert(n);
        }
    }
    let mut span = Subspace::new(kind, cols.len());
    rows.iter()
        .filter(|r| {
            let v: Vec<(usize, BigInt)> = r.iter().map(|(m, c)| (cols[m], c.clone())).collect();
            span.insert(&v)
        })
        .count()
}

fn dense(rows: &[BTreeMap<Monomial, BigInt>]) -> IntegerMatrix {
    let mut cols: HashMap<&Monomial, usize> = HashMap::new();
    for r in rows {
        for m in r.keys() {
            let n = cols.len();
            cols.entry(m).or_insert(n);
        }
    }
    let mut mat = IntegerMatrix::zeros(rows.len(), cols.len());
    for (i, r) in rows.iter().enumerate() {
        for (m, c) in r {
            mat.set(i, cols[m], c.clone());
        }
    }
    mat
}

fn p_part(mut n: BigInt, p: u64) -> BigInt {
    let p = BigInt::from(p);
    let mut out = BigInt::from(1);
    while n.is_multiple_of(&p) && !n.is_zero() {
        n /= &p;
        out *= &p;
    }
    out
}

/// E_2 = H^(s,t) of the cobar complex for `s <= s_max` and
/// `t_min <= t <= t_max`. Any cochain group larger than `max_dim` aborts
/// with `WindowTooLarge`.
pub fn cobar_cohomology(
    h: &HopfAlgebroidPresentation,
    comodule: &Comodule,
    s_max: usize,
    t_range: std::ops::RangeInclusive<i64>,
    coefficients: Coefficients,
    max_dim: usize,
) -> Result<BigradedChart> {
    let (t_min, t_max) = (*t_range.start(), *t_range.end());
    if let Comodule::Character(_) = comodule {
        if h.a.ngens() > 0 || h.gamma_weights().iter().any(|&w| w > 0) {
            return Err(Error::Invalid("character twists need a weight-zero algebroid".into()));
        }
    }
    let ts: Vec<i64> = t_range.collect();
    let per_t: Vec<Result<Vec<ChartCell>>> = ts
        .par_iter()
        .map(|&t| {
            let (weight, power) = match comodule {
                Comodule::Character(_) => {
                    if t.rem_euclid(2) != 0 {
                        return Ok(Vec::new());
                    }
                    (0u32, (t / 2).rem_euclid(2) as u32)
                }
                _ => {
                    if t < 0 {
                        return Ok(Vec::new());
                    }
                    (t as u32, 0)
                }
            };
            let cell = Cell {
                h,
                comodule,
                weight,
                power,
            };
            let mut levels = Vec::new();
            for s in 0..=s_max {
                let dim = cell.basis(s).len();
                let next = cell.basis(s + 1).len();
                if dim > max_dim || next > max_dim {
                    return Err(Error::WindowTooLarge(format!(
                        "cochains at (s, t) = ({}, {t}) have dimension {}, bound {max_dim}",
                        if dim > max_dim { s } else { s + 1 },
                        dim.max(next)
                    )));
                }
                levels.push(cell.level(s)?);
            }
            // d∘d = 0
            for s in 1..levels.len() {
                let index: HashMap<&Monomial, usize> = levels[s]
                    .basis
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (m, i))
                    .collect();
                for row in &levels[s - 1].images {
                    let mut acc: BTreeMap<&Monomial, BigInt> = BTreeMap::new();
                    for (m, c) in row {
                        let i = *index.get(m).ok_or_else(|| {
                            Error::Invariant("image outside the next cochain basis".into())
                        })?;
                        for (m2, c2) in &levels[s].images[i] {
                            *acc.entry(m2).or_insert_with(BigInt::zero) += c * c2;
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        return Err(Error::Invariant(format!("d∘d != 0 at (s, t) = ({s}, {t})")));
                    }
                }
            }
            let kind = match coefficients {
                Coefficients::ModP(p) => FieldKind::Prime(p),
                _ => FieldKind::Rationals,
            };
            let ranks: Vec<usize> = levels.iter().map(|l| rank_of(&l.images, kind)).collect();
            let mut cells = Vec::new();
            for s in 0..=s_max {
                let dim = levels[s].basis.len();
                let prev = if s == 0 { 0 } else { ranks[s - 1] };
                let rank = dim - ranks[s] - prev;
                let torsion: Vec<u64> = if s == 0 || matches!(coefficients, Coefficients::ModP(_)) {
                    Vec::new()
                } else {
                    let f = invariant_factors(&dense(&levels[s - 1].images));
                    f.into_iter()
                        .map(|x| match coefficients {
                            Coefficients::Local(p) => p_part(x, p),
                            _ => x,
                        })
                        .filter(|x| *x > BigInt::from(1))
                        .map(|x| {
                            x.to_u64()
                                .ok_or_else(|| Error::Invariant(format!("torsion order {x} too large")))
                        })
                        .collect::<Result<_>>()?
                };
                if rank > 0 || !torsion.is_empty() {
                    cells.push(ChartCell { s, t, rank, torsion });
                }
            }
            Ok(cells)
        })
        .collect();
    let mut cells = Vec::new();
    for r in per_t {
        cells.extend(r?);
    }
    cells.sort_by_key(|c| (c.s, c.t));
    Ok(BigradedChart {
        algebroid: h.name.clone(),
        comodule: comodule.label(),
        coefficients: coefficients.to_string(),
        s_max,
        t_min,
        t_max,
        cells,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantBasis {
    pub twist: i64,
    pub rank: usize,
    pub basis: Vec<String>,
}

/// Per twist j, a Z-basis of the equalizer of the two units on ω^j: the
/// kernel of f ↦ λ^j η_R(f) − f on the weight-2j part of A (weight 0 and
/// character λ for `Comodule::Character`).
pub fn invariants_h0(
    h: &HopfAlgebroidPresentation,
    comodule: &Comodule,
    twists: std::ops::RangeInclusive<i64>,
) -> Result<Vec<InvariantBasis>> {
    let mut out = Vec::new();
    for j in twists {
        let (w, lambda) = match comodule {
            Comodule::Unit => (2 * j, None),
            Comodule::Character(l) => (0, Some(h.clamp(&l.pow(j.rem_euclid(2) as u32)))),
            Comodule::Extended => {
                return Err(Error::Invalid("the oracle covers twists of A only".into()))
            }
        };
        if w < 0 {
            out.push(InvariantBasis {
                twist: j,
                rank: 0,
                basis: Vec::new(),
            });
            continue;
        }
        let mut src = h.a.monomials_of_weight(w as u32);
        src.reverse();
        let mut cols: HashMap<Monomial, usize> = HashMap::new();
        let mut rows: Vec<Vec<(usize, BigInt)>> = Vec::new();
        for m in &src {
            let f = GradedPolynomial::monomial(&h.a, m.clone(), h.a.base().one());
            let mut img = h.clamp(&f.substitute(&h.eta_r, &h.gamma));
            if let Some(l) = &lambda {
                img = h.clamp(&(&img * l));
            }
            let diff = &img - &f.embed(&h.gamma);
            let mut row = Vec::new();
            for (mm, c) in diff.terms() {
                let n = cols.len();
                let i = *cols.entry(mm.clone()).or_insert(n);
                row.push((i, c.to_bigint()));
            }
            rows.push(row);
        }
        // Columns of the matrix are the source monomials.
        let mut mat = IntegerMatrix::zeros(cols.len(), src.len());
        for (k, row) in rows.iter().enumerate() {
            for (i, c) in row {
                mat.set(*i, k, c.clone());
            }
        }
        let kernel = if cols.is_empty() {
            (0..src.len())
                .map(|k| (0..src.len()).map(|i| BigInt::from((i == k) as i64)).collect())
                .collect()
        } else {
            smith_normal_form(&mat).kernel_basis()
        };
        let kernel = hermite_rows(kernel);
        let basis = kernel
            .iter()
            .map(|v| {
                let mut p = h.a.zero();
                for (c, m) in v.iter().zip(&src) {
                    if !c.is_zero() {
                        p.add_term(m.clone(), &h.a.base().from_bigint(c));
                    }
                }
                p.to_text()
            })
            .collect::<Vec<_>>();
        out.push(InvariantBasis {
            twist: j,
            rank: basis.len(),
            basis,
        });
    }
    Ok(out)
}
