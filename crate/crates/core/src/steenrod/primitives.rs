//! Primitives of 𝔸 (Δx = x⊗1 + 1⊗x) and of quotient comodules 𝔸/C
//! (ψ[x] = 1⊗[x]), degree by degree over F_2.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::algebra::{gf2_left_kernel, Gf2Basis};
use crate::error::Result;

use super::element::{degree, Coordinates, DualSteenrod, F2Poly, Mono};
use super::spec::{SubalgebraBasis, SubalgebraSpec};

#[derive(Clone, Debug)]
pub enum PrimitiveTarget {
    /// 𝔸 itself, Hopf primitives in positive degrees.
    Dual,
    /// The quotient comodule 𝔸/C.
    Quotient(SubalgebraSpec),
    /// The trivial comodule F_2 in degree 0.
    Ground,
}

impl PrimitiveTarget {
    pub fn name(&self) -> String {
        match self {
            PrimitiveTarget::Dual => "A".into(),
            PrimitiveTarget::Quotient(s) => format!("A/{}", s.name),
            PrimitiveTarget::Ground => "F2".into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PrimitiveDegree {
    pub degree: u32,
    pub rank: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimitivesReport {
    pub target: String,
    pub coordinates: Coordinates,
    pub window: (u32, u32),
    /// Only degrees with a nonzero rank.
    pub degrees: Vec<PrimitiveDegree>,
}

impl PrimitivesReport {
    pub fn rank(&self, d: u32) -> usize {
        self.degrees.iter().find(|x| x.degree == d).map_or(0, |x| x.rank)
    }
}

pub fn primitives(a: &DualSteenrod, target: &PrimitiveTarget, window: RangeInclusive<u32>) -> Result<PrimitivesReport> {
    let (lo, hi) = (*window.start(), (*window.end()).min(a.cutoff()));
    let mut degrees = Vec::new();
    let coordinates = match target {
        PrimitiveTarget::Dual => Coordinates::Milnor,
        _ => Coordinates::Conjugate,
    };
    let basis = match target {
        PrimitiveTarget::Quotient(s) => Some(s.basis(a)),
        _ => None,
    };
    for d in lo..=hi {
        let found = match target {
            PrimitiveTarget::Ground => {
                if d == 0 {
                    vec![F2Poly::one()]
                } else {
                    Vec::new()
                }
            }
            PrimitiveTarget::Dual => hopf_primitives(a, d)?,
            PrimitiveTarget::Quotient(_) => quotient_primitives(a, basis.as_ref().unwrap(), d)?,
        };
        if !found.is_empty() {
            degrees.push(PrimitiveDegree {
                degree: d,
                rank: found.len(),
                basis: found.iter().map(|p| p.text(coordinates)).collect(),
            });
        }
    }
    Ok(PrimitivesReport {
        target: target.name(),
        coordinates,
        window: (lo, hi),
        degrees,
    })
}

/// Sparse rows over columns numbered on first sight.
struct Columns<K> {
    ids: HashMap<K, usize>,
    rows: Vec<Vec<usize>>,
}

impl<K: std::hash::Hash + Eq> Columns<K> {
    fn new() -> Self {
        Columns {
            ids: HashMap::new(),
            rows: Vec::new(),
        }
    }

    fn push<I: IntoIterator<Item = K>>(&mut self, keys: I) {
        let mut row = Vec::new();
        for k in keys {
            let n = self.ids.len();
            row.push(*self.ids.entry(k).or_insert(n));
        }
        self.rows.push(row);
    }

    /// Kernel vectors over the row indices.
    fn kernel(&self) -> Vec<Vec<u64>> {
        let cols = self.ids.len();
        let packed: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![0u64; cols.div_ceil(64).max(1)];
                for &c in r {
                    v[c / 64] ^= 1 << (c % 64);
                }
                v
            })
            .collect();
        gf2_left_kernel(&packed, cols)
    }
}

/// Reduced kernel rows turned into polynomials, leading terms distinct.
fn canonical(a: &DualSteenrod, d: u32, kernel: Vec<Vec<u64>>, modulo: Option<&Gf2Basis>) -> Vec<F2Poly> {
    let mut b = modulo.cloned().unwrap_or_else(|| Gf2Basis::new(a.dim(d)));
    let base = b.rank();
    for k in &kernel {
        b.insert(k);
    }
    // Rows added after the modulus, already reduced against it.
    let mut rows: Vec<(usize, Vec<u64>)> = b
        .rows()
        .iter()
        .zip(b.pivots())
        .skip(base)
        .map(|(r, &p)| (p, r.clone()))
        .collect();
    rows.sort_by_key(|r| r.0);
    rows.into_iter().map(|(_, r)| a.from_vector(&r, d)).collect()
}

fn hopf_primitives(a: &DualSteenrod, d: u32) -> Result<Vec<F2Poly>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut cols: Columns<(Mono, Mono)> = Columns::new();
    for &m in a.monomials(d) {
        let t = a.coproduct(&F2Poly::monomial(m))?;
        cols.push(t.0.into_iter().filter(|&(l, r)| l != 0 && r != 0));
    }
    Ok(canonical(a, d, cols.kernel(), None))
}

/// x ↦ (R_L mod C) over left monomials L of positive degree, with R_L
/// reduced to its normal form against the row-reduced basis of C.
fn quotient_primitives(a: &DualSteenrod, c: &SubalgebraBasis, d: u32) -> Result<Vec<F2Poly>> {
    let mut cols: Columns<(Mono, Mono)> = Columns::new();
    for &m in a.monomials(d) {
        let t = a.coproduct_conjugate(&F2Poly::monomial(m))?;
        let mut keys = Vec::new();
        for (l, r) in t.by_left() {
            if l == 0 {
                continue;
            }
            let e = d - degree(l);
            let red = match c.spans.get(e as usize) {
                Some(s) => s.reduce(&a.vector(&r, e)),
                None => a.vector(&r, e),
            };
            keys.extend(a.from_vector(&red, e).0.into_iter().map(|x| (l, x)));
        }
        cols.push(keys);
    }
    let empty = Gf2Basis::new(a.dim(d));
    let span = c.spans.get(d as usize).unwrap_or(&empty);
    Ok(canonical(a, d, cols.kernel(), Some(span)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_primitives() {
        let a = DualSteenrod::new(8).unwrap();
        let p = primitives(&a, &PrimitiveTarget::Dual, 0..=8).unwrap();
        let b: Vec<String> = p.degrees.iter().flat_map(|d| d.basis.clone()).collect();
        assert_eq!(b, vec!["xi1", "xi1^2", "xi1^4", "xi1^8"]);
        let g = primitives(&a, &PrimitiveTarget::Ground, 0..=8).unwrap();
        assert_eq!(g.degrees, vec![PrimitiveDegree { degree: 0, rank: 1, basis: vec!["1".into()] }]);
    }
}
