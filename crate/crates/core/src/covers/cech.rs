//! Čech cohomology of line bundles on weighted projective lines, the
//! two-row pages built from it, and graded-rank descent assembly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{smith_normal_form, IntegerMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoRowEntry {
    /// The twist j of the sheaf omega^j.
    pub twist: i64,
    pub h0_rank: usize,
    pub h1_rank: usize,
    /// Monomial generators, when listed.
    pub h0: Vec<String>,
    pub h1: Vec<String>,
    /// Torsion orders in H^1.
    pub h1_torsion: Vec<String>,
}

/// Cohomology of omega^j in rows H^0 and H^1 over a range of twists.
#[derive(Clone, Debug, Serialize)]
pub struct TwoRowPage {
    pub source: String,
    pub coefficients: String,
    /// Whether `h0`/`h1` generator lists are filled in.
    pub generators: bool,
    /// Truncations and certificates the ranks depend on.
    pub notes: Vec<String>,
    pub entries: Vec<TwoRowEntry>,
}

impl TwoRowPage {
    pub fn entry(&self, twist: i64) -> Option<&TwoRowEntry> {
        self.entries.iter().find(|e| e.twist == twist)
    }
}

fn laurent_text(names: &[&str; 2], i: i64, k: i64) -> String {
    let mut parts = Vec::new();
    for (n, e) in names.iter().zip([i, k]) {
        match e {
            0 => {}
            1 => parts.push(n.to_string()),
            _ => parts.push(format!("{n}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Lattice points (i, k) on i*w1 + k*w2 = j inside the given box.
fn line_points(w: (u32, u32), j: i64, bi: i64, bk: i64) -> Vec<(i64, i64)> {
    let (w1, w2) = (w.0 as i64, w.1 as i64);
    (-bi..=bi)
        .filter_map(|i| {
            let r = j - i * w1;
            (r % w2 == 0 && (r / w2).abs() <= bk).then_some((i, r / w2))
        })
        .collect()
}

/// H^0 and H^1 of O(j) on P(w1, w2) over Z, for each j in `twists`.
///
/// The ranks come from monomial bookkeeping (H^0 spanned by monomials with
/// both exponents >= 0, H^1 by those with both <= -1) and are checked
/// against the Smith form of the Čech differential
/// `Z[x, y^±] ⊕ Z[x^±, y] -> Z[x^±, y^±]` truncated to a box holding every
/// contributing monomial.
pub fn cech_weighted_projective(
    weights: (u32, u32),
    names: [&str; 2],
    twists: std::ops::RangeInclusive<i64>,
) -> Result<TwoRowPage> {
    if weights.0 == 0 || weights.1 == 0 {
        return Err(Error::Invalid("weights must be positive".into()));
    }
    let mut entries = Vec::new();
    for j in twists {
        let bi = j.abs() / weights.0 as i64 + weights.1 as i64 + 1;
        let bk = j.abs() / weights.1 as i64 + weights.0 as i64 + 1;
        let pts = line_points(weights, j, bi, bk);
        let h0: Vec<(i64, i64)> = pts.iter().copied().filter(|&(i, k)| i >= 0 && k >= 0).collect();
        let h1: Vec<(i64, i64)> = pts.iter().copied().filter(|&(i, k)| i < 0 && k < 0).collect();
        // C^0 = (k >= 0 part) ⊕ (i >= 0 part), C^1 = everything on the line.
        let left: Vec<(i64, i64)> = pts.iter().copied().filter(|&(_, k)| k >= 0).collect();
        let right: Vec<(i64, i64)> = pts.iter().copied().filter(|&(i, _)| i >= 0).collect();
        let rows = left.len() + right.len();
        let mut d = IntegerMatrix::zeros(rows, pts.len());
        for (r, p) in left.iter().enumerate() {
            let c = pts.iter().position(|q| q == p).unwrap();
            d.set(r, c, BigInt::one());
        }
        for (r, p) in right.iter().enumerate() {
            let c = pts.iter().position(|q| q == p).unwrap();
            d.set(left.len() + r, c, -BigInt::one());
        }
        let snf = smith_normal_form(&d);
        let ker = rows - snf.rank;
        let coker = pts.len() - snf.rank;
        let torsion: Vec<String> = snf.torsion().iter().map(|t| t.to_string()).collect();
        if ker != h0.len() || coker != h1.len() || !torsion.is_empty() {
            return Err(Error::Invariant(format!(
                "Čech complex at twist {j}: Smith form gives ({ker}, {coker}), monomials give ({}, {})",
                h0.len(),
                h1.len()
            )));
        }
        entries.push(TwoRowEntry {
            twist: j,
            h0_rank: h0.len(),
            h1_rank: h1.len(),
            h0: h0.iter().map(|&(i, k)| laurent_text(&names, i, k)).collect(),
            h1: h1.iter().map(|&(i, k)| laurent_text(&names, i, k)).collect(),
            h1_torsion: torsion,
        });
    }
    Ok(TwoRowPage {
        source: format!("P({},{})", weights.0, weights.1),
        coefficients: "Z".into(),
        generators: true,
        notes: Vec::new(),
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyEntry {
    pub degree: i64,
    pub rank: usize,
    pub torsion: Vec<String>,
    pub sources: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyTable {
    pub source: String,
    pub entries: Vec<HomotopyEntry>,
    pub note: String,
}

impl HomotopyTable {
    pub fn at(&self, degree: i64) -> Option<&HomotopyEntry> {
        self.entries.iter().find(|e| e.degree == degree)
    }

    /// The negative degree nearest zero carrying a nonzero group, if any.
    pub fn first_negative(&self) -> Option<i64> {
        self.entries
            .iter()
            .filter(|e| e.degree < 0 && (e.rank > 0 || !e.torsion.is_empty()))
            .map(|e| e.degree)
            .max()
    }
}

/// Reads a two-row page as a descent spectral sequence collapsing for
/// degree reasons: pi_(2j) gets H^0(omega^j) and pi_(2j-1) gets
/// H^1(omega^j). Only graded ranks are produced; extensions are not
/// resolved.
pub fn descent_assemble(
    page: &TwoRowPage,
    degrees: std::ops::RangeInclusive<i64>,
) -> Result<HomotopyTable> {
    let mut by: BTreeMap<i64, &TwoRowEntry> = BTreeMap::new();
    for e in &page.entries {
        if by.insert(e.twist, e).is_some() {
            return Err(Error::Invalid(format!("page repeats twist {}", e.twist)));
        }
    }
    let mut entries = Vec::new();
    for d in degrees {
        let (j, row) = if d % 2 == 0 { (d / 2, 0) } else { ((d + 1) / 2, 1) };
        let e = by
            .get(&j)
            .ok_or_else(|| Error::Invalid(format!("page lacks twist {j} needed for degree {d}")))?;
        let (rank, gens, torsion) = if row == 0 {
            (e.h0_rank, &e.h0, Vec::new())
        } else {
            (e.h1_rank, &e.h1, e.h1_torsion.clone())
        };
        let mut sources = Vec::new();
        if rank > 0 || !torsion.is_empty() {
            let label = format!("H{row}(w^{j})");
            if gens.is_empty() {
                sources.push(label);
            } else {
                sources.push(format!("{label}: {}", gens.join(", ")));
            }
        }
        entries.push(HomotopyEntry {
            degree: d,
            rank,
            torsion,
            sources,
        });
    }
    Ok(HomotopyTable {
        source: page.source.clone(),
        entries,
        note: "graded ranks only; extensions are not resolved".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p13_first_negative_class() {
        let page = cech_weighted_projective((1, 3), ["alpha1", "alpha3"], -12..=6).unwrap();
        let e = page.entry(-4).unwrap();
        assert_eq!(e.h1, vec!["alpha1^-1*alpha3^-1"]);
        assert_eq!(page.entry(-3).unwrap().h1_rank, 0);
        let t = descent_assemble(&page, -23..=12).unwrap();
        assert_eq!(t.first_negative(), Some(-9));
        assert_eq!(t.at(6).unwrap().rank, 2);
        assert_eq!(t.at(12).unwrap().rank, 3);
    }

    #[test]
    fn p46_gap() {
        let page = cech_weighted_projective((4, 6), ["c4", "c6"], -20..=6).unwrap();
        let t = descent_assemble(&page, -39..=12).unwrap();
        assert!((-20..0).all(|d| t.at(d).unwrap().rank == 0));
        assert_eq!(t.first_negative(), Some(-21));
        assert_eq!(t.at(-21).unwrap().sources, vec!["H1(w^-10): c4^-1*c6^-1"]);
    }

    #[test]
    fn missing_twist() {
        let page = cech_weighted_projective((1, 1), ["x", "y"], 0..=2).unwrap();
        assert!(descent_assemble(&page, -1..=4).is_ok());
        assert!(descent_assemble(&page, -3..=4).is_err());
    }
}
