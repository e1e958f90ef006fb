//! The two-row page for the cohomology of the Weierstrass ring R with the
//! cuspidal locus removed: H^0 is R itself and H^1 is the cokernel of
//! `R[c4^-1] ⊕ R[Delta^-1] -> R[(c4 Delta)^-1]`, counted through the
//! Koszul complexes of (c4^m, Delta^m).

use std::sync::Arc;

use serde::Serialize;

use super::cech::{TwoRowEntry, TwoRowPage};
use crate::algebra::{BaseRing, PoincareSeries, PolyRing};
use crate::elliptic::{graded_regular_sequence_check, invariants, WeierstrassCurve};
use crate::error::{Error, Result};

/// `Z[a1, ..., a6, e_4, ..., e_N]` with |a_i| = 2i and |e_n| = 2n.
#[derive(Clone, Debug, Serialize)]
pub struct AmbientWeierstrassRing {
    #[serde(skip)]
    pub ring: Arc<PolyRing>,
    /// Largest n with e_n present.
    pub cutoff: u32,
    pub generators: Vec<String>,
}

impl AmbientWeierstrassRing {
    pub fn new(cutoff: u32) -> Self {
        let base = WeierstrassCurve::universal_ring(BaseRing::Integers);
        let extra: Vec<(String, u32)> = (4..=cutoff).map(|n| (format!("e{n}"), 2 * n)).collect();
        let ring = base.extend(&extra);
        let generators = ring.names().to_vec();
        AmbientWeierstrassRing {
            ring,
            cutoff,
            generators,
        }
    }

    /// The curve with coefficients a_i; the e_n do not enter it.
    pub fn curve(&self) -> WeierstrassCurve {
        WeierstrassCurve::over_universal(&self.ring)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuMode {
    /// All of R, with H^1 numerators truncated at the window's top weight.
    Full,
    /// a2 = a4 = a6 = e_n = 0: R becomes Z[a1, a3] and nothing is truncated.
    Specialized,
}

/// H^0 and H^1 at each twist j in `twists` (weight 2j), p-locally.
///
/// In `Full` mode R/(c4, Delta) has unbounded rank, so H^1 in a fixed
/// weight is only counted over numerators of weight at most the window's
/// top weight; the truncation is recorded in the page notes. Every e_n of
/// weight up to that top must be present, which needs `e_cutoff` large
/// enough.
pub fn tmf_mu_page(
    p: u64,
    twists: std::ops::RangeInclusive<i64>,
    e_cutoff: u32,
    mode: MuMode,
) -> Result<TwoRowPage> {
    let (jmin, jmax) = (*twists.start(), *twists.end());
    if jmin > jmax {
        return Err(Error::Invalid("empty window".into()));
    }
    let top = (2 * jmax).max(0) as u32;
    let (ring, curve, cap, mut notes) = match mode {
        MuMode::Full => {
            let demand = top / 2;
            if demand >= 4 && e_cutoff < demand {
                return Err(Error::WindowTooLarge(format!(
                    "window demands e_n beyond cutoff: need n <= {demand}, have {e_cutoff}"
                )));
            }
            let amb = AmbientWeierstrassRing::new(demand.min(e_cutoff));
            let curve = amb.curve();
            (amb.ring.clone(), curve, top, vec![format!(
                "H1 counts numerators of weight <= {top}; e_n present for n <= {}",
                amb.cutoff
            )])
        }
        MuMode::Specialized => {
            let ring = PolyRing::new(BaseRing::Integers, &[("a1", 2), ("a3", 6)]);
            let z = ring.zero();
            let curve = WeierstrassCurve::new([
                ring.gen(0),
                z.clone(),
                ring.gen(1),
                z.clone(),
                z,
            ])?;
            // R/(c4, Delta) then has top weight 24; 48 certifies it is finite.
            (ring, curve, top.max(48), Vec::new())
        }
    };
    let inv = invariants(&curve);
    let rep = graded_regular_sequence_check(
        &ring,
        &[inv.c4.clone(), inv.discriminant.clone()],
        Some(p),
        cap,
    )?;
    if !rep.regular || !rep.hilbert_match {
        return Err(Error::Invariant(format!(
            "c4, Delta not regular on R through weight {cap}: {:?}",
            rep.failure
        )));
    }
    if mode == MuMode::Specialized && !rep.quotient_finite {
        return Err(Error::Invariant("R/(c4, Delta) is not finite".into()));
    }
    notes.push(format!(
        "c4, Delta regular on R localized at {p} through weight {cap}, so H0 = R"
    ));
    let r_ranks = PoincareSeries::polynomial(ring.weights(), cap);
    let v = &rep.quotient_ranks;
    let mut entries = Vec::new();
    for j in twists {
        let w = 2 * j;
        let h0_rank = if w >= 0 { r_ranks.at(w as u32) as usize } else { 0 };
        // H^1_w = sum over a, b >= 1 of (R/(c4, Delta))_(w + 8a + 24b).
        let mut h1_rank = 0usize;
        let mut a = 1i64;
        while w + 8 * a + 24 <= cap as i64 {
            let mut b = 1i64;
            while w + 8 * a + 24 * b <= cap as i64 {
                let n = w + 8 * a + 24 * b;
                if n >= 0 {
                    h1_rank += v[n as usize];
                }
                b += 1;
            }
            a += 1;
        }
        entries.push(TwoRowEntry {
            twist: j,
            h0_rank,
            h1_rank,
            h0: Vec::new(),
            h1: Vec::new(),
            h1_torsion: Vec::new(),
        });
    }
    Ok(TwoRowPage {
        source: match mode {
            MuMode::Full => "R[a1..a6, e_n]".into(),
            MuMode::Specialized => "R[a1, a3]".into(),
        },
        coefficients: format!("Z_({p})"),
        generators: false,
        notes,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_two_is_a1() {
        let page = tmf_mu_page(2, 0..=4, 4, MuMode::Full).unwrap();
        assert_eq!(page.entry(1).unwrap().h0_rank, 1);
        assert!(page.entries.iter().all(|e| e.h1_rank == 0));
    }

    #[test]
    fn cutoff_too_small() {
        assert!(matches!(
            tmf_mu_page(2, 0..=6, 4, MuMode::Full),
            Err(Error::WindowTooLarge(_))
        ));
    }

    #[test]
    fn specialized_first_class() {
        let page = tmf_mu_page(2, -8..=2, 0, MuMode::Specialized).unwrap();
        assert_eq!(page.entry(-4).unwrap().h1_rank, 1);
        assert_eq!(page.entry(-3).unwrap().h1_rank, 0);
        assert_eq!(page.entry(-8).unwrap().h1_rank, 2);
    }
}
