//! End-to-end verification of the homology of ko, ku, tmf and BP⟨n⟩ as
//! subcomodule algebras of 𝔸, through a cutoff.

use serde::Serialize;

use crate::error::Result;

use super::closure::{comodule_closure_check, ClosureReport};
use super::element::DualSteenrod;
use super::freeness::{freeness_rank_check, quotient_pattern, uniqueness_probe, FreenessReport, PatternReport, UniquenessReport};
use super::spec::SubalgebraSpec;

/// Module cells of H*(ku) over H*(ko).
pub const KU_OVER_KO_CELLS: [u32; 2] = [0, 2];
/// Module cells of H*(BP⟨2⟩) over H*(tmf): E(ξ1^2) ⊗ E(ξ1^4) ⊗ E(ξ̄2^2).
pub const BP2_OVER_TMF_CELLS: [u32; 8] = [0, 2, 4, 6, 6, 8, 10, 12];
/// Default depth of the uniqueness probes.
pub const PROBE_DEPTH: u32 = 16;
/// The degree-12 element that is not primitive modulo ξ1^8.
pub const TMF_WITNESS: &str = "xi1^6*xibar2^2";
pub const TMF_LIFTS: [&str; 8] = [
    "1",
    "xi1^2",
    "xi1^4",
    "xi1^6",
    "xibar2^2",
    "xi1^2*xibar2^2",
    "xi1^4*xibar2^2",
    "xi1^6*xibar2^2",
];

#[derive(Clone, Debug, Serialize)]
pub struct PatternCheck {
    pub report: PatternReport,
    pub expected_top: u32,
    pub expected_total: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub target: String,
    pub verified_through: u32,
    pub generators: Vec<String>,
    pub tail: String,
    pub closure: ClosureReport,
    /// The basis dimensions match a polynomial algebra on the generators.
    pub series_matches_generators: bool,
    pub freeness: Option<FreenessReport>,
    pub uniqueness: Option<UniquenessReport>,
    pub pattern: Option<PatternCheck>,
    pub holds: bool,
}

/// The homology of BP⟨n⟩, returned only after its closure check passes.
pub fn bp_n_homology(a: &DualSteenrod, n: usize, cutoff: u32) -> Result<SubalgebraSpec> {
    let mut spec = SubalgebraSpec::bp(n, a);
    spec.cutoff = cutoff.min(a.cutoff());
    let r = comodule_closure_check(a, &spec, spec.cutoff, 0)?;
    if !r.closed {
        return Err(crate::error::Error::Invariant(format!(
            "bp:{n} is not closed under the coaction: {:?}",
            r.witness
        )));
    }
    Ok(spec)
}

pub fn verify_target(a: &DualSteenrod, target: &str, cutoff: u32, milnor_cutoff: u32) -> Result<VerifyReport> {
    let cutoff = cutoff.min(a.cutoff());
    let mut spec = SubalgebraSpec::named(target, a)?;
    spec.cutoff = cutoff;
    let closure = comodule_closure_check(a, &spec, cutoff, milnor_cutoff)?;
    let mut free = spec.free_series();
    free.ranks.truncate(cutoff as usize + 1);
    let series_matches_generators = spec.basis(a).series() == free;
    let named = |n: &str| -> Result<SubalgebraSpec> {
        let mut s = SubalgebraSpec::named(n, a)?;
        s.cutoff = cutoff;
        Ok(s)
    };
    let (mut freeness, mut uniqueness, mut pattern) = (None, None, None);
    match target {
        "ko" | "ku" => {
            let (ku, ko) = (named("ku")?, named("ko")?);
            freeness = Some(freeness_rank_check(a, &ku, &ko, &KU_OVER_KO_CELLS, cutoff)?);
            if target == "ko" {
                uniqueness = Some(uniqueness_probe(a, &ku, &ko.basis(a).series(), PROBE_DEPTH, None, &[])?);
            }
        }
        "tmf" => {
            let (bp2, tmf) = (named("bp:2")?, named("tmf")?);
            freeness = Some(freeness_rank_check(a, &bp2, &tmf, &BP2_OVER_TMF_CELLS, cutoff)?);
            uniqueness = Some(uniqueness_probe(
                a,
                &bp2,
                &tmf.basis(a).series(),
                PROBE_DEPTH,
                Some(TMF_WITNESS),
                &TMF_LIFTS,
            )?);
            let report = quotient_pattern(a, &tmf);
            let holds = report.nonnegative && report.top == Some(23) && report.total == 64;
            pattern = Some(PatternCheck {
                report,
                expected_top: 23,
                expected_total: 64,
                holds,
            });
        }
        _ => {}
    }
    let holds = closure.closed
        && series_matches_generators
        && freeness.as_ref().is_none_or(|f| f.free)
        && uniqueness.as_ref().is_none_or(|u| u.holds)
        && pattern.as_ref().is_none_or(|p| p.holds);
    Ok(VerifyReport {
        target: target.into(),
        verified_through: cutoff,
        generators: spec.generator_labels(),
        tail: spec.tail.clone(),
        closure,
        series_matches_generators,
        freeness,
        uniqueness,
        pattern,
        holds,
    })
}
