//! The mod-2 dual Steenrod algebra and its subcomodule algebras.

pub mod closure;
pub mod element;
pub mod freeness;
pub mod primitives;
pub mod spec;
pub mod verify;

pub use closure::{comodule_closure_check, ClosureReport, ClosureRoute, ClosureWitness};
pub use element::{Coordinates, DualSteenrod, DualSteenrodElement, F2Poly, Mono, Tensor, MAX_CUTOFF};
pub use freeness::{
    freeness_rank_check, quotient_pattern, uniqueness_probe, FreenessReport, NonPrimitivity, PatternReport,
    UniquenessReport,
};
pub use primitives::{primitives, PrimitiveDegree, PrimitiveTarget, PrimitivesReport};
pub use spec::{SpecGenerator, SubalgebraBasis, SubalgebraSpec};
pub use verify::{bp_n_homology, verify_target, VerifyReport, BP2_OVER_TMF_CELLS, KU_OVER_KO_CELLS, TMF_LIFTS, TMF_WITNESS};
