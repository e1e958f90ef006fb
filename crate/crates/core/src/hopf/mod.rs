//! Hopf algebroid presentations, their axioms, and cobar cohomology.

pub mod builtin;
pub mod cobar;
pub mod kucp2;
pub mod presentation;

pub use builtin::{builtin_algebroid, mqd, synthesize_weierstrass_algebroid, z2_group};
pub use cobar::{
    cobar_cohomology, invariants_h0, BigradedChart, ChartCell, Coefficients, Comodule,
    InvariantBasis,
};
pub use kucp2::{ku_cp2_involution, Involution};
pub use presentation::{AxiomReport, HopfAlgebroidPresentation, PresentationSummary};
