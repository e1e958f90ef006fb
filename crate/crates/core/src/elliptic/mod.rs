//! Weierstrass cubics: coordinate changes, invariants, formal group laws,
//! [n]-series, Hasse coefficients and regular-sequence checks.

pub mod curve;
pub mod fgl;
pub mod regular;

pub use curve::{invariants, transform, CoordinateChange, Invariants, WeierstrassCurve};
pub use fgl::{fgl_from_curve, hasse_coefficients, n_series, FormalGroupLaw, HasseData};
pub use regular::{
    graded_regular_sequence_check, ideal_membership, landweber_report, LandweberReport,
    RegularityReport,
};
