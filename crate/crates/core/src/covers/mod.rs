//! Flat covers of the moduli of cubics at 2 and 3, Čech cohomology of
//! weighted projective lines, and descent assembly of homotopy ranks.

pub mod cech;
pub mod fiber;
pub mod tmf_mu;

pub use cech::{
    cech_weighted_projective, descent_assemble, HomotopyEntry, HomotopyTable, TwoRowEntry,
    TwoRowPage,
};
pub use fiber::{cover_fiber, cover_spec, CoverSpec, FiberAlgebra};
pub use tmf_mu::{tmf_mu_page, AmbientWeierstrassRing, MuMode};
