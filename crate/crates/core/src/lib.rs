//! Exact computational algebra for Weierstrass curves: formal group laws,
//! flat covers of the moduli of cubics, descent and cobar cohomology, and
//! comodules over the mod 2 dual Steenrod algebra.

pub mod algebra;
pub mod covers;
pub mod elliptic;
pub mod error;
pub mod hopf;
pub mod steenrod;

pub use error::{Error, Result};
