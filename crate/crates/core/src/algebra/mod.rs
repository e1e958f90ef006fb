//! Exact graded polynomial and power-series arithmetic, and integer linear
//! algebra.

pub mod coeff;
pub mod graded;
pub mod linalg;
pub mod matrix;
pub mod poincare;
pub mod poly;
pub mod series;

pub use coeff::{BaseRing, Coefficient};
pub use graded::WeightBasis;
pub use linalg::{gf2_left_kernel, EchelonBasis, Field, FieldKind, Gf2Basis, PrimeField, Rationals, Subspace};
pub use matrix::{hermite_rows, invariant_factors, smith_normal_form, IntegerMatrix, SmithForm};
pub use poincare::{poincare_series, PoincareSeries};
pub use poly::{GradedPolynomial, Monomial, PolyRing};
pub use series::TruncatedSeries;
