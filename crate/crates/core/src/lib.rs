//! Exact arithmetic in Hoffman's harmonic algebra of multiple zeta value
//! indices.
//!
//! * [`algebra`]: indices, rational combinations of indices, and the stuffle
//!   product.
//! * [`series`]: truncated power series over the algebra, with `exp_*`.
//! * [`identities`]: the `S(k)` polynomials and exact checks of the
//!   exponential identities built from them.
//! * [`numeric`]: floating-point evaluation of the zeta map with certified
//!   truncation bounds.

pub mod algebra;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod report;
pub mod series;

pub use algebra::{stuffle, Coefficient, Combination, Index};
pub use error::{Error, Result};
pub use numeric::{EvalResult, NumericConfig};
pub use report::{Mismatch, Report, Status};
pub use series::TruncatedSeries;
