//! Exact enumeration of the faces of associahedra and of the real moduli
//! space of stable genus-zero curves, by dimension, type, tree and class.
//!
//! Series arithmetic is generic over the coefficient type (see [`Scalar`]);
//! the aliases below fix it to unbounded rationals for exact counting.

pub mod clusters;
pub mod combinat;
pub mod dissect;
pub mod error;
pub mod facecount;
pub mod hitrees;
pub mod isotropy;
pub mod oracle;
pub mod polya;
pub mod reference;
pub mod scalar;
mod serde_big;
pub mod series;
pub mod types;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use series::{Bounds, TruncatedSeries};

use num_rational::BigRational;

/// Exact bivariate series in cells `x` and outside edges `y`.
pub type BivariateSeries = series::Bivariate<BigRational>;

/// Exact multivariate series over named variables.
pub type MultivariateSeries = series::Multivariate<BigRational>;

/// The five exact cluster series `A`, `V`, `B`, `C`, `F`.
pub type ClusterSeries = clusters::ClusterSeriesSet<BigRational>;
