//! Truncated formal power series with exact (or any [`Scalar`]) coefficients.
//!
//! Two concrete shapes are provided: [`Bivariate`] in a cell variable `x` and
//! an outside-edge variable `y`, and [`Multivariate`] over named variables.
//! Both truncate every variable independently; a coefficient beyond the
//! bounds is never stored, and asking for one is an error rather than a zero.

mod bivariate;
mod multivariate;

pub use bivariate::{Bivariate, Bounds};
pub use multivariate::Multivariate;

use crate::error::Result;
use crate::scalar::Scalar;

/// Ring operations shared by every truncated series shape.
///
/// Cycle-index substitution ([`crate::polya::plethysm`]) is written against
/// this trait so the same code drives the cluster series and the tree series.
pub trait TruncatedSeries<T: Scalar>: Clone + PartialEq + Sized {
    /// Per-variable truncation bounds, in variable order.
    fn bounds(&self) -> Vec<u32>;

    fn zero_like(&self) -> Self;

    fn one_like(&self) -> Self;

    fn add(&self, other: &Self) -> Result<Self>;

    fn sub(&self, other: &Self) -> Result<Self>;

    /// Cauchy product; terms beyond the bounds are discarded.
    fn mul(&self, other: &Self) -> Result<Self>;

    fn scale(&self, c: &T) -> Self;

    /// Replaces every variable `v` by `v^r`.
    fn power_substitute(&self, r: i64) -> Result<Self>;

    /// `1 + s + s^2 + ...`, i.e. `1/(1 - s)`; requires a zero constant term.
    fn geom_reciprocal(&self) -> Result<Self>;

    fn constant_term(&self) -> T;

    fn is_zero_series(&self) -> bool;

    /// `self^e` by repeated squaring.
    fn pow(&self, mut e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `1 - self`.
    fn one_minus(&self) -> Result<Self> {
        self.one_like().sub(self)
    }
}
