use num_bigint::BigInt;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Truncation bounds of a bivariate series: `x^m y^n` is kept iff
/// `m <= max_cell` and `n <= max_edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub max_cell: u32,
    pub max_edge: u32,
}

impl Bounds {
    pub const fn new(max_cell: u32, max_edge: u32) -> Self {
        Bounds { max_cell, max_edge }
    }

    fn contains(&self, m: u32, n: u32) -> bool {
        m <= self.max_cell && n <= self.max_edge
    }

    fn as_vec(&self) -> Vec<u32> {
        vec![self.max_cell, self.max_edge]
    }
}

impl Default for Bounds {
    /// Large enough for every reference table: edges to 16, cells to 14.
    fn default() -> Self {
        Bounds::new(14, 16)
    }
}

/// A series `sum c[m,n] x^m y^n` in cells `x` and outside edges `y`.
///
/// Storage is a dense row-major grid; equality is coefficientwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Bivariate<T> {
    bounds: Bounds,
    coeffs: Vec<T>,
}

impl<T: Scalar> Bivariate<T> {
    pub fn zero(bounds: Bounds) -> Self {
        let len = (bounds.max_cell as usize + 1) * (bounds.max_edge as usize + 1);
        Bivariate {
            bounds,
            coeffs: vec![T::zero(); len],
        }
    }

    pub fn one(bounds: Bounds) -> Self {
        Self::monomial(bounds, 0, 0, T::one())
    }

    /// `c x^m y^n`, or zero when the monomial lies beyond the bounds.
    pub fn monomial(bounds: Bounds, m: u32, n: u32, c: T) -> Self {
        let mut s = Self::zero(bounds);
        if bounds.contains(m, n) {
            let i = s.index(m, n);
            s.coeffs[i] = c;
        }
        s
    }

    pub fn x(bounds: Bounds) -> Self {
        Self::monomial(bounds, 1, 0, T::one())
    }

    pub fn y(bounds: Bounds) -> Self {
        Self::monomial(bounds, 0, 1, T::one())
    }

    pub fn bounds_pair(&self) -> Bounds {
        self.bounds
    }

    fn index(&self, m: u32, n: u32) -> usize {
        m as usize * (self.bounds.max_edge as usize + 1) + n as usize
    }

    /// Coefficient of `x^m y^n`. Asking beyond the bounds is an error, which
    /// keeps "unknown" distinct from a genuine zero.
    pub fn coefficient(&self, m: u32, n: u32) -> Result<T> {
        if !self.bounds.contains(m, n) {
            return Err(Error::OutOfBounds {
                exponents: vec![m, n],
                bounds: self.bounds.as_vec(),
            });
        }
        Ok(self.coeffs[self.index(m, n)].clone())
    }

    pub fn set(&mut self, m: u32, n: u32, c: T) -> Result<()> {
        if !self.bounds.contains(m, n) {
            return Err(Error::OutOfBounds {
                exponents: vec![m, n],
                bounds: self.bounds.as_vec(),
            });
        }
        let i = self.index(m, n);
        self.coeffs[i] = c;
        Ok(())
    }

    /// Nonzero terms as `((m, n), coefficient)`, ordered by `m` then `n`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &T)> + '_ {
        let width = self.bounds.max_edge + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| {
                let i = i as u32;
                ((i / width, i % width), c)
            })
    }

    /// The coefficient as an integer, failing if it is not a nonnegative
    /// integer. Used where the series is known to count objects.
    pub fn count(&self, series: &'static str, m: u32, n: u32) -> Result<BigInt> {
        let c = self.coefficient(m, n)?;
        match c.to_integer() {
            Some(v) if v >= BigInt::from(0) => Ok(v),
            _ => Err(Error::NotACount {
                series,
                exponents: vec![m, n],
                value: format!("{c:?}"),
            }),
        }
    }

    /// Checks that every coefficient is a nonnegative integer.
    pub fn assert_counting(&self, series: &'static str) -> Result<()> {
        for ((m, n), _) in self.terms() {
            self.count(series, m, n)?;
        }
        Ok(())
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.bounds != other.bounds {
            return Err(Error::MismatchedBounds {
                left: self.bounds.as_vec(),
                right: other.bounds.as_vec(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        self.check_bounds(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Bivariate {
            bounds: self.bounds,
            coeffs,
        })
    }

    fn nonzero(&self) -> Vec<(u32, u32, &T)> {
        self.terms().map(|((m, n), c)| (m, n, c)).collect()
    }
}

impl<T: Scalar> TruncatedSeries<T> for Bivariate<T> {
    fn bounds(&self) -> Vec<u32> {
        self.bounds.as_vec()
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.bounds)
    }

    fn one_like(&self) -> Self {
        Self::one(self.bounds)
    }

    fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = self.zero_like();
        let rhs = other.nonzero();
        for (m1, n1, a) in self.nonzero() {
            for &(m2, n2, b) in &rhs {
                let (m, n) = (m1 + m2, n1 + n2);
                if !self.bounds.contains(m, n) {
                    continue;
                }
                let i = out.index(m, n);
                out.coeffs[i] = out.coeffs[i].clone() + a.clone() * b.clone();
            }
        }
        Ok(out)
    }

    fn scale(&self, c: &T) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.clone() * c.clone()).collect();
        Bivariate {
            bounds: self.bounds,
            coeffs,
        }
    }

    fn power_substitute(&self, r: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::NonPositivePower(r));
        }
        let r = r as u32;
        let mut out = self.zero_like();
        for ((m, n), c) in self.terms() {
            let (m, n) = (m * r, n * r);
            if self.bounds.contains(m, n) {
                let i = out.index(m, n);
                out.coeffs[i] = c.clone();
            }
        }
        Ok(out)
    }

    fn geom_reciprocal(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // r = 1 + s*r, solved in lexicographic order of (m, n): every term
        // of s has positive total degree, so r[m-i, n-j] is already final.
        let terms = self.nonzero();
        let mut out = self.zero_like();
        out.coeffs[0] = T::one();
        for m in 0..=self.bounds.max_cell {
            for n in 0..=self.bounds.max_edge {
                if m == 0 && n == 0 {
                    continue;
                }
                let mut acc = T::zero();
                for &(i, j, c) in &terms {
                    if i <= m && j <= n {
                        let prev = &out.coeffs[out.index(m - i, n - j)];
                        if !prev.is_zero() {
                            acc = acc + c.clone() * prev.clone();
                        }
                    }
                }
                let idx = out.index(m, n);
                out.coeffs[idx] = acc;
            }
        }
        Ok(out)
    }

    fn constant_term(&self) -> T {
        self.coeffs[0].clone()
    }

    fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type S = Bivariate<BigRational>;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn small() -> Bounds {
        Bounds::new(4, 6)
    }

    #[test]
    fn add_identity_and_doubling() {
        let b = small();
        let y = S::y(b);
        assert_eq!(y.add(&S::zero(b)).unwrap(), y);
        assert_eq!(y.add(&y).unwrap(), S::monomial(b, 0, 1, q(2)));
    }

    #[test]
    fn mul_identity_and_square() {
        let b = small();
        let y = S::y(b);
        assert_eq!(y.mul(&S::one(b)).unwrap(), y);
        assert_eq!(y.mul(&y).unwrap(), S::monomial(b, 0, 2, q(1)));
    }

    #[test]
    fn mismatched_bounds_rejected() {
        let a = S::y(Bounds::new(2, 2));
        let b = S::y(Bounds::new(2, 3));
        assert!(matches!(a.add(&b), Err(Error::MismatchedBounds { .. })));
        assert!(matches!(a.mul(&b), Err(Error::MismatchedBounds { .. })));
    }

    #[test]
    fn product_truncates() {
        let b = Bounds::new(1, 1);
        let xy = S::monomial(b, 1, 1, q(1));
        assert!(xy.mul(&xy).unwrap().is_zero_series());
    }

    #[test]
    fn geometric_series_of_y() {
        let b = small();
        let r = S::y(b).geom_reciprocal().unwrap();
        for n in 0..=6 {
            assert_eq!(r.coefficient(0, n).unwrap(), q(1));
            assert_eq!(r.coefficient(1, n).unwrap(), q(0));
        }
        assert_eq!(S::zero(b).geom_reciprocal().unwrap(), S::one(b));
    }

    #[test]
    fn geom_reciprocal_needs_zero_constant() {
        let b = small();
        assert_eq!(S::one(b).geom_reciprocal(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn power_substitution() {
        let b = small();
        let y = S::y(b);
        assert_eq!(y.power_substitute(1).unwrap(), y);
        assert_eq!(y.power_substitute(2).unwrap(), S::monomial(b, 0, 2, q(1)));
        // x^3 y^4 squared leaves the bounds entirely.
        let big = S::monomial(b, 3, 4, q(5));
        assert!(big.power_substitute(2).unwrap().is_zero_series());
        assert_eq!(y.power_substitute(0), Err(Error::NonPositivePower(0)));
        assert_eq!(y.power_substitute(-3), Err(Error::NonPositivePower(-3)));
    }

    #[test]
    fn coefficient_beyond_bounds_is_an_error() {
        let s = S::zero(small());
        assert_eq!(s.coefficient(1, 1).unwrap(), q(0));
        assert!(matches!(
            s.coefficient(5, 0),
            Err(Error::OutOfBounds { .. })
        ));
        assert!(matches!(
            s.coefficient(0, 7),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn count_rejects_fractions() {
        let b = small();
        let half = S::monomial(b, 1, 1, BigRational::new(1.into(), 2.into()));
        assert!(matches!(
            half.count("h", 1, 1),
            Err(Error::NotACount { .. })
        ));
        assert!(half.assert_counting("h").is_err());
        let neg = S::monomial(b, 1, 1, q(-1));
        assert!(neg.count("n", 1, 1).is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let b = small();
        let s = S::y(b).add(&S::monomial(b, 1, 2, q(1))).unwrap();
        let cube = s.mul(&s).unwrap().mul(&s).unwrap();
        assert_eq!(s.pow(3).unwrap(), cube);
        assert_eq!(s.pow(0).unwrap(), S::one(b));
    }
}
