//! Coefficient types accepted by the series and cycle-index machinery.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// A coefficient field for truncated series.
///
/// Exact work uses [`BigRational`]; `Ratio<i64>` is handy for small property
/// tests and `f64`/`f32` give quick floating approximations of the same
/// generating functions.
pub trait Scalar: Num + Clone + PartialEq + Debug + FromPrimitive {
    /// Whether arithmetic is exact, so integrality of counts can be asserted.
    const EXACT: bool;

    /// Converts an exact rational (a cycle-index weight) into this scalar.
    fn from_rational(r: &BigRational) -> Self;

    /// The integer value of `self`, if it is exactly an integer.
    fn to_integer(&self) -> Option<BigInt>;

    fn is_negative_value(&self) -> bool;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| Ratio::to_integer(self))
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;

    fn from_rational(r: &BigRational) -> Self {
        let numer = r
            .numer()
            .to_i64()
            .expect("cycle-index numerator fits in i64");
        let denom = r
            .denom()
            .to_i64()
            .expect("cycle-index denominator fits in i64");
        Ratio::new(numer, denom)
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer()
            .then(|| BigInt::from(Ratio::to_integer(self)))
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_rational(r: &BigRational) -> Self {
                r.to_f64().expect("finite rational") as $t
            }

            fn to_integer(&self) -> Option<BigInt> {
                if self.is_finite() && self.fract().is_zero() {
                    BigInt::from_f64(*self as f64)
                } else {
                    None
                }
            }

            fn is_negative_value(&self) -> bool {
                *self < 0.0
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrality_detection() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(Scalar::to_integer(&half), None);
        let six = BigRational::from_integer(6.into());
        assert_eq!(Scalar::to_integer(&six), Some(BigInt::from(6)));
        assert_eq!(
            Scalar::to_integer(&Ratio::new(9i64, 3)),
            Some(BigInt::from(3))
        );
        assert_eq!(Scalar::to_integer(&2.5f64), None);
        assert_eq!(Scalar::to_integer(&-4.0f64), Some(BigInt::from(-4)));
    }

    #[test]
    fn rational_conversion() {
        let r = BigRational::new(1.into(), 8.into());
        assert_eq!(<f64 as Scalar>::from_rational(&r), 0.125);
        assert_eq!(<Ratio<i64> as Scalar>::from_rational(&r), Ratio::new(1, 8));
    }
}
