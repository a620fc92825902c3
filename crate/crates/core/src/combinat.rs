//! Small exact integer helpers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)`, zero when `k > n` or either argument is negative.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n as u64), BigUint::from(k as u64))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `n!! = n (n-2) (n-4) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = n;
    while i > 1 {
        acc *= i as u64;
        i -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(6), BigUint::from(720u32));
        assert_eq!(double_factorial(9), BigUint::from(945u32));
        assert_eq!(double_factorial(-1), BigUint::one());
        assert_eq!(double_factorial(1), BigUint::one());
    }
}
