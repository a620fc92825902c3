//! Closed-form face counts of associahedra and of the real moduli space.
//!
//! Throughout, `K_n` is the associahedron of dimension `n - 2` whose
//! codimension-`k` faces are `(n+1)`-gons with `k` noncrossing diagonals.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::{binomial, double_factorial, factorial};
use crate::error::{check_range, Error, Result};

/// A face query on `K_n`: `2 <= n`, `0 <= k <= n - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceQuery {
    pub n: u32,
    pub k: u32,
}

impl FaceQuery {
    pub fn new(n: i64, k: i64) -> Result<Self> {
        check_range("n", n, 2, i64::from(u32::MAX))?;
        check_range("k", k, 0, n - 2)?;
        Ok(FaceQuery {
            n: n as u32,
            k: k as u32,
        })
    }
}

/// Number of codimension-`k` faces of `K_n`:
/// `C(n+k, k) C(n-2, k) / (k+1)`.
pub fn cayley_faces(q: FaceQuery) -> BigUint {
    let (n, k) = (i64::from(q.n), i64::from(q.k));
    binomial(n + k, k) * binomial(n - 2, k) / BigUint::from(q.k + 1)
}

/// Convenience form of [`cayley_faces`] taking raw integers.
pub fn faces(n: i64, k: i64) -> Result<BigUint> {
    FaceQuery::new(n, k).map(cayley_faces)
}

/// Vertices of `K_n`, i.e. `cayley_faces(n, n - 2) = C(2n-2, n-1)/n`.
///
/// This is the Catalan number usually written `C_{n-1}`; `catalan(5) = 14`
/// counts the vertices of the three-dimensional `K_5`.
pub fn catalan(n: i64) -> Result<BigUint> {
    check_range("n", n, 2, i64::from(u32::MAX))?;
    Ok(binomial(2 * n - 2, n - 1) / BigUint::from(n as u64))
}

/// Total number of faces of `K_n` over all codimensions (bracketings of `n`
/// letters with any number of brackets).
pub fn schroder(n: i64) -> Result<BigUint> {
    check_range("n", n, 2, i64::from(u32::MAX))?;
    (0..=n - 2).map(|k| faces(n, k)).sum()
}

/// Codimension-`k` faces of the moduli space with `n + 1` marked points:
/// `n!/2^(k+1)` times the faces of `K_n`.
pub fn moduli_faces(n: i64, k: i64) -> Result<BigUint> {
    let q = FaceQuery::new(n, k)?;
    let numerator = factorial(q.n.into()) * cayley_faces(q);
    let denominator = BigUint::one() << (q.k + 1);
    let (quot, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() {
        return Err(Error::NonDivisible {
            order: denominator.to_string(),
            numerator: numerator.to_string(),
        });
    }
    Ok(quot)
}

/// `(2n - 3)!!`: binary coupling schemes of `n` momenta, equal to the
/// vertex count of the moduli space with `n + 1` points.
pub fn binary_coupling_vertices(n: i64) -> Result<BigUint> {
    check_range("n", n, 2, i64::from(u32::MAX))?;
    Ok(double_factorial(2 * n - 3))
}
