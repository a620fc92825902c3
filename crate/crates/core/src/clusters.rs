//! Generating functions for clusters: dissected polygons redrawn so that
//! every region is a bare cell.
//!
//! In every series `x` marks cells and `y` marks outside edges.
//!
//! * `A`: clusters rooted at an outside edge, up to twisting. The root edge
//!   is not counted in `y`; the empty cluster contributes the bare term `y`.
//! * `V`: the same without twisting (plain dissections of a rooted polygon).
//! * `B`: clusters rooted at a cell, up to the dihedral group of that cell.
//! * `C`: clusters rooted at an inside edge whose two halves differ.
//! * `F = B - C`: free clusters; `f[k+1, n+1]` counts the classes of
//!   codimension-`k` faces of `K_n`.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::polya::{dihedral_cycle_index, Substituter};
use crate::scalar::Scalar;
use crate::series::{Bivariate, Bounds, TruncatedSeries};

fn half<T: Scalar>() -> T {
    T::one() / T::from_u8(2).expect("2 is representable")
}

fn iteration_limit(bounds: Bounds) -> usize {
    bounds.max_cell as usize + 2
}

/// Iterates `next = rhs(current)` from `start` until two passes agree.
///
/// Every right-hand side used here carries a factor `x`, so each pass fixes
/// at least one more `x`-degree.
fn fixed_point<T: Scalar>(
    series: &'static str,
    start: Bivariate<T>,
    rhs: impl Fn(&Bivariate<T>) -> Result<Bivariate<T>>,
) -> Result<Bivariate<T>> {
    let limit = iteration_limit(start.bounds_pair());
    let mut current = start;
    for _ in 0..limit {
        let next = rhs(&current)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    Err(Error::NonConvergence {
        series,
        iterations: limit,
    })
}

/// Outside-edge rooted clusters up to twisting:
/// `A = y + (x/2) [A^2/(1-A) + (1+A) A2/(1-A2)]` with `A2 = A(x^2, y^2)`.
pub fn compute_a<T: Scalar>(bounds: Bounds) -> Result<Bivariate<T>> {
    let x = Bivariate::<T>::x(bounds);
    let y = Bivariate::<T>::y(bounds);
    let one = Bivariate::<T>::one(bounds);
    let half = half::<T>();
    fixed_point("A", y.clone(), |a| {
        let a2 = a.power_substitute(2)?;
        let chains = a.mul(a)?.mul(&a.geom_reciprocal()?)?;
        let pairs = one.add(a)?.mul(&a2)?.mul(&a2.geom_reciprocal()?)?;
        y.add(&x.mul(&chains.add(&pairs)?)?.scale(&half))
    })
}

/// Closed form `(1/m) C(n-2, m-1) C(m+n-1, n)` for the untwisted series.
pub fn v_closed_form(m: u32, n: u32) -> BigUint {
    match (m, n) {
        (0, 1) => BigUint::one(),
        (0, _) => BigUint::default(),
        _ => {
            let (m, n) = (i64::from(m), i64::from(n));
            binomial(n - 2, m - 1) * binomial(m + n - 1, n) / BigUint::from(m as u64)
        }
    }
}

/// Outside-edge rooted clusters without twisting: `V = y + x V^2/(1-V)`.
///
/// For exact scalars every coefficient is checked against
/// [`v_closed_form`]; a mismatch is a hard error.
pub fn compute_v<T: Scalar>(bounds: Bounds) -> Result<Bivariate<T>> {
    let x = Bivariate::<T>::x(bounds);
    let y = Bivariate::<T>::y(bounds);
    let v = fixed_point("V", y.clone(), |v| {
        y.add(&x.mul(&v.mul(v)?.mul(&v.geom_reciprocal()?)?)?)
    })?;
    if T::EXACT {
        for m in 0..=bounds.max_cell {
            for n in 0..=bounds.max_edge {
                let computed = v.coefficient(m, n)?;
                let expected = v_closed_form(m, n);
                if computed.to_integer() != Some(expected.clone().into()) {
                    return Err(Error::ClosedFormMismatch {
                        series: "V",
                        exponents: vec![m, n],
                        computed: format!("{computed:?}"),
                        expected: expected.to_string(),
                    });
                }
            }
        }
    }
    Ok(v)
}

/// Cell-rooted clusters: `B = x sum_{k>=3} Z(D_k; A)`.
///
/// A `k`-sided root cell has `y`-degree at least `k`, so the sum stops at
/// `k = max_edge`.
pub fn compute_b<T: Scalar>(a: &Bivariate<T>) -> Result<Bivariate<T>> {
    let bounds = a.bounds_pair();
    let mut subst = Substituter::new(a.clone());
    let mut sum = a.zero_like();
    for k in 3..=i64::from(bounds.max_edge) {
        let z = dihedral_cycle_index(k)?;
        sum = sum.add(&subst.apply::<T>(&z)?)?;
    }
    Bivariate::x(bounds).mul(&sum)
}

/// Inside-edge rooted clusters with distinct halves:
/// `C = ((A - y)^2 - (A2 - y^2)) / 2`.
pub fn compute_c<T: Scalar>(a: &Bivariate<T>) -> Result<Bivariate<T>> {
    let bounds = a.bounds_pair();
    let y = Bivariate::<T>::y(bounds);
    let nonempty = a.sub(&y)?;
    let nonempty_sq = a.power_substitute(2)?.sub(&y.power_substitute(2)?)?;
    let c = nonempty.mul(&nonempty)?.sub(&nonempty_sq)?.scale(&half());
    check_nonnegative("C", &c)?;
    Ok(c)
}

/// Free clusters by the dissymmetry relation `F = B - C`.
pub fn compute_f<T: Scalar>(b: &Bivariate<T>, c: &Bivariate<T>) -> Result<Bivariate<T>> {
    let f = b.sub(c)?;
    check_nonnegative("F", &f)?;
    Ok(f)
}

fn check_nonnegative<T: Scalar>(series: &'static str, s: &Bivariate<T>) -> Result<()> {
    if let Some(((m, n), c)) = s.terms().find(|(_, c)| c.is_negative_value()) {
        return Err(Error::NotACount {
            series,
            exponents: vec![m, n],
            value: format!("{c:?}"),
        });
    }
    Ok(())
}

/// The five cluster series at common bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterSeriesSet<T> {
    pub a: Bivariate<T>,
    pub v: Bivariate<T>,
    pub b: Bivariate<T>,
    pub c: Bivariate<T>,
    pub f: Bivariate<T>,
    pub bounds: Bounds,
}

impl<T: Scalar> ClusterSeriesSet<T> {
    /// Computes all five series in dependency order. With exact scalars,
    /// every coefficient is asserted to be a nonnegative integer.
    pub fn compute(bounds: Bounds) -> Result<Self> {
        let a = compute_a::<T>(bounds)?;
        let v = compute_v::<T>(bounds)?;
        let b = compute_b(&a)?;
        let c = compute_c(&a)?;
        let f = compute_f(&b, &c)?;
        let set = ClusterSeriesSet {
            a,
            v,
            b,
            c,
            f,
            bounds,
        };
        if T::EXACT {
            for (name, s) in set.named() {
                s.assert_counting(name)?;
            }
        }
        Ok(set)
    }

    pub fn named(&self) -> [(&'static str, &Bivariate<T>); 5] {
        [
            ("A", &self.a),
            ("V", &self.v),
            ("B", &self.b),
            ("C", &self.c),
            ("F", &self.f),
        ]
    }
}

impl ClusterSeriesSet<BigRational> {
    /// Number of classes of codimension-`k` faces of `K_n`: `f[k+1, n+1]`.
    pub fn class_count(&self, n: u32, k: u32) -> Result<BigUint> {
        let v = self.f.count("F", k + 1, n + 1)?;
        Ok(v.to_biguint().expect("counts are nonnegative"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    fn small() -> Bounds {
        Bounds::new(6, 8)
    }

    fn at(s: &Bivariate<BigRational>, m: u32, n: u32) -> BigInt {
        s.count("s", m, n).unwrap()
    }

    #[test]
    fn a_small_coefficients() {
        let a = compute_a::<BigRational>(small()).unwrap();
        assert_eq!(at(&a, 0, 1), 1.into());
        assert_eq!(at(&a, 1, 2), 1.into());
        assert_eq!(at(&a, 2, 4), 3.into());
        assert_eq!(at(&a, 3, 4), 2.into());
        // A = y + x y^2 + ..., so A^2 has 2 x y^3 from the cross term.
        let sq = a.mul(&a).unwrap();
        assert_eq!(at(&sq, 1, 3), 2.into());
        // 1/(1-A) picks up y^2 only from A^2.
        assert_eq!(at(&a.geom_reciprocal().unwrap(), 0, 2), 1.into());
    }

    #[test]
    fn v_matches_closed_form() {
        let v = compute_v::<BigRational>(small()).unwrap();
        assert_eq!(at(&v, 2, 4), 5.into());
        assert_eq!(at(&v, 3, 5), 21.into());
        for n in 2..=8 {
            assert_eq!(at(&v, 1, n), 1.into());
        }
    }

    #[test]
    fn c_examples() {
        let a = compute_a::<BigRational>(small()).unwrap();
        let c = compute_c(&a).unwrap();
        assert_eq!(at(&c, 2, 4), 0.into());
        assert_eq!(at(&c, 2, 5), 1.into());
        for n in 0..=8 {
            assert_eq!(at(&c, 0, n), 0.into());
            assert_eq!(at(&c, 1, n), 0.into());
        }
    }

    #[test]
    fn f_examples_and_feasibility() {
        let set = ClusterSeriesSet::<BigRational>::compute(Bounds::new(8, 10)).unwrap();
        assert_eq!(at(&set.f, 4, 6), 2.into());
        assert_eq!(at(&set.f, 3, 6), 3.into());
        assert_eq!(at(&set.f, 7, 10), 52.into());
        assert_eq!(at(&set.b, 1, 3), 1.into());
        assert_eq!(at(&set.b, 3, 6), 7.into());
        assert_eq!(at(&set.b, 6, 8), 14.into());
        assert_eq!(at(&set.b, 4, 6), 4.into());
        for m in 0..=8 {
            for n in 0..=10 {
                if m >= 1 && n >= 3 && m + 2 <= n {
                    continue;
                }
                assert_eq!(at(&set.f, m, n), 0.into(), "f[{m},{n}]");
                if !(m == 0 && n == 1) && !(m >= 1 && m < n) {
                    assert_eq!(at(&set.a, m, n), 0.into(), "a[{m},{n}]");
                }
            }
        }
        assert_eq!(set.class_count(5, 3).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn scalar_flavours_agree() {
        let bounds = Bounds::new(5, 7);
        let exact = compute_a::<BigRational>(bounds).unwrap();
        let small = compute_a::<Ratio<i64>>(bounds).unwrap();
        let float = compute_a::<f64>(bounds).unwrap();
        for m in 0..=5 {
            for n in 0..=7 {
                let e = exact.coefficient(m, n).unwrap();
                let expected = e.to_integer();
                assert_eq!(
                    BigInt::from(small.coefficient(m, n).unwrap().to_integer()),
                    expected
                );
                let f = float.coefficient(m, n).unwrap();
                assert!((f - num_traits::ToPrimitive::to_f64(&e).unwrap()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn nonconvergence_is_reported() {
        // Without the x factor the right-hand side never stabilises in x.
        let bounds = Bounds::new(2, 2);
        let y = Bivariate::<BigRational>::y(bounds);
        let x = Bivariate::<BigRational>::x(bounds);
        let err = fixed_point("bad", y, |s| s.add(&x)).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { series: "bad", .. }));
    }
}
