//! Homeomorphically irreducible trees (no vertex of degree two): unlabeled
//! counts by degree partition, leaf-labeled counts, and the bracketing
//! numbers that sit inside the cluster series.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::clusters::compute_a;
use crate::combinat::binomial;
use crate::error::{check_range, Error, Result};
use crate::facecount::FaceQuery;
use crate::polya::{symmetric_cycle_index, Substituter};
use crate::scalar::Scalar;
use crate::series::{Bounds, Multivariate, TruncatedSeries};

/// Vertex count `m`, leaf count `m1` and counts `m_i` of internal vertices
/// of each degree `i >= 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreePartition {
    pub m: u32,
    pub m1: u32,
    pub mi: BTreeMap<u32, u32>,
}

impl DegreePartition {
    pub fn new(m1: u32, mi: BTreeMap<u32, u32>) -> Result<Self> {
        if let Some((&d, _)) = mi.iter().find(|(&d, &c)| d < 3 && c > 0) {
            return Err(Error::OutOfRange {
                name: "degree",
                value: d.into(),
                expected: ">= 3".into(),
            });
        }
        let mi: BTreeMap<u32, u32> = mi.into_iter().filter(|&(_, c)| c > 0).collect();
        let m = m1 + mi.values().sum::<u32>();
        let degree_sum = m1 + mi.iter().map(|(d, c)| d * c).sum::<u32>();
        if m < 2 || degree_sum != 2 * (m - 1) {
            return Err(Error::OutOfRange {
                name: "degree sum",
                value: degree_sum.into(),
                expected: format!("2(m - 1) with m = {m} >= 2"),
            });
        }
        Ok(DegreePartition { m, m1, mi })
    }

    /// Degree sequence of a tree, or `None` if it has a vertex of degree 2
    /// or is not a tree on at least two vertices.
    pub fn from_degrees(degrees: impl IntoIterator<Item = u32>) -> Option<Self> {
        let mut m1 = 0;
        let mut mi = BTreeMap::new();
        for d in degrees {
            match d {
                1 => m1 += 1,
                0 | 2 => return None,
                _ => *mi.entry(d).or_insert(0) += 1,
            }
        }
        Self::new(m1, mi).ok()
    }
}

impl fmt::Display for DegreePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: t1^{}", self.m, self.m1)?;
        for (d, c) in &self.mi {
            write!(f, " t{d}^{c}")?;
        }
        Ok(())
    }
}

fn variable_names(max_vertices: u32) -> Vec<String> {
    let mut names = vec!["x".to_string(), "t1".to_string()];
    names.extend((3..max_vertices).map(|d| format!("t{d}")));
    names
}

/// `h_d[P]` for `d = 0..=top`.
fn symmetric_powers<T: Scalar>(p: &Multivariate<T>, top: u32) -> Result<Vec<Multivariate<T>>> {
    let mut subst = Substituter::new(p.clone());
    (0..=top)
        .map(|d| subst.apply::<T>(&symmetric_cycle_index(d.into())?))
        .collect()
}

/// The three tree series at a common truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct HiTreeSeries<T> {
    /// Planted trees, rooted at a vertex with one edge reserved for the parent.
    pub p: Multivariate<T>,
    /// Vertex-rooted trees.
    pub r: Multivariate<T>,
    /// Free trees.
    pub h: Multivariate<T>,
}

/// Solves `P = x(t1 + sum_d t_d h_{d-1}[P])`, then
/// `R = x(t1 P + sum_d t_d h_d[P])` and `H = R - (P^2 - P(v^2))/2`.
///
/// `x` counts vertices, `t1` leaves and `t_d` vertices of degree `d`; degrees
/// run up to `max_vertices - 1`.
pub fn hi_tree_series_generic<T: Scalar>(max_vertices: u32) -> Result<HiTreeSeries<T>> {
    check_range("maxVertices", max_vertices.into(), 1, 64)?;
    let names = variable_names(max_vertices);
    let bounds = vec![max_vertices; names.len()];
    let zero = Multivariate::<T>::zero(names, bounds);
    let x = zero.variable("x");
    let t1 = zero.variable("t1");
    let top = max_vertices.saturating_sub(1);
    let limit = max_vertices as usize + 2;

    let mut p = zero.clone();
    let mut converged = false;
    for _ in 0..limit {
        let h = symmetric_powers(&p, top.saturating_sub(1))?;
        let mut inner = t1.clone();
        for d in 3..=top {
            inner = inner.add(&zero.variable(&format!("t{d}")).mul(&h[d as usize - 1])?)?;
        }
        let next = x.mul(&inner)?;
        if next == p {
            converged = true;
            break;
        }
        p = next;
    }
    if !converged {
        return Err(Error::NonConvergence {
            series: "P",
            iterations: limit,
        });
    }

    let h = symmetric_powers(&p, top)?;
    let mut inner = t1.mul(&p)?;
    for d in 3..=top {
        inner = inner.add(&zero.variable(&format!("t{d}")).mul(&h[d as usize])?)?;
    }
    let r = x.mul(&inner)?;
    let two = T::one() + T::one();
    let asymmetric = p
        .mul(&p)?
        .sub(&p.power_substitute(2)?)?
        .scale(&(T::one() / two));
    let free = r.sub(&asymmetric)?;
    Ok(HiTreeSeries { p, r, h: free })
}

/// Exact free-tree series `H`.
pub fn hi_tree_series(max_vertices: u32) -> Result<Multivariate<BigRational>> {
    Ok(hi_tree_series_generic::<BigRational>(max_vertices)?.h)
}

/// Reads the coefficients of `h` as counts per degree partition.
pub fn degree_partition_counts(
    h: &Multivariate<BigRational>,
) -> Result<BTreeMap<DegreePartition, BigUint>> {
    let names = h.variables();
    let mut out = BTreeMap::new();
    for (exps, c) in h.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NotACount {
                series: "H",
                exponents: exps.clone(),
                value: c.to_string(),
            });
        }
        let mut mi = BTreeMap::new();
        for (name, &e) in names.iter().zip(exps).skip(2) {
            let d: u32 = name[1..].parse().expect("variables are t<d>");
            mi.insert(d, e);
        }
        let part = DegreePartition::new(exps[1], mi)?;
        if part.m != exps[0] {
            return Err(Error::NotACount {
                series: "H",
                exponents: exps.clone(),
                value: c.to_string(),
            });
        }
        out.insert(
            part,
            c.to_integer().to_biguint().expect("checked nonnegative"),
        );
    }
    Ok(out)
}

/// Dual trees of codimension-`k` faces of `K_n`: `n + 1` leaves (the polygon
/// sides) and `k + 1` internal vertices, so `m = n + k + 2` vertices.
pub fn trees_for_face_census(n: i64, k: i64) -> Result<BTreeMap<DegreePartition, BigUint>> {
    let q = FaceQuery::new(n, k)?;
    let m = q.n + q.k + 2;
    let counts = degree_partition_counts(&hi_tree_series(m)?)?;
    Ok(counts
        .into_iter()
        .filter(|(p, _)| p.m == m && p.m1 == q.n + 1 && p.mi.values().sum::<u32>() == q.k + 1)
        .collect())
}

/// Leaf-labeled irreducible trees with `n` leaves:
/// `T_n = (2-n) T_{n-1} + sum_{i=1}^{n-2} T_{i+1} T_{n-i} C(n-1, i)`.
pub fn phylo_count(n: i64) -> Result<BigUint> {
    check_range("n", n, 1, 4096)?;
    let n = n as usize;
    let mut t = vec![BigInt::zero(), BigInt::one(), BigInt::one()];
    for j in 3..=n {
        let mut v = BigInt::from(2 - j as i64) * &t[j - 1];
        for i in 1..=j - 2 {
            v += &t[i + 1] * &t[j - i] * BigInt::from(binomial(j as i64 - 1, i as i64));
        }
        t.push(v);
    }
    Ok(t[n].to_biguint().expect("tree counts are nonnegative"))
}

/// Rooted leaf-labeled trees with `n` leaves, `P_n = T_{n+1}`.
pub fn rooted_phylo_count(n: i64) -> Result<BigUint> {
    check_range("n", n, 1, 4095)?;
    phylo_count(n + 1)
}

/// Ways of using `k` brackets on `n` commuting variables: `a_{k+1, n}`.
pub fn brackets_on_commuting(k: i64, n: i64) -> Result<BigUint> {
    check_range("n", n, 1, 64)?;
    check_range("k", k, 0, 63)?;
    let bounds = Bounds::new((k + 1) as u32, n as u32);
    let a = compute_a::<BigRational>(bounds)?;
    let v = a.count("A", (k + 1) as u32, n as u32)?;
    Ok(v.to_biguint().expect("counts are nonnegative"))
}

/// Binary bracketings of `n` commuting variables, `w_n = a_{n-1, n}`.
pub fn wedderburn(n: i64) -> Result<BigUint> {
    check_range("n", n, 2, 64)?;
    brackets_on_commuting(n - 2, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(h: &Multivariate<BigRational>, exps: &[(&str, u32)]) -> BigRational {
        let mut e = vec![0; h.arity()];
        for (name, v) in exps {
            e[h.variable_index(name).unwrap()] = *v;
        }
        h.coefficient(&e).unwrap()
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn small_trees() {
        let h = hi_tree_series(7).unwrap();
        assert_eq!(count(&h, &[("x", 4), ("t1", 3), ("t3", 1)]), int(1));
        assert_eq!(count(&h, &[("x", 6), ("t1", 4), ("t3", 2)]), int(1));
        assert_eq!(count(&h, &[("x", 2), ("t1", 2)]), int(1));
        assert!(h.terms().all(|(e, _)| e[0] != 3));
        assert!(h.terms().all(|(_, c)| c.is_integer() && c.is_positive()));
    }

    #[test]
    fn partitions_validate_handshake() {
        let star = DegreePartition::from_degrees([1, 1, 1, 3]).unwrap();
        assert_eq!(star.to_string(), "4: t1^3 t3^1");
        assert!(DegreePartition::from_degrees([1, 2, 1]).is_none());
        assert!(DegreePartition::from_degrees([1, 1, 1, 1]).is_none());
        assert!(DegreePartition::new(2, BTreeMap::from([(2, 1)])).is_err());
    }

    #[test]
    fn face_census_trees() {
        let census = trees_for_face_census(8, 2).unwrap();
        let key = DegreePartition::new(9, BTreeMap::from([(4, 2), (5, 1)])).unwrap();
        assert_eq!(census[&key], BigUint::from(2u32));
        let star = trees_for_face_census(6, 0).unwrap();
        assert_eq!(star.len(), 1);
        assert_eq!(star.values().next().unwrap(), &BigUint::one());
        let k5 = trees_for_face_census(5, 3).unwrap();
        assert_eq!(k5.values().sum::<BigUint>(), BigUint::from(2u32));
        assert!(trees_for_face_census(5, 4).is_err());
    }

    #[test]
    fn phylogenies() {
        let t: Vec<u64> = (1..=7)
            .map(|n| phylo_count(n).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(t, vec![1, 1, 1, 4, 26, 236, 2752]);
        assert_eq!(rooted_phylo_count(3).unwrap(), BigUint::from(4u32));
        assert_eq!(rooted_phylo_count(1).unwrap(), BigUint::one());
        assert!(phylo_count(0).is_err());
    }

    #[test]
    fn bracketings() {
        assert_eq!(wedderburn(4).unwrap(), BigUint::from(2u32));
        assert_eq!(wedderburn(5).unwrap(), BigUint::from(3u32));
        assert_eq!(wedderburn(6).unwrap(), BigUint::from(6u32));
        assert_eq!(brackets_on_commuting(1, 4).unwrap(), BigUint::from(3u32));
        assert!(wedderburn(1).is_err());
    }
}
