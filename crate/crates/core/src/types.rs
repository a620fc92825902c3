//! Face types: the multiset of cell sizes of a dissection, which fixes the
//! face's polytope as a product of smaller associahedra.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, factorial};
use crate::error::{check_range, Error, Result};
use crate::facecount::FaceQuery;

/// Cell-size multiplicities `<3^m3 : 4^m4 : ...>` of a cluster.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeSignature {
    multiplicities: BTreeMap<u32, u32>,
}

impl TypeSignature {
    /// Builds a signature from cell sizes (each at least 3).
    pub fn from_cell_sizes<I: IntoIterator<Item = u32>>(sizes: I) -> Result<Self> {
        let mut multiplicities = BTreeMap::new();
        for s in sizes {
            check_range("cell size", s.into(), 3, i64::from(u32::MAX))?;
            *multiplicities.entry(s).or_insert(0) += 1;
        }
        if multiplicities.is_empty() {
            return Err(Error::EmptySignature);
        }
        Ok(TypeSignature { multiplicities })
    }

    /// Signature of a partition of `n - 1`: part `p` is a `(p+2)`-sided cell.
    pub fn from_partition(parts: &[u32]) -> Result<Self> {
        Self::from_cell_sizes(parts.iter().map(|p| p + 2))
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    pub fn cells(&self) -> u32 {
        self.multiplicities.values().sum()
    }

    /// Codimension `k = (sum m_i) - 1`.
    pub fn codim(&self) -> u32 {
        self.cells() - 1
    }

    /// Host associahedron index `n = 1 + sum (i-2) m_i`.
    pub fn host(&self) -> u32 {
        1 + self
            .multiplicities
            .iter()
            .map(|(i, m)| (i - 2) * m)
            .sum::<u32>()
    }

    pub fn polygon_sides(&self) -> u32 {
        self.host() + 1
    }

    /// Indices of the factors `K_j` of the face, largest first; an `i`-sided
    /// cell contributes `K_{i-1}`.
    pub fn factorization(&self) -> Vec<u32> {
        let mut f: Vec<u32> = self
            .multiplicities
            .iter()
            .flat_map(|(&i, &m)| std::iter::repeat_n(i - 1, m as usize))
            .collect();
        f.sort_unstable_by(|a, b| b.cmp(a));
        f
    }

    /// The factorization written out, e.g. `K5 x K2`.
    pub fn factorization_label(&self) -> String {
        self.factorization()
            .iter()
            .map(|j| format!("K{j}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

impl fmt::Display for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(i, m)| {
                if *m == 1 {
                    i.to_string()
                } else {
                    format!("{i}^{m}")
                }
            })
            .collect();
        write!(f, "<{}>", parts.join(":"))
    }
}

impl FromStr for TypeSignature {
    type Err = Error;

    /// Parses the bracket notation, e.g. `<3^2:4:6>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDissection(format!("cannot parse type signature {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(bad)?;
        let mut sizes = Vec::new();
        for part in inner.split(':') {
            let (size, mult) = match part.split_once('^') {
                Some((a, b)) => (a, b),
                None => (part, "1"),
            };
            let size: u32 = size.trim().parse().map_err(|_| bad())?;
            let mult: u32 = mult.trim().parse().map_err(|_| bad())?;
            sizes.extend(std::iter::repeat_n(size, mult as usize));
        }
        Self::from_cell_sizes(sizes)
    }
}

/// Partitions of `n` into exactly `k` positive parts, by
/// `p_k(n) = p_{k-1}(n-1) + p_k(n-k)`.
pub fn partition_count(n: i64, k: i64) -> Result<BigUint> {
    check_range("n", n, 1, 4096)?;
    check_range("k", k, 1, 4096)?;
    let (n, k) = (n as usize, k as usize);
    // table[j][m] = p_j(m)
    let mut table = vec![vec![BigUint::zero(); n + 1]; k + 1];
    table[0][0] = BigUint::one();
    for j in 1..=k {
        for m in j..=n {
            table[j][m] = &table[j - 1][m - 1] + &table[j][m - j];
        }
    }
    Ok(table[k][n].clone())
}

/// Partitions of `n` into exactly `k` parts, each written non-increasing,
/// in reverse lexicographic order.
pub fn partitions(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, slots: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if remaining < slots {
            return;
        }
        let top = max.min(remaining - (slots - 1));
        for first in (1..=top).rev() {
            if first * slots < remaining {
                break;
            }
            prefix.push(first);
            go(remaining - first, slots - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, n, &mut Vec::new(), &mut out);
    out
}

/// All types of codimension-`k` faces of `K_n`, one per partition of `n - 1`
/// into `k + 1` parts, in reverse lexicographic partition order.
pub fn type_signatures(n: i64, k: i64) -> Result<Vec<TypeSignature>> {
    let q = FaceQuery::new(n, k)?;
    partitions(q.n - 1, q.k + 1)
        .iter()
        .map(|p| TypeSignature::from_partition(p))
        .collect()
}

/// Faces of `K_n` having type `sig`:
/// `C(n+k, k)/(k+1) * (sum m_i)! / prod m_i!`.
pub fn type_face_count(sig: &TypeSignature) -> BigUint {
    let (n, k) = (i64::from(sig.host()), i64::from(sig.codim()));
    let mut count = binomial(n + k, k) * factorial(sig.cells().into());
    for m in sig.multiplicities.values() {
        count /= factorial((*m).into());
    }
    count / BigUint::from(sig.cells())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facecount::faces;

    fn sig(s: &str) -> TypeSignature {
        s.parse().unwrap()
    }

    #[test]
    fn partition_recurrence() {
        assert_eq!(partition_count(5, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(partition_count(9, 3).unwrap(), BigUint::from(7u32));
        for n in 1..20 {
            assert_eq!(partition_count(n, 1).unwrap(), BigUint::one());
            assert_eq!(partition_count(n, n + 1).unwrap(), BigUint::zero());
        }
        assert!(partition_count(0, 1).is_err());
        assert!(partition_count(3, 0).is_err());
    }

    #[test]
    fn partition_listing_matches_count() {
        for n in 1..=14u32 {
            for k in 1..=n {
                let list = partitions(n, k);
                assert_eq!(
                    BigUint::from(list.len()),
                    partition_count(n.into(), k.into()).unwrap()
                );
                assert!(
                    list.windows(2).all(|w| w[0] > w[1]),
                    "reverse lexicographic"
                );
                assert!(list
                    .iter()
                    .all(|p| p.iter().sum::<u32>() == n && p.len() == k as usize));
            }
        }
        assert_eq!(partitions(9, 3).len(), 7);
    }

    #[test]
    fn signatures_of_k6_facets() {
        let sigs = type_signatures(6, 1).unwrap();
        assert_eq!(sigs, vec![sig("<3:6>"), sig("<4:5>")]);
        assert_eq!(sigs[0].factorization_label(), "K5 x K2");
        assert_eq!(sigs[1].factorization_label(), "K4 x K3");
        assert_eq!(type_signatures(5, 2).unwrap(), vec![sig("<3^2:4>")]);
        for n in 2..10 {
            assert_eq!(
                type_signatures(n, 0).unwrap(),
                vec![TypeSignature::from_cell_sizes([n as u32 + 1]).unwrap()]
            );
        }
        assert!(type_signatures(5, 4).is_err());
    }

    #[test]
    fn per_type_counts() {
        assert_eq!(type_face_count(&sig("<3^2:4:6>")), BigUint::from(660u32));
        assert_eq!(type_face_count(&sig("<3^2:4>")), BigUint::from(21u32));
        assert_eq!(type_face_count(&sig("<9>")), BigUint::one());
        let s = sig("<3^2:4:6>");
        assert_eq!((s.host(), s.codim(), s.polygon_sides()), (9, 3, 10));
    }

    #[test]
    fn type_counts_sum_to_face_counts() {
        for n in 2..=12i64 {
            for k in 0..=n - 2 {
                let total: BigUint = type_signatures(n, k)
                    .unwrap()
                    .iter()
                    .map(type_face_count)
                    .sum();
                assert_eq!(total, faces(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn signature_text_round_trip() {
        let s = sig("<3^2:4:6>");
        assert_eq!(s.to_string(), "<3^2:4:6>");
        assert!("3:4".parse::<TypeSignature>().is_err());
        assert!("<2:4>".parse::<TypeSignature>().is_err());
        assert!(matches!(
            TypeSignature::from_cell_sizes([]),
            Err(Error::EmptySignature)
        ));
    }
}
