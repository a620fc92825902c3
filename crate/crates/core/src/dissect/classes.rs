use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::code::{class_code, ClassCode};
use super::polygon::{for_each_dissection, Dissection};
use crate::error::Result;
use crate::types::TypeSignature;

/// One class of `k`-diagonal dissections of the `n`-gon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub code: ClassCode,
    pub n: usize,
    pub k: usize,
    /// 1-based index within `(n, k)`, in code order.
    pub i: usize,
    /// Smallest member under the diagonal-list order.
    pub representative: Dissection,
    /// Number of dissections (faces of `K_{n-1}`) in the class.
    pub kappa: u64,
    pub signature: TypeSignature,
}

impl ClassRecord {
    /// The label `n.k.i`.
    pub fn label(&self) -> String {
        format!("{}.{}.{}", self.n, self.k, self.i)
    }
}

/// Classifies every `k`-diagonal dissection of the `n`-gon by class code.
pub fn enumerate_classes(n: usize, k: usize) -> Result<Vec<ClassRecord>> {
    let mut buckets: BTreeMap<ClassCode, (Dissection, u64)> = BTreeMap::new();
    for_each_dissection(n, k, |d| {
        buckets
            .entry(class_code(d))
            .and_modify(|(rep, count)| {
                *count += 1;
                if d < rep {
                    *rep = d.clone();
                }
            })
            .or_insert_with(|| (d.clone(), 1));
    })?;
    Ok(buckets
        .into_iter()
        .enumerate()
        .map(|(idx, (code, (representative, kappa)))| ClassRecord {
            signature: representative.signature(),
            code,
            n,
            k,
            i: idx + 1,
            representative,
            kappa,
        })
        .collect())
}

/// Looks up a class by its `n.k.i` label.
pub fn class_by_label(label: &str) -> Option<ClassRecord> {
    let parts: Vec<usize> = label
        .split('.')
        .map(|p| p.parse().ok())
        .collect::<Option<_>>()?;
    let [n, k, i] = parts[..] else { return None };
    enumerate_classes(n, k).ok()?.into_iter().find(|r| r.i == i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kappas(n: usize, k: usize) -> Vec<u64> {
        let mut v: Vec<u64> = enumerate_classes(n, k)
            .unwrap()
            .iter()
            .map(|r| r.kappa)
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn hexagon_classes() {
        assert_eq!(kappas(6, 3), vec![2, 12]);
        assert_eq!(kappas(6, 1), vec![3, 6]);
        assert_eq!(kappas(6, 0), vec![1]);
    }

    #[test]
    fn decagon_vertex_classes() {
        let classes = enumerate_classes(10, 6).unwrap();
        assert_eq!(classes.len(), 52);
        assert_eq!(classes.iter().map(|r| r.kappa).sum::<u64>(), 5005);
    }

    #[test]
    fn labels_and_lookup() {
        let classes = enumerate_classes(7, 2).unwrap();
        assert!(classes.iter().enumerate().all(|(j, r)| r.i == j + 1));
        assert!(classes.windows(2).all(|w| w[0].code < w[1].code));
        let r = &classes[1];
        assert_eq!(r.label(), "7.2.2");
        assert_eq!(class_by_label("7.2.2").as_ref(), Some(r));
        assert_eq!(class_by_label("7.2"), None);
        assert_eq!(class_by_label("7.9.1"), None);
    }
}
