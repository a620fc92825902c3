//! Isotropy groups of classes under relabeling, found locally from the dual
//! tree: each non-central cell contributes at most one `Z2`, the center at
//! most one `Z2` or one dihedral factor.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dissect::{
    around_cell, child_codes, dual_tree, halves, tree_center, Center, Dissection, PlaneTree, Slot,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IsotropyDescriptor {
    pub z2_count: u32,
    /// `j` of a `D_j` factor acting on the central cell.
    pub dihedral_order: Option<u32>,
    #[serde(with = "crate::serde_big")]
    pub order: BigUint,
    /// Set when a rotational symmetry of the central cell had no matching
    /// reflection and was promoted to dihedral anyway.
    pub promoted_reflection: bool,
}

impl IsotropyDescriptor {
    fn new(z2_count: u32, dihedral_order: Option<u32>, promoted_reflection: bool) -> Self {
        let order = (BigUint::from(1u32) << z2_count) * dihedral_order.map_or(1u32, |j| 2 * j);
        IsotropyDescriptor {
            z2_count,
            dihedral_order,
            order,
            promoted_reflection,
        }
    }

    /// Group written as a product, e.g. `Z2^3 x D3`.
    pub fn structure(&self) -> String {
        let mut parts = Vec::new();
        match self.z2_count {
            0 => {}
            1 => parts.push("Z2".to_string()),
            z => parts.push(format!("Z2^{z}")),
        }
        if let Some(j) = self.dihedral_order {
            parts.push(format!("D{j}"));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" x ")
        }
    }
}

/// Parent cell of every cell when the tree is rooted at `roots`.
fn parents(t: &PlaneTree, roots: &[usize]) -> Vec<Option<usize>> {
    let mut parent = vec![None; t.cells().len()];
    let mut seen = vec![false; t.cells().len()];
    let mut queue = VecDeque::new();
    for &r in roots {
        seen[r] = true;
        queue.push_back(r);
    }
    while let Some(c) = queue.pop_front() {
        for o in t.cell_neighbours(c) {
            if !seen[o] {
                seen[o] = true;
                parent[o] = Some(c);
                queue.push_back(o);
            }
        }
    }
    if let [a, b] = roots {
        parent[*a] = Some(*b);
        parent[*b] = Some(*a);
    }
    parent
}

fn is_palindrome(codes: &[String]) -> bool {
    codes.iter().eq(codes.iter().rev())
}

pub fn isotropy_of_tree(t: &PlaneTree) -> IsotropyDescriptor {
    let center = tree_center(t);
    let roots: Vec<usize> = match center {
        Center::Cell(c) => vec![c],
        Center::Diagonal(a, b) => vec![a, b],
    };
    let parent = parents(t, &roots);
    let mut z2 = 0u32;
    for (c, p) in parent.iter().enumerate() {
        if let Some(p) = p {
            let slot = t
                .cell(c)
                .position(Slot::Cell(*p))
                .expect("parent is adjacent");
            if is_palindrome(&child_codes(t, c, slot)) {
                z2 += 1;
            }
        }
    }
    match center {
        Center::Diagonal(a, b) => {
            let (x, y) = halves(t, a, b);
            if x == y {
                z2 += 1;
            }
            IsotropyDescriptor::new(z2, None, false)
        }
        Center::Cell(c) => {
            let codes = around_cell(t, c);
            let d = codes.len();
            let rotations = (0..d)
                .filter(|&r| (0..d).all(|j| codes[(j + r) % d] == codes[j]))
                .count();
            let reflections = (0..d)
                .filter(|&r| (0..d).all(|j| codes[(r + d - j) % d] == codes[j]))
                .count();
            if rotations >= 2 {
                IsotropyDescriptor::new(z2, Some(rotations as u32), reflections == 0)
            } else {
                IsotropyDescriptor::new(z2 + reflections as u32, None, false)
            }
        }
    }
}

pub fn isotropy_group(rep: &Dissection) -> IsotropyDescriptor {
    isotropy_of_tree(&dual_tree(rep))
}

/// Faces of `K_{n-1}` in the class: `n 2^(k+1) / |group|`.
pub fn kappa_from_isotropy(n: usize, k: usize, g: &IsotropyDescriptor) -> Result<BigUint> {
    let numerator = BigUint::from(n) << (k + 1);
    if g.order.is_zero() {
        return Err(Error::NonDivisible {
            order: g.order.to_string(),
            numerator: numerator.to_string(),
        });
    }
    let (q, r) = numerator.div_rem(&g.order);
    if !r.is_zero() {
        return Err(Error::NonDivisible {
            order: g.order.to_string(),
            numerator: numerator.to_string(),
        });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dissect::{class_code, enumerate_classes};

    fn dis(n: usize, pairs: &[(usize, usize)]) -> Dissection {
        Dissection::new(n, pairs.iter().copied()).unwrap()
    }

    fn kappa(d: &Dissection) -> u64 {
        let g = isotropy_group(d);
        kappa_from_isotropy(d.sides(), d.k(), &g)
            .unwrap()
            .try_into()
            .unwrap()
    }

    #[test]
    fn octagon_with_two_ears() {
        let d = dis(8, &[(2, 4), (5, 7)]);
        let g = isotropy_group(&d);
        assert_eq!(
            (g.z2_count, g.dihedral_order, g.order.clone()),
            (3, None, BigUint::from(8u32))
        );
        assert_eq!(g.structure(), "Z2^3");
        assert_eq!(kappa(&d), 8);
    }

    #[test]
    fn nonagon_anchors() {
        let pinwheel = dis(9, &[(0, 3), (3, 6), (0, 6), (0, 2), (3, 5), (6, 8)]);
        let g = isotropy_group(&pinwheel);
        assert_eq!(g.structure(), "Z2^3 x D3");
        assert_eq!(g.order, BigUint::from(48u32));
        assert_eq!(kappa(&pinwheel), 24);

        let ears = dis(9, &[(0, 2), (2, 4), (4, 6)]);
        assert_eq!(isotropy_group(&ears).structure(), "Z2^4");
        assert_eq!(kappa(&ears), 9);

        let found = enumerate_classes(9, 5)
            .unwrap()
            .into_iter()
            .map(|r| isotropy_group(&r.representative))
            .any(|g| g.z2_count == 4 && g.dihedral_order.is_none());
        assert!(found, "a 9.5 class with group Z2^4 and kappa 36");
    }

    #[test]
    fn hexagon_triangulations() {
        let central = dis(6, &[(0, 2), (2, 4), (0, 4)]);
        assert_eq!(isotropy_group(&central).order, BigUint::from(48u32));
        assert_eq!(kappa(&central), 2);
        let fan = dis(6, &[(0, 2), (0, 3), (0, 4)]);
        assert_eq!(isotropy_group(&fan).order, BigUint::from(8u32));
        assert_eq!(kappa(&fan), 12);
    }

    #[test]
    fn undissected_polygon_is_dihedral() {
        for n in 3..12 {
            let g = isotropy_group(&Dissection::empty(n).unwrap());
            assert_eq!(g.dihedral_order, Some(n as u32));
            assert_eq!(g.order, BigUint::from(2 * n));
            assert!(!g.promoted_reflection);
        }
    }

    #[test]
    fn kappa_matches_classification_small() {
        for n in 3..=8 {
            for k in 0..=n - 3 {
                for r in enumerate_classes(n, k).unwrap() {
                    assert_eq!(kappa(&r.representative), r.kappa, "{}", r.label());
                }
            }
        }
    }

    #[test]
    fn same_group_across_a_class() {
        let d = dis(9, &[(0, 3), (3, 6), (0, 2)]);
        let g = isotropy_group(&d);
        for r in 0..9 {
            let turned = d.rotate(r).reflect();
            for &diag in turned.diagonals() {
                let e = turned.twist(diag).unwrap();
                assert_eq!(class_code(&e), class_code(&d));
                assert_eq!(isotropy_group(&e), g);
            }
        }
    }

    #[test]
    fn non_divisible_order_is_an_error() {
        let g = IsotropyDescriptor::new(0, Some(7), false);
        assert!(matches!(
            kappa_from_isotropy(6, 1, &g),
            Err(Error::NonDivisible { .. })
        ));
    }
}
