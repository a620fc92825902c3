//! Brute-force reference enumerations, independent of the generating
//! functions they are compared against.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;

use crate::dissect::{
    cell_rooted_code, diagonal_rooted_code, dual_tree, for_each_dissection, halves,
    side_rooted_code, Slot,
};
use crate::error::Result;
use crate::hitrees::DegreePartition;
use crate::types::TypeSignature;

type Adjacency = Vec<Vec<usize>>;

fn rooted_ahu(adj: &Adjacency, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_ahu(adj, w, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// One or two central vertices, by repeatedly stripping leaves.
fn centers(adj: &Adjacency) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn free_tree_code(adj: &Adjacency) -> String {
    match centers(adj).as_slice() {
        [c] => rooted_ahu(adj, *c, None),
        [a, b] => {
            let x = rooted_ahu(adj, *a, Some(*b));
            let y = rooted_ahu(adj, *b, Some(*a));
            if x <= y {
                format!("{x}{y}")
            } else {
                format!("{y}{x}")
            }
        }
        _ => unreachable!(),
    }
}

/// All unlabeled trees with exactly `m` vertices, grown by leaf addition and
/// deduplicated by center-rooted canonical codes.
pub fn unlabeled_trees(m: usize) -> Vec<Adjacency> {
    let mut level: Vec<Adjacency> = vec![vec![vec![]]];
    for _ in 1..m {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.len() {
                let mut u = t.clone();
                let w = u.len();
                u.push(vec![v]);
                u[v].push(w);
                if seen.insert(free_tree_code(&u)) {
                    next.push(u);
                }
            }
        }
        level = next;
    }
    level
}

/// Irreducible trees with at most `max_vertices` vertices, counted by
/// degree partition.
pub fn hi_trees_by_partition(max_vertices: usize) -> BTreeMap<DegreePartition, BigUint> {
    let mut out = BTreeMap::new();
    for m in 2..=max_vertices {
        for t in unlabeled_trees(m) {
            if let Some(p) = DegreePartition::from_degrees(t.iter().map(|a| a.len() as u32)) {
                *out.entry(p).or_insert_with(BigUint::default) += 1u32;
            }
        }
    }
    out
}

/// A tree whose first `leaves` vertices are the labeled leaves `0..leaves`.
#[derive(Clone)]
struct LabeledTree {
    leaves: usize,
    adj: Adjacency,
}

impl LabeledTree {
    fn edge() -> Self {
        LabeledTree {
            leaves: 2,
            adj: vec![vec![1], vec![0]],
        }
    }

    /// Inserts leaf `leaves` (shifting internal vertices up by one) and
    /// returns its index.
    fn with_new_leaf(&self) -> (LabeledTree, usize) {
        let l = self.leaves;
        let shift = |v: usize| if v >= l { v + 1 } else { v };
        let mut adj: Adjacency = Vec::with_capacity(self.adj.len() + 1);
        adj.extend(
            self.adj[..l]
                .iter()
                .map(|a| a.iter().map(|&v| shift(v)).collect()),
        );
        adj.push(vec![]);
        adj.extend(
            self.adj[l..]
                .iter()
                .map(|a| a.iter().map(|&v| shift(v)).collect()),
        );
        (LabeledTree { leaves: l + 1, adj }, l)
    }

    fn attach(&self, internal: usize) -> LabeledTree {
        let (mut t, leaf) = self.with_new_leaf();
        let v = internal + 1;
        t.adj[v].push(leaf);
        t.adj[leaf].push(v);
        t
    }

    fn subdivide(&self, a: usize, b: usize) -> LabeledTree {
        let (mut t, leaf) = self.with_new_leaf();
        let shift = |v: usize| if v >= self.leaves { v + 1 } else { v };
        let (a, b) = (shift(a), shift(b));
        let mid = t.adj.len();
        t.adj.push(vec![a, b, leaf]);
        t.adj[leaf].push(mid);
        for (x, y) in [(a, b), (b, a)] {
            let slot = t.adj[x].iter().position(|&w| w == y).unwrap();
            t.adj[x][slot] = mid;
        }
        t
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, a) in self.adj.iter().enumerate() {
            out.extend(a.iter().filter(|&&w| v < w).map(|&w| (v, w)));
        }
        out
    }

    fn side_mask(&self, v: usize, parent: usize) -> u64 {
        let own = if v < self.leaves { 1u64 << v } else { 0 };
        self.adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .fold(own, |m, &w| m | self.side_mask(w, v))
    }

    /// Edge splits, each normalised to the side without leaf 0.
    fn splits(&self) -> Vec<u64> {
        let full = (1u64 << self.leaves) - 1;
        let mut s: Vec<u64> = self
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let m = self.side_mask(b, a);
                if m & 1 == 1 {
                    full ^ m
                } else {
                    m
                }
            })
            .collect();
        s.sort_unstable();
        s
    }
}

fn grow_labeled(n: usize, binary_only: bool) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut level = vec![LabeledTree::edge()];
    for _ in 3..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            let mut children: Vec<LabeledTree> = t
                .edges()
                .into_iter()
                .map(|(a, b)| t.subdivide(a, b))
                .collect();
            if !binary_only {
                children.extend((t.leaves..t.adj.len()).map(|v| t.attach(v)));
            }
            for c in children {
                if seen.insert(c.splits()) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level.len()
}

/// Leaf-labeled irreducible trees with `n` leaves, by leaf insertion.
pub fn leaf_labeled_hi_trees(n: usize) -> usize {
    grow_labeled(n, false)
}

/// Leaf-labeled trees with `n` leaves whose internal vertices all have
/// degree three.
pub fn leaf_labeled_binary_trees(n: usize) -> usize {
    grow_labeled(n, true)
}

/// Rooted leaf-labeled binary trees with `n` leaves, counted as unrooted
/// binary trees with the root as an extra labeled leaf.
pub fn rooted_leaf_labeled_binary_trees(n: usize) -> usize {
    grow_labeled(n + 1, true)
}

/// Unlabeled binary bracketings of `n` commuting letters from
/// `W = x + (W^2 + W(x^2)) / 2`.
pub fn wedderburn_recurrence(n: usize) -> BigUint {
    let mut w = vec![BigUint::default(), BigUint::from(1u32)];
    for j in 2..=n {
        let mut twice: BigUint = (1..j).map(|i| &w[i] * &w[j - i]).sum();
        if j % 2 == 0 {
            twice += &w[j / 2];
        }
        w.push(twice / 2u32);
    }
    w[n].clone()
}

/// Distinct rooted clusters among all `k`-diagonal dissections of the
/// `sides`-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootedClusterCounts {
    /// Rooted at an outside edge: `a_{k+1, sides-1}`.
    pub edge_rooted: usize,
    /// Rooted at a cell: `b_{k+1, sides}`.
    pub cell_rooted: usize,
    /// Rooted at an inside edge with unequal halves: `c_{k+1, sides}`.
    pub asymmetric_diagonal_rooted: usize,
    /// Classes: `f_{k+1, sides}`.
    pub free: usize,
}

pub fn rooted_cluster_counts(sides: usize, k: usize) -> Result<RootedClusterCounts> {
    let mut a = HashSet::new();
    let mut b = HashSet::new();
    let mut c = HashSet::new();
    let mut f = HashSet::new();
    for_each_dissection(sides, k, |d| {
        let t = dual_tree(d);
        for s in 0..sides {
            a.insert(side_rooted_code(&t, s));
        }
        for cell in 0..t.cells().len() {
            b.insert(cell_rooted_code(&t, cell));
            for &slot in &t.cell(cell).slots {
                if let Slot::Cell(o) = slot {
                    let (x, y) = halves(&t, cell, o);
                    if cell < o && x != y {
                        c.insert(diagonal_rooted_code(&t, cell, o));
                    }
                }
            }
        }
        f.insert(crate::dissect::tree_class_code(&t));
    })?;
    Ok(RootedClusterCounts {
        edge_rooted: a.len(),
        cell_rooted: b.len(),
        asymmetric_diagonal_rooted: c.len(),
        free: f.len(),
    })
}

/// Dissections of the `sides`-gon counted by type, over all diagonal counts.
pub fn type_census(sides: usize) -> Result<HashMap<TypeSignature, u64>> {
    let mut out = HashMap::new();
    for k in 0..=sides - 3 {
        for_each_dissection(sides, k, |d| *out.entry(d.signature()).or_insert(0) += 1)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unlabeled_tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|m| unlabeled_trees(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn labeled_counts() {
        let t: Vec<usize> = (1..=6).map(leaf_labeled_hi_trees).collect();
        assert_eq!(t, vec![1, 1, 1, 4, 26, 236]);
        let b: Vec<usize> = (2..=6).map(leaf_labeled_binary_trees).collect();
        assert_eq!(b, vec![1, 1, 3, 15, 105]);
        assert_eq!(rooted_leaf_labeled_binary_trees(4), 15);
    }

    #[test]
    fn wedderburn_values() {
        let w: Vec<u32> = (1..=10)
            .map(|n| wedderburn_recurrence(n).try_into().unwrap())
            .collect();
        assert_eq!(w, vec![1, 1, 1, 2, 3, 6, 11, 23, 46, 98]);
    }

    #[test]
    fn hexagon_clusters() {
        let r = rooted_cluster_counts(6, 3).unwrap();
        assert_eq!(
            r,
            RootedClusterCounts {
                edge_rooted: 3,
                cell_rooted: 4,
                asymmetric_diagonal_rooted: 2,
                free: 2
            }
        );
    }

    #[test]
    fn hexagon_types() {
        let census = type_census(6).unwrap();
        assert_eq!(census[&"<3^2:4>".parse().unwrap()], 21);
        assert_eq!(census.values().sum::<u64>(), 1 + 9 + 21 + 14);
    }
}
