use std::fmt;

use serde::{Deserialize, Serialize};

use super::polygon::Dissection;
use super::tree::{dual_tree, PlaneTree, Slot};

/// Canonical identifier of a class: equal for two dissections exactly when
/// one is carried to the other by rotations, reflections and twists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassCode(String);

impl ClassCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ClassCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Center of the tree of cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    Cell(usize),
    /// The diagonal shared by two cells, smaller index first.
    Diagonal(usize, usize),
}

/// The cell or diagonal of minimum eccentricity, leaves ignored.
pub fn tree_center(t: &PlaneTree) -> Center {
    let ecc = t.eccentricities();
    let best = *ecc.iter().min().expect("a tree has at least one cell");
    let mins: Vec<usize> = (0..ecc.len()).filter(|&c| ecc[c] == best).collect();
    match mins.as_slice() {
        [c] => Center::Cell(*c),
        [a, b] => Center::Diagonal(*a, *b),
        _ => unreachable!("a tree center has one or two vertices"),
    }
}

fn slot_code(t: &PlaneTree, from: usize, slot: Slot) -> String {
    match slot {
        Slot::Side(_) => ".".to_string(),
        Slot::Cell(c) => {
            let back = t
                .cell(c)
                .position(Slot::Cell(from))
                .expect("tree edges are symmetric");
            subtree_code(t, c, back)
        }
    }
}

/// Child codes of `cell` read cyclically after the slot at `parent`.
pub fn child_codes(t: &PlaneTree, cell: usize, parent: usize) -> Vec<String> {
    let slots = &t.cell(cell).slots;
    let d = slots.len();
    (1..d)
        .map(|j| slot_code(t, cell, slots[(parent + j) % d]))
        .collect()
}

fn wrap(prefix: &str, size: usize, body: &str) -> String {
    format!("{prefix}({size:02}{body})")
}

/// Code of the subtree hanging from `cell` when its slot `parent` points to
/// the root. At every cell the smaller of the two mirror readings is kept.
pub fn subtree_code(t: &PlaneTree, cell: usize, parent: usize) -> String {
    let codes = child_codes(t, cell, parent);
    let forward: String = codes.concat();
    let backward: String = codes.iter().rev().map(String::as_str).collect();
    wrap("", codes.len() + 1, forward.min(backward).as_str())
}

/// Smallest concatenation over all rotations and reflections of a cyclic
/// sequence, and how many of the `2d` arrangements attain it (the order of
/// its stabiliser in the dihedral group).
pub fn dihedral_minimum(codes: &[String]) -> (String, usize) {
    let d = codes.len();
    let mut best: Option<String> = None;
    let mut hits = 0;
    for r in 0..d {
        for mirrored in [false, true] {
            let s: String = (0..d)
                .map(|j| {
                    let idx = if mirrored {
                        (r + d - j) % d
                    } else {
                        (r + j) % d
                    };
                    codes[idx].as_str()
                })
                .collect();
            match &best {
                Some(b) if s > *b => {}
                Some(b) if s == *b => hits += 1,
                _ => {
                    best = Some(s);
                    hits = 1;
                }
            }
        }
    }
    (best.unwrap_or_default(), hits)
}

/// Codes of the parts around `cell`, one per slot, in cyclic order.
pub fn around_cell(t: &PlaneTree, cell: usize) -> Vec<String> {
    t.cell(cell)
        .slots
        .iter()
        .map(|&s| slot_code(t, cell, s))
        .collect()
}

/// Code of the cluster rooted at `cell`, up to the dihedral group of that cell.
pub fn cell_rooted_code(t: &PlaneTree, cell: usize) -> String {
    let codes = around_cell(t, cell);
    wrap("C", codes.len(), &dihedral_minimum(&codes).0)
}

/// Codes of the two halves on either side of the diagonal between cells `a`
/// and `b`, as `(half containing a, half containing b)`.
pub fn halves(t: &PlaneTree, a: usize, b: usize) -> (String, String) {
    let pa = t
        .cell(a)
        .position(Slot::Cell(b))
        .expect("cells are adjacent");
    let pb = t
        .cell(b)
        .position(Slot::Cell(a))
        .expect("cells are adjacent");
    (subtree_code(t, a, pa), subtree_code(t, b, pb))
}

/// Code of the cluster rooted at an inside edge; the halves are unordered.
pub fn diagonal_rooted_code(t: &PlaneTree, a: usize, b: usize) -> String {
    let (x, y) = halves(t, a, b);
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    format!("D{lo}{hi}")
}

/// Code of the cluster rooted at polygon side `side`, which is not itself
/// counted as an outside edge.
pub fn side_rooted_code(t: &PlaneTree, side: usize) -> String {
    let cell = t.cell_of_side(side).expect("every side bounds a cell");
    let slot = t.cell(cell).position(Slot::Side(side)).unwrap();
    format!("A{}", subtree_code(t, cell, slot))
}

pub fn tree_class_code(t: &PlaneTree) -> ClassCode {
    ClassCode(match tree_center(t) {
        Center::Cell(c) => cell_rooted_code(t, c),
        Center::Diagonal(a, b) => diagonal_rooted_code(t, a, b),
    })
}

pub fn class_code(d: &Dissection) -> ClassCode {
    tree_class_code(&dual_tree(d))
}
