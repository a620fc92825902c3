use std::collections::{HashMap, VecDeque};

use super::polygon::{Diagonal, Dissection};

/// What sits across one edge of a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    /// Polygon side `i`, joining vertices `i` and `i + 1`.
    Side(usize),
    /// Another cell, across a diagonal.
    Cell(usize),
}

/// An internal vertex of the dual tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCell {
    /// Polygon vertices of the cell in increasing order.
    pub vertices: Vec<usize>,
    /// `slots[j]` lies across the edge `vertices[j] -> vertices[j+1]`
    /// (cyclically), so the slots are in the cyclic order of the embedding.
    pub slots: Vec<Slot>,
}

impl TreeCell {
    pub fn size(&self) -> usize {
        self.slots.len()
    }

    /// Position of `slot` in the cyclic order.
    pub fn position(&self, slot: Slot) -> Option<usize> {
        self.slots.iter().position(|&s| s == slot)
    }
}

/// The dual tree of a dissection: one internal vertex per cell, one leaf per
/// polygon side, one internal edge per diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    sides: usize,
    cells: Vec<TreeCell>,
}

pub fn dual_tree(d: &Dissection) -> PlaneTree {
    let n = d.sides();
    let vertex_lists = d.cells();
    let mut owners: HashMap<Diagonal, Vec<usize>> = HashMap::new();
    for (c, verts) in vertex_lists.iter().enumerate() {
        for j in 0..verts.len() {
            let (u, v) = (verts[j], verts[(j + 1) % verts.len()]);
            if v != (u + 1) % n {
                owners.entry(Diagonal::new(u, v)).or_default().push(c);
            }
        }
    }
    let cells = vertex_lists
        .iter()
        .enumerate()
        .map(|(c, verts)| {
            let slots = (0..verts.len())
                .map(|j| {
                    let (u, v) = (verts[j], verts[(j + 1) % verts.len()]);
                    if v == (u + 1) % n {
                        Slot::Side(u)
                    } else {
                        let pair = &owners[&Diagonal::new(u, v)];
                        Slot::Cell(if pair[0] == c { pair[1] } else { pair[0] })
                    }
                })
                .collect();
            TreeCell {
                vertices: verts.clone(),
                slots,
            }
        })
        .collect();
    PlaneTree { sides: n, cells }
}

impl PlaneTree {
    pub fn sides(&self) -> usize {
        self.sides
    }

    pub fn cells(&self) -> &[TreeCell] {
        &self.cells
    }

    pub fn cell(&self, c: usize) -> &TreeCell {
        &self.cells[c]
    }

    /// Neighbouring cells of `c` in cyclic order.
    pub fn cell_neighbours(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.cells[c].slots.iter().filter_map(|s| match s {
            Slot::Cell(o) => Some(*o),
            Slot::Side(_) => None,
        })
    }

    /// The cell containing polygon side `i`.
    pub fn cell_of_side(&self, i: usize) -> Option<usize> {
        self.cells
            .iter()
            .position(|c| c.slots.contains(&Slot::Side(i)))
    }

    /// Cell-to-cell distances from `start`.
    pub fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.cells.len()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for o in self.cell_neighbours(c) {
                if dist[o] == usize::MAX {
                    dist[o] = dist[c] + 1;
                    queue.push_back(o);
                }
            }
        }
        dist
    }

    /// Eccentricity of each cell within the tree of cells (leaves ignored).
    pub fn eccentricities(&self) -> Vec<usize> {
        (0..self.cells.len())
            .map(|c| self.distances_from(c).into_iter().max().unwrap_or(0))
            .collect()
    }

    /// Total vertex count: cells plus leaves.
    pub fn vertex_count(&self) -> usize {
        self.cells.len() + self.sides
    }
}
