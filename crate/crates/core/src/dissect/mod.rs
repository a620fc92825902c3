//! Polygon dissections, their dual plane trees, twisting, canonical class
//! codes and the labeled census of moduli-space faces.

mod census;
mod classes;
mod code;
mod polygon;
mod tree;

pub use census::{labeled_moduli_census, CENSUS_LIMIT};
pub use classes::{class_by_label, enumerate_classes, ClassRecord};
pub use code::{
    around_cell, cell_rooted_code, child_codes, class_code, diagonal_rooted_code, dihedral_minimum,
    halves, side_rooted_code, subtree_code, tree_center, tree_class_code, Center, ClassCode,
};
pub use polygon::{
    all_diagonals, enumerate_dissections, for_each_dissection, Diagonal, Dissection, MAX_SIDES,
};
pub use tree::{dual_tree, PlaneTree, Slot, TreeCell};
