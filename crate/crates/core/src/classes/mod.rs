//! Polynomial algorithms for special graph classes: split, interval,
//! cographs and trees, plus closed forms for named families.

mod cograph;
mod interval;
mod known;
mod split;
mod tree;
mod tree_strategy;

pub use cograph::cograph_mh;
pub use interval::interval_mh;
pub use known::{known_h, NamedFamily};
pub use split::{split_h, split_mh, split_pathwidth_equals_h};
pub use tree::{branch_labels, label_from_children, tree_label, tree_labels, tree_mh, BranchLabels, RootedTree, TreeLabel};
pub use tree_strategy::tree_monotone_strategy;
