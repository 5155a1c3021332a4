//! Named instance families and adversarial metrics.

mod boston;
mod euclid;
mod line;
mod tree;

pub use boston::{boston_instance, boston_instance_with, boston_size, BostonInstance, MAX_BOSTON_K};
pub use euclid::{euclidean_random, GRID};
pub use line::{line_sd_instance, line_sd_instance_with, serial_hypothesis_holds, Epsilon};
pub use tree::{
    tree_adversary_metric, tree_instance, unlucky_walk, unlucky_walk_fractional,
    AdversaryWalkResult, TreeInstance, Unlucky, MAX_TREE_K,
};
