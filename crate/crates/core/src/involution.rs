//! Path involutions that exchange area and depth, built from tree maps.
//!
//! [`mirror_involution`] preserves the first up-step and the profile
//! multiset. [`lodestar_involution`] additionally preserves the last up-step.

use crate::path::LukasPath;
use crate::tree::PlaneTree;

/// Reflect the tree of `path` and read it back.
pub fn mirror_involution(path: &LukasPath) -> LukasPath {
    PlaneTree::from_path(path).mirror().to_path()
}

/// Reflect the tree of `path`, swap its lodestars, and read it back.
pub fn lodestar_involution(path: &LukasPath) -> LukasPath {
    PlaneTree::from_path(path).mirror().lodestar_swap().to_path()
}
