//! Łukasiewicz paths, plane trees, and the area/depth q,t-polynomials.
//!
//! - [`path`]: paths, profiles, area and depth statistics, down-step matching
//! - [`enumerate`]: backtracking enumeration by profile or profile multiset
//! - [`tree`]: plane trees, the contour bijection, thorns, mirror, lodestar swap
//! - [`involution`]: the path involutions exchanging area and depth
//! - [`poly`]: exact q,t-polynomials and the refined area/depth polynomials
//! - [`series`]: the truncated generating function over profile multisets
//! - [`verify`]: exhaustive checks of every symmetry property
//! - [`cli`]: the `lukas` command line front end

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod involution;
pub mod multiset;
pub mod path;
pub mod poly;
pub mod series;
pub mod tree;
pub mod verify;

pub use enumerate::{all_paths_of_len, all_paths_up_to, paths_with_multiset, paths_with_profile};
pub use error::{Error, PathViolation, Result};
pub use multiset::DegreeMultiset;
pub use path::{LukasPath, Matching, MatchTarget, Profile, StatVector, Step};
pub use poly::QtPolynomial;
pub use series::ProfileSeries;
pub use tree::{Lodestars, NodePath, NodeThorns, PlaneTree, ThornStats};
