//! Exact computation of Lusternik-Schnirelmann category and topological
//! complexity bounds from cohomology rings, and executable cover-based
//! motion planners that witness the matching upper bounds.

pub mod exact_linalg;
pub mod graded_algebra;
pub mod invariants;
pub mod planner;
pub mod space_expr;
pub mod verifier;
