//! Shortest paths for a Dubins vehicle on the unit sphere.
//!
//! A configuration is a rotation matrix whose columns are the position, the
//! tangent and the tangent-normal of the vehicle. Paths are concatenations of
//! great-circle arcs (`G`) and tight left or right turns of radius `r`
//! (`L`, `R`). Twelve path families are solved in closed form. Every candidate
//! is checked by composing its segment rotations before the planner ranks
//! candidates by length.
//!
//! ```
//! use sphere_dubins::{plan, segments, Configuration, SolverTolerances, TurningRadius};
//!
//! let r = TurningRadius::new(0.5).unwrap();
//! let goal = segments::rot_l(r, 0.7) * segments::rot_g(1.1) * segments::rot_l(r, 2.0);
//! let goal = Configuration::new(goal).unwrap();
//! let report = plan(&Configuration::IDENTITY, &goal, r, &SolverTolerances::default()).unwrap();
//! let best = report.best().unwrap();
//! assert!(best.residual <= 1e-9);
//! assert!(best.length <= 0.5 * 0.7 + 1.1 + 0.5 * 2.0 + 1e-9);
//! ```
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod families;
mod math;
pub mod oracle;
pub mod planner;
mod refine;
pub mod roots;
pub mod segments;
pub mod so3;

pub use error::{Error, Result};
pub use families::{AngleTriple, Branch, Candidate, PathFamily, SolverTolerances};
pub use math::{angular_distance, wrap_angle};
pub use planner::{
    path_length, plan, plan_target, sample_path, verify_candidate, PathSolution, PlanReport,
};
pub use segments::{SegmentKind, TurningRadius};
pub use so3::{relative_target, rotation_distance, Configuration, Rotation, TargetMatrix};
