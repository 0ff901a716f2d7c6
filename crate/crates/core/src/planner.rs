//! Enumerates every family, verifies candidates by forward composition and
//! picks the shortest path.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::families::{solve, AngleTriple, Branch, PathFamily, SolverTolerances};
use crate::math::angular_distance;
use crate::refine;
use crate::segments::{sample_segment, segment_length, segment_rotation, TurningRadius};
use crate::so3::{relative_target, rotation_distance, Configuration, Rotation, TargetMatrix};

/// Angles closer than this (circularly, per component) are one candidate.
const DUPLICATE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSolution {
    pub family: PathFamily,
    pub angles: AngleTriple,
    pub r: TurningRadius,
    pub length: f64,
    pub residual: f64,
    pub branch: Branch,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanReport {
    pub alpha: TargetMatrix,
    pub r: TurningRadius,
    pub tolerances: SolverTolerances,
    /// Verified candidates, shortest first.
    pub candidates: Vec<PathSolution>,
}

impl PlanReport {
    pub fn best(&self) -> Option<&PathSolution> {
        self.candidates.first()
    }
}

/// Net rotation of the family's segment word with the given angles.
pub fn compose_path(family: PathFamily, angles: &AngleTriple, r: TurningRadius) -> Rotation {
    family
        .segments(angles)
        .iter()
        .fold(Rotation::IDENTITY, |acc, &(k, phi)| {
            acc * segment_rotation(k, r, phi)
        })
}

/// Frobenius distance between the composed path and `alpha`.
pub fn verify_candidate(
    family: PathFamily,
    angles: &AngleTriple,
    r: TurningRadius,
    alpha: &TargetMatrix,
) -> f64 {
    rotation_distance(&compose_path(family, angles, r), alpha.rotation())
}

pub fn path_length(family: PathFamily, angles: &AngleTriple, r: TurningRadius) -> f64 {
    family
        .segments(angles)
        .iter()
        .map(|&(k, phi)| segment_length(k, r, phi))
        .sum()
}

fn same_angles(a: &AngleTriple, b: &AngleTriple) -> bool {
    a.to_array()
        .iter()
        .zip(b.to_array())
        .all(|(x, y)| angular_distance(*x, y) <= DUPLICATE_TOL)
}

fn order(a: &PathSolution, b: &PathSolution) -> Ordering {
    a.length
        .total_cmp(&b.length)
        .then(a.family.cmp(&b.family))
        .then_with(|| {
            a.angles
                .to_array()
                .iter()
                .zip(b.angles.to_array())
                .map(|(x, y)| x.total_cmp(&y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}

/// Solves, verifies and ranks all candidates for one family.
pub fn plan_family(
    family: PathFamily,
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Vec<PathSolution> {
    let mut kept: Vec<PathSolution> = Vec::new();
    for cand in solve(family, alpha, r, tol) {
        let mut angles = cand.angles;
        let mut residual = verify_candidate(family, &angles, r, alpha);
        if let Some(better) = refine::polish(family, &angles, r, alpha, tol) {
            (angles, residual) = better;
        }
        if !(residual <= tol.residual_tol) {
            continue;
        }
        let sol = PathSolution {
            family,
            angles,
            r,
            length: path_length(family, &angles, r),
            residual,
            branch: cand.branch,
        };
        match kept
            .iter_mut()
            .find(|k| same_angles(&k.angles, &sol.angles))
        {
            Some(k) if sol.residual < k.residual => *k = sol,
            Some(_) => {}
            None => kept.push(sol),
        }
    }
    kept
}

/// Plans between two configurations.
pub fn plan(
    initial: &Configuration,
    final_: &Configuration,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Result<PlanReport> {
    plan_target(&relative_target(initial, final_), r, tol)
}

/// Plans for a net rotation directly.
pub fn plan_target(
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Result<PlanReport> {
    let tol = tol.validate()?;
    let mut candidates: Vec<PathSolution> = PathFamily::ALL
        .iter()
        .flat_map(|&f| plan_family(f, alpha, r, &tol))
        .collect();
    candidates.sort_by(order);
    Ok(PlanReport {
        alpha: *alpha,
        r,
        tolerances: tol,
        candidates,
    })
}

/// Configurations along a solution, `points_per_segment` per segment with
/// each junction listed once.
pub fn sample_path(
    solution: &PathSolution,
    initial: &Configuration,
    points_per_segment: usize,
) -> Result<Vec<Configuration>> {
    if points_per_segment < 2 {
        return Err(Error::TooFewSamples(points_per_segment));
    }
    let mut out = Vec::new();
    let mut start = *initial;
    for (i, &(kind, phi)) in solution
        .family
        .segments(&solution.angles)
        .iter()
        .enumerate()
    {
        let pts = sample_segment(&start, kind, solution.r, phi, points_per_segment)?;
        start = start.advance(&segment_rotation(kind, solution.r, phi));
        let skip = usize::from(i > 0);
        out.extend(pts.into_iter().skip(skip));
    }
    Ok(out)
}
