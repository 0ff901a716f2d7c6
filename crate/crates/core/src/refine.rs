//! Numerical polishing of closed-form candidates.
//!
//! Candidates with a residual above `1e-12` get Levenberg–Marquardt steps on
//! the full matrix equation. If the result still misses the residual
//! tolerance, a golden-section search over the middle angle runs with the outer
//! angles fitted by axis alignment.

use arrayvec::ArrayVec;

use crate::families::{AngleTriple, PathFamily, SolverTolerances};
use crate::math::{angular_distance, atan2, PI, TAU};
use crate::planner::verify_candidate;
use crate::segments::{axial_left, axial_right, segment_rotation, SegmentKind, TurningRadius};
use crate::so3::{dot, Rotation, TargetMatrix, Vector3};

const REFINE_STEPS: usize = 40;
const REFINE_FLOOR: f64 = 1e-14;

/// Candidates already closer than this are left alone.
const POLISH_BELOW: f64 = 1e-12;

/// Candidates further than this from the target are not polished.
const REFINE_RADIUS: f64 = 0.1;

/// Candidates further than this are not searched either.
const SEARCH_RADIUS: f64 = 0.5;

/// Polishing may move each angle at most this far.
const REFINE_MAX_MOVE: f64 = 0.1;

/// Half-width of the middle-angle search window.
const SEARCH_WINDOW: f64 = 2e-3;
const SEARCH_STEPS: usize = 80;

/// Derivative of a segment rotation with respect to its arc angle, at zero.
fn generator(kind: SegmentKind, r: TurningRadius) -> Rotation {
    let (r, q) = (r.get(), r.cofactor());
    let rows = match kind {
        SegmentKind::GreatCircle => [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
        SegmentKind::LeftTurn => [[0.0, -r, 0.0], [r, 0.0, -q], [0.0, q, 0.0]],
        SegmentKind::RightTurn => [[0.0, -r, 0.0], [r, 0.0, q], [0.0, -q, 0.0]],
    };
    Rotation::from_rows_unchecked(rows)
}

/// Which component of the triple drives segment `i` of `n`, if any.
fn angle_slot(family: PathFamily, i: usize, n: usize) -> Option<usize> {
    if i == 0 {
        Some(0)
    } else if i == n - 1 {
        Some(2)
    } else if matches!(family, PathFamily::LrPiL | PathFamily::RlPiR) {
        None
    } else {
        Some(1)
    }
}

/// One Levenberg–Marquardt step on `‖path(φ) − α‖_F` with damping `lambda`
/// relative to the Gauss–Newton matrix.
fn damped_step(
    family: PathFamily,
    angles: &AngleTriple,
    r: TurningRadius,
    alpha: &TargetMatrix,
    lambda: f64,
) -> Option<AngleTriple> {
    let segs = family.segments(angles);
    let n = segs.len();
    let mats: ArrayVec<Rotation, 5> = segs
        .iter()
        .map(|&(k, phi)| segment_rotation(k, r, phi))
        .collect();
    let mut prefix: ArrayVec<Rotation, 6> = ArrayVec::new();
    prefix.push(Rotation::IDENTITY);
    for m in &mats {
        let last = *prefix.last()?;
        prefix.push(last * *m);
    }
    let mut suffix = [Rotation::IDENTITY; 6];
    for i in (0..n).rev() {
        suffix[i] = mats[i] * suffix[i + 1];
    }
    let mut jac = [[0.0f64; 9]; 3];
    for (i, &(kind, _)) in segs.iter().enumerate() {
        let Some(slot) = angle_slot(family, i, n) else {
            continue;
        };
        let d = (prefix[i + 1] * generator(kind, r) * suffix[i + 1]).rows();
        for (k, v) in d.iter().flatten().enumerate() {
            jac[slot][k] += v;
        }
    }
    let p = prefix[n].rows();
    let a = alpha.rows();
    let mut e = [0.0f64; 9];
    for (k, v) in e.iter_mut().enumerate() {
        *v = p[k / 3][k % 3] - a[k / 3][k % 3];
    }
    let mut nm = [[0.0f64; 3]; 3];
    let mut g = [0.0f64; 3];
    for i in 0..3 {
        for j in 0..3 {
            nm[i][j] = (0..9).map(|k| jac[i][k] * jac[j][k]).sum();
        }
        g[i] = -(0..9).map(|k| jac[i][k] * e[k]).sum::<f64>();
    }
    let damping = lambda * (1.0 + nm[0][0] + nm[1][1] + nm[2][2]);
    for (i, row) in nm.iter_mut().enumerate() {
        row[i] += damping;
    }
    let delta = solve3(&nm, &g)?;
    Some(AngleTriple::new(
        angles.phi1 + delta[0],
        angles.phi2 + delta[1],
        angles.phi3 + delta[2],
    ))
}

fn solve3(m: &[[f64; 3]; 3], b: &[f64; 3]) -> Option<[f64; 3]> {
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(m);
    if d == 0.0 || !d.is_finite() {
        return None;
    }
    let mut out = [0.0; 3];
    for (c, v) in out.iter_mut().enumerate() {
        let mut mc = *m;
        for r in 0..3 {
            mc[r][c] = b[r];
        }
        *v = det(&mc) / d;
    }
    out.iter().all(|v| v.is_finite()).then_some(out)
}

/// Interior turns of CCC, CCCC and CCCCC paths span at least a half turn.
fn middle_in_range(family: PathFamily, phi2: f64) -> bool {
    !has_turning_middle(family) || phi2 >= PI
}

/// Polishes a candidate against the full matrix equation. Steps are kept
/// only while they reduce the residual and stay close to the start.
pub(crate) fn refine_candidate(
    family: PathFamily,
    angles: &AngleTriple,
    r: TurningRadius,
    alpha: &TargetMatrix,
) -> (AngleTriple, f64) {
    let mut best = *angles;
    let mut residual = verify_candidate(family, &best, r, alpha);
    let mut lambda = 1e-12;
    for _ in 0..REFINE_STEPS {
        if residual <= REFINE_FLOOR || lambda > 1.0 {
            break;
        }
        let Some(next) = damped_step(family, &best, r, alpha, lambda) else {
            break;
        };
        let drift = angles
            .to_array()
            .iter()
            .zip(next.to_array())
            .map(|(a, b)| angular_distance(*a, b))
            .fold(0.0, f64::max);
        let next_residual = verify_candidate(family, &next, r, alpha);
        if drift <= REFINE_MAX_MOVE
            && middle_in_range(family, next.phi2)
            && next_residual < residual
        {
            best = next;
            residual = next_residual;
            lambda = (lambda * 0.1).max(1e-15);
        } else {
            lambda *= 10.0;
        }
    }
    (best, residual)
}

fn axis(kind: SegmentKind, r: TurningRadius) -> Vector3 {
    match kind {
        SegmentKind::GreatCircle => [0.0, 0.0, 1.0],
        SegmentKind::LeftTurn => axial_left(r),
        SegmentKind::RightTurn => axial_right(r),
    }
}

fn cross(a: Vector3, b: Vector3) -> Vector3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Angle of the rotation about unit `u` that carries the component of `from`
/// orthogonal to `u` onto that of `to`.
fn align_angle(u: Vector3, from: Vector3, to: Vector3) -> f64 {
    let (fu, tu) = (dot(u, from), dot(u, to));
    let f = [
        from[0] - fu * u[0],
        from[1] - fu * u[1],
        from[2] - fu * u[2],
    ];
    let t = [to[0] - tu * u[0], to[1] - tu * u[1], to[2] - tu * u[2]];
    atan2(dot(u, cross(f, t)), dot(f, t))
}

/// Outer angles that best match `alpha` for a fixed middle angle.
fn fit_outer(family: PathFamily, phi2: f64, r: TurningRadius, alpha: &TargetMatrix) -> AngleTriple {
    let probe = AngleTriple {
        phi1: 0.0,
        phi2,
        phi3: 0.0,
    };
    let segs = family.segments(&probe);
    let n = segs.len();
    let middle = segs[1..n - 1]
        .iter()
        .fold(Rotation::IDENTITY, |acc, &(k, phi)| {
            acc * segment_rotation(k, r, phi)
        });
    let first = axis(segs[0].0, r);
    let last = axis(segs[n - 1].0, r);
    let a = alpha.rotation();
    // α·u_last = R_first(φ₁)·M·u_last
    let phi1 = align_angle(first, middle.apply(last), a.apply(last));
    // αᵀ·u_first = R_last(φ₃)ᵀ·Mᵀ·u_first
    let phi3 = -align_angle(
        last,
        middle.transpose().apply(first),
        a.transpose().apply(first),
    );
    AngleTriple::new(phi1, phi2, phi3)
}

/// Golden-section search for the middle angle near `around`, with the outer
/// angles fitted at every probe.
fn search_middle(
    family: PathFamily,
    around: f64,
    r: TurningRadius,
    alpha: &TargetMatrix,
) -> (AngleTriple, f64) {
    let mut lo = around - SEARCH_WINDOW;
    let mut hi = around + SEARCH_WINDOW;
    if has_turning_middle(family) {
        lo = lo.max(PI);
        hi = hi.min(TAU);
    }
    let eval = |phi2: f64| {
        let t = fit_outer(family, phi2, r, alpha);
        (t, verify_candidate(family, &t, r, alpha))
    };
    let g = 0.5 * (libm::sqrt(5.0) - 1.0);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    for _ in 0..SEARCH_STEPS {
        if f1.1 <= f2.1 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = eval(x2);
        }
    }
    if f1.1 <= f2.1 {
        f1
    } else {
        f2
    }
}

fn has_turning_middle(family: PathFamily) -> bool {
    !matches!(
        family,
        PathFamily::Lgl
            | PathFamily::Rgr
            | PathFamily::Lgr
            | PathFamily::Rgl
            | PathFamily::LrPiL
            | PathFamily::RlPiR
    )
}

/// Improves a candidate that misses `tol.residual_tol` or sits above the
/// polishing floor. Returns `None` when nothing better was found.
pub(crate) fn polish(
    family: PathFamily,
    angles: &AngleTriple,
    r: TurningRadius,
    alpha: &TargetMatrix,
    tol: &SolverTolerances,
) -> Option<(AngleTriple, f64)> {
    let start = verify_candidate(family, angles, r, alpha);
    if start <= POLISH_BELOW || start > SEARCH_RADIUS {
        return None;
    }
    let mut best = if start <= REFINE_RADIUS {
        refine_candidate(family, angles, r, alpha)
    } else {
        (*angles, start)
    };
    if best.1 > tol.residual_tol && has_turning_middle(family) {
        let (seed, _) = search_middle(family, angles.phi2, r, alpha);
        let found = refine_candidate(family, &seed, r, alpha);
        if found.1 < best.1 {
            best = found;
        }
    }
    (best.1 < start).then_some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::abs;
    use crate::segments::{rot_l, rot_r};

    #[test]
    fn alignment_recovers_outer_angles() {
        let r = TurningRadius::new(0.45).unwrap();
        let t = TargetMatrix::from(rot_l(r, 1.3) * rot_r(r, 4.1) * rot_l(r, 5.6));
        let fit = fit_outer(PathFamily::Lrl, 4.1, r, &t);
        assert!(abs(fit.phi1 - 1.3) < 1e-12 && abs(fit.phi3 - 5.6) < 1e-12);
    }

    #[test]
    fn polish_repairs_a_perturbed_candidate() {
        let r = TurningRadius::new(0.5).unwrap();
        let exact = AngleTriple::new(0.9, 4.2, 1.3);
        let t = TargetMatrix::from(crate::planner::compose_path(PathFamily::Lrlr, &exact, r));
        let rough = AngleTriple::new(0.9 + 1e-5, 4.2 - 2e-6, 1.3);
        let (fixed, res) = polish(
            PathFamily::Lrlr,
            &rough,
            r,
            &t,
            &SolverTolerances::default(),
        )
        .unwrap();
        assert!(res < 1e-12);
        assert!(angular_distance(fixed.phi1, 0.9) < 1e-9);
    }

    #[test]
    fn leaves_exact_candidates_alone() {
        let r = TurningRadius::new(0.5).unwrap();
        let exact = AngleTriple::new(0.9, 4.2, 1.3);
        let t = TargetMatrix::from(crate::planner::compose_path(PathFamily::Lrlr, &exact, r));
        assert!(polish(
            PathFamily::Lrlr,
            &exact,
            r,
            &t,
            &SolverTolerances::default()
        )
        .is_none());
    }
}
