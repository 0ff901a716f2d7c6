//! Five tight turns with equal interior angles.

use alloc::vec::Vec;

use super::cccc::solve_unit_pair;
use super::{push_products, Candidate, Entries, SolverTolerances};
use crate::math::{abs, cos, sin, sqrt};
use crate::roots::{clamp_unit, cubic, solve_trig_linear, upper_half_angle};
use crate::segments::TurningRadius;
use crate::so3::TargetMatrix;

pub fn solve_lrlrl(
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Vec<Candidate> {
    let Entries {
        a11,
        a12,
        a13,
        a22,
        a31,
        a33,
        r,
        q,
        ..
    } = Entries::new(alpha, r);
    let r2 = r * r;
    let r4 = r2 * r2;
    let r6 = r4 * r2;
    let r8 = r4 * r4;
    let p = 1.0 - r2;
    let mut out = Vec::new();

    let rhs = a11 * p + r * q * (a13 + a31) + r2 * a33;
    let k3 = 16.0 * r6 * p;
    let k2 = 16.0 * r4 * (2.0 - 5.0 * r2 + 3.0 * r4);
    let k1 = -16.0 * r2 * p * p * (3.0 * r2 - 1.0);
    let k0 = 16.0 * r8 - 48.0 * r6 + 48.0 * r4 - 16.0 * r2 + 1.0;
    let poly = |c: f64| ((k3 * c + k2) * c + k1) * c + k0;

    let c_star = 1.0 - 1.0 / r2;
    let rhs1 = (r2 - 1.0) * a11 + r * q * (a31 - a13) + r2 * a33;
    let rhs3 = (r2 - 1.0) * a11 + r * q * (a13 - a31) + r2 * a33;
    for raw in cubic(k3, k2, k1, k0 - rhs, tol.clamp_eps) {
        let Some(c) = clamp_unit(raw, tol.clamp_eps) else {
            continue;
        };
        if abs(c - c_star) <= tol.degenerate_eps {
            continue;
        }
        let Some(phi2) = upper_half_angle(c, tol.degenerate_eps) else {
            continue;
        };
        let s = sin(phi2);
        let c2 = cos(2.0 * phi2);
        let c3 = cos(3.0 * phi2);
        let half = sin(0.5 * phi2);
        let a = 16.0
            * r2
            * (r2 - 1.0)
            * half
            * half
            * (-6.0 * r6 + 11.0 * r4 - 7.0 * r2
                + (r4 - 2.0 * r6) * c2
                + (8.0 * r4 - 12.0 * r2 + 3.0) * r2 * c
                + 1.0);
        let b =
            8.0 * r2 * p * s * (r4 * c2 + 3.0 * r4 - 3.0 * r2 + (3.0 * r2 - 4.0 * r4) * c + 1.0);
        let cc = (1.0 - 2.0 * r2)
            * (4.0 * r8 * c3 - 40.0 * r8 - 4.0 * r6 * c3 + 88.0 * r6 - 64.0 * r4 + 16.0 * r2
                - 8.0 * (3.0 * r4 - 5.0 * r2 + 2.0) * r4 * c2
                + 4.0 * (15.0 * r6 - 31.0 * r4 + 20.0 * r2 - 4.0) * r2 * c
                - 1.0);
        let phi1s = solve_trig_linear(a, b, rhs1 - cc, tol.clamp_eps);
        let phi3s = solve_trig_linear(a, b, rhs3 - cc, tol.clamp_eps);
        push_products(&mut out, &phi1s, phi2, &phi3s);
    }

    // At cos φ₂ = 1 − 1/r² the cubic has a double root and both outer-angle
    // equations vanish; only φ₁ + φ₃ is determined.
    if c_star >= -1.0 && abs(poly(c_star) - rhs) <= tol.degenerate_eps {
        if let Some(phi2) = upper_half_angle(c_star, tol.degenerate_eps) {
            let t = sqrt(2.0 * r2 - 1.0);
            let m = [[t, r2 - 1.0], [r2 - 1.0, -t]];
            if let Some(phi1) = solve_unit_pair(m, [-r * a12, r2 * a22]) {
                out.push(Candidate::special(phi1, phi2, 0.0));
            }
        }
    }
    out
}

pub fn solve_rlrlr(
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Vec<Candidate> {
    solve_lrlrl(&alpha.reflect_xy(), r, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Branch;
    use crate::math::{acos, angular_distance, TAU};
    use crate::segments::{rot_l, rot_r};

    fn radius(r: f64) -> TurningRadius {
        TurningRadius::new(r).unwrap()
    }

    fn contains(cands: &[Candidate], want: [f64; 3], tol: f64) -> bool {
        cands.iter().any(|c| {
            c.angles
                .to_array()
                .iter()
                .zip(want)
                .all(|(a, b)| angular_distance(*a, b) <= tol)
        })
    }

    fn lrlrl(r: TurningRadius, a: f64, b: f64, c: f64) -> TargetMatrix {
        TargetMatrix::from(rot_l(r, a) * rot_r(r, b) * rot_l(r, b) * rot_r(r, b) * rot_l(r, c))
    }

    fn rlrlr(r: TurningRadius, a: f64, b: f64, c: f64) -> TargetMatrix {
        TargetMatrix::from(rot_r(r, a) * rot_l(r, b) * rot_r(r, b) * rot_l(r, b) * rot_r(r, c))
    }

    const TOL: SolverTolerances = SolverTolerances {
        clamp_eps: 1e-10,
        residual_tol: 1e-9,
        degenerate_eps: 1e-9,
    };

    #[test]
    fn lrlrl_general() {
        let r = radius(0.5);
        let c = solve_lrlrl(&lrlrl(r, 0.7, 4.0, 1.6), r, &TOL);
        assert!(contains(&c, [0.7, 4.0, 1.6], 1e-9));
        assert!(c.len() <= 12);
        let c = solve_rlrlr(&rlrlr(r, 0.7, 4.0, 1.6), r, &TOL);
        assert!(contains(&c, [0.7, 4.0, 1.6], 1e-9));
    }

    #[test]
    fn lrlrl_special() {
        let r = radius(0.8);
        let phi2 = TAU - acos(1.0 - 1.0 / 0.64);
        let c = solve_lrlrl(&lrlrl(r, 1.2, phi2, 0.0), r, &TOL);
        assert!(c
            .iter()
            .any(|c| c.branch == Branch::Special && contains(&[*c], [1.2, phi2, 0.0], 1e-9)));
        let c = solve_rlrlr(&rlrlr(r, 1.2, phi2, 0.0), r, &TOL);
        assert!(contains(&c, [1.2, phi2, 0.0], 1e-9));
    }

    #[test]
    fn lrlrl_without_real_roots() {
        // a half turn about the y axis reverses the left-turn axis, which five
        // turns of radius 0.3 cannot do
        let r = radius(0.3);
        let t = TargetMatrix::from(crate::so3::Rotation::from_rows_unchecked([
            [-1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, -1.0],
        ]));
        assert!(solve_lrlrl(&t, r, &TOL).is_empty());
        assert!(solve_rlrlr(&t.reflect_xy(), r, &TOL).is_empty());
    }
}
