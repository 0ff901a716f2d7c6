//! Three tight turns: LRL, RLR and the half-turn variants.

use alloc::vec::Vec;

use super::{both_branches, push_products, Candidate, Entries, SolverTolerances};
use crate::math::{abs, atan2, sin, FRAC_1_SQRT_2, PI};
use crate::roots::{clamp_unit, solve_trig_linear, upper_half_angle};
use crate::segments::TurningRadius;
use crate::so3::TargetMatrix;

pub fn solve_lrl(alpha: &TargetMatrix, r: TurningRadius, tol: &SolverTolerances) -> Vec<Candidate> {
    let Entries {
        a11,
        a13,
        a31,
        a33,
        r,
        q,
        ..
    } = Entries::new(alpha, r);
    let r2 = r * r;
    let mut out = Vec::new();
    let denom = 4.0 * r2 * (1.0 - r2);
    let k0 = 1.0 - 2.0 * r2;
    let raw = ((1.0 - r2) * a11 + r * q * (a13 + a31) + r2 * a33 - k0 * k0) / denom;
    let Some(c2) = clamp_unit(raw, tol.clamp_eps) else {
        return out;
    };
    let Some(phi2) = upper_half_angle(c2, tol.degenerate_eps) else {
        return out;
    };
    let k = 8.0 * r2 * r2 * r2 - 12.0 * r2 * r2 + 6.0 * r2
        - 1.0
        - 4.0 * (2.0 * r2 * r2 * r2 - 3.0 * r2 * r2 + r2) * c2;
    let a = (2.0 * r2 - 1.0) * (1.0 - c2);
    let b = sin(phi2);
    let rhs1 = ((r2 - 1.0) * a11 + r * q * (a31 - a13) + r2 * a33 - k) / denom;
    let rhs3 = ((r2 - 1.0) * a11 + r * q * (a13 - a31) + r2 * a33 - k) / denom;
    let phi1s = solve_trig_linear(a, b, rhs1, tol.clamp_eps);
    let phi3s = solve_trig_linear(a, b, rhs3, tol.clamp_eps);
    push_products(&mut out, &phi1s, phi2, &phi3s);
    out
}

pub fn solve_rlr(alpha: &TargetMatrix, r: TurningRadius, tol: &SolverTolerances) -> Vec<Candidate> {
    let mut out = solve_lrl(&alpha.rlr_swap_transform(), r, tol);
    for c in out.iter_mut() {
        core::mem::swap(&mut c.angles.phi1, &mut c.angles.phi3);
    }
    out
}

pub fn solve_lr_pi_l(
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Vec<Candidate> {
    let Entries {
        a11,
        a13,
        a21,
        a22,
        a31,
        a33,
        r,
        q,
        ..
    } = Entries::new(alpha, r);
    let r2 = r * r;
    let mut out = Vec::new();
    let base = 1.0 - 8.0 * r2 + 8.0 * r2 * r2;
    let scale = 8.0 * (r2 - 1.0) * r2;
    let k = 1.0 - 2.0 * r2;
    let c1 = (base + (a11 * (r2 - 1.0) + r * ((a31 - a13) * q + a33 * r)) / k) / scale;
    let c3 = (base + (a11 * (r2 - 1.0) + r * ((a13 - a31) * q + a33 * r)) / k) / scale;
    if let (Some(c1), Some(c3)) = (clamp_unit(c1, tol.clamp_eps), clamp_unit(c3, tol.clamp_eps)) {
        push_products(&mut out, &both_branches(c1), PI, &both_branches(c3));
    }
    if abs(r - FRAC_1_SQRT_2) <= tol.degenerate_eps {
        // only φ₁ − φ₃ is determined at this radius
        let delta = atan2(core::f64::consts::SQRT_2 * a21, -a22);
        if delta < 0.0 {
            out.push(Candidate::special(0.0, PI, -delta));
        } else {
            out.push(Candidate::special(delta, PI, 0.0));
        }
    }
    out
}

pub fn solve_rl_pi_r(
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Vec<Candidate> {
    solve_lr_pi_l(&alpha.reflect_xy(), r, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Branch;
    use crate::math::angular_distance;
    use crate::segments::{rot_l, rot_r};
    use crate::so3::Rotation;

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

    fn lrl(r: TurningRadius, a: f64, b: f64, c: f64) -> TargetMatrix {
        TargetMatrix::from(rot_l(r, a) * rot_r(r, b) * rot_l(r, c))
    }

    fn rlr(r: TurningRadius, a: f64, b: f64, c: f64) -> TargetMatrix {
        TargetMatrix::from(rot_r(r, a) * rot_l(r, b) * rot_r(r, c))
    }

    const TOL: SolverTolerances = SolverTolerances {
        clamp_eps: 1e-10,
        residual_tol: 1e-9,
        degenerate_eps: 1e-9,
    };

    #[test]
    fn lrl_examples() {
        let r = radius(0.5);
        let c = solve_lrl(&lrl(r, 1.0, 4.5, 2.0), r, &TOL);
        assert!(contains(&c, [1.0, 4.5, 2.0], 1e-10));
        assert!(c.len() <= 4);
        let r = radius(0.3);
        assert!(contains(
            &solve_lrl(&lrl(r, 0.5, 3.8, 0.5), r, &TOL),
            [0.5, 3.8, 0.5],
            1e-10
        ));
    }

    #[test]
    fn lrl_without_real_middle_angle() {
        // a half great circle cannot be reached by three tight turns of radius 0.1
        let r = radius(0.1);
        let t = TargetMatrix::from(Rotation::from_rows_unchecked([
            [-1.0, 0.0, 0.0],
            [0.0, -1.0, 0.0],
            [0.0, 0.0, 1.0],
        ]));
        assert!(solve_lrl(&t, r, &TOL).is_empty());
    }

    #[test]
    fn rlr_examples() {
        let r = radius(0.5);
        assert!(contains(
            &solve_rlr(&rlr(r, 1.5, 4.0, 1.0), r, &TOL),
            [1.5, 4.0, 1.0],
            1e-10
        ));
        assert!(contains(
            &solve_rlr(&rlr(r, 0.7, 5.0, 0.7), r, &TOL),
            [0.7, 5.0, 0.7],
            1e-10
        ));
        let t = rlr(r, 1.0, 4.0, 1.5).rlr_swap_transform();
        assert!(contains(&solve_lrl(&t, r, &TOL), [1.5, 4.0, 1.0], 1e-10));
    }

    #[test]
    fn lr_pi_l_examples() {
        let r = radius(0.6);
        let c = solve_lr_pi_l(&lrl(r, 1.1, PI, 0.4), r, &TOL);
        assert!(contains(&c, [1.1, PI, 0.4], 1e-9));
        assert!(c.len() <= 4);
        let c = solve_lr_pi_l(&TargetMatrix::from(rot_r(r, PI)), r, &TOL);
        assert!(contains(&c, [0.0, PI, 0.0], 1e-9));
    }

    #[test]
    fn lr_pi_l_at_critical_radius() {
        let r = radius(FRAC_1_SQRT_2);
        let t = lrl(r, 0.8, PI, 0.0);
        let m = t.rows();
        assert!(abs(m[1][0] - sin(0.8) / core::f64::consts::SQRT_2) < 1e-12);
        assert!(abs(m[1][1] + crate::math::cos(0.8)) < 1e-12);
        let c = solve_lr_pi_l(&t, r, &TOL);
        assert!(c
            .iter()
            .any(|c| c.branch == Branch::Special && contains(&[*c], [0.8, PI, 0.0], 1e-12)));
        let c = solve_lr_pi_l(&lrl(r, 0.0, PI, 0.8), r, &TOL);
        assert!(contains(&c, [0.0, PI, 0.8], 1e-12));
    }

    #[test]
    fn rl_pi_r_examples() {
        let r = radius(0.6);
        assert!(contains(
            &solve_rl_pi_r(&rlr(r, 1.1, PI, 0.4), r, &TOL),
            [1.1, PI, 0.4],
            1e-9
        ));
        let r = radius(FRAC_1_SQRT_2);
        assert!(contains(
            &solve_rl_pi_r(&rlr(r, 2.0, PI, 0.0), r, &TOL),
            [2.0, PI, 0.0],
            1e-12
        ));
        let t = lrl(r, 2.0, PI, 0.0);
        assert_eq!(
            solve_rl_pi_r(&t.reflect_xy(), r, &TOL),
            solve_lr_pi_l(&t, r, &TOL)
        );
    }
}
