//! Turn, great-circle arc, turn.

use alloc::vec::Vec;

use super::{both_branches, push_products, Candidate, Entries, SolverTolerances};
use crate::math::{abs, atan2, sin};
use crate::roots::{clamp_unit, solve_trig_linear};
use crate::segments::TurningRadius;
use crate::so3::TargetMatrix;

/// Shared body of LGL and RGR. `sign` is `+1` for LGL and `−1` for RGR and
/// flips every term that is odd in `√(1−r²)`.
fn solve_same_side(e: &Entries, sign: f64, tol: &SolverTolerances) -> Vec<Candidate> {
    let Entries {
        a11,
        a13,
        a31,
        a33,
        a21,
        a22,
        r,
        q,
        ..
    } = *e;
    let r2 = r * r;
    let mut out = Vec::new();
    let raw = (a11 + sign * r * q * (a13 + a31) + r2 * (a33 - a11 - 1.0)) / (1.0 - r2);
    let Some(c2) = clamp_unit(raw, tol.clamp_eps) else {
        return out;
    };
    let rhs1 = (a33 - a11) * r + sign * (-a13 * r2 / q + a31 * q);
    let rhs3 = (a33 - a11) * r + sign * (a13 * q - a31 * r2 / q);
    for phi2 in both_branches(c2) {
        let a = r * (1.0 - c2);
        let b = sin(phi2);
        let phi1s = solve_trig_linear(a, b, rhs1, tol.clamp_eps);
        let phi3s = solve_trig_linear(a, b, rhs3, tol.clamp_eps);
        push_products(&mut out, &phi1s, phi2, &phi3s);
    }
    if 1.0 - c2 <= tol.degenerate_eps {
        // a zero great-circle arc merges the two turns into one
        out.push(Candidate::special(atan2(a21, r * a22), 0.0, 0.0));
    }
    out
}

pub fn solve_lgl(alpha: &TargetMatrix, r: TurningRadius, tol: &SolverTolerances) -> Vec<Candidate> {
    solve_same_side(&Entries::new(alpha, r), 1.0, tol)
}

pub fn solve_rgr(alpha: &TargetMatrix, r: TurningRadius, tol: &SolverTolerances) -> Vec<Candidate> {
    solve_same_side(&Entries::new(alpha, r), -1.0, tol)
}

pub fn solve_lgr(alpha: &TargetMatrix, r: TurningRadius, tol: &SolverTolerances) -> Vec<Candidate> {
    let Entries {
        a11,
        a13,
        a31,
        a33,
        a21,
        a22,
        r,
        q,
        ..
    } = Entries::new(alpha, r);
    let r2 = r * r;
    let mut out = Vec::new();
    let raw = ((1.0 - r2) * a11 + r * q * (a31 - a13) + r2 * (1.0 - a33)) / (1.0 - r2);
    let Some(c2) = clamp_unit(raw, tol.clamp_eps) else {
        return out;
    };
    let rhs1 = r * q * a11 - (1.0 - r2) * a31 - r2 * a13 + r * q * a33;
    let rhs3 = r * q * a11 + r2 * a31 + (1.0 - r2) * a13 + r * q * a33;
    for phi2 in both_branches(c2) {
        let a = r * q * (c2 + 1.0);
        let b = -q * sin(phi2);
        let phi1s = solve_trig_linear(a, b, rhs1, tol.clamp_eps);
        let phi3s = solve_trig_linear(a, b, rhs3, tol.clamp_eps);
        push_products(&mut out, &phi1s, phi2, &phi3s);
    }
    if abs(1.0 + c2) <= tol.degenerate_eps {
        // a half great circle: only φ₁ + φ₃ is determined
        out.push(Candidate::special(
            atan2(-a21, -r * a22),
            crate::math::PI,
            0.0,
        ));
    }
    out
}

pub fn solve_rgl(alpha: &TargetMatrix, r: TurningRadius, tol: &SolverTolerances) -> Vec<Candidate> {
    solve_lgr(&alpha.reflect_xy(), r, tol)
}
