//! Four tight turns with equal interior angles.

use alloc::vec::Vec;

use super::{push_products, Candidate, Entries, SolverTolerances};
use crate::math::{abs, atan2, cos, sin, sqrt};
use crate::roots::{clamp_unit, quadratic, solve_trig_linear, upper_half_angle};
use crate::segments::TurningRadius;
use crate::so3::TargetMatrix;

pub fn solve_lrlr(
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
    let mut out = Vec::new();

    let rhs = a11 * (r2 - 1.0) + r * (a13 * q - a31 * q + a33 * r);
    let k2 = 8.0 * r4 * (r2 - 1.0);
    let k1 = -8.0 * (r2 - 3.0 * r4 + 2.0 * r6);
    let k0 = -1.0 + 10.0 * r2 - 16.0 * r4 + 8.0 * r6;
    let poly = |c: f64| (k2 * c + k1) * c + k0;

    let w = 4.0 * r2 * (1.0 - r2);
    let rhs1 = a11 * (1.0 - r2) + r * (-a13 * q - a31 * q + a33 * r);
    let rhs3 = (1.0 - r2) * a11 + r * q * (a13 + a31) + r2 * a33;
    for raw in quadratic(k2, k1, k0 - rhs, tol.clamp_eps) {
        let Some(c) = clamp_unit(raw, tol.clamp_eps) else {
            continue;
        };
        let Some(phi2) = upper_half_angle(c, tol.degenerate_eps) else {
            continue;
        };
        let g = 2.0 * r2 * c - 2.0 * r2 + 1.0;
        if abs(g) <= tol.degenerate_eps {
            continue;
        }
        let s = sin(phi2);
        let a = w * g * ((2.0 * r2 - 1.0) * c - 2.0 * r2 + 2.0);
        let b = -w * g * s;
        let cc = (2.0 * r2 - 1.0)
            * (12.0 * r6 - 20.0 * r4 + 10.0 * r2 + 4.0 * (r2 - 1.0) * r4 * cos(2.0 * phi2)
                - 8.0 * (2.0 * r6 - 3.0 * r4 + r2) * c
                - 1.0);
        let phi1s = solve_trig_linear(a, b, rhs1 - cc, tol.clamp_eps);
        let phi3s = solve_trig_linear(a, b, rhs3 - cc, tol.clamp_eps);
        push_products(&mut out, &phi1s, phi2, &phi3s);
    }

    // At cos φ₂ = 1 − 1/(2r²) the quadratic has a double root and the φ₁
    // equation vanishes identically; only φ₁ + φ₃ is determined.
    let c_star = 1.0 - 1.0 / (2.0 * r2);
    if c_star >= -1.0 && abs(poly(c_star) - rhs) <= tol.degenerate_eps {
        if let Some(phi2) = upper_half_angle(c_star, tol.degenerate_eps) {
            let t = sqrt(4.0 * r2 - 1.0);
            let m = [
                [t / (2.0 * r), (2.0 * r2 - 1.0) / (2.0 * r)],
                [-(2.0 * r2 - 1.0) / (2.0 * r2), t / (2.0 * r2)],
            ];
            if let Some(phi1) = solve_unit_pair(m, [a12, a22]) {
                out.push(Candidate::special(phi1, phi2, 0.0));
            }
        }
    }
    out
}

/// Solves `M (cos θ, sin θ)ᵀ = v` by Cramer's rule and returns `θ` when the
/// solution lies on the unit circle within `1e-8`.
pub(crate) fn solve_unit_pair(m: [[f64; 2]; 2], v: [f64; 2]) -> Option<f64> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det == 0.0 {
        return None;
    }
    let c = (v[0] * m[1][1] - m[0][1] * v[1]) / det;
    let s = (m[0][0] * v[1] - m[1][0] * v[0]) / det;
    if abs(c * c + s * s - 1.0) > 1e-8 {
        return None;
    }
    Some(atan2(s, c))
}

pub fn solve_rlrl(
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Vec<Candidate> {
    solve_lrlr(&alpha.reflect_xy(), r, tol)
}
