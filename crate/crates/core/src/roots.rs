//! Scalar root finding used by the family solvers.

use arrayvec::ArrayVec;

use crate::math::{abs, acos, atan2, cbrt, cos, hypot, sqrt, wrap_angle, PI, TAU};

/// All `φ ∈ [0, 2π)` with `A cos φ + B sin φ = C`, sorted and deduplicated.
///
/// A ratio `|C| / √(A² + B²)` that exceeds one by at most `clamp_eps` is
/// clamped to the tangent solution. Returns nothing when `A = B = 0`.
pub fn solve_trig_linear(a: f64, b: f64, c: f64, clamp_eps: f64) -> ArrayVec<f64, 2> {
    let mut out = ArrayVec::new();
    let h = hypot(a, b);
    if !(h > 0.0) || !c.is_finite() {
        return out;
    }
    let Some(x) = clamp_unit(c / h, clamp_eps) else {
        return out;
    };
    let beta = atan2(b, a);
    let d = acos(x);
    let p = wrap_angle(beta + d);
    let m = wrap_angle(beta - d);
    out.push(p);
    if m != p {
        out.push(m);
    }
    if out.len() == 2 && out[0] > out[1] {
        out.swap(0, 1);
    }
    out
}

/// Clamps `x` into `[−1, 1]` if it overshoots by at most `eps`.
pub fn clamp_unit(x: f64, eps: f64) -> Option<f64> {
    if !x.is_finite() {
        None
    } else if x > 1.0 {
        (x <= 1.0 + eps).then_some(1.0)
    } else if x < -1.0 {
        (x >= -1.0 - eps).then_some(-1.0)
    } else {
        Some(x)
    }
}

/// Representative of `acos(c)` in `(π, 2π)`, that is `2π − acos(c)`.
///
/// Rejected when it lies within `slack` of `2π`; the value `π` itself
/// (`c = −1`) is kept.
pub fn upper_half_angle(c: f64, slack: f64) -> Option<f64> {
    let a = acos(c);
    if a <= slack {
        None
    } else {
        Some(TAU - a)
    }
}

/// Real roots of `a x² + b x + c = 0`.
///
/// A negative discriminant no smaller than `-disc_eps` is treated as zero.
/// Degenerates to the linear case when `a` vanishes.
pub fn quadratic(a: f64, b: f64, c: f64, disc_eps: f64) -> ArrayVec<f64, 2> {
    let mut out = ArrayVec::new();
    let scale = abs(a).max(abs(b)).max(abs(c));
    if !(scale > 0.0) || !scale.is_finite() {
        return out;
    }
    let (a, b, c) = (a / scale, b / scale, c / scale);
    if abs(a) < 1e-14 {
        if abs(b) > 1e-14 {
            out.push(-c / b);
        }
        return out;
    }
    let mut disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        if disc < -disc_eps {
            return out;
        }
        disc = 0.0;
    }
    let sq = sqrt(disc);
    let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
    if q == 0.0 {
        out.push(0.0);
        return out;
    }
    let x1 = q / a;
    let x2 = c / q;
    out.push(x1.min(x2));
    if x1 != x2 {
        out.push(x1.max(x2));
    }
    out
}

/// Real roots of `a x³ + b x² + c x + d = 0`, ascending.
///
/// Uses Cardano's formula for one real root and the trigonometric form for
/// three, then one Newton step per root on the monic cubic.
pub fn cubic(a: f64, b: f64, c: f64, d: f64, disc_eps: f64) -> ArrayVec<f64, 3> {
    let mut out = ArrayVec::new();
    let scale = abs(a).max(abs(b)).max(abs(c)).max(abs(d));
    if !(scale > 0.0) || !scale.is_finite() {
        return out;
    }
    if abs(a) < 1e-14 * scale {
        out.extend(quadratic(b, c, d, disc_eps));
        return out;
    }
    let (p2, p1, p0) = (b / a, c / a, d / a);
    // depressed cubic t³ + p t + q with x = t − p2/3
    let shift = p2 / 3.0;
    let p = p1 - p2 * p2 / 3.0;
    let q = 2.0 * p2 * p2 * p2 / 27.0 - p2 * p1 / 3.0 + p0;
    let half_q = q / 2.0;
    let third_p = p / 3.0;
    let disc = half_q * half_q + third_p * third_p * third_p;
    let tiny = 1e-14 * (1.0 + half_q * half_q + abs(third_p * third_p * third_p));
    if disc > tiny {
        let s = sqrt(disc);
        let u = cbrt(-half_q + if half_q <= 0.0 { s } else { -s });
        let t = if u != 0.0 { u - third_p / u } else { 0.0 };
        out.push(t - shift);
    } else if third_p < 0.0 {
        let m = 2.0 * sqrt(-third_p);
        let arg = (half_q / (third_p * sqrt(-third_p))).clamp(-1.0, 1.0);
        let theta = acos(arg) / 3.0;
        for k in 0..3 {
            out.push(m * cos(theta - 2.0 * PI * k as f64 / 3.0) - shift);
        }
    } else {
        // triple root
        out.push(-shift);
    }
    let f = |x: f64| ((x + p2) * x + p1) * x + p0;
    let df = |x: f64| (3.0 * x + 2.0 * p2) * x + p1;
    for x in out.iter_mut() {
        let fx = f(*x);
        let dfx = df(*x);
        if dfx != 0.0 {
            let y = *x - fx / dfx;
            if y.is_finite() && abs(f(y)) < abs(fx) {
                *x = y;
            }
        }
    }
    out.as_mut_slice().sort_by(f64::total_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::sin;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| abs(x - y) <= tol)
    }

    #[test]
    fn trig_linear_examples() {
        assert!(close(
            &solve_trig_linear(1.0, 0.0, 1.0, 1e-10),
            &[0.0],
            1e-15
        ));
        assert!(close(
            &solve_trig_linear(0.0, 1.0, 0.0, 1e-10),
            &[0.0, PI],
            1e-15
        ));
        assert!(close(
            &solve_trig_linear(1.0, 1.0, 1.0, 1e-10),
            &[0.0, PI / 2.0],
            1e-15
        ));
        assert!(solve_trig_linear(0.0, 0.0, 0.0, 1e-10).is_empty());
        assert!(solve_trig_linear(1.0, 0.0, 1.0 + 1e-6, 1e-10).is_empty());
        assert!(close(
            &solve_trig_linear(1.0, 0.0, 1.0 + 1e-11, 1e-10),
            &[0.0],
            1e-15
        ));
    }

    #[test]
    fn trig_linear_roots_satisfy_equation() {
        let mut rng = crate::oracle::SplitMix64::new(61);
        for _ in 0..1000 {
            let a = 4.0 * rng.next_f64() - 2.0;
            let b = 4.0 * rng.next_f64() - 2.0;
            let c = 4.0 * rng.next_f64() - 2.0;
            for phi in solve_trig_linear(a, b, c, 1e-10) {
                assert!((0.0..TAU).contains(&phi));
                assert!(abs(a * cos(phi) + b * sin(phi) - c) < 1e-12);
            }
        }
    }

    #[test]
    fn quadratic_cases() {
        assert!(close(&quadratic(1.0, -3.0, 2.0, 1e-12), &[1.0, 2.0], 1e-15));
        assert!(close(&quadratic(1.0, -2.0, 1.0, 1e-12), &[1.0], 1e-15));
        assert!(quadratic(1.0, 0.0, 1.0, 1e-12).is_empty());
        assert!(close(&quadratic(0.0, 2.0, -1.0, 1e-12), &[0.5], 1e-15));
        // cancellation-prone coefficients
        let r = quadratic(1.0, -1e8, 1.0, 1e-12);
        assert!(abs(r[0] - 1e-8) < 1e-22);
    }

    #[test]
    fn cubic_cases() {
        assert!(close(
            &cubic(1.0, -6.0, 11.0, -6.0, 1e-12),
            &[1.0, 2.0, 3.0],
            1e-12
        ));
        assert!(close(&cubic(1.0, 0.0, 0.0, -8.0, 1e-12), &[2.0], 1e-12));
        assert!(close(&cubic(1.0, -3.0, 3.0, -1.0, 1e-12), &[1.0], 1e-5));
        assert!(close(
            &cubic(0.0, 1.0, -3.0, 2.0, 1e-12),
            &[1.0, 2.0],
            1e-12
        ));
    }

    #[test]
    fn cubic_roots_satisfy_equation() {
        let mut rng = crate::oracle::SplitMix64::new(67);
        for _ in 0..1000 {
            let roots = [
                2.0 * rng.next_f64() - 1.0,
                2.0 * rng.next_f64() - 1.0,
                2.0 * rng.next_f64() - 1.0,
            ];
            let k = 0.1 + rng.next_f64();
            let (x, y, z) = (roots[0], roots[1], roots[2]);
            let got = cubic(
                k,
                -k * (x + y + z),
                k * (x * y + y * z + x * z),
                -k * x * y * z,
                1e-12,
            );
            assert!(!got.is_empty() && got.len() <= 3);
            for g in &got {
                let f = k * (g - x) * (g - y) * (g - z);
                assert!(abs(f) < 1e-9, "{f}");
            }
        }
    }

    #[test]
    fn upper_half() {
        assert_eq!(upper_half_angle(-1.0, 1e-9), Some(PI));
        assert_eq!(upper_half_angle(1.0, 1e-9), None);
        assert!(abs(upper_half_angle(0.0, 1e-9).unwrap() - 1.5 * PI) < 1e-15);
    }
}
