//! The three motion primitives: great-circle arcs and tight left and right
//! turns of radius `r` on the unit sphere.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{cos, sin, sqrt};
use crate::so3::{Configuration, Rotation, Vector3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    GreatCircle,
    LeftTurn,
    RightTurn,
}

impl SegmentKind {
    pub const fn letter(self) -> char {
        match self {
            SegmentKind::GreatCircle => 'G',
            SegmentKind::LeftTurn => 'L',
            SegmentKind::RightTurn => 'R',
        }
    }
}

/// Radius of a tight turn on the unit sphere, strictly inside `(0, 1)`.
///
/// Values within about `1e-6` of either end are accepted but poorly
/// conditioned.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TurningRadius(f64);

impl TurningRadius {
    pub fn new(r: f64) -> Result<Self> {
        if r > 0.0 && r < 1.0 {
            Ok(Self(r))
        } else {
            Err(Error::TurningRadius(r))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `√(1 − r²)`.
    #[inline]
    pub fn cofactor(self) -> f64 {
        sqrt(1.0 - self.0 * self.0)
    }
}

impl From<TurningRadius> for f64 {
    fn from(r: TurningRadius) -> f64 {
        r.0
    }
}

/// Rotation about the frame's z-axis by `phi`.
pub fn rot_g(phi: f64) -> Rotation {
    let (s, c) = (sin(phi), cos(phi));
    Rotation::from_rows_unchecked([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

pub fn rot_l(r: TurningRadius, phi: f64) -> Rotation {
    let (r, q) = (r.get(), r.cofactor());
    let (s, c) = (sin(phi), cos(phi));
    let v = 1.0 - c;
    Rotation::from_rows_unchecked([
        [1.0 - v * r * r, -r * s, v * r * q],
        [r * s, c, -s * q],
        [v * r * q, s * q, c + v * r * r],
    ])
}

pub fn rot_r(r: TurningRadius, phi: f64) -> Rotation {
    let (r, q) = (r.get(), r.cofactor());
    let (s, c) = (sin(phi), cos(phi));
    let v = 1.0 - c;
    Rotation::from_rows_unchecked([
        [1.0 - v * r * r, -r * s, -v * r * q],
        [r * s, c, s * q],
        [-v * r * q, -s * q, c + v * r * r],
    ])
}

/// Axis of the left-turn rotation, `(√(1−r²), 0, r)`.
pub fn axial_left(r: TurningRadius) -> Vector3 {
    [r.cofactor(), 0.0, r.get()]
}

/// Axis of the right-turn rotation, `(−√(1−r²), 0, r)`.
pub fn axial_right(r: TurningRadius) -> Vector3 {
    [-r.cofactor(), 0.0, r.get()]
}

/// Magnitude of the geodesic curvature on a tight turn.
pub fn u_max(r: TurningRadius) -> f64 {
    r.cofactor() / r.get()
}

/// Signed geodesic curvature control for a segment kind.
pub fn curvature(kind: SegmentKind, r: TurningRadius) -> f64 {
    match kind {
        SegmentKind::GreatCircle => 0.0,
        SegmentKind::LeftTurn => u_max(r),
        SegmentKind::RightTurn => -u_max(r),
    }
}

pub fn segment_rotation(kind: SegmentKind, r: TurningRadius, phi: f64) -> Rotation {
    match kind {
        SegmentKind::GreatCircle => rot_g(phi),
        SegmentKind::LeftTurn => rot_l(r, phi),
        SegmentKind::RightTurn => rot_r(r, phi),
    }
}

pub fn segment_length(kind: SegmentKind, r: TurningRadius, phi: f64) -> f64 {
    match kind {
        SegmentKind::GreatCircle => phi,
        SegmentKind::LeftTurn | SegmentKind::RightTurn => r.get() * phi,
    }
}

/// `n` evenly spaced configurations from `start` to the end of the segment,
/// both endpoints included.
pub fn sample_segment(
    start: &Configuration,
    kind: SegmentKind,
    r: TurningRadius,
    phi: f64,
    n: usize,
) -> Result<Vec<Configuration>> {
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    let last = (n - 1) as f64;
    let mut out = Vec::with_capacity(n);
    out.push(*start);
    for k in 1..n {
        let seg = segment_rotation(kind, r, phi * k as f64 / last);
        out.push(start.advance(&seg));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{abs, FRAC_1_SQRT_2, PI, TAU};
    use crate::oracle::SplitMix64;
    use crate::so3::{dot, norm, rotation_distance};

    fn radius(r: f64) -> TurningRadius {
        TurningRadius::new(r).unwrap()
    }

    fn dist3(a: Vector3, b: Vector3) -> f64 {
        sqrt((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2))
    }

    #[test]
    fn radius_bounds() {
        assert!(TurningRadius::new(0.0).is_err());
        assert!(TurningRadius::new(1.0).is_err());
        assert!(TurningRadius::new(-0.2).is_err());
        assert!(TurningRadius::new(f64::NAN).is_err());
        assert!(TurningRadius::new(1e-7).is_ok());
        assert!(TurningRadius::new(1.0 - 1e-7).is_ok());
    }

    #[test]
    fn rot_g_values() {
        assert_eq!(rot_g(0.0), Rotation::IDENTITY);
        let half = rot_g(PI).rows();
        assert_eq!([half[0][0], half[1][1], half[2][2]], [-1.0, -1.0, 1.0]);
        assert!(abs(half[0][1]) < 1e-15 && abs(half[1][0]) < 1e-15);
        let q = rot_g(PI / 2.0);
        let want =
            Rotation::from_rows_unchecked([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(rotation_distance(&q, &want) < 1e-15);
    }

    #[test]
    fn rot_l_values() {
        for r in [0.1, 0.5, 0.9] {
            assert_eq!(rot_l(radius(r), 0.0), Rotation::IDENTITY);
            assert_eq!(rot_r(radius(r), 0.0), Rotation::IDENTITY);
        }
        let m = rot_l(radius(0.5), PI).rows();
        assert!(abs(m[0][0] - 0.5) < 1e-15);
        assert!(abs(m[1][1] + 1.0) < 1e-15);
    }

    #[test]
    fn turns_are_rotations() {
        let mut rng = SplitMix64::new(41);
        for _ in 0..50 {
            let r = radius(0.05 + 0.9 * rng.next_f64());
            let phi = TAU * rng.next_f64();
            for m in [rot_l(r, phi), rot_r(r, phi)] {
                assert!(m.orthonormality_error() < 1e-14);
                assert!(abs(m.det() - 1.0) < 1e-14);
            }
        }
    }

    #[test]
    fn rot_r_is_reflected_rot_l() {
        let mut rng = SplitMix64::new(43);
        for _ in 0..50 {
            let r = radius(0.05 + 0.9 * rng.next_f64());
            let phi = TAU * rng.next_f64();
            assert!(rotation_distance(&rot_r(r, phi), &rot_l(r, phi).reflect_xy()) < 1e-12);
            assert!(rotation_distance(&rot_g(phi), &rot_g(phi).reflect_xy()) < 1e-15);
        }
    }

    #[test]
    fn axial_vectors() {
        let r = radius(0.6);
        assert!(dist3(axial_left(r), [0.8, 0.0, 0.6]) < 1e-15);
        assert!(dist3(axial_right(r), [-0.8, 0.0, 0.6]) < 1e-15);
        for (rv, want) in [(0.3, -0.82), (0.5, -0.5), (FRAC_1_SQRT_2, 0.0)] {
            let r = radius(rv);
            assert!(abs(norm(axial_left(r)) - 1.0) < 1e-14);
            assert!(abs(dot(axial_left(r), axial_right(r)) - want) < 1e-15);
        }
    }

    #[test]
    fn axial_fixed_points() {
        let mut rng = SplitMix64::new(47);
        for _ in 0..50 {
            let r = radius(0.6);
            let phi = TAU * rng.next_f64();
            assert!(dist3(rot_l(r, phi).apply(axial_left(r)), axial_left(r)) < 1e-12);
            assert!(dist3(rot_r(r, phi).apply(axial_right(r)), axial_right(r)) < 1e-12);
        }
    }

    #[test]
    fn one_parameter_subgroups() {
        let mut rng = SplitMix64::new(53);
        for _ in 0..100 {
            let r = radius(0.05 + 0.9 * rng.next_f64());
            let a = TAU * rng.next_f64();
            let b = TAU * rng.next_f64();
            let sum = crate::math::wrap_angle(a + b);
            for kind in [
                SegmentKind::GreatCircle,
                SegmentKind::LeftTurn,
                SegmentKind::RightTurn,
            ] {
                let lhs = segment_rotation(kind, r, a) * segment_rotation(kind, r, b);
                assert!(rotation_distance(&lhs, &segment_rotation(kind, r, sum)) < 1e-11);
            }
        }
    }

    #[test]
    fn lengths() {
        let r = radius(0.5);
        assert_eq!(segment_length(SegmentKind::GreatCircle, r, 1.3), 1.3);
        assert_eq!(segment_length(SegmentKind::LeftTurn, r, 2.0), 1.0);
        assert_eq!(segment_length(SegmentKind::RightTurn, r, 0.0), 0.0);
        assert!(abs(u_max(radius(0.6)) - 0.8 / 0.6) < 1e-15);
    }

    #[test]
    fn sampling() {
        let r = radius(0.4);
        let s = sample_segment(
            &Configuration::IDENTITY,
            SegmentKind::GreatCircle,
            r,
            0.0,
            2,
        )
        .unwrap();
        assert_eq!(
            s,
            alloc::vec![Configuration::IDENTITY, Configuration::IDENTITY]
        );

        let start = Configuration::new(rot_g(0.7) * rot_r(r, 1.0)).unwrap();
        let s = sample_segment(&start, SegmentKind::LeftTurn, r, 2.5, 17).unwrap();
        assert_eq!(s.len(), 17);
        assert_eq!(s[0], start);
        let end = start.rotation().compose(&rot_l(r, 2.5));
        assert!(rotation_distance(s[16].rotation(), &end) < 1e-12);
        for c in &s {
            assert!(abs(norm(c.position()) - 1.0) < 1e-12);
        }
        assert_eq!(
            sample_segment(&start, SegmentKind::LeftTurn, r, 1.0, 1),
            Err(Error::TooFewSamples(1))
        );
    }
}
