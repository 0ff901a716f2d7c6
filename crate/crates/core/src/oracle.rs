//! Independent numerical ground truth: RK4 integration of the Sabban frame
//! equations and seeded round-trip instances.

use alloc::vec::Vec;

use crate::families::{solve, AngleTriple, Branch, PathFamily, SolverTolerances};
use crate::math::{PI, TAU};
use crate::planner::{compose_path, plan_family, PathSolution};
use crate::segments::TurningRadius;
use crate::so3::{Rotation, TargetMatrix};

/// SplitMix64 pseudo-random generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in the open interval `(0, 1)`.
    pub fn next_open_f64(&mut self) -> f64 {
        ((self.next_u64() >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
    }
}

/// A constant-control segment to integrate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeSpec {
    /// Geodesic curvature.
    pub u_g: f64,
    pub arc_length: f64,
    pub steps: usize,
}

const PROJECT_EVERY: usize = 100;

fn omega(u: f64) -> [[f64; 3]; 3] {
    [[0.0, -1.0, 0.0], [1.0, 0.0, -u], [0.0, u, 0.0]]
}

fn mul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

fn axpy(x: &[[f64; 3]; 3], h: f64, k: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = *x;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] += h * k[i][j];
        }
    }
    out
}

/// Integrates `R' = R Ω` from the identity with fixed-step RK4, projecting
/// back onto SO(3) every 100 steps.
pub fn integrate_segment(spec: &OdeSpec) -> Rotation {
    let steps = spec.steps.max(1);
    let h = spec.arc_length / steps as f64;
    let w = omega(spec.u_g);
    let mut x = Rotation::IDENTITY.rows();
    for i in 1..=steps {
        let k1 = mul(&x, &w);
        let k2 = mul(&axpy(&x, 0.5 * h, &k1), &w);
        let k3 = mul(&axpy(&x, 0.5 * h, &k2), &w);
        let k4 = mul(&axpy(&x, h, &k3), &w);
        for r in 0..3 {
            for c in 0..3 {
                x[r][c] += h / 6.0 * (k1[r][c] + 2.0 * k2[r][c] + 2.0 * k3[r][c] + k4[r][c]);
            }
        }
        if i % PROJECT_EVERY == 0 || i == steps {
            if let Some(p) = Rotation::nearest(x) {
                x = p.rows();
            }
        }
    }
    Rotation::from_rows_unchecked(x)
}

/// Draws angles from the family's valid ranges and composes the target.
pub fn random_instance(
    family: PathFamily,
    r: TurningRadius,
    seed: u64,
) -> (AngleTriple, TargetMatrix) {
    let mut rng = SplitMix64::new(seed);
    let phi1 = TAU * rng.next_f64();
    let phi3 = TAU * rng.next_f64();
    let phi2 = match family {
        PathFamily::Lgl | PathFamily::Rgr | PathFamily::Lgr | PathFamily::Rgl => {
            TAU * rng.next_f64()
        }
        PathFamily::LrPiL | PathFamily::RlPiR => PI,
        _ => PI + PI * rng.next_open_f64(),
    };
    let angles = AngleTriple::new(phi1, phi2, phi3);
    (angles, TargetMatrix::from(compose_path(family, &angles, r)))
}

/// Outcome of solving a forward-composed instance.
#[derive(Debug, Clone)]
pub struct RoundTrip {
    pub family: PathFamily,
    pub r: TurningRadius,
    pub seed: u64,
    pub angles: AngleTriple,
    pub alpha: TargetMatrix,
    /// Raw solver output before verification.
    pub general: usize,
    pub special: usize,
    /// Verified candidates of the generating family.
    pub verified: Vec<PathSolution>,
}

impl RoundTrip {
    pub fn success(&self) -> bool {
        !self.verified.is_empty()
    }

    pub fn min_residual(&self) -> Option<f64> {
        self.verified
            .iter()
            .map(|s| s.residual)
            .min_by(f64::total_cmp)
    }
}

pub fn round_trip(
    family: PathFamily,
    r: TurningRadius,
    seed: u64,
    tol: &SolverTolerances,
) -> RoundTrip {
    let (angles, alpha) = random_instance(family, r, seed);
    let raw = solve(family, &alpha, r, tol);
    let special = raw.iter().filter(|c| c.branch == Branch::Special).count();
    RoundTrip {
        family,
        r,
        seed,
        angles,
        alpha,
        general: raw.len() - special,
        special,
        verified: plan_family(family, &alpha, r, tol),
    }
}
