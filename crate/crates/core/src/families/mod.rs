//! Closed-form arc-angle solvers for the twelve path families.
//!
//! Every solver takes the target rotation `α`, the turning radius and the
//! solver tolerances and returns every angle triple that satisfies the scalar
//! conditions it derives from the matrix equation. Those conditions are
//! necessary but not sufficient, so callers must verify each triple by forward
//! composition (see [`crate::planner::verify_candidate`]).
//!
//! R-leading families are solved by reflecting `α` about the XY plane and
//! reusing the L-leading solver. RLR instead swaps the boundary pair and
//! reverses the LRL triple.

mod ccc;
mod cccc;
mod ccccc;
mod cgc;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use arrayvec::ArrayVec;

use crate::error::{Error, Result};
use crate::math::{acos, wrap_angle, PI, TAU};
use crate::segments::{SegmentKind, TurningRadius};
use crate::so3::TargetMatrix;

pub use ccc::{solve_lr_pi_l, solve_lrl, solve_rl_pi_r, solve_rlr};
pub use cccc::{solve_lrlr, solve_rlrl};
pub use ccccc::{solve_lrlrl, solve_rlrlr};
pub use cgc::{solve_lgl, solve_lgr, solve_rgl, solve_rgr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathFamily {
    Lgl,
    Rgr,
    Lgr,
    Rgl,
    Lrl,
    Rlr,
    LrPiL,
    RlPiR,
    Lrlr,
    Rlrl,
    Lrlrl,
    Rlrlr,
}

use SegmentKind::{GreatCircle as G, LeftTurn as L, RightTurn as R};

impl PathFamily {
    /// All families in tie-break order.
    pub const ALL: [PathFamily; 12] = [
        PathFamily::Lgl,
        PathFamily::Rgr,
        PathFamily::Lgr,
        PathFamily::Rgl,
        PathFamily::Lrl,
        PathFamily::Rlr,
        PathFamily::LrPiL,
        PathFamily::RlPiR,
        PathFamily::Lrlr,
        PathFamily::Rlrl,
        PathFamily::Lrlrl,
        PathFamily::Rlrlr,
    ];

    pub const fn label(self) -> &'static str {
        match self {
            PathFamily::Lgl => "LGL",
            PathFamily::Rgr => "RGR",
            PathFamily::Lgr => "LGR",
            PathFamily::Rgl => "RGL",
            PathFamily::Lrl => "LRL",
            PathFamily::Rlr => "RLR",
            PathFamily::LrPiL => "LRpiL",
            PathFamily::RlPiR => "RLpiR",
            PathFamily::Lrlr => "LRLR",
            PathFamily::Rlrl => "RLRL",
            PathFamily::Lrlrl => "LRLRL",
            PathFamily::Rlrlr => "RLRLR",
        }
    }

    /// Position in [`PathFamily::ALL`].
    pub const fn index(self) -> usize {
        self as usize
    }

    /// The family with every L and R exchanged.
    pub const fn mirror(self) -> PathFamily {
        match self {
            PathFamily::Lgl => PathFamily::Rgr,
            PathFamily::Rgr => PathFamily::Lgl,
            PathFamily::Lgr => PathFamily::Rgl,
            PathFamily::Rgl => PathFamily::Lgr,
            PathFamily::Lrl => PathFamily::Rlr,
            PathFamily::Rlr => PathFamily::Lrl,
            PathFamily::LrPiL => PathFamily::RlPiR,
            PathFamily::RlPiR => PathFamily::LrPiL,
            PathFamily::Lrlr => PathFamily::Rlrl,
            PathFamily::Rlrl => PathFamily::Lrlr,
            PathFamily::Lrlrl => PathFamily::Rlrlr,
            PathFamily::Rlrlr => PathFamily::Lrlrl,
        }
    }

    /// Segment kinds in travel order.
    pub const fn kinds(self) -> &'static [SegmentKind] {
        match self {
            PathFamily::Lgl => &[L, G, L],
            PathFamily::Rgr => &[R, G, R],
            PathFamily::Lgr => &[L, G, R],
            PathFamily::Rgl => &[R, G, L],
            PathFamily::Lrl | PathFamily::LrPiL => &[L, R, L],
            PathFamily::Rlr | PathFamily::RlPiR => &[R, L, R],
            PathFamily::Lrlr => &[L, R, L, R],
            PathFamily::Rlrl => &[R, L, R, L],
            PathFamily::Lrlrl => &[L, R, L, R, L],
            PathFamily::Rlrlr => &[R, L, R, L, R],
        }
    }

    /// Segment kinds paired with their arc angles. Interior segments of the
    /// four- and five-segment families share `phi2`; the middle turn of
    /// LRpiL and RLpiR is always a half turn.
    pub fn segments(self, angles: &AngleTriple) -> ArrayVec<(SegmentKind, f64), 5> {
        let kinds = self.kinds();
        let n = kinds.len();
        let mut out = ArrayVec::new();
        for (i, &k) in kinds.iter().enumerate() {
            let phi = if i == 0 {
                angles.phi1
            } else if i == n - 1 {
                angles.phi3
            } else if matches!(self, PathFamily::LrPiL | PathFamily::RlPiR) {
                PI
            } else {
                angles.phi2
            };
            out.push((k, phi));
        }
        out
    }

    /// Upper bound on general-branch candidates emitted by the solver.
    pub const fn max_general_candidates(self) -> usize {
        match self {
            PathFamily::Lgl | PathFamily::Rgr | PathFamily::Lgr | PathFamily::Rgl => 8,
            PathFamily::Lrl | PathFamily::Rlr | PathFamily::LrPiL | PathFamily::RlPiR => 4,
            PathFamily::Lrlr | PathFamily::Rlrl => 8,
            PathFamily::Lrlrl | PathFamily::Rlrlr => 12,
        }
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownFamily;

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown path family")
    }
}

impl FromStr for PathFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        PathFamily::ALL
            .into_iter()
            .find(|f| f.label().eq_ignore_ascii_case(s))
            .ok_or(UnknownFamily)
    }
}

const ANGLE_SNAP: f64 = 1e-14;

fn canonical(x: f64) -> f64 {
    let w = wrap_angle(x);
    if w < ANGLE_SNAP || TAU - w < ANGLE_SNAP {
        0.0
    } else {
        w
    }
}

/// Arc angles `(φ₁, φ₂, φ₃)`, each in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AngleTriple {
    pub phi1: f64,
    pub phi2: f64,
    pub phi3: f64,
}

impl AngleTriple {
    /// Wraps each component into `[0, 2π)`. Components within `1e-14` of a
    /// full turn or of zero become exactly zero.
    pub fn new(phi1: f64, phi2: f64, phi3: f64) -> Self {
        Self {
            phi1: canonical(phi1),
            phi2: canonical(phi2),
            phi3: canonical(phi3),
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.phi1, self.phi2, self.phi3]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverTolerances {
    /// Allowed overshoot of a cosine beyond `±1` that is clamped.
    pub clamp_eps: f64,
    /// Frobenius acceptance threshold for verification.
    pub residual_tol: f64,
    /// Threshold for routing to special-case branches.
    pub degenerate_eps: f64,
}

impl Default for SolverTolerances {
    fn default() -> Self {
        Self {
            clamp_eps: 1e-10,
            residual_tol: 1e-9,
            degenerate_eps: 1e-9,
        }
    }
}

impl SolverTolerances {
    pub fn validate(self) -> Result<Self> {
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if positive(self.clamp_eps)
            && positive(self.residual_tol)
            && positive(self.degenerate_eps)
            && self.clamp_eps < 1e-6
        {
            Ok(self)
        } else {
            Err(Error::Tolerances)
        }
    }
}

/// Which derivation produced a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    General,
    /// A special-case branch where the general equations lose rank and one
    /// free angle is fixed at zero.
    Special,
}

impl Branch {
    pub const fn label(self) -> &'static str {
        match self {
            Branch::General => "general",
            Branch::Special => "special",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub angles: AngleTriple,
    pub branch: Branch,
}

impl Candidate {
    pub(crate) fn general(phi1: f64, phi2: f64, phi3: f64) -> Self {
        Self {
            angles: AngleTriple::new(phi1, phi2, phi3),
            branch: Branch::General,
        }
    }

    pub(crate) fn special(phi1: f64, phi2: f64, phi3: f64) -> Self {
        Self {
            angles: AngleTriple::new(phi1, phi2, phi3),
            branch: Branch::Special,
        }
    }
}

/// Runs the solver for `family`.
pub fn solve(
    family: PathFamily,
    alpha: &TargetMatrix,
    r: TurningRadius,
    tol: &SolverTolerances,
) -> Vec<Candidate> {
    match family {
        PathFamily::Lgl => solve_lgl(alpha, r, tol),
        PathFamily::Rgr => solve_rgr(alpha, r, tol),
        PathFamily::Lgr => solve_lgr(alpha, r, tol),
        PathFamily::Rgl => solve_rgl(alpha, r, tol),
        PathFamily::Lrl => solve_lrl(alpha, r, tol),
        PathFamily::Rlr => solve_rlr(alpha, r, tol),
        PathFamily::LrPiL => solve_lr_pi_l(alpha, r, tol),
        PathFamily::RlPiR => solve_rl_pi_r(alpha, r, tol),
        PathFamily::Lrlr => solve_lrlr(alpha, r, tol),
        PathFamily::Rlrl => solve_rlrl(alpha, r, tol),
        PathFamily::Lrlrl => solve_lrlrl(alpha, r, tol),
        PathFamily::Rlrlr => solve_rlrlr(alpha, r, tol),
    }
}

/// Shared scalar quantities of a target.
#[derive(Clone, Copy)]
pub(crate) struct Entries {
    pub a11: f64,
    pub a12: f64,
    pub a13: f64,
    pub a21: f64,
    pub a22: f64,
    pub a31: f64,
    pub a33: f64,
    pub r: f64,
    pub q: f64,
}

impl Entries {
    pub fn new(alpha: &TargetMatrix, r: TurningRadius) -> Self {
        let m = alpha.rows();
        Self {
            a11: m[0][0],
            a12: m[0][1],
            a13: m[0][2],
            a21: m[1][0],
            a22: m[1][1],
            a31: m[2][0],
            a33: m[2][2],
            r: r.get(),
            q: r.cofactor(),
        }
    }
}

/// Both angles in `[0, 2π)` with cosine `c`, deduplicated.
pub(crate) fn both_branches(c: f64) -> ArrayVec<f64, 2> {
    let mut out = ArrayVec::new();
    let a = acos(c);
    out.push(a);
    let b = TAU - a;
    if b < TAU && b != a {
        out.push(b);
    }
    out
}

/// Emits every combination of the supplied outer angles with `phi2`.
pub(crate) fn push_products(out: &mut Vec<Candidate>, phi1s: &[f64], phi2: f64, phi3s: &[f64]) {
    for &p1 in phi1s {
        for &p3 in phi3s {
            out.push(Candidate::general(p1, phi2, p3));
        }
    }
}
