//! Rotation-matrix arithmetic on SO(3).
//!
//! Configurations, segment motions and boundary targets are all proper
//! rotation matrices. A configuration stores the Sabban frame column-wise:
//! position `X`, tangent `T` and tangent-normal `N`. Moving along a segment
//! right-multiplies the current frame by the segment's rotation.

use core::ops::Mul;

use crate::error::{Error, Result};
use crate::math::{abs, cos, sin, sqrt};

pub type Vector3 = [f64; 3];

/// Frobenius tolerance for `MᵀM = I` and `det M = 1` at API boundaries.
pub const ORTHONORMALITY_TOL: f64 = 1e-10;

/// Threshold below which two rotations are treated as equal.
pub const EQUALITY_TOL: f64 = 1e-9;

/// A 3×3 proper orthogonal matrix stored row-major, `m[row][col]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    m: [[f64; 3]; 3],
}

impl Rotation {
    pub const IDENTITY: Self = Self {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Validates `rows` against [`ORTHONORMALITY_TOL`].
    pub fn new(rows: [[f64; 3]; 3]) -> Result<Self> {
        let r = Self { m: rows };
        let orthonormality = r.orthonormality_error();
        let det = r.det();
        if !(orthonormality <= ORTHONORMALITY_TOL && abs(det - 1.0) <= ORTHONORMALITY_TOL) {
            return Err(Error::NotARotation {
                orthonormality,
                det,
            });
        }
        Ok(r)
    }

    /// Wraps `rows` without validation. Used for closed-form matrices that are
    /// rotations by construction.
    #[inline]
    pub const fn from_rows_unchecked(rows: [[f64; 3]; 3]) -> Self {
        Self { m: rows }
    }

    /// Projects a nearly orthogonal matrix onto SO(3) using Newton–Schulz
    /// iterations for the orthogonal polar factor. Returns `None` when the
    /// iteration does not settle or the result is a reflection.
    pub fn nearest(rows: [[f64; 3]; 3]) -> Option<Self> {
        let mut x = Self { m: rows };
        let mut err = x.orthonormality_error();
        if !err.is_finite() {
            return None;
        }
        for _ in 0..64 {
            if err <= 1e-15 {
                break;
            }
            let xtx = x.transpose().mul_raw(&x);
            let mut k = [[0.0; 3]; 3];
            for (i, row) in k.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    let id = if i == j { 3.0 } else { 0.0 };
                    *v = 0.5 * (id - xtx.m[i][j]);
                }
            }
            let next = x.mul_raw(&Self { m: k });
            let next_err = next.orthonormality_error();
            if !(next_err < err) {
                break;
            }
            x = next;
            err = next_err;
        }
        if err > 1e-12 || x.det() <= 0.0 {
            return None;
        }
        Some(x)
    }

    /// Rotation by `angle` about the unit vector `axis` (Euler–Rodrigues).
    pub fn from_axis_angle(axis: Vector3, angle: f64) -> Result<Self> {
        let n = norm(axis);
        if !(abs(n - 1.0) <= ORTHONORMALITY_TOL) {
            return Err(Error::NonUnitAxis(n));
        }
        if !angle.is_finite() {
            return Err(Error::NonFiniteAngle(angle));
        }
        let [x, y, z] = axis;
        let (s, c) = (sin(angle), cos(angle));
        let t = 1.0 - c;
        Ok(Self {
            m: [
                [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
                [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
                [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
            ],
        })
    }

    #[inline]
    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.m
    }

    /// Entry at zero-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.m[row][col]
    }

    #[inline]
    pub fn column(&self, col: usize) -> Vector3 {
        [self.m[0][col], self.m[1][col], self.m[2][col]]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    /// `self · other`.
    #[inline]
    pub fn compose(&self, other: &Self) -> Self {
        self.mul_raw(other)
    }

    fn mul_raw(&self, other: &Self) -> Self {
        let a = &self.m;
        let b = &other.m;
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
            }
        }
        Self { m: out }
    }

    pub fn apply(&self, v: Vector3) -> Vector3 {
        let m = &self.m;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// `‖MᵀM − I‖_F`.
    pub fn orthonormality_error(&self) -> f64 {
        let mtm = self.transpose().mul_raw(self);
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let id = if i == j { 1.0 } else { 0.0 };
                let d = mtm.m[i][j] - id;
                acc += d * d;
            }
        }
        sqrt(acc)
    }

    /// Conjugation by `diag(1, 1, −1)`: negates entries (1,3), (2,3), (3,1)
    /// and (3,2). This is a group homomorphism that maps left turns to right
    /// turns and fixes great-circle segments.
    pub fn reflect_xy(&self) -> Self {
        let mut m = self.m;
        m[0][2] = -m[0][2];
        m[1][2] = -m[1][2];
        m[2][0] = -m[2][0];
        m[2][1] = -m[2][1];
        Self { m }
    }

    /// Frobenius distance `‖self − other‖_F`.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let d = self.m[i][j] - other.m[i][j];
                acc += d * d;
            }
        }
        sqrt(acc)
    }
}

impl Default for Rotation {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Mul for Rotation {
    type Output = Rotation;

    fn mul(self, rhs: Rotation) -> Rotation {
        self.compose(&rhs)
    }
}

impl Mul<&Rotation> for &Rotation {
    type Output = Rotation;

    fn mul(self, rhs: &Rotation) -> Rotation {
        self.compose(rhs)
    }
}

/// `a · b`.
#[inline]
pub fn compose(a: &Rotation, b: &Rotation) -> Rotation {
    a.compose(b)
}

/// `‖a − b‖_F`; zero iff the matrices are equal.
#[inline]
pub fn rotation_distance(a: &Rotation, b: &Rotation) -> f64 {
    a.distance(b)
}

pub fn dot(a: Vector3, b: Vector3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm(v: Vector3) -> f64 {
    sqrt(dot(v, v))
}

/// Vehicle configuration on the unit sphere. Columns are position `X`,
/// tangent `T` and tangent-normal `N`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Configuration(Rotation);

impl Configuration {
    pub const IDENTITY: Self = Self(Rotation::IDENTITY);

    pub fn new(rotation: Rotation) -> Result<Self> {
        Rotation::new(rotation.rows()).map(Self)
    }

    /// Skips validation; for frames produced by composing rotations.
    #[inline]
    pub const fn from_rotation_unchecked(rotation: Rotation) -> Self {
        Self(rotation)
    }

    #[inline]
    pub fn rotation(&self) -> &Rotation {
        &self.0
    }

    pub fn position(&self) -> Vector3 {
        self.0.column(0)
    }

    pub fn tangent(&self) -> Vector3 {
        self.0.column(1)
    }

    pub fn normal(&self) -> Vector3 {
        self.0.column(2)
    }

    /// Configuration reached after a motion with net rotation `seg`.
    pub fn advance(&self, seg: &Rotation) -> Self {
        Self(self.0.compose(seg))
    }
}

impl From<Configuration> for Rotation {
    fn from(c: Configuration) -> Rotation {
        c.0
    }
}

/// The net rotation `α` carrying the initial configuration to the final one.
/// Every path solver equates its composed segment matrices against this.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TargetMatrix(Rotation);

impl TargetMatrix {
    #[inline]
    pub fn rotation(&self) -> &Rotation {
        &self.0
    }

    #[inline]
    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.0.rows()
    }

    /// Target for the mirrored problem: the same path word with every L and R
    /// exchanged reaches `reflect_xy(α)` with identical arc angles.
    pub fn reflect_xy(&self) -> Self {
        Self(self.0.reflect_xy())
    }

    /// Target fed to the LRL solver when solving RLR. The boundary pair is
    /// swapped and the tangent / tangent-normal directions are flipped:
    /// `R_i = α · diag(1, −1, −1)`, `R_f = diag(1, −1, −1)`, result `R_iᵀ R_f`.
    /// An RLR path with angles `(a, b, c)` maps to an LRL path with angles
    /// `(c, b, a)`. The transform is an involution.
    pub fn rlr_swap_transform(&self) -> Self {
        let mut initial = self.0.rows();
        for row in initial.iter_mut() {
            row[1] = -row[1];
            row[2] = -row[2];
        }
        let initial = Rotation::from_rows_unchecked(initial);
        let flipped =
            Rotation::from_rows_unchecked([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]]);
        Self(initial.transpose().compose(&flipped))
    }
}

impl From<Rotation> for TargetMatrix {
    fn from(r: Rotation) -> Self {
        Self(r)
    }
}

impl From<TargetMatrix> for Rotation {
    fn from(t: TargetMatrix) -> Rotation {
        t.0
    }
}

/// `initialᵀ · final`; the transpose stands in for the inverse.
pub fn relative_target(initial: &Configuration, final_: &Configuration) -> TargetMatrix {
    TargetMatrix(initial.rotation().transpose().compose(final_.rotation()))
}
