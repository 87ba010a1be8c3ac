//! Unit quaternions as a numerical carrier for SU(2).

use std::ops::{Mul, Neg, Sub};

use nalgebra::{Complex, Matrix2};

/// `w + x·i + y·j + z·k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const ONE: Quat = Quat { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Quat = Quat { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quat = Quat { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quat = Quat { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };
    /// Tangent directions at the identity, in order.
    pub const AXES: [Quat; 3] = [Quat::I, Quat::J, Quat::K];

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Quat {
        Quat { w, x, y, z }
    }

    pub fn conj(self) -> Quat {
        Quat::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn normalized(self) -> Quat {
        let n = self.norm();
        Quat::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    /// Inverse of a unit quaternion.
    pub fn inv(self) -> Quat {
        self.conj()
    }

    pub fn scale(self, s: f64) -> Quat {
        Quat::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// `exp(v₀·i + v₁·j + v₂·k)`.
    pub fn exp(v: [f64; 3]) -> Quat {
        let t = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if t < 1e-300 {
            return Quat::ONE;
        }
        let s = t.sin() / t;
        Quat::new(t.cos(), v[0] * s, v[1] * s, v[2] * s)
    }

    /// `cos(2πθ) + sin(2πθ)·n` for a unit vector `n`.
    pub fn from_turn(theta: f64, n: [f64; 3]) -> Quat {
        let a = std::f64::consts::TAU * theta;
        let (s, c) = a.sin_cos();
        Quat::new(c, s * n[0], s * n[1], s * n[2])
    }

    pub fn imag(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn imag_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Trace of the corresponding SU(2) matrix.
    pub fn trace(self) -> f64 {
        2.0 * self.w
    }

    pub fn pow(self, e: i64) -> Quat {
        let base = if e < 0 { self.inv() } else { self };
        (0..e.unsigned_abs()).fold(Quat::ONE, |acc, _| acc * base)
    }

    /// `[[w + x·i, y + z·i], [−y + z·i, w − x·i]]`.
    pub fn to_matrix(self) -> Matrix2<Complex<f64>> {
        Matrix2::new(
            Complex::new(self.w, self.x),
            Complex::new(self.y, self.z),
            Complex::new(-self.y, self.z),
            Complex::new(self.w, -self.x),
        )
    }

    /// `a·b·a⁻¹·b⁻¹`.
    pub fn commutator(a: Quat, b: Quat) -> Quat {
        a * b * a.inv() * b.inv()
    }

    /// Distance to the identity in the quaternion norm.
    pub fn dist_to_one(self) -> f64 {
        (self - Quat::ONE).norm()
    }

    /// Unit quaternion `r` with `r·(0,a)·r⁻¹` parallel to `(0,b)`, for unit vectors `a`, `b`.
    pub fn rotation_between(a: [f64; 3], b: [f64; 3]) -> Quat {
        let dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let cross = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
        if dot < -1.0 + 1e-12 {
            let p = perpendicular(a);
            return Quat::new(0.0, p[0], p[1], p[2]);
        }
        Quat::new(1.0 + dot, cross[0], cross[1], cross[2]).normalized()
    }
}

/// A unit vector perpendicular to the unit vector `a`.
pub fn perpendicular(a: [f64; 3]) -> [f64; 3] {
    let t = if a[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let c = [a[1] * t[2] - a[2] * t[1], a[2] * t[0] - a[0] * t[2], a[0] * t[1] - a[1] * t[0]];
    let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
    [c[0] / n, c[1] / n, c[2] / n]
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        Quat::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, o: Quat) -> Quat {
        Quat::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        self.scale(-1.0)
    }
}
