//! Small fixed-size vector types used throughout the crate.
//!
//! `Vec3` is a plain real 3-vector (meters for positions, dimensionless for
//! directions). `ComplexVec3` holds the three complex components of a phasor
//! field amplitude.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Real 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };
    pub const X: Vec3 = Vec3 { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: Vec3 = Vec3 { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 1.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn distance(self, other: Vec3) -> f64 {
        (self - other).norm()
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self / n)
        } else {
            None
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Complex 3-vector; the phasor amplitude of a field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexVec3 {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl ComplexVec3 {
    pub fn zero() -> Self {
        Self::from_real(Vec3::ZERO)
    }

    pub fn from_real(v: Vec3) -> Self {
        Self {
            x: Complex64::new(v.x, 0.0),
            y: Complex64::new(v.y, 0.0),
            z: Complex64::new(v.z, 0.0),
        }
    }

    /// Real part, componentwise.
    pub fn re(self) -> Vec3 {
        Vec3::new(self.x.re, self.y.re, self.z.re)
    }

    /// Imaginary part, componentwise.
    pub fn im(self) -> Vec3 {
        Vec3::new(self.x.im, self.y.im, self.z.im)
    }

    /// Sum of squared component magnitudes, |E|^2.
    pub fn norm_sq(self) -> f64 {
        self.x.norm_sqr() + self.y.norm_sqr() + self.z.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Componentwise contraction with a real vector (no conjugation).
    pub fn dot_real(self, v: Vec3) -> Complex64 {
        self.x * v.x + self.y * v.y + self.z * v.z
    }

    pub fn is_finite(self) -> bool {
        self.re().is_finite() && self.im().is_finite()
    }
}

impl Add for ComplexVec3 {
    type Output = ComplexVec3;
    fn add(self, rhs: ComplexVec3) -> ComplexVec3 {
        ComplexVec3 { x: self.x + rhs.x, y: self.y + rhs.y, z: self.z + rhs.z }
    }
}

impl Sub for ComplexVec3 {
    type Output = ComplexVec3;
    fn sub(self, rhs: ComplexVec3) -> ComplexVec3 {
        ComplexVec3 { x: self.x - rhs.x, y: self.y - rhs.y, z: self.z - rhs.z }
    }
}

impl Mul<Complex64> for ComplexVec3 {
    type Output = ComplexVec3;
    fn mul(self, s: Complex64) -> ComplexVec3 {
        ComplexVec3 { x: self.x * s, y: self.y * s, z: self.z * s }
    }
}

impl Mul<f64> for ComplexVec3 {
    type Output = ComplexVec3;
    fn mul(self, s: f64) -> ComplexVec3 {
        ComplexVec3 { x: self.x * s, y: self.y * s, z: self.z * s }
    }
}
