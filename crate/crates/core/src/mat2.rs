//! Minimal 2×2 complex matrix arithmetic.
//!
//! Jump matrices, scattering matrices and eigenfunction frames are all 2×2;
//! a fixed-size type keeps the hot paths allocation-free.

use crate::C64;
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    /// Entries in row-major order: [m11, m12, m21, m22].
    pub e: [C64; 4],
}

impl Mat2 {
    pub const fn new(m11: C64, m12: C64, m21: C64, m22: C64) -> Self {
        Mat2 { e: [m11, m12, m21, m22] }
    }

    pub fn identity() -> Self {
        Mat2::new(C64::ONE, C64::ZERO, C64::ZERO, C64::ONE)
    }

    pub fn zero() -> Self {
        Mat2::new(C64::ZERO, C64::ZERO, C64::ZERO, C64::ZERO)
    }

    pub fn diag(d1: C64, d2: C64) -> Self {
        Mat2::new(d1, C64::ZERO, C64::ZERO, d2)
    }

    /// Upper triangular with unit diagonal.
    pub fn upper(v: C64) -> Self {
        Mat2::new(C64::ONE, v, C64::ZERO, C64::ONE)
    }

    /// Lower triangular with unit diagonal.
    pub fn lower(v: C64) -> Self {
        Mat2::new(C64::ONE, C64::ZERO, v, C64::ONE)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.e[2 * row + col]
    }

    pub fn det(&self) -> C64 {
        self.e[0] * self.e[3] - self.e[1] * self.e[2]
    }

    pub fn inv(&self) -> Self {
        let d = self.det();
        Mat2::new(self.e[3] / d, -self.e[1] / d, -self.e[2] / d, self.e[0] / d)
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.e[0], self.e[2], self.e[1], self.e[3])
    }

    pub fn conj(&self) -> Self {
        Mat2::new(self.e[0].conj(), self.e[1].conj(), self.e[2].conj(), self.e[3].conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        Mat2::new(self.e[0] * s, self.e[1] * s, self.e[2] * s, self.e[3] * s)
    }

    /// Max-abs norm of the entries.
    pub fn norm_inf(&self) -> f64 {
        self.e.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn sub_identity_norm(&self) -> f64 {
        (*self - Mat2::identity()).norm_inf()
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let a = &self.e;
        let b = &rhs.e;
        Mat2::new(
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.e[0] + rhs.e[0],
            self.e[1] + rhs.e[1],
            self.e[2] + rhs.e[2],
            self.e[3] + rhs.e[3],
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.e[0] - rhs.e[0],
            self.e[1] - rhs.e[1],
            self.e[2] - rhs.e[2],
            self.e[3] - rhs.e[3],
        )
    }
}
