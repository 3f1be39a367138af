//! Numerical inverse scattering transform (NIST) for the derivative
//! nonlinear Schrödinger equation, Gerdzhikov–Ivanov variant.
//!
//! The pipeline has two halves. Direct scattering computes the scattering
//! data of an initial profile: the reflection coefficient on the continuous
//! spectrum `ℝ ∪ iℝ`, discrete eigenvalue quartets, and norming constants.
//! Inverse scattering recovers `q(x,t)` pointwise, without time stepping,
//! by deforming the associated Riemann–Hilbert problem along steepest
//! descent contours and solving it by Chebyshev collocation of its
//! Cauchy-integral representation.
//!
//! A split-step Fourier reference solver ([`fsm`]) is included for
//! cross-validation at short times.

pub mod deform;
pub mod error;
pub mod fsm;
pub mod mat2;
pub mod phase;
pub mod scattering;
pub mod soliton;
pub mod solve;
pub mod spectral;

pub use error::Error;

/// Crate-wide complex scalar.
pub type C64 = num_complex::Complex64;

/// Convenience constructor for [`C64`].
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
