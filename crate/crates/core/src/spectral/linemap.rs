//! Hyperbolic-tangent maps between the unit interval and (half-)lines.

use crate::error::{Error, Result};
use crate::spectral::cheb::ChebGrid;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineMapKind {
    /// H(x) = tanh(â x) : ℝ → (-1, 1)
    FullLine,
    /// H(x) = 2 tanh(â x) + 1 : (-∞, 0] → (-1, 1], H(0) = 1
    LeftHalfLine,
    /// H(x) = 2 tanh(â x) - 1 : [0, ∞) → [-1, 1), H(0) = -1
    RightHalfLine,
}

#[derive(Debug, Clone, Copy)]
pub struct LineMap {
    pub kind: LineMapKind,
    pub a_hat: f64,
}

impl LineMap {
    pub fn new(kind: LineMapKind, a_hat: f64) -> Result<Self> {
        if !(a_hat > 0.0 && a_hat < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "line map requires 0 < a_hat < 1, got {a_hat}"
            )));
        }
        Ok(LineMap { kind, a_hat })
    }

    /// H(x); accepts ±∞ and returns the corresponding interval endpoint.
    pub fn apply(&self, x: f64) -> f64 {
        let t = (self.a_hat * x).tanh();
        match self.kind {
            LineMapKind::FullLine => t,
            LineMapKind::LeftHalfLine => 2.0 * t + 1.0,
            LineMapKind::RightHalfLine => 2.0 * t - 1.0,
        }
    }

    /// Analytic continuation of H for complex arguments.
    pub fn apply_c(&self, z: C64) -> C64 {
        let t = (z * self.a_hat).tanh();
        match self.kind {
            LineMapKind::FullLine => t,
            LineMapKind::LeftHalfLine => t * 2.0 + 1.0,
            LineMapKind::RightHalfLine => t * 2.0 - 1.0,
        }
    }

    /// Interval endpoint that is the image of the infinite end of the domain.
    pub fn infinite_node(&self) -> f64 {
        match self.kind {
            LineMapKind::FullLine => f64::NAN, // both ends
            LineMapKind::LeftHalfLine => -1.0,
            LineMapKind::RightHalfLine => 1.0,
        }
    }

    /// H⁻¹(s) for s strictly inside the map's range.
    pub fn invert(&self, s: f64) -> Result<f64> {
        let t = match self.kind {
            LineMapKind::FullLine => s,
            LineMapKind::LeftHalfLine => (s - 1.0) / 2.0,
            LineMapKind::RightHalfLine => (s + 1.0) / 2.0,
        };
        // the finite endpoint of half-line maps (t = 0 boundary) is fine;
        // the infinite preimage is not representable
        let open = match self.kind {
            LineMapKind::FullLine => t > -1.0 && t < 1.0,
            LineMapKind::LeftHalfLine => t > -1.0 && t <= 0.0,
            LineMapKind::RightHalfLine => t >= 0.0 && t < 1.0,
        };
        if !open {
            return Err(Error::DomainError(format!(
                "line map inversion: {s} at or beyond the range boundary"
            )));
        }
        Ok(t.atanh() / self.a_hat)
    }

    /// dH/dx in closed form (â·sech², scaled); exactly 0 at x = ±∞.
    pub fn derivative(&self, x: f64) -> f64 {
        if x.is_infinite() {
            return 0.0;
        }
        let sech2 = {
            let c = (self.a_hat * x).cosh();
            1.0 / (c * c)
        };
        match self.kind {
            LineMapKind::FullLine => self.a_hat * sech2,
            LineMapKind::LeftHalfLine | LineMapKind::RightHalfLine => 2.0 * self.a_hat * sech2,
        }
    }

    /// Preimages of the grid nodes; infinite ends come back as ±∞.
    pub fn node_preimages(&self, grid: &ChebGrid) -> Vec<f64> {
        grid.nodes
            .iter()
            .map(|&s| match self.invert(s) {
                Ok(x) => x,
                Err(_) => match self.kind {
                    LineMapKind::FullLine => {
                        if s <= -1.0 {
                            f64::NEG_INFINITY
                        } else {
                            f64::INFINITY
                        }
                    }
                    LineMapKind::LeftHalfLine => f64::NEG_INFINITY,
                    LineMapKind::RightHalfLine => f64::INFINITY,
                },
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::cheb::cheb_nodes;

    #[test]
    fn examples() {
        let full = LineMap::new(LineMapKind::FullLine, 0.1).unwrap();
        assert_eq!(full.apply(0.0), 0.0);
        let left = LineMap::new(LineMapKind::LeftHalfLine, 0.37).unwrap();
        assert_eq!(left.apply(0.0), 1.0);
        // invert(tanh(0.5)) with a_hat = 0.1 -> 5.0
        let s = 0.5f64.tanh();
        assert!((full.invert(s).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn mutually_inverse_and_monotone() {
        for km in [LineMapKind::FullLine, LineMapKind::LeftHalfLine, LineMapKind::RightHalfLine] {
            let m = LineMap::new(km, 0.23).unwrap();
            let xs: Vec<f64> = match km {
                LineMapKind::FullLine => (-20..=20).map(|i| i as f64 * 0.9).collect(),
                LineMapKind::LeftHalfLine => (-40..=0).map(|i| i as f64 * 0.45).collect(),
                LineMapKind::RightHalfLine => (0..=40).map(|i| i as f64 * 0.45).collect(),
            };
            let mut prev = f64::NEG_INFINITY;
            for &x in &xs {
                let s = m.apply(x);
                assert!(s > prev);
                prev = s;
                assert!((m.invert(s).unwrap() - x).abs() < 1e-9 * (1.0 + x.abs()));
                // closed-form derivative vs finite difference
                let h = 1e-6;
                let fd = (m.apply(x + h) - m.apply(x - h)) / (2.0 * h);
                assert!((m.derivative(x) - fd).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn domain_errors() {
        let m = LineMap::new(LineMapKind::FullLine, 0.1).unwrap();
        assert!(m.invert(1.0).is_err());
        assert!(m.invert(-1.0).is_err());
        assert!(m.invert(1.5).is_err());
        let l = LineMap::new(LineMapKind::LeftHalfLine, 0.1).unwrap();
        assert!(l.invert(1.0).is_ok()); // x = 0 end is finite
        assert!(l.invert(-1.0).is_err()); // x = -∞
    }

    #[test]
    fn preimages_mark_infinities() {
        let g = cheb_nodes(9).unwrap();
        let m = LineMap::new(LineMapKind::RightHalfLine, 0.1).unwrap();
        let xs = m.node_preimages(&g);
        assert_eq!(xs[0], 0.0);
        assert!(xs[8].is_infinite() && xs[8] > 0.0);
        assert_eq!(m.derivative(xs[8]), 0.0);
    }
}
