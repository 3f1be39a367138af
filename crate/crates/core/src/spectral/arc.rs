//! Oriented analytic arcs in ℂ with maps to the unit interval.
//!
//! Segments and rays are Möbius images of [-1, 1]; unbounded rays place the
//! infinite endpoint at parameter +1 or -1 so no truncation is ever needed.
//! Circles (for soliton pole conversion) are parameterized by angle and use
//! a Laurent basis instead of Chebyshev polynomials.

use crate::error::{Error, Result};
use crate::{c64, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArcGeom {
    /// Straight segment from `a` (u = -1) to `b` (u = +1).
    Segment { a: C64, b: C64 },
    /// Straight ray between `finite` and ∞ along unit direction `dir`.
    /// `infinite_at` (+1 or -1) is the parameter end mapped to ∞; `scale`
    /// is the Möbius length scale (the arc midpoint u = 0 sits at
    /// `finite + dir * scale`).
    Ray { finite: C64, dir: C64, scale: f64, infinite_at: i8 },
    /// Circle of given center/radius; counter-clockwise when `ccw`.
    Circle { center: C64, radius: f64, ccw: bool },
}

/// An arc together with its basis size, as used by the collocation solver.
#[derive(Debug, Clone)]
pub struct Arc {
    pub geom: ArcGeom,
    pub label: String,
}

impl ArcGeom {
    pub fn segment(a: C64, b: C64) -> Self {
        ArcGeom::Segment { a, b }
    }

    /// Ray from a finite point out to ∞ (orientation finite → ∞).
    pub fn ray_outward(finite: C64, dir: C64, scale: f64) -> Self {
        ArcGeom::Ray { finite, dir: dir / dir.norm(), scale, infinite_at: 1 }
    }

    /// Ray from ∞ in to a finite point (orientation ∞ → finite).
    pub fn ray_inward(finite: C64, dir: C64, scale: f64) -> Self {
        ArcGeom::Ray { finite, dir: dir / dir.norm(), scale, infinite_at: -1 }
    }

    /// Point at parameter u ∈ [-1, 1] (not for circles).
    pub fn point(&self, u: f64) -> C64 {
        match *self {
            ArcGeom::Segment { a, b } => (a + b) * 0.5 + (b - a) * (0.5 * u),
            ArcGeom::Ray { finite, dir, scale, infinite_at } => {
                let ratio = if infinite_at == 1 {
                    (1.0 + u) / (1.0 - u)
                } else {
                    (1.0 - u) / (1.0 + u)
                };
                finite + dir * (scale * ratio)
            }
            ArcGeom::Circle { center, radius, ccw } => {
                // u as an angle fraction: τ = 2πu maps [0,1) around
                let ang = 2.0 * std::f64::consts::PI * u * if ccw { 1.0 } else { -1.0 };
                center + c64(ang.cos(), ang.sin()) * radius
            }
        }
    }

    /// Point on a circle at angle φ (absolute, not orientation-adjusted).
    pub fn circle_point(&self, phi: f64) -> C64 {
        match *self {
            ArcGeom::Circle { center, radius, .. } => center + c64(phi.cos(), phi.sin()) * radius,
            _ => unreachable!("circle_point on non-circle"),
        }
    }

    /// Möbius preimage of z (segments and rays only).
    pub fn map_inv(&self, z: C64) -> C64 {
        match *self {
            ArcGeom::Segment { a, b } => (z * 2.0 - a - b) / (b - a),
            ArcGeom::Ray { finite, dir, scale, infinite_at } => {
                let zeta = (z - finite) / (dir * scale);
                if infinite_at == 1 {
                    (zeta - 1.0) / (zeta + 1.0)
                } else {
                    (C64::ONE - zeta) / (C64::ONE + zeta)
                }
            }
            ArcGeom::Circle { .. } => unreachable!("map_inv on circle"),
        }
    }

    /// dM/du at parameter u (segments and rays only).
    pub fn dmap(&self, u: f64) -> C64 {
        match *self {
            ArcGeom::Segment { a, b } => (b - a) * 0.5,
            ArcGeom::Ray { dir, scale, infinite_at, .. } => {
                if infinite_at == 1 {
                    dir * (2.0 * scale / ((1.0 - u) * (1.0 - u)))
                } else {
                    dir * (-2.0 * scale / ((1.0 + u) * (1.0 + u)))
                }
            }
            ArcGeom::Circle { .. } => unreachable!("dmap on circle"),
        }
    }

    /// Finite endpoints with the parameter (−1 or +1) they sit at.
    pub fn finite_endpoints(&self) -> Vec<(f64, C64)> {
        match *self {
            ArcGeom::Segment { a, b } => vec![(-1.0, a), (1.0, b)],
            ArcGeom::Ray { finite, infinite_at, .. } => {
                vec![(-(infinite_at as f64), finite)]
            }
            ArcGeom::Circle { .. } => vec![],
        }
    }

    pub fn is_circle(&self) -> bool {
        matches!(self, ArcGeom::Circle { .. })
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, ArcGeom::Ray { .. })
    }

    /// Validates invariants: at most one infinite endpoint, bijective map.
    pub fn validate(&self) -> Result<()> {
        match *self {
            ArcGeom::Segment { a, b } => {
                if (b - a).norm() < 1e-14 {
                    return Err(Error::InvalidArgument("degenerate segment arc".into()));
                }
            }
            ArcGeom::Ray { dir, scale, infinite_at, .. } => {
                if !(scale > 0.0) || dir.norm() < 1e-14 || (infinite_at != 1 && infinite_at != -1) {
                    return Err(Error::InvalidArgument("degenerate ray arc".into()));
                }
            }
            ArcGeom::Circle { radius, .. } => {
                if !(radius > 0.0) {
                    return Err(Error::InvalidArgument("degenerate circle arc".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_map_roundtrip() {
        let g = ArcGeom::segment(c64(-2.0, 1.0), c64(3.0, -1.0));
        for u in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            let z = g.point(u);
            assert!((g.map_inv(z) - c64(u, 0.0)).norm() < 1e-14);
        }
        assert_eq!(g.point(-1.0), c64(-2.0, 1.0));
        assert_eq!(g.point(1.0), c64(3.0, -1.0));
    }

    #[test]
    fn ray_map_roundtrip() {
        let g = ArcGeom::ray_outward(c64(1.0, 0.5), c64(3.0, 4.0), 2.0);
        for u in [-1.0, -0.5, 0.0, 0.9] {
            let z = g.point(u);
            assert!((g.map_inv(z) - c64(u, 0.0)).norm() < 1e-12);
        }
        // u -> 1 runs off to infinity along dir
        let far = g.point(0.9999);
        assert!(far.norm() > 1e3);
        let gi = ArcGeom::ray_inward(c64(0.0, -1.0), c64(0.0, -1.0), 1.0);
        assert_eq!(gi.point(1.0), c64(0.0, -1.0));
        assert!(gi.point(-0.9999).norm() > 1e3);
    }

    #[test]
    fn dmap_matches_finite_difference() {
        let arcs = [
            ArcGeom::segment(c64(0.0, 0.0), c64(2.0, 1.0)),
            ArcGeom::ray_outward(c64(1.0, 0.0), c64(0.0, 1.0), 0.7),
            ArcGeom::ray_inward(c64(-1.0, 2.0), c64(1.0, 1.0), 1.3),
        ];
        for g in arcs {
            for u in [-0.8, -0.1, 0.4, 0.8] {
                let h = 1e-6;
                let fd = (g.point(u + h) - g.point(u - h)) / (2.0 * h);
                assert!((g.dmap(u) - fd).norm() < 1e-6 * (1.0 + fd.norm()));
            }
        }
    }
}
