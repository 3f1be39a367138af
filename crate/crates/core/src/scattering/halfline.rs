//! Half-line collocation solves for the eigenfunction frames μ₁, μ₂ at
//! (x, t) = (0, 0), the scattering matrix S(k) and the reflection
//! coefficient r(k).
//!
//! The column pairs Φ = μ − I satisfy first-order systems forced by the
//! potential; each is discretized on a tanh-mapped half-line grid, with the
//! rows at the infinite node replaced by the vanishing boundary condition.

use super::potential::PotentialSpec;
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::spectral::cheb::cheb_nodes;
use crate::spectral::linemap::{LineMap, LineMapKind};
use crate::{c64, C64};
use faer::linalg::solvers::Solve;
use faer::Mat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfLineSide {
    /// μ₁: boundary condition at x = −∞, solved on (−∞, 0].
    Left,
    /// μ₂: boundary condition at x = +∞, solved on [0, ∞).
    Right,
}

/// Shared discretization of one half-line.
struct HalfLineGrid {
    n: usize,
    /// nodal derivative in x: D[H'] · (V D F)
    deriv: Mat<C64>,
    q: Vec<C64>,
    q2: Vec<C64>,
    /// index of the node at the infinite end
    inf_idx: usize,
    /// index of the node at x = 0
    zero_idx: usize,
}

fn build_grid(pot: &PotentialSpec, side: HalfLineSide, n1: usize, a_hat: f64) -> Result<HalfLineGrid> {
    let grid = cheb_nodes(n1)?;
    let kind = match side {
        HalfLineSide::Left => LineMapKind::LeftHalfLine,
        HalfLineSide::Right => LineMapKind::RightHalfLine,
    };
    let map = LineMap::new(kind, a_hat)?;
    let xs = map.node_preimages(&grid);
    let mut q = Vec::with_capacity(n1);
    let mut q2 = Vec::with_capacity(n1);
    let nu = pot.variant.q2_coeff();
    for &x in &xs {
        let v = pot.sample(x)?;
        q.push(v);
        q2.push(c64(0.0, nu) * v.norm_sqr());
    }
    let dnodal = grid.nodal_diff_matrix();
    let mut deriv = Mat::zeros(n1, n1);
    for i in 0..n1 {
        let hp = map.derivative(xs[i]);
        for j in 0..n1 {
            deriv[(i, j)] = c64(hp * dnodal[(i, j)], 0.0);
        }
    }
    let (inf_idx, zero_idx) = match side {
        HalfLineSide::Left => (0, n1 - 1),
        HalfLineSide::Right => (n1 - 1, 0),
    };
    Ok(HalfLineGrid { n: n1, deriv, q, q2, inf_idx, zero_idx })
}

/// Solve one 2-component forced system
///   [W + s₁·2ik² − D[q₂]   −k D[q]      ] (u)   (f)
///   [k D[q̄]                W + D[q₂] + s₂·(−2ik²)] (v) = (g)
/// in the layout of the two column systems; `s` selects which diagonal
/// block carries the 2ik² shift (upper for the (b,d) system, lower for
/// (a,c)).
#[allow(clippy::too_many_arguments)]
fn solve_pair(
    g: &HalfLineGrid,
    k: C64,
    shift_upper: bool,
    rhs_u: &[C64],
    rhs_v: &[C64],
) -> Result<(Vec<C64>, Vec<C64>)> {
    let n = g.n;
    let two_ik2 = c64(0.0, 2.0) * k * k;
    let mut m = Mat::<C64>::zeros(2 * n, 2 * n);
    let mut rhs = Mat::<C64>::zeros(2 * n, 1);
    for i in 0..n {
        if i == g.inf_idx {
            // vanishing boundary condition at the infinite end
            m[(i, i)] = C64::ONE;
            m[(n + i, n + i)] = C64::ONE;
            continue;
        }
        for j in 0..n {
            m[(i, j)] = g.deriv[(i, j)];
            m[(n + i, n + j)] = g.deriv[(i, j)];
        }
        m[(i, i)] -= g.q2[i];
        m[(n + i, n + i)] += g.q2[i];
        if shift_upper {
            m[(i, i)] += two_ik2;
        } else {
            m[(n + i, n + i)] -= two_ik2;
        }
        m[(i, n + i)] = -k * g.q[i];
        m[(n + i, i)] = k * g.q[i].conj();
        rhs[(i, 0)] = rhs_u[i];
        rhs[(n + i, 0)] = rhs_v[i];
    }
    let lu = m.partial_piv_lu();
    let sol = lu.solve(&rhs);
    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        u.push(sol[(i, 0)]);
        v.push(sol[(n + i, 0)]);
    }
    if u.iter().chain(v.iter()).any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NumericalFailure(format!("singular collocation matrix at k = {k}")));
    }
    Ok((u, v))
}

/// Column pair `[μ_j]₁(0,0,k)` = (1+a, c) from the left/right grid.
fn column_one(g: &HalfLineGrid, k: C64) -> Result<(C64, C64)> {
    let rhs_u: Vec<C64> = (0..g.n).map(|i| g.q2[i]).collect();
    let rhs_v: Vec<C64> = (0..g.n).map(|i| -k * g.q[i].conj()).collect();
    let (a, c) = solve_pair(g, k, false, &rhs_u, &rhs_v)?;
    Ok((C64::ONE + a[g.zero_idx], c[g.zero_idx]))
}

/// Column pair `[μ_j]₂(0,0,k)` = (b, 1+d).
fn column_two(g: &HalfLineGrid, k: C64) -> Result<(C64, C64)> {
    let rhs_u: Vec<C64> = (0..g.n).map(|i| k * g.q[i]).collect();
    let rhs_v: Vec<C64> = (0..g.n).map(|i| -g.q2[i]).collect();
    let (b, d) = solve_pair(g, k, true, &rhs_u, &rhs_v)?;
    Ok((b[g.zero_idx], C64::ONE + d[g.zero_idx]))
}

/// μ_j(0, 0, k) by collocation of the forced column systems on the
/// side-matched tanh-mapped half-line.
pub fn mu_halfline(
    pot: &PotentialSpec,
    k: C64,
    side: HalfLineSide,
    n1: usize,
    a_hat: f64,
) -> Result<Mat2> {
    let g = build_grid(pot, side, n1, a_hat)?;
    let (m11, m21) = column_one(&g, k)?;
    let (m12, m22) = column_two(&g, k)?;
    Ok(Mat2::new(m11, m12, m21, m22))
}

/// S(k) = μ₁(0,0,k)⁻¹ · μ₂(0,0,k); entries [[ã, b], [b̃, a]].
pub fn scattering_matrix(pot: &PotentialSpec, k: C64, n1: usize, a_hat: f64) -> Result<Mat2> {
    let m1 = mu_halfline(pot, k, HalfLineSide::Left, n1, a_hat)?;
    let m2 = mu_halfline(pot, k, HalfLineSide::Right, n1, a_hat)?;
    Ok(m1.inv() * m2)
}

/// r(k) = b(k)/a(k) = S₁₂/S₂₂ on the continuous spectrum.
pub fn reflection_coefficient(pot: &PotentialSpec, k: C64, n1: usize, a_hat: f64) -> Result<C64> {
    let s = scattering_matrix(pot, k, n1, a_hat)?;
    let a = s.get(1, 1);
    if a.norm() < 1e-12 {
        return Err(Error::NearZeroDenominator { k, magnitude: a.norm() });
    }
    Ok(s.get(0, 1) / a)
}

/// a(k) for k in the (closed) analyticity domain D₂: the determinant of
/// the analytic columns [μ₁]₁ and [μ₂]₂.
pub fn a_function(pot: &PotentialSpec, k: C64, n1: usize, a_hat: f64) -> Result<C64> {
    let gl = build_grid(pot, HalfLineSide::Left, n1, a_hat)?;
    let gr = build_grid(pot, HalfLineSide::Right, n1, a_hat)?;
    a_function_with(&gl, &gr, k)
}

fn a_function_with(gl: &HalfLineGrid, gr: &HalfLineGrid, k: C64) -> Result<C64> {
    let (m11, m21) = column_one(gl, k)?;
    let (m12, m22) = column_two(gr, k)?;
    Ok(m11 * m22 - m12 * m21)
}

/// Samples of a(k) at several k reusing the half-line grids.
pub struct AFunction {
    left: HalfLineGrid,
    right: HalfLineGrid,
}

impl AFunction {
    pub fn new(pot: &PotentialSpec, n1: usize, a_hat: f64) -> Result<Self> {
        Ok(AFunction {
            left: build_grid(pot, HalfLineSide::Left, n1, a_hat)?,
            right: build_grid(pot, HalfLineSide::Right, n1, a_hat)?,
        })
    }

    pub fn eval(&self, k: C64) -> Result<C64> {
        a_function_with(&self.left, &self.right, k)
    }

    /// Both analytic columns at x = 0 (for norming constants).
    pub fn columns(&self, k: C64) -> Result<([C64; 2], [C64; 2])> {
        let (m11, m21) = column_one(&self.left, k)?;
        let (m12, m22) = column_two(&self.right, k)?;
        Ok(([m11, m21], [m12, m22]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::potential::PotentialSpec;

    #[test]
    fn zero_potential_gives_identity() {
        let pot = PotentialSpec::zero();
        for k in [c64(0.5, 0.0), c64(0.0, 0.7), c64(1.0, 0.5)] {
            let m = mu_halfline(&pot, k, HalfLineSide::Left, 41, 0.1).unwrap();
            assert!(m.sub_identity_norm() < 1e-13);
            let s = scattering_matrix(&pot, k, 41, 0.1).unwrap();
            assert!(s.sub_identity_norm() < 1e-13);
        }
        assert_eq!(
            reflection_coefficient(&pot, c64(0.3, 0.0), 41, 0.1).unwrap(),
            C64::ZERO
        );
    }

    #[test]
    fn determinant_and_symmetries() {
        let pot = PotentialSpec::gauss(1.5);
        let n1 = 201;
        let ah = 0.05;
        // det μ_j = 1
        for k in [c64(0.5, 0.0), c64(0.0, 0.8)] {
            for side in [HalfLineSide::Left, HalfLineSide::Right] {
                let m = mu_halfline(&pot, k, side, n1, ah).unwrap();
                assert!(
                    (m.det() - C64::ONE).norm() < 1e-10,
                    "det {} at k={k}",
                    m.det()
                );
            }
        }
        // σ₃ μ(-k) σ₃ = μ(k) at k = ±0.7
        let s3 = Mat2::diag(C64::ONE, -C64::ONE);
        for side in [HalfLineSide::Left, HalfLineSide::Right] {
            let mp = mu_halfline(&pot, c64(0.7, 0.0), side, n1, ah).unwrap();
            let mm = mu_halfline(&pot, c64(-0.7, 0.0), side, n1, ah).unwrap();
            let conj = s3 * mm * s3;
            assert!((mp - conj).norm_inf() < 1e-10);
        }
        // det S = 1, ã(k) = conj(a(k̄)) at real and imaginary k
        for k in [c64(1.0, 0.0), c64(0.5, 0.0), c64(0.0, 0.5)] {
            let s = scattering_matrix(&pot, k, n1, ah).unwrap();
            assert!((s.det() - C64::ONE).norm() < 1e-10);
            let skbar = scattering_matrix(&pot, k.conj(), n1, ah).unwrap();
            assert!((s.get(0, 0) - skbar.get(1, 1).conj()).norm() < 1e-10);
        }
    }

    #[test]
    fn r_is_odd_and_vanishes_at_zero() {
        let pot = PotentialSpec::gauss(1.5);
        let n1 = 201;
        let rp = reflection_coefficient(&pot, c64(0.6, 0.0), n1, 0.05).unwrap();
        let rm = reflection_coefficient(&pot, c64(-0.6, 0.0), n1, 0.05).unwrap();
        assert!((rp + rm).norm() < 1e-9, "r(-k) = -r(k): {rp} vs {rm}");
        let r0 = reflection_coefficient(&pot, C64::ZERO, n1, 0.05).unwrap();
        assert!(r0.norm() < 1e-9);
    }
}
