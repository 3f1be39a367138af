//! Cauchy transforms of the Chebyshev/Laurent basis over arcs.
//!
//! Everything reduces to `Q_j(w) = ∫_{-1}^{1} T_j(u)/(u-w) du`, computed by
//! the three-term recurrence seeded with the closed-form log term. The
//! recurrence runs forward near the interval (|y| ≈ 1 in the Joukowski
//! variable, where it is stable), backward with a Miller-style correction in
//! the mid range, and falls back to Clenshaw–Curtis quadrature far away
//! where the integrand is entire on a wide Bernstein ellipse.
//!
//! For a Möbius-parameterized arc Γ = M([-1,1]) the partial-fraction split
//! `M'(u)/(M(u)-M(w)) = 1/(u-w) - 1/(u-u∞)`, with `u∞ = M⁻¹(∞)`, gives
//!
//! `2πi · C_Γ[T_j ∘ M⁻¹](z) = Q_j(M⁻¹ z) - Q_j(u∞)`.
//!
//! Unbounded rays have u∞ = ±1 on the interval boundary, so they use the
//! modified basis φ_j = T_j - (±1)^j which vanishes at the infinite end;
//! the divergent log terms cancel and the finite limits satisfy their own
//! stable recurrences.

use super::arc::ArcGeom;
use super::cheb::{cheb_moment, cheb_t, coeff_diff_matrix};
use crate::{c64, C64};
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

/// Which boundary value to take when the target sits on the arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Target off the arc.
    Off,
    /// Limit from the left of the orientation.
    Plus,
    /// Limit from the right of the orientation.
    Minus,
}

const TWO_PI_I: C64 = C64 { re: 0.0, im: 2.0 * PI };

/// Joukowski preimage with |y| >= 1: w = (y + 1/y)/2.
fn joukowski_y(w: C64) -> C64 {
    let s = (w * w - C64::ONE).sqrt();
    let y1 = w + s;
    let y2 = w - s;
    if y1.norm() >= y2.norm() {
        y1
    } else {
        y2
    }
}

/// Q_0(w) = log(1-w) - log(-1-w), continuous off the interval.
fn q0_off(w: C64) -> C64 {
    (C64::ONE - w).ln() - (-C64::ONE - w).ln()
}

/// `Q_j(w)` for j = 0..=jmax at a target off the interval.
pub fn interval_q_off(w: C64, jmax: usize) -> Vec<C64> {
    let y = joukowski_y(w);
    let ay = y.norm();
    let q0 = q0_off(w);
    if ay.powi(jmax as i32 + 1) <= 1e4 {
        q_forward(w, q0, jmax)
    } else {
        q_olver(w, q0, jmax, ay).unwrap_or_else(|| q_quadrature(w, jmax, ay))
    }
}

/// Boundary values `Q_j^±(w)` on the open interval: PV ± iπ T_j(w).
pub fn interval_q_side(w: f64, jmax: usize, plus: bool) -> Vec<C64> {
    debug_assert!(w.abs() < 1.0);
    let pv = ((1.0 - w) / (1.0 + w)).ln();
    let q0 = c64(pv, if plus { PI } else { -PI });
    q_forward(c64(w, 0.0), q0, jmax)
}

fn q_forward(w: C64, q0: C64, jmax: usize) -> Vec<C64> {
    let mut q = Vec::with_capacity(jmax + 1);
    q.push(q0);
    if jmax == 0 {
        return q;
    }
    q.push(w * q0 + 2.0); // Q_1 = 2 + w Q_0
    for j in 1..jmax {
        let next = w * q[j] * 2.0 - q[j - 1] + 2.0 * cheb_moment(j);
        q.push(next);
    }
    q
}

/// Minimal-solution evaluation of the inhomogeneous recurrence as a
/// tridiagonal boundary-value problem: Q_0 known in closed form, Q_{M+1}
/// truncated to 0 far past jmax. The Thomas sweep's multiplier contracts
/// to 1/y, so errors damp in both directions. Returns None if a pivot
/// degenerates (caller falls back to quadrature).
fn q_olver(w: C64, q0: C64, jmax: usize, ay: f64) -> Option<Vec<C64>> {
    let buffer = ((18.0 / ay.log10()).ceil() as usize).clamp(24, 6000);
    let m = jmax + buffer;
    // rows j = 1..=m: Q_{j-1} - 2w Q_j + Q_{j+1} = 2 m_j, Q_{m+1} = 0
    let diag = w * (-2.0);
    let mut cp = vec![C64::ZERO; m + 1];
    let mut dp = vec![C64::ZERO; m + 1];
    let mut denom = diag;
    if denom.norm() < 1e-8 {
        return None;
    }
    cp[1] = denom.inv();
    dp[1] = (2.0 * cheb_moment(1) - q0) / denom;
    for j in 2..=m {
        denom = diag - cp[j - 1];
        if denom.norm() < 1e-8 {
            return None;
        }
        cp[j] = denom.inv();
        dp[j] = (2.0 * cheb_moment(j) - dp[j - 1]) / denom;
    }
    let mut q = vec![C64::ZERO; m + 1];
    q[0] = q0;
    q[m] = dp[m];
    for j in (1..m).rev() {
        q[j] = dp[j] - cp[j] * q[j + 1];
    }
    q.truncate(jmax + 1);
    Some(q)
}

/// Clenshaw–Curtis nodes and weights on [-1,1], cached by size.
fn cc_rule(n: usize) -> std::sync::Arc<(Vec<f64>, Vec<f64>)> {
    static CACHE: OnceLock<Mutex<HashMap<usize, std::sync::Arc<(Vec<f64>, Vec<f64>)>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| {
            let grid = super::cheb::cheb_nodes(n).expect("cc size");
            let f = grid.coeff_matrix();
            let mut w = vec![0.0; n];
            for (i, wi) in w.iter_mut().enumerate() {
                for k in 0..n {
                    *wi += f[(k, i)] * cheb_moment(k);
                }
            }
            std::sync::Arc::new((grid.nodes, w))
        })
        .clone()
}

fn q_quadrature(w: C64, jmax: usize, ay: f64) -> Vec<C64> {
    let pad = ((15.0 / ay.log10().max(1e-3)).ceil() as usize).clamp(48, 2000);
    let n = ((jmax + pad + 31) / 32) * 32;
    let rule = cc_rule(n);
    let (nodes, wts) = (&rule.0, &rule.1);
    let g: Vec<C64> = nodes
        .iter()
        .zip(wts)
        .map(|(&u, &wt)| c64(wt, 0.0) / (c64(u, 0.0) - w))
        .collect();
    let mut out = vec![C64::ZERO; jmax + 1];
    // T_j at quadrature nodes via simultaneous recurrence
    let mut tp: Vec<f64> = vec![1.0; n];
    let mut tc: Vec<f64> = nodes.clone();
    out[0] = g.iter().sum();
    if jmax == 0 {
        return out;
    }
    out[1] = g.iter().zip(&tc).map(|(gi, &t)| gi * t).sum();
    for j in 2..=jmax {
        for i in 0..n {
            let tn = 2.0 * nodes[i] * tc[i] - tp[i];
            tp[i] = tc[i];
            tc[i] = tn;
        }
        out[j] = g.iter().zip(&tc).map(|(gi, &t)| gi * t).sum();
    }
    out
}

/// `d_j = ∫ (T_j(u) - 1)/(u - 1) du` (finite limits for rays with ∞ at +1).
fn ray_limit_plus(jmax: usize) -> Vec<f64> {
    let mut d = vec![0.0; jmax + 1];
    if jmax >= 1 {
        d[1] = 2.0;
    }
    for j in 1..jmax {
        d[j + 1] = 2.0 * d[j] - d[j - 1] + 2.0 * cheb_moment(j);
    }
    d
}

/// `e_j = ∫ (T_j(u) - (-1)^j)/(u + 1) du` (for rays with ∞ at -1).
fn ray_limit_minus(jmax: usize) -> Vec<f64> {
    let mut e = vec![0.0; jmax + 1];
    if jmax >= 1 {
        e[1] = 2.0;
    }
    for j in 1..jmax {
        e[j + 1] = 2.0 * cheb_moment(j) - 2.0 * e[j] - e[j - 1];
    }
    e
}

/// Number of scalar basis functions used on an arc of collocation size n.
pub fn basis_len(geom: &ArcGeom, n: usize) -> usize {
    match geom {
        ArcGeom::Segment { .. } => n,
        ArcGeom::Ray { .. } => n,
        // odd Laurent mode count -n_c ..= n_c
        ArcGeom::Circle { .. } => if n % 2 == 0 { n + 1 } else { n },
    }
}

/// Evaluate every basis function of the arc at the given parameter (for
/// segments/rays u ∈ [-1,1]; for circles the absolute angle φ).
pub fn basis_values_at_param(geom: &ArcGeom, n: usize, param: f64) -> Vec<C64> {
    match geom {
        ArcGeom::Segment { .. } => (0..n).map(|j| c64(cheb_t(j, param), 0.0)).collect(),
        ArcGeom::Ray { infinite_at, .. } => {
            let s = *infinite_at as f64;
            (1..=n)
                .map(|j| c64(cheb_t(j, param) - s.powi(j as i32), 0.0))
                .collect()
        }
        ArcGeom::Circle { .. } => {
            let nb = basis_len(geom, n);
            let nc = (nb - 1) / 2;
            (0..nb)
                .map(|b| {
                    let m = b as i64 - nc as i64;
                    (c64(0.0, m as f64 * param)).exp()
                })
                .collect()
        }
    }
}

/// Derivative of the basis with respect to the unit-interval variable at
/// u = ±1 (used to pin density decay at infinite ray ends).
pub fn basis_derivative_at_end(geom: &ArcGeom, n: usize, end: f64) -> Vec<C64> {
    match geom {
        ArcGeom::Segment { .. } => (0..n)
            .map(|j| {
                let jf = j as f64;
                let tp = jf * jf * if end > 0.0 { 1.0 } else { (-1.0f64).powi(j as i32 + 1) };
                c64(tp, 0.0)
            })
            .collect(),
        ArcGeom::Ray { .. } => (1..=n)
            .map(|j| {
                let jf = j as f64;
                let tp = jf * jf * if end > 0.0 { 1.0 } else { (-1.0f64).powi(j as i32 + 1) };
                c64(tp, 0.0)
            })
            .collect(),
        ArcGeom::Circle { .. } => unreachable!("no endpoint on circles"),
    }
}

fn circle_rows(center: C64, radius: f64, ccw: bool, nb: usize, z: C64, side: Side) -> Vec<C64> {
    let nc = (nb - 1) as i64 / 2;
    let zeta = (z - center) / radius;
    let inside = match side {
        Side::Off => zeta.norm() < 1.0,
        // + side is the left of travel: inside for ccw, outside for cw
        Side::Plus => ccw,
        Side::Minus => !ccw,
    };
    let sign = if ccw { 1.0 } else { -1.0 };
    (0..nb as i64)
        .map(|b| {
            let m = b - nc;
            let val = if m >= 0 {
                if inside {
                    zeta.powi(m as i32)
                } else {
                    C64::ZERO
                }
            } else if inside {
                C64::ZERO
            } else {
                -zeta.powi(m as i32)
            };
            val * sign
        })
        .collect()
}

/// Row of Cauchy transforms of the arc's basis functions at target `z`.
///
/// Entry j is `C_Γ[basis_j](z)`; boundary-value requests must flag the side.
pub fn arc_cauchy_row(geom: &ArcGeom, n: usize, z: C64, side: Side) -> Vec<C64> {
    match *geom {
        ArcGeom::Circle { center, radius, ccw } => {
            circle_rows(center, radius, ccw, basis_len(geom, n), z, side)
        }
        _ => {
            let w = geom.map_inv(z);
            cauchy_row_mapped(geom, n, w, side)
        }
    }
}

/// As [`arc_cauchy_row`] but with the target given directly as the arc
/// parameter (u for segments/rays, absolute angle for circles). Avoids a
/// lossy map inversion for on-arc collocation points.
pub fn arc_cauchy_row_at_param(geom: &ArcGeom, n: usize, param: f64, side: Side) -> Vec<C64> {
    match *geom {
        ArcGeom::Circle { center, radius, ccw } => {
            let z = geom.circle_point(param);
            circle_rows(center, radius, ccw, basis_len(geom, n), z, side)
        }
        _ => cauchy_row_mapped(geom, n, c64(param, 0.0), side),
    }
}

fn cauchy_row_mapped(geom: &ArcGeom, n: usize, w: C64, side: Side) -> Vec<C64> {
    let on_interval = side != Side::Off;
    match *geom {
        ArcGeom::Segment { .. } => {
            let q = if on_interval {
                interval_q_side(w.re, n - 1, side == Side::Plus)
            } else {
                interval_q_off(w, n - 1)
            };
            q.into_iter().map(|qj| qj / TWO_PI_I).collect()
        }
        ArcGeom::Ray { infinite_at, .. } => {
            let q = if on_interval {
                interval_q_side(w.re, n, side == Side::Plus)
            } else {
                interval_q_off(w, n)
            };
            let sgn = infinite_at as f64;
            let lim = if infinite_at == 1 { ray_limit_plus(n) } else { ray_limit_minus(n) };
            (1..=n)
                .map(|j| {
                    let sj = sgn.powi(j as i32);
                    (q[j] - q[0] * sj - lim[j]) / TWO_PI_I
                })
                .collect()
        }
        ArcGeom::Circle { .. } => unreachable!(),
    }
}

/// Definite integral of each basis function along the arc, 2nd-order
/// endpoint zeros assumed for rays (enforced by the solver): entry j is
/// `∫_Γ basis_j(M⁻¹ ξ) dξ`, expressed so that `Σ coeff_j · entry_j`
/// integrates a density given in that arc's basis.
pub fn arc_basis_integrals(geom: &ArcGeom, n: usize) -> Vec<C64> {
    match *geom {
        ArcGeom::Segment { a, b } => {
            let half = (b - a) * 0.5;
            (0..n).map(|j| half * cheb_moment(j)).collect()
        }
        // handled by the solver via series division; not meaningful per basis
        ArcGeom::Ray { .. } => vec![C64::ZERO; n],
        ArcGeom::Circle { center: _, radius, ccw } => {
            let nb = basis_len(geom, n);
            let nc = (nb - 1) as i64 / 2;
            let sign = if ccw { 1.0 } else { -1.0 };
            (0..nb as i64)
                .map(|b| {
                    let m = b - nc;
                    if m == -1 {
                        TWO_PI_I * radius * sign
                    } else {
                        C64::ZERO
                    }
                })
                .collect()
        }
    }
}

/// Integral of a density on an unbounded ray arc whose coefficients vanish
/// to second order at the infinite end: `∫_Γ V dξ` via exact polynomial
/// division by (1 ∓ u)².
pub fn ray_density_integral(geom: &ArcGeom, coeffs: &[C64]) -> C64 {
    let ArcGeom::Ray { dir, scale, infinite_at, .. } = *geom else {
        unreachable!("ray_density_integral on non-ray");
    };
    // density in T-basis: Σ a_j (T_j - σ^j)  ->  T-coeffs
    let n = coeffs.len();
    let sgn = infinite_at as f64;
    let mut t = vec![C64::ZERO; n + 1];
    for (idx, &a) in coeffs.iter().enumerate() {
        let j = idx + 1;
        t[j] += a;
        t[0] -= a * sgn.powi(j as i32);
    }
    let (z, dfactor) = if infinite_at == 1 {
        let z1 = super::cheb::divide_by_one_minus_u(&t);
        let z2 = super::cheb::divide_by_one_minus_u(&z1);
        (z2, dir * (2.0 * scale))
    } else {
        let z1 = super::cheb::divide_by_one_plus_u(&t);
        let z2 = super::cheb::divide_by_one_plus_u(&z1);
        (z2, dir * (-2.0 * scale))
    };
    let total: C64 = z
        .iter()
        .enumerate()
        .map(|(j, &c)| c * cheb_moment(j))
        .sum();
    total * dfactor
}

/// Dense n×n coefficient-space derivative as complex (re-export helper).
pub fn coeff_diff_matrix_c(n: usize) -> Vec<Vec<C64>> {
    let d = coeff_diff_matrix(n);
    (0..n)
        .map(|i| (0..n).map(|j| c64(d[(i, j)], 0.0)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::cheb::{cheb_nodes, values_to_coeffs};

    fn q_reference(w: C64, j: usize) -> C64 {
        // adaptive Simpson on the real interval, safe only for w far enough
        let f = |u: f64| c64(cheb_t(j, u), 0.0) / (c64(u, 0.0) - w);
        let mut acc = C64::ZERO;
        let n = 200_001;
        let h = 2.0 / (n - 1) as f64;
        for i in 0..n {
            let u = -1.0 + i as f64 * h;
            let wgt = if i == 0 || i == n - 1 {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            acc += f(u) * wgt;
        }
        acc * (h / 3.0)
    }

    #[test]
    fn q_values_match_reference_quadrature() {
        for &w in &[c64(0.3, 0.4), c64(-1.2, 0.05), c64(2.0, -1.0), c64(0.0, 8.0), c64(60.0, 3.0)] {
            let q = interval_q_off(w, 24);
            for j in [0usize, 1, 2, 7, 24] {
                let r = q_reference(w, j);
                assert!(
                    (q[j] - r).norm() < 1e-9 * (1.0 + r.norm()),
                    "w={w} j={j}: {} vs {}",
                    q[j],
                    r
                );
            }
        }
    }

    #[test]
    fn q_regimes_agree_on_overlap() {
        // olver vs quadrature everywhere; forward joins where it is stable
        for &w in &[c64(1.1, 0.3), c64(0.2, 1.1), c64(-2.2, 0.6), c64(1.7, -1.4), c64(0.3, 0.4)] {
            let q0 = q0_off(w);
            let ay = joukowski_y(w).norm();
            let b = q_olver(w, q0, 40, ay).unwrap();
            let c = q_quadrature(w, 40, ay);
            for j in 0..=40 {
                let scale = 1.0 + b[j].norm();
                assert!((b[j] - c[j]).norm() / scale < 2e-9, "olver/quad j={j} w={w}");
            }
            if ay.powi(41) <= 1e4 {
                let a = q_forward(w, q0, 40);
                for j in 0..=40 {
                    let scale = 1.0 + a[j].norm();
                    assert!((a[j] - b[j]).norm() / scale < 2e-9, "fw/olver j={j} w={w}");
                }
            }
        }
    }

    #[test]
    fn plemelj_jump_on_interval() {
        // (C+ - C-)[T_j](w) = T_j(w) on the open interval
        for &w in &[-0.9, -0.33, 0.0, 0.51, 0.97] {
            let qp = interval_q_side(w, 12, true);
            let qm = interval_q_side(w, 12, false);
            for j in 0..=12 {
                let diff = (qp[j] - qm[j]) / TWO_PI_I;
                let expect = cheb_t(j, w);
                assert!((diff - c64(expect, 0.0)).norm() < 1e-11, "j={j} w={w}");
            }
        }
    }

    #[test]
    fn residue_theorem_on_circle() {
        // constant density on a circle: 1 inside, 0 outside
        let g = ArcGeom::Circle { center: c64(1.0, 1.0), radius: 0.5, ccw: true };
        let n = 9;
        let nb = basis_len(&g, n);
        let mid = (nb - 1) / 2; // mode 0
        let inside = arc_cauchy_row(&g, n, c64(1.1, 0.9), Side::Off);
        let outside = arc_cauchy_row(&g, n, c64(3.0, 0.0), Side::Off);
        assert!((inside[mid] - C64::ONE).norm() < 1e-14);
        assert!(outside[mid].norm() < 1e-14);
        // clockwise flips the sign
        let gcw = ArcGeom::Circle { center: c64(1.0, 1.0), radius: 0.5, ccw: false };
        let inside_cw = arc_cauchy_row(&gcw, n, c64(1.1, 0.9), Side::Off);
        assert!((inside_cw[mid] + C64::ONE).norm() < 1e-14);
    }

    #[test]
    fn log_kernel_closed_form() {
        // density T_0 on [-1,1], target 2i: (1/2πi) ln((2i-1)/(2i+1))
        let g = ArcGeom::segment(c64(-1.0, 0.0), c64(1.0, 0.0));
        let row = arc_cauchy_row(&g, 4, c64(0.0, 2.0), Side::Off);
        let expect = ((c64(0.0, 2.0) - 1.0) / (c64(0.0, 2.0) + 1.0)).ln() / TWO_PI_I;
        assert!((row[0] - expect).norm() < 1e-14);
    }

    #[test]
    fn ray_basis_decays_and_matches_quadrature() {
        let g = ArcGeom::ray_outward(c64(0.5, 0.2), c64(1.0, 0.3), 1.5);
        let n = 10;
        // reference: integrate φ_j(M⁻¹ξ)/(ξ-z) over the ray by u-substitution
        let z = c64(-1.0, 1.4);
        let row = arc_cauchy_row(&g, n, z, Side::Off);
        for jidx in [0usize, 3, 9] {
            let j = jidx + 1;
            let mut acc = C64::ZERO;
            let nq = 400_001;
            let h = 2.0 / (nq - 1) as f64;
            for i in 0..nq - 1 {
                // open at u=1: integrand vanishes there like (1-u)^0 * M'
                let u = -1.0 + (i as f64 + 0.5) * h;
                let phi = cheb_t(j, u) - 1.0;
                let xi = g.point(u);
                acc += c64(phi, 0.0) / (xi - z) * g.dmap(u) * h;
            }
            let expect = acc / TWO_PI_I;
            assert!(
                (row[jidx] - expect).norm() < 1e-5,
                "j={j}: {} vs {}",
                row[jidx],
                expect
            );
        }
    }

    #[test]
    fn cauchy_decay_at_infinity() {
        // C_Γ[V](z) ≈ -(1/2πi)(∫V)/z at |z| = 1e6 to 1e-4 relative, along 4 rays
        let g = ArcGeom::ray_outward(c64(0.0, 0.0), c64(1.0, 0.1), 0.8);
        let n = 48;
        let grid = cheb_nodes(n + 1).unwrap();
        let f = |u: f64| {
            if u >= 1.0 {
                C64::ZERO
            } else {
                c64((-3.0 * (1.0 + u) / (1.0 - u)).exp(), 0.0) * c64(1.0, 0.5) * (1.0 + u)
            }
        };
        let vals: Vec<C64> = grid.nodes.iter().map(|&u| f(u)).collect();
        let tco = values_to_coeffs(&vals).unwrap();
        let coeffs: Vec<C64> = tco[1..].to_vec();
        let total = ray_density_integral(&g, &coeffs);
        for ang in [0.7f64, 2.0, -1.2, 3.0] {
            let z = c64(ang.cos(), ang.sin()) * 1e6;
            let row = arc_cauchy_row(&g, n, z, Side::Off);
            let cv: C64 = row.iter().zip(&coeffs).map(|(r, c)| r * c).sum();
            let asymptote = -total / (TWO_PI_I * z);
            assert!(
                (cv - asymptote).norm() < 1e-4 * asymptote.norm(),
                "ang={ang}: {cv} vs {asymptote}"
            );
        }
    }

    #[test]
    fn ray_density_integral_matches_quadrature() {
        let g = ArcGeom::ray_outward(c64(0.0, 0.0), c64(1.0, 0.1), 0.8);
        let n = 48;
        // a density vanishing to 2nd order at u=1: sample exp(-3(1+u)/(1-u)) * (poly)
        let grid = cheb_nodes(n + 1).unwrap();
        let f = |u: f64| {
            if u >= 1.0 {
                C64::ZERO
            } else {
                c64((-3.0 * (1.0 + u) / (1.0 - u)).exp(), 0.0) * c64(1.0, 0.5) * (1.0 + u)
            }
        };
        let vals: Vec<C64> = grid.nodes.iter().map(|&u| f(u)).collect();
        let tco = values_to_coeffs(&vals).unwrap();
        // convert to φ coefficients: a_j = t_j for j>=1 (ray basis drops T0)
        let coeffs: Vec<C64> = tco[1..].to_vec();
        let got = ray_density_integral(&g, &coeffs);
        // reference via quadrature in u
        let mut acc = C64::ZERO;
        let nq = 2_000_001;
        let h = 2.0 / (nq - 1) as f64;
        for i in 0..nq - 1 {
            let u = -1.0 + (i as f64 + 0.5) * h;
            acc += f(u) * g.dmap(u) * h;
        }
        assert!(
            (got - acc).norm() < 2e-6 * (1.0 + acc.norm()),
            "{got} vs {acc}"
        );
    }
}
