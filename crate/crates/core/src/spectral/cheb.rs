//! Chebyshev nodes, value/coefficient transforms and differentiation.
//!
//! Conventions: second-kind (Gauss–Lobatto) nodes ordered ascending, so
//! `nodes[0] = -1` and `nodes[n-1] = +1`. Series are in Chebyshev-T:
//! `f(x) = Σ c_k T_k(x)`. Transforms are O(n²) matrix applications; the
//! problem sizes here (n ≤ 600) do not warrant an FFT path.

use crate::error::{Error, Result};
use crate::C64;
use faer::Mat;
use std::f64::consts::PI;

/// Second-kind Chebyshev grid on [-1, 1], ascending.
#[derive(Debug, Clone)]
pub struct ChebGrid {
    pub n: usize,
    pub nodes: Vec<f64>,
}

/// The `n` second-kind Chebyshev points, ascending.
pub fn cheb_nodes(n: usize) -> Result<ChebGrid> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("cheb_nodes requires n >= 2, got {n}")));
    }
    let big_n = (n - 1) as f64;
    // sin form is symmetric about 0 and hits the endpoints exactly
    let nodes = (0..n)
        .map(|i| (PI * (2.0 * i as f64 - big_n) / (2.0 * big_n)).sin())
        .collect();
    Ok(ChebGrid { n, nodes })
}

impl ChebGrid {
    /// T_k(x_i) evaluation matrix (coefficients → values).
    pub fn vandermonde(&self) -> Mat<f64> {
        let n = self.n;
        Mat::from_fn(n, n, |i, k| cheb_t(k, self.nodes[i]))
    }

    /// Values → coefficients matrix (inverse of [`Self::vandermonde`], in
    /// closed DCT-I form).
    pub fn coeff_matrix(&self) -> Mat<f64> {
        let n = self.n;
        let big_n = n - 1;
        let p = |j: usize| if j == 0 || j == big_n { 2.0 } else { 1.0 };
        // ascending node i corresponds to standard descending index N - i
        Mat::from_fn(n, n, |k, i| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let c = (PI * (k * i) as f64 / big_n as f64).cos();
            2.0 * sign * c / (p(k) * p(i) * big_n as f64)
        })
    }

    /// Nodal differentiation matrix in the unit-interval variable,
    /// `V · D · F` with D acting on coefficients.
    pub fn nodal_diff_matrix(&self) -> Mat<f64> {
        let n = self.n;
        let v = self.vandermonde();
        let f = self.coeff_matrix();
        let d = coeff_diff_matrix(n);
        let df = &d * &f;
        &v * &df
    }
}

/// T_k(x) for real x in [-1, 1] by recurrence.
pub fn cheb_t(k: usize, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let (mut tp, mut tc) = (1.0, x);
    for _ in 1..k {
        let tn = 2.0 * x * tc - tp;
        tp = tc;
        tc = tn;
    }
    tc
}

/// Coefficients of the interpolating Chebyshev-T series through values on
/// the second-kind grid (ascending order).
pub fn values_to_coeffs(values: &[C64]) -> Result<Vec<C64>> {
    let n = values.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "values_to_coeffs requires length >= 2, got {n}"
        )));
    }
    let big_n = n - 1;
    let p = |j: usize| if j == 0 || j == big_n { 2.0 } else { 1.0 };
    let mut coeffs = vec![C64::ZERO; n];
    for (k, ck) in coeffs.iter_mut().enumerate() {
        let mut acc = C64::ZERO;
        for (i, &fi) in values.iter().enumerate() {
            let c = (PI * (k * i) as f64 / big_n as f64).cos();
            acc += fi * (c / p(i));
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        *ck = acc * (2.0 * sign / (p(k) * big_n as f64));
    }
    Ok(coeffs)
}

/// Evaluate the series at the generating grid.
pub fn coeffs_to_values(coeffs: &[C64]) -> Result<Vec<C64>> {
    let grid = cheb_nodes(coeffs.len())?;
    Ok(grid
        .nodes
        .iter()
        .map(|&x| eval_cheb(coeffs, C64::new(x, 0.0)))
        .collect())
}

/// Clenshaw evaluation of `Σ c_k T_k(z)` at a complex argument.
pub fn eval_cheb(coeffs: &[C64], z: C64) -> C64 {
    let mut b1 = C64::ZERO;
    let mut b2 = C64::ZERO;
    let two_z = z * 2.0;
    for &c in coeffs.iter().rev() {
        let b0 = c + two_z * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    b1 - z * b2
}

/// Derivative of the Clenshaw sum at a complex argument.
pub fn eval_cheb_derivative(coeffs: &[C64], z: C64) -> C64 {
    eval_cheb(&derivative_coeffs(coeffs), z)
}

/// Chebyshev-T coefficients of f′ from those of f (unit-interval variable).
pub fn derivative_coeffs(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len();
    let mut b = vec![C64::ZERO; n];
    if n < 2 {
        return b;
    }
    // b_{k-1} = b_{k+1} + 2k a_k, then halve b_0
    for k in (1..n).rev() {
        let upper = if k + 1 < n { b[k + 1] } else { C64::ZERO };
        b[k - 1] = upper + coeffs[k] * (2.0 * k as f64);
    }
    b[0] *= 0.5;
    b
}

/// Coefficient-space differentiation matrix (maps coeffs of f to coeffs
/// of f′); strictly upper triangular.
pub fn coeff_diff_matrix(n: usize) -> Mat<f64> {
    let mut d = Mat::zeros(n, n);
    for j in 0..n {
        for k in (j + 1)..n {
            if (k - j) % 2 == 1 {
                let cj = if j == 0 { 2.0 } else { 1.0 };
                d[(j, k)] = 2.0 * k as f64 / cj;
            }
        }
    }
    d
}

/// `∫_{-1}^{1} T_j(u) du`: 0 for odd j, 2/(1-j²) for even j.
pub fn cheb_moment(j: usize) -> f64 {
    if j % 2 == 1 {
        0.0
    } else {
        2.0 / (1.0 - (j * j) as f64)
    }
}

/// Divide a series with p(1) = 0 by (1 - u): returns coefficients of
/// p(u)/(1-u), one degree lower. The leading residual (p(1) itself) is
/// discarded, so callers must ensure it vanishes to their tolerance.
pub fn divide_by_one_minus_u(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len();
    if n <= 1 {
        return vec![];
    }
    // c = b - u b in T-coefficients:
    //   c_N = -b_{N-1}/2,  c_m = b_m - (b_{m-1} + b_{m+1})/2  (1 <= m < N),
    //   c_0 = b_0 - b_1/2.
    // Solve backward for b.
    let nn = n - 1; // degree of input
    let mut b = vec![C64::ZERO; nn];
    if nn == 1 {
        b[0] = -coeffs[1];
        return b;
    }
    b[nn - 1] = -coeffs[nn] * 2.0;
    if nn >= 2 {
        for m in (2..nn).rev() {
            let b_up = if m + 1 < nn { b[m + 1] } else { C64::ZERO };
            // c_m = b_m - (b_{m-1} + b_{m+1})/2 -> b_{m-1} = 2(b_m - c_m) - b_{m+1}
            b[m - 1] = (b[m] - coeffs[m]) * 2.0 - b_up;
        }
        // m = 1 couples the full uT_0 term: c_1 = b_1 - b_0 - b_2/2
        let b2 = if nn > 2 { b[2] } else { C64::ZERO };
        b[0] = b[1] - coeffs[1] - b2 * 0.5;
    }
    b
}

/// Same division against (1 + u), for p with p(-1) = 0.
pub fn divide_by_one_plus_u(coeffs: &[C64]) -> Vec<C64> {
    // q(u) = p(-u)/(1-u) with sign flips
    let flipped: Vec<C64> = coeffs
        .iter()
        .enumerate()
        .map(|(m, &c)| if m % 2 == 1 { -c } else { c })
        .collect();
    let div = divide_by_one_minus_u(&flipped);
    div.iter()
        .enumerate()
        .map(|(m, &c)| if m % 2 == 1 { -c } else { c })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn nodes_small() {
        // n=2 -> [-1, 1]; n=3 -> [-1, 0, 1]
        assert_eq!(cheb_nodes(2).unwrap().nodes, vec![-1.0, 1.0]);
        let g3 = cheb_nodes(3).unwrap();
        assert_eq!(g3.nodes, vec![-1.0, 0.0, 1.0]);
        // n=5 -> [-1, -√2/2, 0, √2/2, 1]
        let g5 = cheb_nodes(5).unwrap();
        let s = 0.5f64.sqrt();
        for (a, b) in g5.nodes.iter().zip([-1.0, -s, 0.0, s, 1.0]) {
            assert!((a - b).abs() < 1e-15, "{a} vs {b}");
        }
        assert!(cheb_nodes(1).is_err());
    }

    #[test]
    fn nodes_ascending_and_symmetric() {
        for n in [2, 17, 64, 301] {
            let g = cheb_nodes(n).unwrap();
            assert_eq!(g.nodes[0], -1.0);
            assert_eq!(g.nodes[n - 1], 1.0);
            for w in g.nodes.windows(2) {
                assert!(w[0] < w[1]);
            }
            for i in 0..n {
                assert_eq!(g.nodes[i], -g.nodes[n - 1 - i]);
            }
        }
    }

    #[test]
    fn transform_picks_out_basis() {
        // constants -> e0
        let ones = vec![C64::ONE; 7];
        let c = values_to_coeffs(&ones).unwrap();
        assert!((c[0] - C64::ONE).norm() < 1e-14);
        for ck in &c[1..] {
            assert!(ck.norm() < 1e-14);
        }
        // nodes -> e1
        let g = cheb_nodes(9).unwrap();
        let vals: Vec<C64> = g.nodes.iter().map(|&x| c64(x, 0.0)).collect();
        let c = values_to_coeffs(&vals).unwrap();
        for (k, ck) in c.iter().enumerate() {
            let expect = if k == 1 { 1.0 } else { 0.0 };
            assert!((ck - c64(expect, 0.0)).norm() < 1e-14, "k={k}");
        }
        // T2 = 2x^2 - 1 sampled on n=5 grid -> e2
        let g = cheb_nodes(5).unwrap();
        let vals: Vec<C64> = g.nodes.iter().map(|&x| c64(2.0 * x * x - 1.0, 0.0)).collect();
        let c = values_to_coeffs(&vals).unwrap();
        for (k, ck) in c.iter().enumerate() {
            let expect = if k == 2 { 1.0 } else { 0.0 };
            assert!((ck - c64(expect, 0.0)).norm() < 1e-13, "k={k}");
        }
    }

    #[test]
    fn roundtrip_identity_large() {
        // relative round-trip error stays at 1e-13 for n up to 512
        for n in [16, 128, 512] {
            let g = cheb_nodes(n).unwrap();
            let vals: Vec<C64> = g
                .nodes
                .iter()
                .map(|&x| c64((3.0 * x).sin(), (2.0 * x).cos()) * c64(1.0, 0.3))
                .collect();
            let c = values_to_coeffs(&vals).unwrap();
            let back = coeffs_to_values(&c).unwrap();
            let scale = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
            let err = vals
                .iter()
                .zip(&back)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            assert!(err / scale < 1e-13, "n={n} err={err:.3e}");
        }
    }

    #[test]
    fn spectral_accuracy_exp() {
        // exp(x) interpolation error below 1e-12 by n=20
        let n = 20;
        let g = cheb_nodes(n).unwrap();
        let vals: Vec<C64> = g.nodes.iter().map(|&x| c64(x.exp(), 0.0)).collect();
        let c = values_to_coeffs(&vals).unwrap();
        let mut max_err: f64 = 0.0;
        for i in 0..=200 {
            let x = -1.0 + 2.0 * i as f64 / 200.0;
            let err = (eval_cheb(&c, c64(x, 0.0)).re - x.exp()).abs();
            max_err = max_err.max(err);
        }
        assert!(max_err < 1e-12, "max_err={max_err:.3e}");
    }

    #[test]
    fn derivative_examples() {
        // T1 -> 1
        let c = vec![C64::ZERO, C64::ONE, C64::ZERO];
        let d = derivative_coeffs(&c);
        assert!((d[0] - C64::ONE).norm() < 1e-15);
        assert!(d[1].norm() < 1e-15 && d[2].norm() < 1e-15);
        // T2 -> 4 T1
        let c = vec![C64::ZERO, C64::ZERO, C64::ONE];
        let d = derivative_coeffs(&c);
        assert!(d[0].norm() < 1e-15);
        assert!((d[1] - c64(4.0, 0.0)).norm() < 1e-15);
        // constants -> 0
        let c = vec![c64(3.0, -1.0)];
        assert!(derivative_coeffs(&c).iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn derivative_consistency_sin() {
        // derivative of interpolant of sin matches cos at nodes to 1e-10, n=32
        let n = 32;
        let g = cheb_nodes(n).unwrap();
        let vals: Vec<C64> = g.nodes.iter().map(|&x| c64(x.sin(), 0.0)).collect();
        let c = values_to_coeffs(&vals).unwrap();
        let d = derivative_coeffs(&c);
        for &x in &g.nodes {
            let got = eval_cheb(&d, c64(x, 0.0)).re;
            assert!((got - x.cos()).abs() < 1e-10);
        }
        // and the nodal matrix agrees with the coefficient route
        let dm = g.nodal_diff_matrix();
        for (i, &x) in g.nodes.iter().enumerate() {
            let mut acc = 0.0;
            for (j, &xj) in g.nodes.iter().enumerate() {
                acc += dm[(i, j)] * xj.sin();
            }
            assert!((acc - x.cos()).abs() < 1e-9, "node {i}");
        }
    }

    #[test]
    fn division_roundtrip() {
        // p(u) = (1-u)(1+u) * (something)
        let g = cheb_nodes(12).unwrap();
        let vals: Vec<C64> = g
            .nodes
            .iter()
            .map(|&x| c64((1.0 - x) * (0.3 + x * x), 0.5 * (1.0 - x) * x))
            .collect();
        let c = values_to_coeffs(&vals).unwrap();
        let q = divide_by_one_minus_u(&c);
        // compare in the well-conditioned product form (1-x)·q = p
        for i in 0..=50 {
            let x = -1.0 + 2.0 * i as f64 / 50.0;
            let reassembled = eval_cheb(&q, c64(x, 0.0)) * (1.0 - x);
            let direct = eval_cheb(&c, c64(x, 0.0));
            assert!((reassembled - direct).norm() < 1e-12);
        }
    }
}
