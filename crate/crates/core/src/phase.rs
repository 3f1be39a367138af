//! Phase function θ(k) = k²x + 2k⁴t: saddle points, sign field of Re(iθ),
//! the curve f(k) = 0, (x,t)-region classification, and the deformed
//! contour skeletons for Regions 1–3.
//!
//! Skeleton arcs carry, besides their geometry, the multiplicative sector
//! factors on each side. The deformed jump across an oriented arc is always
//! `F₋⁻¹ · T^σ · F₊` where T^σ is the original jump under the arc (identity
//! off the axes) and F± are the analytic sector factors; assembling jumps
//! this way makes junction consistency automatic. Sector sides follow the
//! orientation convention: arcs run left-to-right (near-horizontal) or
//! bottom-to-top (near-vertical), and `plus` is the left of travel.

use crate::error::{Error, Result};
use crate::spectral::arc::ArcGeom;
use crate::{c64, C64};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseParams {
    pub x: f64,
    pub t: f64,
}

impl PhaseParams {
    pub fn new(x: f64, t: f64) -> Result<Self> {
        if !(t >= 0.0) || !x.is_finite() {
            return Err(Error::InvalidArgument(format!("bad phase params x={x}, t={t}")));
        }
        Ok(PhaseParams { x, t })
    }
}

/// θ(k) = k² x + 2 k⁴ t.
pub fn theta(k: C64, p: PhaseParams) -> C64 {
    let k2 = k * k;
    k2 * p.x + k2 * k2 * (2.0 * p.t)
}

/// dθ/dk = 2kx + 8k³t.
pub fn dtheta_dk(k: C64, p: PhaseParams) -> C64 {
    k * (2.0 * p.x) + k * k * k * (8.0 * p.t)
}

/// e^{s·2iθ(k)} for s = ±1.
pub fn exp_2i_theta(k: C64, p: PhaseParams, sign: f64) -> C64 {
    (c64(0.0, 2.0 * sign) * theta(k, p)).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    Positive,
    Negative,
    Zero,
}

/// Sign of Re(iθ) via the product formula −4t·Im(k²)·(Re k² − λ₀).
/// For t = 0 falls back to the sign of Re(i k² x).
pub fn re_i_theta_sign(k: C64, p: PhaseParams) -> SignClass {
    let zero_band = 1e-14;
    let k2 = k * k;
    let v = if p.t > 0.0 {
        let lambda0 = -p.x / (4.0 * p.t);
        -4.0 * p.t * k2.im * (k2.re - lambda0)
    } else {
        -k2.im * p.x
    };
    if v > zero_band {
        SignClass::Positive
    } else if v < -zero_band {
        SignClass::Negative
    } else {
        SignClass::Zero
    }
}

/// f(k) = (Re k)² − (Im k)² − λ₀; f = 0 separates the sign regions.
pub fn f_curve(k: C64, p: PhaseParams) -> f64 {
    let lambda0 = -p.x / (4.0 * p.t);
    k.re * k.re - k.im * k.im - lambda0
}

#[derive(Debug, Clone)]
pub struct SaddleSet {
    /// λ₀ = −x/(4t).
    pub lambda0: f64,
    /// {0, ±√λ₀}, the nonzero pair on ℝ for λ₀ > 0 and on iℝ for λ₀ < 0.
    pub saddles: Vec<C64>,
}

pub fn saddle_points(p: PhaseParams) -> Result<SaddleSet> {
    if p.t <= 0.0 {
        return Err(Error::InvalidArgument(
            "saddle points undefined at t = 0 (no deformation needed)".into(),
        ));
    }
    let lambda0 = -p.x / (4.0 * p.t);
    let mut saddles = vec![C64::ZERO];
    if lambda0 > 0.0 {
        let s = lambda0.sqrt();
        saddles.push(c64(s, 0.0));
        saddles.push(c64(-s, 0.0));
    } else if lambda0 < 0.0 {
        let s = (-lambda0).sqrt();
        saddles.push(c64(0.0, s));
        saddles.push(c64(0.0, -s));
    }
    Ok(SaddleSet { lambda0, saddles })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    R1,
    R2,
    R3,
}

/// Region of the (x,t)-plane; boundaries belong to R1 (closed middle region).
pub fn classify_region(p: PhaseParams, c1: f64) -> Region {
    let bound = c1 * p.t.sqrt();
    if p.x < -bound {
        Region::R2
    } else if p.x > bound {
        Region::R3
    } else {
        Region::R1
    }
}

/// Jump-matrix letters from the LU / ABC factorizations of T.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Letter {
    L,
    Linv,
    U,
    Uinv,
    A,
    Ainv,
    B,
    Binv,
    C,
    Cinv,
}

impl Letter {
    /// Sign s of the oscillatory factor e^{s·2iθ} the letter carries.
    pub fn exp_sign(self) -> f64 {
        match self {
            Letter::C | Letter::Cinv | Letter::L | Letter::Linv => 1.0,
            _ => -1.0,
        }
    }
}

/// Which original jump lies under an arc (axes only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrigJump {
    None,
    T,
    Tinv,
}

/// Multiplicative sector factor `letters · (Δ₁⁻¹)^{d1} (Δ₂⁻¹)^{d2} (Δ₃⁻¹)^{d3}`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SectorFactor {
    pub letters: Vec<Letter>,
    pub d1: bool,
    pub d2: bool,
    pub d3: bool,
}

impl SectorFactor {
    pub fn id() -> Self {
        SectorFactor::default()
    }
    pub fn of(letters: &[Letter]) -> Self {
        SectorFactor { letters: letters.to_vec(), ..Default::default() }
    }
}

/// The axis whose reflection-coefficient samples continue onto the arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axis {
    Re,
    Im,
}

#[derive(Debug, Clone)]
pub struct SkeletonArc {
    pub geom: ArcGeom,
    pub label: String,
    pub minus: SectorFactor,
    pub plus: SectorFactor,
    pub orig: OrigJump,
    pub axis: Axis,
    /// Arc carries the residual B jump (dropped when B is removed).
    pub is_b_arc: bool,
    /// Letter the arc's deformed jump reduces to (diagnostic role label).
    pub role: Letter,
}

#[derive(Debug, Clone)]
pub struct ContourSkeleton {
    pub region: Region,
    pub arm_slope: f64,
    pub params: PhaseParams,
    pub saddles: SaddleSet,
    pub arcs: Vec<SkeletonArc>,
}

/// Serializable debug dump of a skeleton (for `--dump-rhp` style output).
#[derive(Debug, Serialize)]
pub struct SkeletonDump {
    pub region: Region,
    pub arm_slope: f64,
    pub arcs: Vec<ArcDump>,
}

#[derive(Debug, Serialize)]
pub struct ArcDump {
    pub label: String,
    pub kind: String,
    pub start: [f64; 2],
    pub end_or_dir: [f64; 2],
    pub orig: OrigJump,
    pub role: Letter,
}

pub fn dump_arc(label: &str, geom: &ArcGeom, orig: OrigJump, role: Letter) -> ArcDump {
    let (kind, start, end) = match *geom {
        ArcGeom::Segment { a: s, b } => ("segment", s, b),
        ArcGeom::Ray { finite, dir, infinite_at, .. } => {
            if infinite_at == 1 {
                ("ray-out", finite, dir)
            } else {
                ("ray-in", finite, dir)
            }
        }
        ArcGeom::Circle { center, radius, .. } => ("circle", center, c64(radius, 0.0)),
    };
    ArcDump {
        label: label.to_string(),
        kind: kind.into(),
        start: [start.re, start.im],
        end_or_dir: [end.re, end.im],
        orig,
        role,
    }
}

impl ContourSkeleton {
    pub fn dump(&self) -> SkeletonDump {
        let arcs = self.arcs.iter().map(|a| dump_arc(&a.label, &a.geom, a.orig, a.role)).collect();
        SkeletonDump { region: self.region, arm_slope: self.arm_slope, arcs }
    }
}

/// Find the Möbius length scale along a ray so that |Re 2iθ| reaches ~1.5
/// at the scale point; beyond it the carried exponential is decaying fast.
fn ray_scale(p0: C64, dir: C64, phase: PhaseParams) -> f64 {
    let g = |l: f64| 2.0 * (c64(0.0, 1.0) * theta(p0 + dir * l, phase)).re.abs();
    let mut last_ok = None;
    let mut l = 1e-3;
    while l <= 60.0 {
        if g(l) <= 1.5 {
            last_ok = Some(l);
        }
        l *= 1.2;
    }
    match last_ok {
        None => 0.05,
        Some(l0) => (l0 * 1.3).clamp(0.05, 8.0),
    }
}

fn axis_scale(phase: PhaseParams) -> f64 {
    (2.5 / (1.0 + 0.25 * phase.x.abs() + 0.05 * phase.t)).clamp(0.4, 2.5)
}

struct Builder {
    arcs: Vec<SkeletonArc>,
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        geom: ArcGeom,
        label: &str,
        minus: SectorFactor,
        plus: SectorFactor,
        orig: OrigJump,
        axis: Axis,
        is_b_arc: bool,
        role: Letter,
    ) {
        self.arcs.push(SkeletonArc {
            geom,
            label: label.to_string(),
            minus,
            plus,
            orig,
            axis,
            is_b_arc,
            role,
        });
    }
}

/// The four origin rays flanking iℝ (used by R1 and R2).
fn push_imag_flank_rays(b: &mut Builder, p: PhaseParams, alpha: f64) {
    use Letter::*;
    let dir = |ang: f64| c64(ang.cos(), ang.sin());
    let i = SectorFactor::id;
    let f = |l: Letter| SectorFactor::of(&[l]);
    let pi = std::f64::consts::PI;
    // Σ²: up, east of iℝ⁺; U⁻¹ sliver to its west (toward the axis)
    let sc = ray_scale(C64::ZERO, dir(pi / 2.0 - alpha), p);
    b.push(ArcGeom::ray_outward(C64::ZERO, dir(pi / 2.0 - alpha), sc), "sigma2", i(), f(Uinv), OrigJump::None, Axis::Im, false, Uinv);
    // Σ³: up, west of iℝ⁺; L sliver to its east
    let sc = ray_scale(C64::ZERO, dir(pi / 2.0 + alpha), p);
    b.push(ArcGeom::ray_outward(C64::ZERO, dir(pi / 2.0 + alpha), sc), "sigma3", f(L), i(), OrigJump::None, Axis::Im, false, Linv);
    // Σ⁶: below, west of iℝ⁻ (bottom-to-top ⇒ inward); U⁻¹ sliver east of it
    let sc = ray_scale(C64::ZERO, dir(-pi / 2.0 - alpha), p);
    b.push(ArcGeom::ray_inward(C64::ZERO, dir(-pi / 2.0 - alpha), sc), "sigma6", f(Uinv), i(), OrigJump::None, Axis::Im, false, U);
    // Σ⁷: below, east of iℝ⁻; L sliver west of it
    let sc = ray_scale(C64::ZERO, dir(-pi / 2.0 + alpha), p);
    b.push(ArcGeom::ray_inward(C64::ZERO, dir(-pi / 2.0 + alpha), sc), "sigma7", i(), f(L), OrigJump::None, Axis::Im, false, L);
}

/// The four origin rays flanking ℝ plus the residual-B real axis
/// (used by R1 and R3).
fn push_real_flank_and_b(b: &mut Builder, p: PhaseParams, alpha: f64, origin: C64, labels: [&str; 6]) {
    use Letter::*;
    let dir = |ang: f64| c64(ang.cos(), ang.sin());
    let i = SectorFactor::id;
    let f = |l: Letter| SectorFactor::of(&[l]);
    let pi = std::f64::consts::PI;
    // Σ¹: up-east; C⁻¹ sliver below (toward ℝ⁺)
    let sc = ray_scale(origin, dir(alpha), p);
    b.push(ArcGeom::ray_outward(origin, dir(alpha), sc), labels[0], f(Cinv), i(), OrigJump::None, Axis::Re, false, C);
    // Σ⁴: up-west (left-to-right ⇒ inward); A sliver above it
    let sc = ray_scale(origin, dir(pi - alpha), p);
    b.push(ArcGeom::ray_inward(origin, dir(pi - alpha), sc), labels[1], i(), f(A), OrigJump::None, Axis::Re, false, A);
    // Σ⁵: down-west (inward); C⁻¹ sliver above it (toward ℝ⁻)
    let sc = ray_scale(origin, dir(pi + alpha), p);
    b.push(ArcGeom::ray_inward(origin, dir(pi + alpha), sc), labels[2], i(), f(Cinv), OrigJump::None, Axis::Re, false, Cinv);
    // Σ⁸: down-east; A sliver above it (toward ℝ⁺)
    let sc = ray_scale(origin, dir(-alpha), p);
    b.push(ArcGeom::ray_outward(origin, dir(-alpha), sc), labels[3], i(), f(A), OrigJump::None, Axis::Re, false, A);
    // residual B support on ℝ
    let sa = axis_scale(p);
    b.push(ArcGeom::ray_outward(origin, C64::ONE, sa), labels[4], f(A), f(Cinv), OrigJump::T, Axis::Re, true, B);
    b.push(ArcGeom::ray_inward(origin, -C64::ONE, sa), labels[5], f(Cinv), f(A), OrigJump::Tinv, Axis::Re, true, Binv);
}

/// Region-1 skeleton: eight rays from the origin at slope `arm_slope` off
/// the axes, plus the residual real-axis pieces carrying B.
fn build_r1(p: PhaseParams, arm_slope: f64) -> Vec<SkeletonArc> {
    let alpha = arm_slope.atan();
    let mut b = Builder { arcs: Vec::new() };
    push_real_flank_and_b(&mut b, p, alpha, C64::ZERO, ["sigma1", "sigma4", "sigma5", "sigma8", "b_real_pos", "b_real_neg"]);
    push_imag_flank_rays(&mut b, p, alpha);
    b.arcs
}

/// Region-2 skeleton: saddles ±s on ℝ. Four origin rays flanking iℝ,
/// tents over (k₂,0) and (0,k₁), outer B-flank rays at the saddles, and the
/// residual B support (−∞,k₂) ∪ (k₁,∞).
fn build_r2(p: PhaseParams, arm_slope: f64, s: f64) -> Vec<SkeletonArc> {
    let alpha = arm_slope.atan();
    let dir = |ang: f64| c64(ang.cos(), ang.sin());
    let mut b = Builder { arcs: Vec::new() };
    use Letter::*;
    let i = SectorFactor::id;
    let f = |l: Letter| SectorFactor::of(&[l]);
    let pi = std::f64::consts::PI;

    push_imag_flank_rays(&mut b, p, alpha);

    // tents over (0, s) and (-s, 0); orientation left-to-right.
    // upper tents bound the U⁻¹ sliver below them; lower tents the L sliver
    // above them.
    let apex_r_up = c64(s / 2.0, s / 2.0 * arm_slope);
    let apex_r_dn = c64(s / 2.0, -s / 2.0 * arm_slope);
    let apex_l_up = c64(-s / 2.0, s / 2.0 * arm_slope);
    let apex_l_dn = c64(-s / 2.0, -s / 2.0 * arm_slope);
    let ks = c64(s, 0.0);
    // right half: U⁻¹ decays above (0,s), L below; left half mirrored
    b.push(ArcGeom::segment(C64::ZERO, apex_r_up), "tent_r_up_1", f(Uinv), i(), OrigJump::None, Axis::Re, false, U);
    b.push(ArcGeom::segment(apex_r_up, ks), "tent_r_up_2", f(Uinv), i(), OrigJump::None, Axis::Re, false, U);
    b.push(ArcGeom::segment(-ks, apex_l_up), "tent_l_up_1", f(L), i(), OrigJump::None, Axis::Re, false, Linv);
    b.push(ArcGeom::segment(apex_l_up, C64::ZERO), "tent_l_up_2", f(L), i(), OrigJump::None, Axis::Re, false, Linv);
    b.push(ArcGeom::segment(C64::ZERO, apex_r_dn), "tent_r_dn_1", i(), f(L), OrigJump::None, Axis::Re, false, L);
    b.push(ArcGeom::segment(apex_r_dn, ks), "tent_r_dn_2", i(), f(L), OrigJump::None, Axis::Re, false, L);
    b.push(ArcGeom::segment(-ks, apex_l_dn), "tent_l_dn_1", i(), f(Uinv), OrigJump::None, Axis::Re, false, Uinv);
    b.push(ArcGeom::segment(apex_l_dn, C64::ZERO), "tent_l_dn_2", i(), f(Uinv), OrigJump::None, Axis::Re, false, Uinv);

    // outer rays at the saddles flanking the B support
    let sc = ray_scale(ks, dir(alpha), p);
    b.push(ArcGeom::ray_outward(ks, dir(alpha), sc), "sad_r_up", f(Cinv), i(), OrigJump::None, Axis::Re, false, C);
    let sc = ray_scale(ks, dir(-alpha), p);
    b.push(ArcGeom::ray_outward(ks, dir(-alpha), sc), "sad_r_dn", i(), f(A), OrigJump::None, Axis::Re, false, A);
    let sc = ray_scale(-ks, dir(pi - alpha), p);
    b.push(ArcGeom::ray_inward(-ks, dir(pi - alpha), sc), "sad_l_up", i(), f(A), OrigJump::None, Axis::Re, false, A);
    let sc = ray_scale(-ks, dir(pi + alpha), p);
    b.push(ArcGeom::ray_inward(-ks, dir(pi + alpha), sc), "sad_l_dn", i(), f(Cinv), OrigJump::None, Axis::Re, false, Cinv);

    // residual B support
    let sa = axis_scale(p);
    b.push(ArcGeom::ray_outward(ks, C64::ONE, sa), "b_real_right", f(A), f(Cinv), OrigJump::T, Axis::Re, true, B);
    b.push(ArcGeom::ray_inward(-ks, -C64::ONE, sa), "b_real_left", f(Cinv), f(A), OrigJump::Tinv, Axis::Re, true, Binv);
    b.arcs
}

/// Region-3 skeleton: saddles ±is on iℝ. Four origin rays flanking ℝ plus
/// the residual-B real axis, B segments (0, ±is) flanked by tents, and
/// outer rays above/below the saddles.
fn build_r3(p: PhaseParams, arm_slope: f64, s: f64) -> Vec<SkeletonArc> {
    let alpha = arm_slope.atan();
    let dir = |ang: f64| c64(ang.cos(), ang.sin());
    let mut b = Builder { arcs: Vec::new() };
    use Letter::*;
    let i = SectorFactor::id;
    let f = |l: Letter| SectorFactor::of(&[l]);
    let pi = std::f64::consts::PI;

    push_real_flank_and_b(&mut b, p, alpha, C64::ZERO, ["sigma1", "sigma4", "sigma5", "sigma8", "b_real_pos", "b_real_neg"]);

    // B segments (0, ±is); flanks: C⁻¹ east / A west of (0, is), and the
    // k → −k mirror below. Orientation bottom-to-top.
    let kap = c64(0.0, s);
    let apex_up_e = c64(s / 2.0 * arm_slope, s / 2.0);
    let apex_up_w = c64(-s / 2.0 * arm_slope, s / 2.0);
    let apex_dn_e = c64(s / 2.0 * arm_slope, -s / 2.0);
    let apex_dn_w = c64(-s / 2.0 * arm_slope, -s / 2.0);
    b.push(ArcGeom::segment(C64::ZERO, kap), "b_imag_pos", f(Cinv), f(A), OrigJump::Tinv, Axis::Im, true, Binv);
    b.push(ArcGeom::segment(-kap, C64::ZERO), "b_imag_neg", f(A), f(Cinv), OrigJump::T, Axis::Im, true, B);
    // east tents of (0,is): C⁻¹ sliver between segment and tent (their west)
    b.push(ArcGeom::segment(C64::ZERO, apex_up_e), "tent_u_e_1", i(), f(Cinv), OrigJump::None, Axis::Im, false, Cinv);
    b.push(ArcGeom::segment(apex_up_e, kap), "tent_u_e_2", i(), f(Cinv), OrigJump::None, Axis::Im, false, Cinv);
    // west tents of (0,is): A sliver to their east
    b.push(ArcGeom::segment(C64::ZERO, apex_up_w), "tent_u_w_1", f(A), i(), OrigJump::None, Axis::Im, false, Ainv);
    b.push(ArcGeom::segment(apex_up_w, kap), "tent_u_w_2", f(A), i(), OrigJump::None, Axis::Im, false, Ainv);
    // east tents of (0,-is): A sliver to their west
    b.push(ArcGeom::segment(-kap, apex_dn_e), "tent_d_e_1", i(), f(A), OrigJump::None, Axis::Im, false, A);
    b.push(ArcGeom::segment(apex_dn_e, C64::ZERO), "tent_d_e_2", i(), f(A), OrigJump::None, Axis::Im, false, A);
    // west tents of (0,-is): C⁻¹ sliver to their east
    b.push(ArcGeom::segment(-kap, apex_dn_w), "tent_d_w_1", f(Cinv), i(), OrigJump::None, Axis::Im, false, C);
    b.push(ArcGeom::segment(apex_dn_w, C64::ZERO), "tent_d_w_2", f(Cinv), i(), OrigJump::None, Axis::Im, false, C);

    // outer rays above +is / below −is flanking the jump-free iℝ tails
    let sc = ray_scale(kap, dir(pi / 2.0 - alpha), p);
    b.push(ArcGeom::ray_outward(kap, dir(pi / 2.0 - alpha), sc), "sad_u_e", i(), f(Uinv), OrigJump::None, Axis::Im, false, Uinv);
    let sc = ray_scale(kap, dir(pi / 2.0 + alpha), p);
    b.push(ArcGeom::ray_outward(kap, dir(pi / 2.0 + alpha), sc), "sad_u_w", f(L), i(), OrigJump::None, Axis::Im, false, Linv);
    let sc = ray_scale(-kap, dir(-pi / 2.0 + alpha), p);
    b.push(ArcGeom::ray_inward(-kap, dir(-pi / 2.0 + alpha), sc), "sad_d_e", i(), f(L), OrigJump::None, Axis::Im, false, L);
    let sc = ray_scale(-kap, dir(-pi / 2.0 - alpha), p);
    b.push(ArcGeom::ray_inward(-kap, dir(-pi / 2.0 - alpha), sc), "sad_d_w", f(Uinv), i(), OrigJump::None, Axis::Im, false, U);
    b.arcs
}

/// The undeformed contour: the four half-axes with the raw jump T.
pub fn build_axes_skeleton(p: PhaseParams) -> Vec<SkeletonArc> {
    let sa = axis_scale(p);
    let i = SectorFactor::id;
    let mut b = Builder { arcs: Vec::new() };
    b.push(ArcGeom::ray_outward(C64::ZERO, C64::ONE, sa), "real_pos", i(), i(), OrigJump::T, Axis::Re, false, Letter::B);
    b.push(ArcGeom::ray_inward(C64::ZERO, -C64::ONE, sa), "real_neg", i(), i(), OrigJump::Tinv, Axis::Re, false, Letter::Binv);
    b.push(ArcGeom::ray_outward(C64::ZERO, c64(0.0, 1.0), sa), "imag_pos", i(), i(), OrigJump::Tinv, Axis::Im, false, Letter::Binv);
    b.push(ArcGeom::ray_inward(C64::ZERO, c64(0.0, -1.0), sa), "imag_neg", i(), i(), OrigJump::T, Axis::Im, false, Letter::B);
    b.arcs
}

/// Build the deformed contour skeleton for the given region.
///
/// Every arm is checked near its saddle against the Region-1 uniform bound
/// e^{40/99} for the exponential its jump letter carries; a violation
/// reports the offending arc.
pub fn build_skeleton(
    region: Region,
    p: PhaseParams,
    arm_slope: f64,
    c1: f64,
) -> Result<ContourSkeleton> {
    if !(arm_slope > 0.0) || !(c1 > 0.0) {
        return Err(Error::InvalidArgument("arm_slope and c1 must be positive".into()));
    }
    let saddles = saddle_points(p)?;
    let arcs = match region {
        Region::R1 => build_r1(p, arm_slope),
        Region::R2 => {
            if saddles.lambda0 <= 0.0 {
                return Err(Error::InvalidArgument("R2 skeleton needs λ₀ > 0 (x < 0)".into()));
            }
            build_r2(p, arm_slope, saddles.lambda0.sqrt())
        }
        Region::R3 => {
            if saddles.lambda0 >= 0.0 {
                return Err(Error::InvalidArgument("R3 skeleton needs λ₀ < 0 (x > 0)".into()));
            }
            build_r3(p, arm_slope, (-saddles.lambda0).sqrt())
        }
    };
    let skel = ContourSkeleton { region, arm_slope, params: p, saddles, arcs };
    let c0 = (40.0f64 / 99.0).exp() * (1.0 + 1e-9);
    for arc in &skel.arcs {
        if arc.is_b_arc || arc.geom.is_circle() {
            continue;
        }
        let sign = arc.role.exp_sign();
        // sample the first quarter of the arm (from the saddle out)
        for m in 0..5 {
            let u = -1.0 + 0.5 * (m as f64 / 4.0);
            let k = arc.geom.point(u);
            let mag = exp_2i_theta(k, p, sign).norm();
            if mag > c0 {
                return Err(Error::ContourConstruction {
                    label: arc.label.clone(),
                    detail: format!(
                        "arm enters the wrong sign region: |e^{{{:+}2iθ}}| = {mag:.3e} at k = {k}",
                        sign as i32
                    ),
                });
            }
        }
    }
    Ok(skel)
}
