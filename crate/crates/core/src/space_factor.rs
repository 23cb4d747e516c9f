//! The normalised space factor `S_yz` of the aperture and its evaluators.
//!
//! With the Fresnel expansion of both link distances and a quadratic phase
//! profile, the residual phase over the aperture is
//! `-k (a_y y^2 - b_y y + a_z z^2 - b_z z)` and
//!
//! ```text
//! S_yz = 1/(L_y L_z) int int e^{-jk(a_y y^2 - b_y y + a_z z^2 - b_z z)} dy dz
//! ```
//!
//! which separates into a y-factor and a z-factor. Evaluators:
//!
//! * [`space_factor_holographic`]: closed form through erf on the 45 degree
//!   rays, falling back to sinc on an axis whose quadratic phase is negligible;
//! * [`space_factor_farfield`]: parallel-ray limit, ignores `a_y`, `a_z`;
//! * [`space_factor_discrete`]: element sum of a tiled surface;
//! * [`space_factor_oracle`]: composite Gauss-Legendre quadrature of the
//!   Fresnel integrand built straight from the geometry, used as ground truth.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{SphericalPoint, SurfaceSpec};
use crate::incident::{
    beamfocusing_profile, lin_y, lin_z, quad_y, quad_z, FresnelExpansion, PhaseProfile,
};
use crate::quadrature::GaussLegendre;
use crate::specfun::{gaussian_phase_integral, sinc};

/// Largest quadratic phase excursion `|k a (L/2)^2|` [rad] for which an axis
/// is evaluated with the linear-phase (sinc) form.
pub const LINEAR_PHASE_SWITCH: f64 = 1e-8;

/// Reduced quadratic-phase parameters of the space factor.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpaceFactorParams {
    /// [1/m]
    pub a_y: f64,
    pub b_y: f64,
    /// [1/m]
    pub a_z: f64,
    pub b_z: f64,
}

impl SpaceFactorParams {
    pub fn new(a_y: f64, b_y: f64, a_z: f64, b_z: f64) -> Result<Self> {
        if [a_y, b_y, a_z, b_z].iter().all(|v| v.is_finite()) {
            Ok(Self { a_y, b_y, a_z, b_z })
        } else {
            Err(Error::Argument(
                "space-factor parameters must be finite".into(),
            ))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a_y == 0.0 && self.b_y == 0.0 && self.a_z == 0.0 && self.b_z == 0.0
    }
}

/// Parameters for transmitter `tx`, receiver `rx` and phase profile.
pub fn space_factor_params(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    profile: &PhaseProfile,
) -> SpaceFactorParams {
    SpaceFactorParams {
        a_y: quad_y(tx) + quad_y(rx) - profile.c1,
        b_y: lin_y(tx) + lin_y(rx) + profile.c2,
        a_z: quad_z(tx) + quad_z(rx) - profile.c3,
        b_z: lin_z(tx) + lin_z(rx) + profile.c4,
    }
}

fn check_k(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "wavenumber must be positive, got {k}"
        )))
    }
}

/// One axis of the closed form: `1/L int_{-L/2}^{L/2} e^{-jk(a y^2 - b y)} dy`.
pub fn axis_factor(a: f64, b: f64, len: f64, k: f64) -> Result<Complex64> {
    check_k(k)?;
    let half = 0.5 * len;
    if (k * a * half * half).abs() < LINEAR_PHASE_SWITCH {
        Ok(Complex64::new(sinc(k * b * half), 0.0))
    } else {
        Ok(gaussian_phase_integral(a, b, k, -half, half)? / len)
    }
}

/// Closed-form space factor of a holographic (continuous) aperture.
pub fn space_factor_holographic(
    p: &SpaceFactorParams,
    s: &SurfaceSpec,
    k: f64,
) -> Result<Complex64> {
    Ok(axis_factor(p.a_y, p.b_y, s.ly(), k)? * axis_factor(p.a_z, p.b_z, s.lz(), k)?)
}

/// Parallel-ray space factor `sinc(k L_y b_y / 2) sinc(k L_z b_z / 2)`.
pub fn space_factor_farfield(p: &SpaceFactorParams, s: &SurfaceSpec, k: f64) -> f64 {
    sinc(0.5 * k * s.ly() * p.b_y) * sinc(0.5 * k * s.lz() * p.b_z)
}

/// A surface tiled into `ny x nz` elements of size `tile_y x tile_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteSurfaceSpec {
    ny: usize,
    nz: usize,
    tile_y: f64,
    tile_z: f64,
}

impl DiscreteSurfaceSpec {
    pub fn new(ny: usize, nz: usize, tile_y: f64, tile_z: f64) -> Result<Self> {
        if ny == 0 || nz == 0 {
            return Err(Error::Geometry("element counts must be positive".into()));
        }
        if !(tile_y.is_finite() && tile_y > 0.0 && tile_z.is_finite() && tile_z > 0.0) {
            return Err(Error::Geometry(format!(
                "tile dimensions must be positive, got {tile_y} x {tile_z}"
            )));
        }
        Ok(Self {
            ny,
            nz,
            tile_y,
            tile_z,
        })
    }

    /// Tiling of `surface` with the given tile size. The aperture must be an
    /// integer number of tiles along each axis (to 1e-9 relative).
    pub fn tile(surface: &SurfaceSpec, tile_y: f64, tile_z: f64) -> Result<Self> {
        let count = |len: f64, tile: f64, axis: &str| -> Result<usize> {
            let n = (len / tile).round();
            if n < 1.0 || ((n * tile - len) / len).abs() > 1e-9 {
                return Err(Error::Geometry(format!(
                    "{axis} aperture {len} m is not a whole number of {tile} m tiles"
                )));
            }
            Ok(n as usize)
        };
        Self::new(
            count(surface.ly(), tile_y, "y")?,
            count(surface.lz(), tile_z, "z")?,
            tile_y,
            tile_z,
        )
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn nz(&self) -> usize {
        self.nz
    }

    pub fn tile_y(&self) -> f64 {
        self.tile_y
    }

    pub fn tile_z(&self) -> f64 {
        self.tile_z
    }

    pub fn surface(&self) -> SurfaceSpec {
        SurfaceSpec::new(self.ny as f64 * self.tile_y, self.nz as f64 * self.tile_z)
            .expect("positive by construction")
    }

    /// Whether the tiles are larger than a wavelength, outside the regime
    /// where the element sum approximates the holographic aperture.
    pub fn exceeds_wavelength(&self, wavelength: f64) -> bool {
        self.tile_y > wavelength || self.tile_z > wavelength
    }
}

/// Element indices: `-N/2 ..= N/2 - 1` for even `N`, symmetric for odd `N`.
fn element_range(n: usize) -> std::ops::RangeInclusive<i64> {
    let n = n as i64;
    if n % 2 == 0 {
        -n / 2..=n / 2 - 1
    } else {
        -(n - 1) / 2..=(n - 1) / 2
    }
}

fn element_sum(a: f64, b: f64, tile: f64, n: usize, k: f64) -> Complex64 {
    let sum: Complex64 = element_range(n)
        .map(|i| {
            let y = i as f64 * tile;
            Complex64::from_polar(1.0, -k * (y * y * a - y * b))
        })
        .sum();
    sum / n as f64
}

/// Normalised element sum of a discrete surface.
pub fn space_factor_discrete(p: &SpaceFactorParams, d: &DiscreteSurfaceSpec, k: f64) -> Complex64 {
    element_sum(p.a_y, p.b_y, d.tile_y, d.ny, k) * element_sum(p.a_z, p.b_z, d.tile_z, d.nz, k)
}

/// Sampling control for [`space_factor_oracle`].
///
/// Each axis is covered by 8-point Gauss-Legendre panels; the node count per
/// axis is at least `min_nodes` and at least `nodes_per_cycle` per `2 pi` of
/// total phase variation along that axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleGrid {
    pub nodes_per_cycle: f64,
    pub min_nodes: usize,
    pub cell_budget: u64,
}

impl Default for OracleGrid {
    fn default() -> Self {
        Self {
            nodes_per_cycle: 16.0,
            min_nodes: 64,
            cell_budget: 100_000_000,
        }
    }
}

const ORACLE_ORDER: usize = 8;
const PILOT_SAMPLES: usize = 4097;

/// Residual Fresnel phase over the aperture, built from the geometry alone.
struct ResidualPhase {
    tx: FresnelExpansion,
    rx: FresnelExpansion,
    profile: PhaseProfile,
    k: f64,
}

impl ResidualPhase {
    #[inline]
    fn at(&self, y: f64, z: f64) -> f64 {
        self.k * (self.tx.eval(y, z) + self.rx.eval(y, z) - self.profile.phase(y, z, 1.0))
    }

    fn variation_along_y(&self, ly: f64, z: f64) -> f64 {
        total_variation(|t| self.at(t, z), ly)
    }

    fn variation_along_z(&self, lz: f64, y: f64) -> f64 {
        total_variation(|t| self.at(y, t), lz)
    }
}

fn total_variation(f: impl Fn(f64) -> f64, len: f64) -> f64 {
    let step = len / (PILOT_SAMPLES - 1) as f64;
    let mut prev = f(-0.5 * len);
    let mut tv = 0.0;
    for i in 1..PILOT_SAMPLES {
        let cur = f(-0.5 * len + i as f64 * step);
        tv += (cur - prev).abs();
        prev = cur;
    }
    tv
}

/// Reference space factor by direct 2-D quadrature of
/// `e^{-jk(r~_t + r~_r - phi/k)}` over the aperture.
pub fn space_factor_oracle(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    profile: &PhaseProfile,
    s: &SurfaceSpec,
    k: f64,
    grid: &OracleGrid,
) -> Result<Complex64> {
    check_k(k)?;
    let phase = ResidualPhase {
        tx: FresnelExpansion::new(tx),
        rx: FresnelExpansion::new(rx),
        profile: *profile,
        k,
    };
    let (ly, lz) = (s.ly(), s.lz());
    let span_y = [-0.5 * lz, 0.0, 0.5 * lz]
        .iter()
        .map(|&z| phase.variation_along_y(ly, z))
        .fold(0.0, f64::max);
    let span_z = [-0.5 * ly, 0.0, 0.5 * ly]
        .iter()
        .map(|&y| phase.variation_along_z(lz, y))
        .fold(0.0, f64::max);

    let panels = |span: f64| -> usize {
        let nodes = (grid.nodes_per_cycle * span / (2.0 * PI))
            .ceil()
            .max(grid.min_nodes as f64);
        (nodes / ORACLE_ORDER as f64).ceil() as usize
    };
    let (py, pz) = (panels(span_y), panels(span_z));
    let cells = (py * ORACLE_ORDER) as u128 * (pz * ORACLE_ORDER) as u128;
    if cells > grid.cell_budget as u128 {
        return Err(Error::Resolution {
            needed: cells,
            budget: grid.cell_budget,
        });
    }

    let gl = GaussLegendre::new(ORACLE_ORDER);
    let ys = gl.composite(-0.5 * ly, 0.5 * ly, py);
    let zs = gl.composite(-0.5 * lz, 0.5 * lz, pz);
    // Rows are independent; summing them in index order keeps the result
    // independent of scheduling.
    let rows: Vec<Complex64> = ys
        .par_iter()
        .map(|&(y, wy)| {
            let row: Complex64 = zs
                .iter()
                .map(|&(z, wz)| wz * Complex64::from_polar(1.0, -phase.at(y, z)))
                .sum();
            wy * row
        })
        .collect();
    let total: Complex64 = rows.iter().sum();
    Ok(total / (ly * lz))
}

/// How the phase profile is chosen at each point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileRule {
    /// The same profile everywhere.
    Fixed(PhaseProfile),
    /// Focused on the given point (which a sweep may move).
    Focus(SphericalPoint),
    /// Refocused on the receiver at every sweep point.
    TrackReceiver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepTarget {
    Receiver,
    Focus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Radial distance [m].
    R,
    /// Polar angle [rad].
    Theta,
    /// Azimuth [rad].
    Phi,
}

/// `count` equally spaced values from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub target: SweepTarget,
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Sweep {
    pub fn values(&self) -> Result<Vec<f64>> {
        if self.count < 2 {
            return Err(Error::Argument(format!(
                "a sweep needs at least 2 points, got {}",
                self.count
            )));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(Error::Argument("sweep limits must be finite".into()));
        }
        let n = self.count - 1;
        Ok((0..=n)
            .map(|i| {
                let t = i as f64 / n as f64;
                self.start + t * (self.stop - self.start)
            })
            .collect())
    }
}

/// Which evaluator a sweep uses for `S_yz`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Evaluator {
    Holographic,
    FarField,
    /// Tile size `(tile_y, tile_z)` [m]; the surface must be a whole number
    /// of tiles.
    Discrete {
        tile_y: f64,
        tile_z: f64,
    },
    Oracle(OracleGrid),
}

impl Evaluator {
    pub fn name(&self) -> &'static str {
        match self {
            Evaluator::Holographic => "holographic",
            Evaluator::FarField => "farfield",
            Evaluator::Discrete { .. } => "discrete",
            Evaluator::Oracle(_) => "oracle",
        }
    }

    /// `S_yz` for one geometry.
    pub fn evaluate(
        &self,
        tx: &SphericalPoint,
        rx: &SphericalPoint,
        profile: &PhaseProfile,
        s: &SurfaceSpec,
        k: f64,
    ) -> Result<Complex64> {
        let p = space_factor_params(tx, rx, profile);
        match self {
            Evaluator::Holographic => space_factor_holographic(&p, s, k),
            Evaluator::FarField => Ok(Complex64::new(space_factor_farfield(&p, s, k), 0.0)),
            Evaluator::Discrete { tile_y, tile_z } => {
                let d = DiscreteSurfaceSpec::tile(s, *tile_y, *tile_z)?;
                Ok(space_factor_discrete(&p, &d, k))
            }
            Evaluator::Oracle(grid) => space_factor_oracle(tx, rx, profile, s, k, grid),
        }
    }
}

fn moved(p: &SphericalPoint, axis: SweepAxis, v: f64) -> Result<SphericalPoint> {
    match axis {
        SweepAxis::R => p.with_r(v),
        SweepAxis::Theta => p.with_theta(v),
        SweepAxis::Phi => p.with_phi(v),
    }
}

/// Complex space factor along a sweep, in sweep order.
#[allow(clippy::too_many_arguments)]
pub fn space_factor_sweep(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    rule: &ProfileRule,
    s: &SurfaceSpec,
    k: f64,
    sweep: &Sweep,
    evaluator: &Evaluator,
) -> Result<Vec<(f64, Complex64)>> {
    check_k(k)?;
    if sweep.target == SweepTarget::Focus && !matches!(rule, ProfileRule::Focus(_)) {
        return Err(Error::Argument(
            "sweeping the focus point needs a focus profile".into(),
        ));
    }
    let values = sweep.values()?;
    values
        .par_iter()
        .map(|&v| {
            let (rx_v, rule_v) = match sweep.target {
                SweepTarget::Receiver => (moved(rx, sweep.axis, v)?, *rule),
                SweepTarget::Focus => match rule {
                    ProfileRule::Focus(f) => (*rx, ProfileRule::Focus(moved(f, sweep.axis, v)?)),
                    _ => unreachable!(),
                },
            };
            let profile = match rule_v {
                ProfileRule::Fixed(p) => p,
                ProfileRule::Focus(f) => beamfocusing_profile(tx, &f),
                ProfileRule::TrackReceiver => beamfocusing_profile(tx, &rx_v),
            };
            Ok((v, evaluator.evaluate(tx, &rx_v, &profile, s, k)?))
        })
        .collect()
}

/// Normalised beampattern `|S_yz|^2` along a sweep.
pub fn beampattern_sweep(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    rule: &ProfileRule,
    s: &SurfaceSpec,
    k: f64,
    sweep: &Sweep,
    evaluator: &Evaluator,
) -> Result<Vec<(f64, f64)>> {
    Ok(space_factor_sweep(tx, rx, rule, s, k, sweep, evaluator)?
        .into_iter()
        .map(|(v, s)| (v, s.norm_sqr()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::wavenumber;
    use approx::assert_relative_eq;

    fn sp(r: f64, t: f64, p: f64) -> SphericalPoint {
        SphericalPoint::from_degrees(r, t, p).unwrap()
    }

    #[test]
    fn perfect_focus_cancels_exactly() {
        let tx = sp(2.0, 45.0, 36.0);
        let rx = sp(8.0, 45.0, 30.0);
        let p = space_factor_params(&tx, &rx, &beamfocusing_profile(&tx, &rx));
        assert!(p.is_zero(), "{p:?}");
    }

    #[test]
    fn params_by_substitution() {
        let tx = sp(2.0, 45.0, 36.0);
        let rx = sp(8.0, 45.0, 30.0);
        let p = space_factor_params(&tx, &rx, &PhaseProfile::zero());
        let (t45, t36, t30) = (45f64.to_radians(), 36f64.to_radians(), 30f64.to_radians());
        let s2 = |x: f64| x.sin() * x.sin();
        assert_relative_eq!(
            p.a_y,
            (1.0 - s2(t36) * s2(t45)) / 4.0 + (1.0 - s2(t30) * s2(t45)) / 16.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            p.b_y,
            t36.sin() * t45.sin() + t30.sin() * t45.sin(),
            max_relative = 1e-14
        );
        assert_relative_eq!(p.a_z, s2(t45) / 4.0 + s2(t45) / 16.0, max_relative = 1e-14);
        assert_relative_eq!(p.b_z, 2.0 * t45.cos(), max_relative = 1e-14);
    }

    #[test]
    fn params_parallel_ray_limit() {
        let tx = sp(1e15, 60.0, 20.0);
        let rx = sp(1e15, 50.0, -35.0);
        let p = space_factor_params(&tx, &rx, &PhaseProfile::zero());
        assert!(p.a_y.abs() < 1e-15 && p.a_z.abs() < 1e-15);
        assert_relative_eq!(
            p.b_y,
            tx.direction()[1] + rx.direction()[1],
            max_relative = 1e-15
        );
    }

    #[test]
    fn holographic_unit_at_zero_params() {
        let s = SurfaceSpec::square(0.2).unwrap();
        let v = space_factor_holographic(&SpaceFactorParams::default(), &s, 6287.5).unwrap();
        assert_eq!(v, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn holographic_linear_phase_is_sinc_product() {
        let s = SurfaceSpec::new(0.2, 0.1).unwrap();
        let k = 6287.5;
        let p = SpaceFactorParams::new(0.0, 0.013, 0.0, -0.004).unwrap();
        let v = space_factor_holographic(&p, &s, k).unwrap();
        let expected = sinc(k * 0.2 * 0.013 / 2.0) * sinc(k * 0.1 * -0.004 / 2.0);
        assert_eq!(v.im, 0.0);
        assert_relative_eq!(v.re, expected, max_relative = 1e-15);
        assert_relative_eq!(
            space_factor_farfield(&p, &s, k),
            expected,
            max_relative = 1e-15
        );
    }

    #[test]
    fn farfield_first_null() {
        let s = SurfaceSpec::square(0.2).unwrap();
        let k = 6287.5;
        let lambda = 2.0 * PI / k;
        let p = SpaceFactorParams::new(0.0, lambda / 0.2, 0.0, 0.0).unwrap();
        assert!(space_factor_farfield(&p, &s, k).abs() < 1e-15);
        assert_eq!(
            space_factor_farfield(&SpaceFactorParams::default(), &s, k),
            1.0
        );
    }

    #[test]
    fn sinc_switch_is_continuous() {
        // both sides of the switch, a -> 0 with fixed b
        let (len, k, b) = (0.2, 6287.5, 0.002);
        let a_switch = LINEAR_PHASE_SWITCH / (k * 0.01);
        let sinc_side = axis_factor(0.5 * a_switch, b, len, k).unwrap();
        let erf_side = axis_factor(2.0 * a_switch, b, len, k).unwrap();
        assert!((sinc_side - erf_side).norm() < 1e-8);
        let erf_neg = axis_factor(-2.0 * a_switch, b, len, k).unwrap();
        assert!((sinc_side - erf_neg).norm() < 1e-8);
    }

    #[test]
    fn discrete_unit_cases() {
        let d = DiscreteSurfaceSpec::new(100, 100, 1e-3, 1e-3).unwrap();
        assert_eq!(
            space_factor_discrete(&SpaceFactorParams::default(), &d, 6287.5),
            Complex64::new(1.0, 0.0)
        );
        let single = DiscreteSurfaceSpec::new(1, 1, 1e-3, 1e-3).unwrap();
        let p = SpaceFactorParams::new(3.0, 0.4, -1.0, 0.9).unwrap();
        assert_relative_eq!(
            space_factor_discrete(&p, &single, 6287.5).norm(),
            1.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn element_index_sets() {
        assert_eq!(element_range(4).collect::<Vec<_>>(), vec![-2, -1, 0, 1]);
        assert_eq!(element_range(5).collect::<Vec<_>>(), vec![-2, -1, 0, 1, 2]);
        assert_eq!(element_range(1).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn tiling_must_divide_aperture() {
        let s = SurfaceSpec::new(0.2, 0.1).unwrap();
        let d = DiscreteSurfaceSpec::tile(&s, 0.001, 0.001).unwrap();
        assert_eq!((d.ny(), d.nz()), (200, 100));
        assert!(DiscreteSurfaceSpec::tile(&s, 0.003, 0.001).is_err());
        assert!(d.exceeds_wavelength(0.0005));
        assert!(!d.exceeds_wavelength(0.001));
    }

    #[test]
    fn oracle_perfect_focus_and_budget() {
        let tx = sp(2.0, 45.0, 36.0);
        let rx = sp(3.0, 60.0, 10.0);
        let s = SurfaceSpec::square(0.05).unwrap();
        let k = wavenumber(300e9).unwrap();
        let prof = beamfocusing_profile(&tx, &rx);
        let v = space_factor_oracle(&tx, &rx, &prof, &s, k, &OracleGrid::default()).unwrap();
        assert!((v - 1.0).norm() < 1e-12, "{v}");

        let tight = OracleGrid {
            cell_budget: 1000,
            ..OracleGrid::default()
        };
        assert!(matches!(
            space_factor_oracle(&tx, &rx, &PhaseProfile::zero(), &s, k, &tight),
            Err(Error::Resolution { .. })
        ));
    }

    #[test]
    fn sweep_requires_two_points() {
        let sweep = Sweep {
            target: SweepTarget::Receiver,
            axis: SweepAxis::Phi,
            start: 0.0,
            stop: 1.0,
            count: 1,
        };
        assert!(sweep.values().is_err());
    }

    #[test]
    fn tracking_profile_gives_flat_pattern() {
        let tx = sp(2.0, 45.0, 36.0);
        let rx = sp(2.0, 45.0, 30.0);
        let s = SurfaceSpec::square(0.2).unwrap();
        let sweep = Sweep {
            target: SweepTarget::Receiver,
            axis: SweepAxis::R,
            start: 1.0,
            stop: 10.0,
            count: 19,
        };
        let out = beampattern_sweep(
            &tx,
            &rx,
            &ProfileRule::TrackReceiver,
            &s,
            6287.5,
            &sweep,
            &Evaluator::Holographic,
        )
        .unwrap();
        assert_eq!(out.len(), 19);
        assert!(out.iter().all(|&(_, g)| g == 1.0));
    }
}
