//! Incident spherical wave, the second-order (Fresnel) distance expansion
//! and the surface current induced on the aperture.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::SphericalPoint;

/// An infinitesimal dipole parallel to the surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransmitSource {
    pub position: SphericalPoint,
    power: f64,
    gain: f64,
}

impl TransmitSource {
    /// `power` in watts, `gain` linear.
    pub fn new(position: SphericalPoint, power: f64, gain: f64) -> Result<Self> {
        if !(power.is_finite() && power > 0.0) {
            return Err(Error::Argument(format!(
                "transmit power must be positive, got {power}"
            )));
        }
        if !(gain.is_finite() && gain > 0.0) {
            return Err(Error::Argument(format!(
                "transmit gain must be positive, got {gain}"
            )));
        }
        Ok(Self {
            position,
            power,
            gain,
        })
    }

    /// Source whose incident field magnitude at the surface centre is
    /// `field` [V/m] in a medium of impedance `eta`.
    pub fn with_incident_field(position: SphericalPoint, field: f64, eta: f64) -> Result<Self> {
        let r = position.r();
        Self::new(position, 4.0 * PI * r * r * field * field / eta, 1.0)
    }

    pub fn power(&self) -> f64 {
        self.power
    }

    pub fn gain(&self) -> f64 {
        self.gain
    }
}

/// Quadratic phase profile `phi(y, z) = k (C1 y^2 + C2 y + C3 z^2 + C4 z)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhaseProfile {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

impl PhaseProfile {
    pub fn new(c1: f64, c2: f64, c3: f64, c4: f64) -> Result<Self> {
        if [c1, c2, c3, c4].iter().all(|c| c.is_finite()) {
            Ok(Self { c1, c2, c3, c4 })
        } else {
            Err(Error::Argument(
                "phase profile coefficients must be finite".into(),
            ))
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Phase shift `phi(y, z)` [rad] applied at surface point `(y, z)`.
    pub fn phase(&self, y: f64, z: f64, k: f64) -> f64 {
        k * (self.c1 * y * y + self.c2 * y + self.c3 * z * z + self.c4 * z)
    }
}

// Coefficients of the Fresnel expansion of the distance from `p` to the
// surface point (0, y, z), shared by the focusing profile and the
// space-factor parameters so that perfect focus cancels bit-exactly.
pub(crate) fn quad_y(p: &SphericalPoint) -> f64 {
    let uy = p.direction()[1];
    (1.0 - uy * uy) / (2.0 * p.r())
}

pub(crate) fn lin_y(p: &SphericalPoint) -> f64 {
    p.direction()[1]
}

pub(crate) fn quad_z(p: &SphericalPoint) -> f64 {
    let uz = p.direction()[2];
    (1.0 - uz * uz) / (2.0 * p.r())
}

pub(crate) fn lin_z(p: &SphericalPoint) -> f64 {
    p.direction()[2]
}

/// Euclidean distance from `src` to the surface point `(0, y, z)`.
pub fn exact_distance(src: &SphericalPoint, y: f64, z: f64) -> f64 {
    let c = src.to_cartesian();
    let dy = c.y - y;
    let dz = c.z - z;
    (c.x * c.x + dy * dy + dz * dz).sqrt()
}

/// Second-order expansion of the source distance about the surface centre,
/// written directly in the source angles. `r + term` approximates
/// [`exact_distance`].
#[derive(Debug, Clone, Copy)]
pub struct FresnelExpansion {
    yy: f64,
    y: f64,
    zz: f64,
    z: f64,
}

impl FresnelExpansion {
    pub fn new(src: &SphericalPoint) -> Self {
        let (st, ct) = src.theta().sin_cos();
        let sp = src.phi().sin();
        let r = src.r();
        Self {
            yy: (1.0 - sp * sp * st * st) / (2.0 * r),
            y: -sp * st,
            zz: st * st / (2.0 * r),
            z: -ct,
        }
    }

    #[inline]
    pub fn eval(&self, y: f64, z: f64) -> f64 {
        y * (self.yy * y + self.y) + z * (self.zz * z + self.z)
    }
}

/// `r~(y, z)`: the aperture-dependent part of the second-order distance
/// expansion.
pub fn fresnel_distance_term(src: &SphericalPoint, y: f64, z: f64) -> f64 {
    FresnelExpansion::new(src).eval(y, z)
}

/// `|E_i| = sqrt(eta P_t G_t / (4 pi r_t^2))` at the surface centre.
pub fn incident_field_magnitude(src: &TransmitSource, eta: f64) -> f64 {
    let r = src.position.r();
    (eta * src.power * src.gain / (4.0 * PI * r * r)).sqrt()
}

/// z-directed surface current density `J_z e^{j phi(y, z)}` [A/m] induced by
/// the incident wave, with the amplitude held at its centre value.
pub fn surface_current(
    src: &TransmitSource,
    profile: &PhaseProfile,
    y: f64,
    z: f64,
    k: f64,
    eta: f64,
) -> Complex64 {
    let p = &src.position;
    let magnitude = 2.0 * incident_field_magnitude(src, eta) * p.phi().cos() / eta;
    let phase = -k * (p.r() + fresnel_distance_term(p, y, z)) + profile.phase(y, z, k) + FRAC_PI_2;
    Complex64::from_polar(magnitude, phase)
}

/// Profile that cancels the residual phase at `focus` for illumination from
/// `src`, i.e. focuses the reflected beam onto a point.
pub fn beamfocusing_profile(src: &SphericalPoint, focus: &SphericalPoint) -> PhaseProfile {
    PhaseProfile {
        c1: quad_y(src) + quad_y(focus),
        c2: -lin_y(src) - lin_y(focus),
        c3: quad_z(src) + quad_z(focus),
        c4: -lin_z(src) - lin_z(focus),
    }
}

/// Linear-only profile steering towards the direction of `towards`
/// (anomalous reflection); the limit of [`beamfocusing_profile`] as both
/// distances grow without bound.
pub fn beamsteering_profile(src: &SphericalPoint, towards: &SphericalPoint) -> PhaseProfile {
    PhaseProfile {
        c1: 0.0,
        c2: -lin_y(src) - lin_y(towards),
        c3: 0.0,
        c4: -lin_z(src) - lin_z(towards),
    }
}
