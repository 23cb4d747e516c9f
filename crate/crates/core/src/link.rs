//! End-to-end link quantities: scattered field strength, plate-scattering
//! path loss, the direct path, the antenna-based comparison model and the
//! baseband channel gain.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{PhysicalConstants, SphericalPoint, SurfaceSpec};
use crate::incident::{
    beamfocusing_profile, incident_field_magnitude, PhaseProfile, TransmitSource,
};
use crate::space_factor::{
    space_factor_discrete, space_factor_farfield, space_factor_holographic, space_factor_params,
    DiscreteSurfaceSpec, SpaceFactorParams,
};

/// Default molecular absorption coefficient [1/m] (300 GHz, indoor air).
pub const DEFAULT_KAPPA_ABS: f64 = 0.0033;

/// Transmit power, antenna gains, carrier and noise of a link. Gains are
/// linear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    tx_power: f64,
    gain_tx: f64,
    gain_rx: f64,
    frequency: f64,
    kappa_abs: f64,
    noise_var: f64,
    medium: PhysicalConstants,
}

impl LinkBudget {
    pub fn new(
        tx_power: f64,
        gain_tx: f64,
        gain_rx: f64,
        frequency: f64,
        kappa_abs: f64,
        noise_var: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("transmit power", tx_power),
            ("transmit gain", gain_tx),
            ("receive gain", gain_rx),
            ("frequency", frequency),
            ("noise variance", noise_var),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Argument(format!("{name} must be positive, got {v}")));
            }
        }
        if !(kappa_abs.is_finite() && kappa_abs >= 0.0) {
            return Err(Error::Argument(format!(
                "absorption coefficient must be non-negative, got {kappa_abs}"
            )));
        }
        Ok(Self {
            tx_power,
            gain_tx,
            gain_rx,
            frequency,
            kappa_abs,
            noise_var,
            medium: PhysicalConstants::default(),
        })
    }

    pub fn with_medium(mut self, medium: PhysicalConstants) -> Self {
        self.medium = medium;
        self
    }

    pub fn tx_power(&self) -> f64 {
        self.tx_power
    }

    pub fn gain_tx(&self) -> f64 {
        self.gain_tx
    }

    pub fn gain_rx(&self) -> f64 {
        self.gain_rx
    }

    pub fn frequency(&self) -> f64 {
        self.frequency
    }

    pub fn kappa_abs(&self) -> f64 {
        self.kappa_abs
    }

    pub fn noise_var(&self) -> f64 {
        self.noise_var
    }

    pub fn medium(&self) -> PhysicalConstants {
        self.medium
    }

    pub fn wavelength(&self) -> f64 {
        self.medium.c() / self.frequency
    }

    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength()
    }

    fn absorption(&self, distance: f64) -> f64 {
        (-self.kappa_abs * distance).exp()
    }

    /// Received SNR `P_t |h|^2 / sigma^2` for channel gain `h`.
    pub fn snr(&self, h: Complex64) -> f64 {
        snr(self.tx_power, h, self.noise_var)
    }
}

/// `P_t |h|^2 / sigma^2`.
pub fn snr(tx_power: f64, h: Complex64, noise_var: f64) -> f64 {
    tx_power * h.norm_sqr() / noise_var
}

/// Element radiation pattern `G_e(theta) = gamma cos^{2q}(theta)` used by the
/// antenna-based path-loss model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementPattern {
    gamma: f64,
    q: f64,
}

impl ElementPattern {
    pub fn new(gamma: f64, q: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::Argument(format!(
                "peak gain must be positive, got {gamma}"
            )));
        }
        if !(q.is_finite() && q >= 0.0) {
            return Err(Error::Argument(format!(
                "cosine exponent must be non-negative, got {q}"
            )));
        }
        Ok(Self { gamma, q })
    }

    pub fn gain(&self, theta: f64) -> f64 {
        let c = theta.cos().max(0.0);
        if self.q == 0.0 {
            self.gamma
        } else {
            self.gamma * c.powf(2.0 * self.q)
        }
    }
}

/// `|E_s|^2` at the receiver [(V/m)^2], with the holographic closed-form
/// space factor.
pub fn scattered_field_sq(
    tx: &TransmitSource,
    rx: &SphericalPoint,
    s: &SurfaceSpec,
    profile: &PhaseProfile,
    wavelength: f64,
    eta: f64,
) -> Result<f64> {
    if !(wavelength.is_finite() && wavelength > 0.0) {
        return Err(Error::Argument(format!(
            "wavelength must be positive, got {wavelength}"
        )));
    }
    let k = 2.0 * PI / wavelength;
    let p = space_factor_params(&tx.position, rx, profile);
    let sf = space_factor_holographic(&p, s, k)?;
    Ok(plate_field_sq(tx, rx, s, wavelength, eta) * sf.norm_sqr())
}

/// `|E_s|^2` with a unit space factor.
pub fn plate_field_sq(
    tx: &TransmitSource,
    rx: &SphericalPoint,
    s: &SurfaceSpec,
    wavelength: f64,
    eta: f64,
) -> f64 {
    let e_i = incident_field_magnitude(tx, eta);
    let aperture = s.area() / wavelength;
    let cos_phi_t = tx.position.phi().cos();
    let sin_theta_r = rx.theta().sin();
    let amp = aperture * e_i * cos_phi_t * sin_theta_r / rx.r();
    amp * amp
}

/// Plate-scattering path loss with a unit space factor, from raw distances
/// and angles. No front-half-space check is made here: a grazing source
/// (`phi_t = +-pi/2`) simply yields zero.
pub fn plate_pathloss(
    r_t: f64,
    r_r: f64,
    phi_t: f64,
    theta_r: f64,
    area: f64,
    lb: &LinkBudget,
) -> f64 {
    let a = area / (4.0 * PI);
    let angular = (phi_t.cos() * theta_r.sin()).powi(2);
    lb.gain_tx * lb.gain_rx * a * a * angular / (r_t * r_t * r_r * r_r) * lb.absorption(r_t + r_r)
}

/// Path loss of the transmitter-surface-receiver link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlatePathLoss {
    /// Without the space factor (`PL`).
    pub unfocused: f64,
    /// Including `|S_yz|^2` (`PL-bar`).
    pub focused: f64,
    pub space_factor: Complex64,
}

pub fn pathloss_plate(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    s: &SurfaceSpec,
    lb: &LinkBudget,
    profile: &PhaseProfile,
) -> Result<PlatePathLoss> {
    let p = space_factor_params(tx, rx, profile);
    let sf = space_factor_holographic(&p, s, lb.wavenumber())?;
    Ok(pathloss_with_space_factor(tx, rx, s, lb, sf))
}

/// [`pathloss_plate`] with a space factor computed elsewhere (e.g. by the
/// quadrature reference).
pub fn pathloss_with_space_factor(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    s: &SurfaceSpec,
    lb: &LinkBudget,
    space_factor: Complex64,
) -> PlatePathLoss {
    let pl = plate_pathloss(tx.r(), rx.r(), tx.phi(), rx.theta(), s.area(), lb);
    PlatePathLoss {
        unfocused: pl,
        focused: pl * space_factor.norm_sqr(),
        space_factor,
    }
}

/// Antenna-based single-element path loss from raw distances and element
/// angles (angle between each link direction and the element boresight).
pub fn antenna_pathloss(
    r_t: f64,
    r_r: f64,
    elem_angle_t: f64,
    elem_angle_r: f64,
    ep: &ElementPattern,
    lb: &LinkBudget,
) -> f64 {
    let l = lb.wavelength() / (4.0 * PI);
    lb.gain_tx * lb.gain_rx * l.powi(4) * ep.gain(elem_angle_t) * ep.gain(elem_angle_r)
        / (r_t * r_t * r_r * r_r)
        * lb.absorption(r_t + r_r)
}

/// Antenna-based path loss `PL'`, with the element pattern evaluated at the
/// angle each link direction makes with the surface normal.
pub fn pathloss_antenna(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    ep: &ElementPattern,
    lb: &LinkBudget,
) -> f64 {
    antenna_pathloss(
        tx.r(),
        rx.r(),
        tx.boresight_angle(),
        rx.boresight_angle(),
        ep,
        lb,
    )
}

/// Direct-path Friis loss with molecular absorption.
pub fn pathloss_direct(r_d: f64, lb: &LinkBudget) -> Result<f64> {
    if !(r_d.is_finite() && r_d > 0.0) {
        return Err(Error::Argument(format!(
            "direct-path distance must be positive, got {r_d}"
        )));
    }
    let l = lb.wavelength() / (4.0 * PI * r_d);
    Ok(lb.gain_tx * lb.gain_rx * l * l * lb.absorption(r_d))
}

/// Complex end-to-end channel gain
/// `h = sqrt(PL) e^{-jk(r_t + r_r)} S_yz + sqrt(PL_d) e^{-jk r_d}`.
/// `direct = None` models a blocked direct path.
pub fn baseband_gain(
    tx: &SphericalPoint,
    rx: &SphericalPoint,
    s: &SurfaceSpec,
    profile: &PhaseProfile,
    lb: &LinkBudget,
    direct: Option<f64>,
) -> Result<Complex64> {
    let k = lb.wavenumber();
    let pl = pathloss_plate(tx, rx, s, lb, profile)?;
    let mut h =
        pl.unfocused.sqrt() * Complex64::from_polar(1.0, -k * (tx.r() + rx.r())) * pl.space_factor;
    if let Some(r_d) = direct {
        h += pathloss_direct(r_d, lb)?.sqrt() * Complex64::from_polar(1.0, -k * r_d);
    }
    Ok(h)
}

/// Array power gain `(N_y N_z)^2 |S_yz|^2` of a discrete surface.
pub fn discrete_power_gain(d: &DiscreteSurfaceSpec, p: &SpaceFactorParams, k: f64) -> f64 {
    let n = (d.ny() * d.nz()) as f64;
    n * n * space_factor_discrete(p, d, k).norm_sqr()
}

/// Beampattern at two users when the surface focuses on the first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceGains {
    /// `|S_yz|^2` at user 1.
    pub focus_gain: f64,
    /// `|S_yz|^2` at user 2 (holographic closed form).
    pub leak_gain: f64,
    /// `|S_yz|^2` at user 2 under the parallel-ray model.
    pub leak_gain_farfield: f64,
}

/// Focus on `user1` and measure the leakage towards `user2`. The far end of
/// the link drops out of the space-factor parameters, so it is pinned to an
/// arbitrary boresight anchor.
pub fn two_user_interference(
    user1: &SphericalPoint,
    user2: &SphericalPoint,
    s: &SurfaceSpec,
    k: f64,
) -> Result<InterferenceGains> {
    let anchor = SphericalPoint::new(1.0, 0.5 * PI, 0.0)?;
    let profile = beamfocusing_profile(&anchor, user1);
    let at1 = space_factor_params(&anchor, user1, &profile);
    let at2 = space_factor_params(&anchor, user2, &profile);
    Ok(InterferenceGains {
        focus_gain: space_factor_holographic(&at1, s, k)?.norm_sqr(),
        leak_gain: space_factor_holographic(&at2, s, k)?.norm_sqr(),
        leak_gain_farfield: space_factor_farfield(&at2, s, k).powi(2),
    })
}
