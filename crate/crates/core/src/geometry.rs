//! Coordinates, physical constants and the Fresnel-zone classifier.
//!
//! The surface lies in the yz-plane centred at the origin. Points are given
//! in spherical coordinates `(r, theta, phi)` with
//! `(x, y, z) = (r cos(phi) sin(theta), r sin(phi) sin(theta), r cos(theta))`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Speed of light in vacuum [m/s].
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Free-space wave impedance [ohm].
pub const FREE_SPACE_IMPEDANCE: f64 = 376.730_313_668;
/// Free-space magnetic permeability [H/m].
pub const FREE_SPACE_PERMEABILITY: f64 = 1.256_637_062_12e-6;

/// Propagation-medium constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    c: f64,
    eta: f64,
    mu: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            c: SPEED_OF_LIGHT,
            eta: FREE_SPACE_IMPEDANCE,
            mu: FREE_SPACE_PERMEABILITY,
        }
    }
}

impl PhysicalConstants {
    pub fn new(c: f64, eta: f64, mu: f64) -> Result<Self> {
        for (name, v) in [("c", c), ("eta", eta), ("mu", mu)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Argument(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { c, eta, mu })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn wavelength(&self, frequency: f64) -> Result<f64> {
        check_frequency(frequency)?;
        Ok(self.c / frequency)
    }

    pub fn wavenumber(&self, frequency: f64) -> Result<f64> {
        Ok(2.0 * PI / self.wavelength(frequency)?)
    }
}

fn check_frequency(frequency: f64) -> Result<()> {
    if frequency.is_finite() && frequency > 0.0 {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "frequency must be positive, got {frequency}"
        )))
    }
}

/// Free-space wavelength `c / f` [m].
pub fn wavelength(frequency: f64) -> Result<f64> {
    PhysicalConstants::default().wavelength(frequency)
}

/// Free-space wavenumber `2 pi / lambda` [rad/m].
pub fn wavenumber(frequency: f64) -> Result<f64> {
    PhysicalConstants::default().wavenumber(frequency)
}

/// A point in front of the surface, in spherical coordinates.
///
/// Construction enforces `r > 0`, `0 < theta < pi` and
/// `-pi/2 < phi < pi/2`; the direction cosines are cached because every
/// downstream phase term is written in terms of them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    r: f64,
    theta: f64,
    phi: f64,
    // (cos(phi) sin(theta), sin(phi) sin(theta), cos(theta))
    dir: [f64; 3],
}

impl SphericalPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::Geometry(format!("radius must be positive, got {r}")));
        }
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::Geometry(format!(
                "polar angle must lie in (0, pi), got {theta}"
            )));
        }
        if !(phi > -FRAC_PI_2 && phi < FRAC_PI_2) {
            return Err(Error::Geometry(format!(
                "azimuth {phi} rad is outside the front half-space (-pi/2, pi/2)"
            )));
        }
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Ok(Self {
            r,
            theta,
            phi,
            dir: [cp * st, sp * st, ct],
        })
    }

    /// Same as [`SphericalPoint::new`] with angles in degrees.
    pub fn from_degrees(r: f64, theta_deg: f64, phi_deg: f64) -> Result<Self> {
        Self::new(r, theta_deg.to_radians(), phi_deg.to_radians())
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Unit direction `(cos phi sin theta, sin phi sin theta, cos theta)`.
    pub fn direction(&self) -> [f64; 3] {
        self.dir
    }

    /// Angle between the direction to this point and the surface normal.
    pub fn boresight_angle(&self) -> f64 {
        self.dir[0].clamp(-1.0, 1.0).acos()
    }

    pub fn with_r(&self, r: f64) -> Result<Self> {
        Self::new(r, self.theta, self.phi)
    }

    pub fn with_theta(&self, theta: f64) -> Result<Self> {
        Self::new(self.r, theta, self.phi)
    }

    pub fn with_phi(&self, phi: f64) -> Result<Self> {
        Self::new(self.r, self.theta, phi)
    }

    pub fn to_cartesian(&self) -> CartesianPoint {
        CartesianPoint {
            x: self.r * self.dir[0],
            y: self.r * self.dir[1],
            z: self.r * self.dir[2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CartesianPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Inverse of [`SphericalPoint::to_cartesian`]. Fails for points that are
    /// not strictly in front of the surface or lie on the z-axis.
    pub fn to_spherical(&self) -> Result<SphericalPoint> {
        let rho = self.x.hypot(self.y);
        let r = rho.hypot(self.z);
        SphericalPoint::new(r, rho.atan2(self.z), self.y.atan2(self.x))
    }
}

/// Aperture dimensions of a holographic surface [m].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSpec {
    ly: f64,
    lz: f64,
}

impl SurfaceSpec {
    pub fn new(ly: f64, lz: f64) -> Result<Self> {
        if !(ly.is_finite() && ly > 0.0 && lz.is_finite() && lz > 0.0) {
            return Err(Error::Geometry(format!(
                "surface dimensions must be positive, got {ly} x {lz}"
            )));
        }
        Ok(Self { ly, lz })
    }

    pub fn square(side: f64) -> Result<Self> {
        Self::new(side, side)
    }

    pub fn ly(&self) -> f64 {
        self.ly
    }

    pub fn lz(&self) -> f64 {
        self.lz
    }

    pub fn l_max(&self) -> f64 {
        self.ly.max(self.lz)
    }

    pub fn area(&self) -> f64 {
        self.ly * self.lz
    }
}

/// Radial limits of the radiating near-field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelBounds {
    /// Lower limit (exclusive) [m].
    pub r_min: f64,
    /// Upper limit (inclusive) [m].
    pub r_max: f64,
}

/// Fresnel-zone limits `0.62 sqrt(L^3 / lambda) < r <= 2 L^2 / lambda` with
/// `L` the largest aperture dimension.
pub fn fresnel_zone(surface: &SurfaceSpec, wavelength: f64) -> Result<FresnelBounds> {
    if !(wavelength.is_finite() && wavelength > 0.0) {
        return Err(Error::Argument(format!(
            "wavelength must be positive, got {wavelength}"
        )));
    }
    let l = surface.l_max();
    Ok(FresnelBounds {
        r_min: 0.62 * (l * l * l / wavelength).sqrt(),
        r_max: 2.0 * l * l / wavelength,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    ReactiveNear,
    Fresnel,
    Far,
}

impl Region {
    pub fn as_str(&self) -> &'static str {
        match self {
            Region::ReactiveNear => "reactive-near",
            Region::Fresnel => "fresnel",
            Region::Far => "far",
        }
    }
}

pub fn classify_region(r: f64, surface: &SurfaceSpec, wavelength: f64) -> Result<Region> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Argument(format!(
            "distance must be positive, got {r}"
        )));
    }
    let b = fresnel_zone(surface, wavelength)?;
    Ok(if r <= b.r_min {
        Region::ReactiveNear
    } else if r <= b.r_max {
        Region::Fresnel
    } else {
        Region::Far
    })
}
