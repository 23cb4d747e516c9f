//! Near-field electromagnetic response of holographic and discrete
//! reflecting surfaces.
//!
//! The surface is a flat aperture of size `L_y x L_z` centred at the origin
//! of the yz-plane, illuminated from the front half-space (x > 0). The crate
//! computes the physical-optics scattered field in the Fresnel zone, the
//! complex space factor (closed form, far-field sinc, discrete element sum
//! and a brute-force quadrature reference), and the resulting link budget.
//!
//! Angles are radians throughout; `theta` is the polar angle from +z and
//! `phi` the azimuth in the xy-plane measured from the surface normal (+x).

pub mod error;
pub mod geometry;
pub mod incident;
pub mod link;
pub mod quadrature;
pub mod space_factor;
pub mod specfun;

pub use error::{Error, Result};
pub use geometry::{
    classify_region, fresnel_zone, wavelength, wavenumber, CartesianPoint, FresnelBounds,
    PhysicalConstants, Region, SphericalPoint, SurfaceSpec, FREE_SPACE_IMPEDANCE, SPEED_OF_LIGHT,
};
pub use incident::{
    beamfocusing_profile, beamsteering_profile, exact_distance, fresnel_distance_term,
    incident_field_magnitude, surface_current, FresnelExpansion, PhaseProfile, TransmitSource,
};
pub use link::{
    antenna_pathloss, baseband_gain, discrete_power_gain, pathloss_antenna, pathloss_direct,
    pathloss_plate, pathloss_with_space_factor, plate_field_sq, plate_pathloss, scattered_field_sq,
    snr, two_user_interference, ElementPattern, InterferenceGains, LinkBudget, PlatePathLoss,
};
pub use space_factor::{
    axis_factor, beampattern_sweep, space_factor_discrete, space_factor_farfield,
    space_factor_holographic, space_factor_oracle, space_factor_params, space_factor_sweep,
    DiscreteSurfaceSpec, Evaluator, OracleGrid, ProfileRule, SpaceFactorParams, Sweep, SweepAxis,
    SweepTarget,
};

/// Complex scalar used for fields, currents and space factors.
pub type ComplexScalar = num_complex::Complex64;

/// Linear power ratio to decibels.
pub fn to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Decibels to linear power ratio.
pub fn from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}
