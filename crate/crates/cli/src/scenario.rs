//! Scenario files: TOML with flat sections, every field optional so that
//! presets, files and command-line flags can be layered.
//!
//! ```toml
//! schema = 1
//!
//! [link]
//! frequency_hz = 300e9
//! incident_field_v_per_m = 1.0
//!
//! [tx]
//! r = 2.0
//! theta_deg = 45.0
//! phi_deg = 36.0
//!
//! [rx]
//! r = 2.0
//! theta_deg = 45.0
//! phi_deg = 30.0
//!
//! [surface]
//! side = "200lambda"
//!
//! [profile]
//! mode = "focus"
//! r = 8.0
//! theta_deg = 45.0
//! phi_deg = 30.0
//!
//! [evaluator]
//! kind = "holographic"
//!
//! [sweep]
//! target = "focus"
//! axis = "phi"
//! start = 10.0
//! stop = 50.0
//! count = 401
//! unit = "deg"
//!
//! [output]
//! quantity = "field"
//! path = "fig2a.csv"
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};

use holoirs::{
    from_db, ElementPattern, Evaluator, LinkBudget, OracleGrid, PhaseProfile, PhysicalConstants,
    ProfileRule, SphericalPoint, SurfaceSpec, Sweep, SweepAxis, SweepTarget,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

/// A length in metres, or a multiple of the wavelength written `"200lambda"`
/// (also `"0.2m"`, `"5mm"`). Expanded against the scenario's frequency
/// with a single multiplication.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Length {
    Metres(f64),
    Text(String),
}

impl Length {
    pub fn resolve(&self, wavelength: f64) -> CliResult<f64> {
        let v = match self {
            Length::Metres(m) => *m,
            Length::Text(t) => {
                let t = t.trim();
                let (number, scale) = if let Some(n) = t.strip_suffix("lambda") {
                    (n, wavelength)
                } else if let Some(n) = t.strip_suffix("mm") {
                    (n, 1e-3)
                } else if let Some(n) = t.strip_suffix('m') {
                    (n, 1.0)
                } else {
                    (t, 1.0)
                };
                let n: f64 = number.trim().parse().map_err(|_| {
                    CliError::Parse(format!(
                        "length {t:?} is not a number optionally followed by m, mm or lambda"
                    ))
                })?;
                n * scale
            }
        };
        if v.is_finite() && v > 0.0 {
            Ok(v)
        } else {
            Err(CliError::Domain(format!(
                "length must be positive, got {v}"
            )))
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Metres(m) => write!(f, "{m}"),
            Length::Text(t) => f.write_str(t),
        }
    }
}

impl std::str::FromStr for Length {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.parse::<f64>() {
            Ok(v) => Length::Metres(v),
            Err(_) => Length::Text(s.to_string()),
        })
    }
}

/// Later layers win, field by field.
pub trait Layer {
    fn layer(self, over: Self) -> Self;
}

impl<T: Layer> Layer for Option<T> {
    fn layer(self, over: Self) -> Self {
        match (self, over) {
            (Some(a), Some(b)) => Some(a.layer(b)),
            (a, b) => b.or(a),
        }
    }
}

macro_rules! section {
    ($(#[$m:meta])* $name:ident { $($(#[$fm:meta])* $field:ident : $ty:ty),* $(,)? }) => {
        $(#[$m])*
        #[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name {
            $($(#[$fm])* #[serde(skip_serializing_if = "Option::is_none")] pub $field: Option<$ty>,)*
        }

        impl Layer for $name {
            fn layer(self, over: Self) -> Self {
                Self { $($field: over.$field.or(self.$field),)* }
            }
        }
    };
}

section!(
    /// A point in front of the surface; angles in degrees.
    PointSection {
        r: Length,
        theta_deg: f64,
        phi_deg: f64,
    }
);

section!(SurfaceSection {
    /// Square aperture; `ly`/`lz` take precedence.
    side: Length,
    ly: Length,
    lz: Length,
    /// Square tiles for the discrete evaluator; `tile_y`/`tile_z` take
    /// precedence.
    tile: Length,
    tile_y: Length,
    tile_z: Length,
});

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileMode {
    /// No phase shift.
    Zero,
    /// `c1 y^2 + c2 y + c3 z^2 + c4 z`, `c1`/`c3` in 1/m.
    Explicit,
    /// Focused on the point given in the section.
    Focus,
    /// Refocused on the receiver at every sweep point.
    Track,
    /// Linear-only profile steering towards the receiver direction.
    Steer,
}

section!(ProfileSection {
    mode: ProfileMode,
    c1: f64,
    c2: f64,
    c3: f64,
    c4: f64,
    r: Length,
    theta_deg: f64,
    phi_deg: f64,
});

section!(LinkSection {
    frequency_hz: f64,
    /// Overrides power and gain when computing `|E_i|`.
    incident_field_v_per_m: f64,
    tx_power_w: f64,
    gain_tx_dbi: f64,
    gain_rx_dbi: f64,
    kappa_abs_per_m: f64,
    noise_var_w: f64,
});

section!(
    /// Element pattern `gamma cos^{2q}` of the antenna-based path-loss model.
    ElementSection {
        gamma: f64,
        q: f64,
    }
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvaluatorKind {
    Holographic,
    Farfield,
    Discrete,
    Oracle,
}

section!(EvaluatorSection {
    kind: EvaluatorKind,
    nodes_per_cycle: f64,
    min_nodes: usize,
    cell_budget: u64,
});

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetName {
    Rx,
    Focus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxisName {
    R,
    Theta,
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepUnit {
    Deg,
    Rad,
    M,
    Lambda,
}

section!(SweepSection {
    target: TargetName,
    axis: AxisName,
    start: f64,
    stop: f64,
    count: usize,
    unit: SweepUnit,
});

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// `S_yz` and `|S_yz|^2`.
    Beampattern,
    /// `|E_s|^2` [(V/m)^2].
    Field,
    /// Plate path loss with and without the space factor [dB].
    Pathloss,
}

section!(OutputSection {
    quantity: Quantity,
    path: PathBuf,
});

/// The layered, unresolved content of a scenario file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link: Option<LinkSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tx: Option<PointSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rx: Option<PointSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<ElementSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluator: Option<EvaluatorSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputSection>,
}

impl Layer for ScenarioFile {
    fn layer(self, over: Self) -> Self {
        Self {
            schema: over.schema.or(self.schema),
            link: self.link.layer(over.link),
            tx: self.tx.layer(over.tx),
            rx: self.rx.layer(over.rx),
            surface: self.surface.layer(over.surface),
            profile: self.profile.layer(over.profile),
            element: self.element.layer(over.element),
            evaluator: self.evaluator.layer(over.evaluator),
            sweep: self.sweep.layer(over.sweep),
            output: self.output.layer(over.output),
        }
    }
}

impl ScenarioFile {
    pub fn parse(text: &str, origin: &str) -> CliResult<Self> {
        let file: ScenarioFile = toml::from_str(text).map_err(|e| {
            let place = e
                .span()
                .map(|s| {
                    let line = text[..s.start].matches('\n').count() + 1;
                    format!(" (line {line})")
                })
                .unwrap_or_default();
            CliError::Parse(format!("{origin}{place}: {}", e.message()))
        })?;
        match file.schema {
            Some(SCHEMA_VERSION) => Ok(file),
            Some(v) => Err(CliError::Parse(format!(
                "{origin}: unsupported schema {v}, expected {SCHEMA_VERSION}"
            ))),
            None => Err(CliError::Parse(format!(
                "{origin}: missing `schema = {SCHEMA_VERSION}`"
            ))),
        }
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// TOML rendering used for the provenance echo in output files.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario serialises")
    }
}

fn missing(field: &str) -> CliError {
    CliError::Parse(format!("missing field `{field}`"))
}

fn point(section: &Option<PointSection>, name: &str, wavelength: f64) -> CliResult<SphericalPoint> {
    let p = section
        .as_ref()
        .ok_or_else(|| missing(&format!("[{name}]")))?;
    let r =
        p.r.as_ref()
            .ok_or_else(|| missing(&format!("{name}.r")))?
            .resolve(wavelength)?;
    let theta = p
        .theta_deg
        .ok_or_else(|| missing(&format!("{name}.theta_deg")))?;
    let phi = p
        .phi_deg
        .ok_or_else(|| missing(&format!("{name}.phi_deg")))?;
    Ok(SphericalPoint::from_degrees(r, theta, phi)?)
}

/// A scenario with every quantity resolved to SI units and validated.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub frequency: f64,
    pub wavelength: f64,
    pub k: f64,
    pub eta: f64,
    pub tx: SphericalPoint,
    pub rx: SphericalPoint,
    pub incident_field: Option<f64>,
    pub link: LinkBudget,
    pub surface: SurfaceSpec,
    pub tiles: Option<(f64, f64)>,
    pub profile: ProfileRule,
    pub element: Option<ElementPattern>,
    pub evaluator: Evaluator,
    pub sweep: Option<(Sweep, SweepUnit)>,
    pub quantity: Quantity,
    pub output: Option<PathBuf>,
}

impl Scenario {
    pub fn resolve(file: &ScenarioFile) -> CliResult<Self> {
        let medium = PhysicalConstants::default();
        let link_s = file.link.clone().unwrap_or_default();
        let frequency = link_s
            .frequency_hz
            .ok_or_else(|| missing("link.frequency_hz"))?;
        let wavelength = medium.wavelength(frequency)?;
        let k = 2.0 * PI / wavelength;

        let link = LinkBudget::new(
            link_s.tx_power_w.unwrap_or(1.0),
            from_db(link_s.gain_tx_dbi.unwrap_or(0.0)),
            from_db(link_s.gain_rx_dbi.unwrap_or(0.0)),
            frequency,
            link_s
                .kappa_abs_per_m
                .unwrap_or(holoirs::link::DEFAULT_KAPPA_ABS),
            link_s.noise_var_w.unwrap_or(1e-12),
        )?;

        let tx = point(&file.tx, "tx", wavelength)?;
        let rx = point(&file.rx, "rx", wavelength)?;

        let surf = file.surface.clone().ok_or_else(|| missing("[surface]"))?;
        let side = |specific: &Option<Length>, axis: &str| -> CliResult<f64> {
            specific
                .as_ref()
                .or(surf.side.as_ref())
                .ok_or_else(|| missing(&format!("surface.{axis} or surface.side")))?
                .resolve(wavelength)
        };
        let surface = SurfaceSpec::new(side(&surf.ly, "ly")?, side(&surf.lz, "lz")?)?;
        let tile = |specific: &Option<Length>| -> CliResult<Option<f64>> {
            specific
                .as_ref()
                .or(surf.tile.as_ref())
                .map(|l| l.resolve(wavelength))
                .transpose()
        };
        let tiles = match (tile(&surf.tile_y)?, tile(&surf.tile_z)?) {
            (Some(ty), Some(tz)) => Some((ty, tz)),
            (None, None) => None,
            _ => {
                return Err(CliError::Parse(
                    "give both tile_y and tile_z, or tile".into(),
                ))
            }
        };

        let prof = file.profile.clone().ok_or_else(|| missing("[profile]"))?;
        let mode = prof.mode.ok_or_else(|| missing("profile.mode"))?;
        let coefficients = [prof.c1, prof.c2, prof.c3, prof.c4];
        let has_point = prof.r.is_some() || prof.theta_deg.is_some() || prof.phi_deg.is_some();
        let has_coefficients = coefficients.iter().any(Option::is_some);
        let profile = match mode {
            ProfileMode::Zero | ProfileMode::Track | ProfileMode::Steer => {
                if has_point || has_coefficients {
                    return Err(CliError::Parse(format!(
                        "profile mode {mode:?} takes no coefficients or focus point"
                    )));
                }
                match mode {
                    ProfileMode::Zero => ProfileRule::Fixed(PhaseProfile::zero()),
                    ProfileMode::Track => ProfileRule::TrackReceiver,
                    _ => ProfileRule::Fixed(holoirs::beamsteering_profile(&tx, &rx)),
                }
            }
            ProfileMode::Explicit => {
                if has_point {
                    return Err(CliError::Parse(
                        "explicit profile takes no focus point".into(),
                    ));
                }
                let [c1, c2, c3, c4] = coefficients;
                let c = |v: Option<f64>, n: &str| v.ok_or_else(|| missing(&format!("profile.{n}")));
                ProfileRule::Fixed(
                    PhaseProfile::new(c(c1, "c1")?, c(c2, "c2")?, c(c3, "c3")?, c(c4, "c4")?)
                        .map_err(|e| CliError::Parse(e.to_string()))?,
                )
            }
            ProfileMode::Focus => {
                if has_coefficients {
                    return Err(CliError::Parse(
                        "focus profile takes no coefficients".into(),
                    ));
                }
                let focus = PointSection {
                    r: prof.r.clone(),
                    theta_deg: prof.theta_deg,
                    phi_deg: prof.phi_deg,
                };
                ProfileRule::Focus(point(&Some(focus), "profile", wavelength)?)
            }
        };

        let element = match &file.element {
            Some(e) => Some(ElementPattern::new(
                e.gamma.ok_or_else(|| missing("element.gamma"))?,
                e.q.ok_or_else(|| missing("element.q"))?,
            )?),
            None => None,
        };

        let ev = file.evaluator.clone().unwrap_or_default();
        let evaluator = match ev.kind.unwrap_or(EvaluatorKind::Holographic) {
            EvaluatorKind::Holographic => Evaluator::Holographic,
            EvaluatorKind::Farfield => Evaluator::FarField,
            EvaluatorKind::Discrete => {
                let (tile_y, tile_z) =
                    tiles.ok_or_else(|| missing("surface.tile (discrete evaluator)"))?;
                Evaluator::Discrete { tile_y, tile_z }
            }
            EvaluatorKind::Oracle => {
                let d = OracleGrid::default();
                Evaluator::Oracle(OracleGrid {
                    nodes_per_cycle: ev.nodes_per_cycle.unwrap_or(d.nodes_per_cycle),
                    min_nodes: ev.min_nodes.unwrap_or(d.min_nodes),
                    cell_budget: ev.cell_budget.unwrap_or(d.cell_budget),
                })
            }
        };

        let sweep = match &file.sweep {
            Some(s) => Some(resolve_sweep(s, wavelength, &profile)?),
            None => None,
        };

        let out = file.output.clone().unwrap_or_default();
        Ok(Self {
            frequency,
            wavelength,
            k,
            eta: medium.eta(),
            tx,
            rx,
            incident_field: link_s.incident_field_v_per_m,
            link,
            surface,
            tiles,
            profile,
            element,
            evaluator,
            sweep,
            quantity: out.quantity.unwrap_or(Quantity::Beampattern),
            output: out.path,
        })
    }
}

fn resolve_sweep(
    s: &SweepSection,
    wavelength: f64,
    profile: &ProfileRule,
) -> CliResult<(Sweep, SweepUnit)> {
    let target = match s.target.ok_or_else(|| missing("sweep.target"))? {
        TargetName::Rx => SweepTarget::Receiver,
        TargetName::Focus => SweepTarget::Focus,
    };
    if target == SweepTarget::Focus && !matches!(profile, ProfileRule::Focus(_)) {
        return Err(CliError::Parse(
            "sweep.target = \"focus\" needs profile.mode = \"focus\"".into(),
        ));
    }
    let axis = s.axis.ok_or_else(|| missing("sweep.axis"))?;
    let count = s.count.ok_or_else(|| missing("sweep.count"))?;
    if count < 2 {
        return Err(CliError::Parse(format!(
            "sweep.count must be at least 2, got {count}"
        )));
    }
    let (start, stop) = (
        s.start.ok_or_else(|| missing("sweep.start"))?,
        s.stop.ok_or_else(|| missing("sweep.stop"))?,
    );
    let default_unit = if axis == AxisName::R {
        SweepUnit::M
    } else {
        SweepUnit::Deg
    };
    let unit = s.unit.unwrap_or(default_unit);
    let scale = match (axis, unit) {
        (AxisName::R, SweepUnit::M) => 1.0,
        (AxisName::R, SweepUnit::Lambda) => wavelength,
        (AxisName::Theta | AxisName::Phi, SweepUnit::Deg) => PI / 180.0,
        (AxisName::Theta | AxisName::Phi, SweepUnit::Rad) => 1.0,
        _ => {
            return Err(CliError::Parse(format!(
                "sweep.unit {unit:?} does not fit axis {axis:?}"
            )))
        }
    };
    let axis = match axis {
        AxisName::R => SweepAxis::R,
        AxisName::Theta => SweepAxis::Theta,
        AxisName::Phi => SweepAxis::Phi,
    };
    Ok((
        Sweep {
            target,
            axis,
            start: start * scale,
            stop: stop * scale,
            count,
        },
        unit,
    ))
}

impl SweepUnit {
    pub fn suffix(&self) -> &'static str {
        match self {
            SweepUnit::Deg => "deg",
            SweepUnit::Rad => "rad",
            SweepUnit::M => "m",
            SweepUnit::Lambda => "lambda",
        }
    }

    /// Converts an internal (SI/radian) value back to this unit.
    pub fn express(&self, v: f64, wavelength: f64) -> f64 {
        match self {
            SweepUnit::Deg => v.to_degrees(),
            SweepUnit::Rad | SweepUnit::M => v,
            SweepUnit::Lambda => v / wavelength,
        }
    }
}
