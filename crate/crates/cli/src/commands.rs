//! Subcommand implementations. Each returns the table to write and the
//! output path requested by the scenario, if any.

use std::path::PathBuf;

use holoirs::{
    antenna_pathloss, fresnel_zone, pathloss_antenna, pathloss_with_space_factor, plate_field_sq,
    plate_pathloss, space_factor_sweep, to_db, two_user_interference, Evaluator, PhysicalConstants,
    SphericalPoint, SurfaceSpec, SweepAxis, SweepTarget, TransmitSource,
};
use num_complex::Complex64;

use crate::error::{CliError, CliResult};
use crate::output::Table;
use crate::scenario::{Length, PointSection, Quantity, Scenario, ScenarioFile};

pub struct Emitted {
    pub table: Table,
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    Fig2a,
    Fig2b,
    Fig3Small,
    Fig3Large,
    Fig4,
}

impl Preset {
    pub fn file(&self) -> ScenarioFile {
        let (name, text) = match self {
            Preset::Fig2a => ("fig2a", include_str!("../scenarios/fig2a.toml")),
            Preset::Fig2b => ("fig2b", include_str!("../scenarios/fig2b.toml")),
            Preset::Fig3Small => ("fig3-small", include_str!("../scenarios/fig3-small.toml")),
            Preset::Fig3Large => ("fig3-large", include_str!("../scenarios/fig3-large.toml")),
            Preset::Fig4 => ("fig4", include_str!("../scenarios/fig4.toml")),
        };
        ScenarioFile::parse(text, name).expect("bundled presets are valid")
    }
}

fn provenance(table: &mut Table, command: &str, file: &ScenarioFile) {
    table.comment(&format!("holoirs {} {command}", env!("CARGO_PKG_VERSION")));
    table.comment("input:");
    table.comment(file.to_toml().trim_end());
}

/// One swept geometry: the sweep value in its own unit, the receiver and
/// the space factor there.
struct Point {
    x: f64,
    rx: SphericalPoint,
    s: Complex64,
}

fn moved(p: &SphericalPoint, axis: SweepAxis, v: f64) -> holoirs::Result<SphericalPoint> {
    match axis {
        SweepAxis::R => p.with_r(v),
        SweepAxis::Theta => p.with_theta(v),
        SweepAxis::Phi => p.with_phi(v),
    }
}

fn evaluate(sc: &Scenario, evaluator: &Evaluator) -> CliResult<(Vec<Point>, String)> {
    let (sweep, unit) = sc
        .sweep
        .ok_or_else(|| CliError::Parse("missing field `[sweep]`".into()))?;
    let rows = space_factor_sweep(
        &sc.tx,
        &sc.rx,
        &sc.profile,
        &sc.surface,
        sc.k,
        &sweep,
        evaluator,
    )?;
    let points = rows
        .into_iter()
        .map(|(v, s)| {
            let rx = match sweep.target {
                SweepTarget::Receiver => moved(&sc.rx, sweep.axis, v)?,
                SweepTarget::Focus => sc.rx,
            };
            Ok(Point {
                x: unit.express(v, sc.wavelength),
                rx,
                s,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let axis = match sweep.axis {
        SweepAxis::R => "r",
        SweepAxis::Theta => "theta",
        SweepAxis::Phi => "phi",
    };
    let who = match sweep.target {
        SweepTarget::Receiver => "r",
        SweepTarget::Focus => "o",
    };
    Ok((points, format!("{axis}_{who}_{}", unit.suffix())))
}

fn source(sc: &Scenario) -> CliResult<TransmitSource> {
    Ok(match sc.incident_field {
        Some(e) => TransmitSource::with_incident_field(sc.tx, e, sc.eta)?,
        None => TransmitSource::new(sc.tx, sc.link.tx_power(), sc.link.gain_tx())?,
    })
}

/// Evaluates a scenario according to its `output.quantity`.
pub fn run(file: &ScenarioFile, command: &str) -> CliResult<Emitted> {
    let sc = Scenario::resolve(file)?;
    let (points, x) = evaluate(&sc, &sc.evaluator)?;
    let mut table = match sc.quantity {
        Quantity::Beampattern => {
            let mut t = Table::new(&[&x, "S_re", "S_im", "S2"]);
            for p in &points {
                t.push(vec![p.x, p.s.re, p.s.im, p.s.norm_sqr()]);
            }
            t
        }
        Quantity::Field => {
            let src = source(&sc)?;
            let mut t = Table::new(&[&x, "S2", "Es2_V2_per_m2"]);
            for p in &points {
                let plate = plate_field_sq(&src, &p.rx, &sc.surface, sc.wavelength, sc.eta);
                t.push(vec![p.x, p.s.norm_sqr(), plate * p.s.norm_sqr()]);
            }
            t
        }
        Quantity::Pathloss => {
            let mut t = Table::new(&[&x, "S2", "PL_dB", "PLbar_dB"]);
            for p in &points {
                let pl = pathloss_with_space_factor(&sc.tx, &p.rx, &sc.surface, &sc.link, p.s);
                t.push(vec![
                    p.x,
                    p.s.norm_sqr(),
                    to_db(pl.unfocused),
                    to_db(pl.focused),
                ]);
            }
            t
        }
    };
    provenance(&mut table, command, file);
    table.comment(&format!(
        "evaluator: {}, frequency: {} Hz",
        sc.evaluator.name(),
        crate::output::format_number(sc.frequency)
    ));
    Ok(Emitted {
        table,
        path: sc.output,
    })
}

/// `|E_s|^2` from the closed form and the parallel-ray model side by side.
pub fn scattered_field(file: &ScenarioFile) -> CliResult<Emitted> {
    let sc = Scenario::resolve(file)?;
    let src = source(&sc)?;
    let (near, x) = evaluate(&sc, &Evaluator::Holographic)?;
    let (far, _) = evaluate(&sc, &Evaluator::FarField)?;
    let mut table = Table::new(&[&x, "Es2_near_V2_per_m2", "Es2_far_V2_per_m2"]);
    for (n, f) in near.iter().zip(&far) {
        let plate = plate_field_sq(&src, &n.rx, &sc.surface, sc.wavelength, sc.eta);
        table.push(vec![n.x, plate * n.s.norm_sqr(), plate * f.s.norm_sqr()]);
    }
    provenance(&mut table, "scattered-field", file);
    Ok(Emitted {
        table,
        path: sc.output,
    })
}

/// Holographic versus discrete beampattern with their pointwise gap.
pub fn discretize_study(file: &ScenarioFile) -> CliResult<Emitted> {
    let sc = Scenario::resolve(file)?;
    let (tile_y, tile_z) = sc
        .tiles
        .ok_or_else(|| CliError::Parse("missing field `surface.tile`".into()))?;
    let (holo, x) = evaluate(&sc, &Evaluator::Holographic)?;
    let (disc, _) = evaluate(&sc, &Evaluator::Discrete { tile_y, tile_z })?;
    let mut table = Table::new(&[&x, "S2_holographic", "S2_discrete", "abs_diff"]);
    for (h, d) in holo.iter().zip(&disc) {
        let (a, b) = (h.s.norm_sqr(), d.s.norm_sqr());
        table.push(vec![h.x, a, b, (a - b).abs()]);
    }
    provenance(&mut table, "discretize-study", file);
    Ok(Emitted {
        table,
        path: sc.output,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Convention {
    /// Polar and azimuth angles exchanged, so both ends face the surface.
    Swapped,
    /// Angles exactly as written; an azimuth of 90 degrees lies in the
    /// surface plane and zeroes the plate path loss.
    Literal,
}

/// Plate-scattering path loss against the antenna-based model over the
/// receiver distance.
pub fn pathloss_compare(file: &ScenarioFile, convention: Convention) -> CliResult<Emitted> {
    let raw = |sec: &Option<PointSection>, name: &str| -> CliResult<(f64, f64)> {
        let p = sec
            .as_ref()
            .ok_or_else(|| CliError::Parse(format!("missing field `[{name}]`")))?;
        match (p.theta_deg, p.phi_deg) {
            (Some(t), Some(f)) => Ok((t, f)),
            _ => Err(CliError::Parse(format!("missing angles in `[{name}]`"))),
        }
    };
    let (tt, pt) = raw(&file.tx, "tx")?;
    let (tr, pr) = raw(&file.rx, "rx")?;

    // The resolved scenario always uses the swapped reading so that it
    // describes constructible points.
    let mut swapped = file.clone();
    if let Some(tx) = swapped.tx.as_mut() {
        (tx.theta_deg, tx.phi_deg) = (Some(pt), Some(tt));
    }
    if let Some(rx) = swapped.rx.as_mut() {
        (rx.theta_deg, rx.phi_deg) = (Some(pr), Some(tr));
    }
    let sc = Scenario::resolve(&swapped)?;
    let ep = sc
        .element
        .ok_or_else(|| CliError::Parse("missing field `[element]`".into()))?;
    let (sweep, unit) = sc
        .sweep
        .ok_or_else(|| CliError::Parse("missing field `[sweep]`".into()))?;
    if sweep.target != SweepTarget::Receiver || sweep.axis != SweepAxis::R {
        return Err(CliError::Parse(
            "pathloss-compare sweeps the receiver distance: sweep.target = \"rx\", sweep.axis = \"r\"".into(),
        ));
    }

    let mut table = Table::new(&[&format!("r_r_{}", unit.suffix()), "PL_dB", "PLprime_dB"]);
    match convention {
        Convention::Swapped => {
            let (points, _) = evaluate(&sc, &sc.evaluator)?;
            for p in &points {
                let pl = pathloss_with_space_factor(&sc.tx, &p.rx, &sc.surface, &sc.link, p.s);
                let pl_ant = pathloss_antenna(&sc.tx, &p.rx, &ep, &sc.link);
                table.push(vec![p.x, to_db(pl.unfocused), to_db(pl_ant)]);
            }
        }
        Convention::Literal => {
            let r_t = sc.tx.r();
            for v in sweep.values()? {
                let pl = plate_pathloss(
                    r_t,
                    v,
                    pt.to_radians(),
                    tr.to_radians(),
                    sc.surface.area(),
                    &sc.link,
                );
                let pl_ant =
                    antenna_pathloss(r_t, v, tt.to_radians(), tr.to_radians(), &ep, &sc.link);
                table.push(vec![
                    unit.express(v, sc.wavelength),
                    to_db(pl),
                    to_db(pl_ant),
                ]);
            }
        }
    }
    provenance(&mut table, "pathloss-compare", file);
    table.comment(&format!(
        "convention: {}",
        match convention {
            Convention::Swapped => "swapped",
            Convention::Literal => "literal",
        }
    ));
    Ok(Emitted {
        table,
        path: sc.output,
    })
}

pub fn fresnel_zone_bounds(side: &Length, frequency: f64) -> CliResult<Emitted> {
    let lambda = PhysicalConstants::default().wavelength(frequency)?;
    let l = side.resolve(lambda)?;
    let z = fresnel_zone(&SurfaceSpec::square(l)?, lambda)?;
    let mut table = Table::new(&["r_min_m", "r_max_m"]);
    table.push(vec![z.r_min, z.r_max]);
    table.comment(&format!(
        "holoirs {} fresnel-zone",
        env!("CARGO_PKG_VERSION")
    ));
    table.comment(&format!("input: L = {side}, f = {frequency} Hz"));
    Ok(Emitted { table, path: None })
}

pub struct MultiuserArgs {
    pub r1: f64,
    pub r2: f64,
    pub sides: Vec<Length>,
    pub theta_deg: f64,
    pub phi_deg: f64,
    pub frequency: f64,
}

pub fn multiuser(a: &MultiuserArgs) -> CliResult<Emitted> {
    let lambda = PhysicalConstants::default().wavelength(a.frequency)?;
    let k = 2.0 * std::f64::consts::PI / lambda;
    let u1 = SphericalPoint::from_degrees(a.r1, a.theta_deg, a.phi_deg)?;
    let u2 = SphericalPoint::from_degrees(a.r2, a.theta_deg, a.phi_deg)?;
    let mut table = Table::new(&[
        "L_m",
        "r1_m",
        "r2_m",
        "focus_gain",
        "leak_gain",
        "leak_gain_farfield",
    ]);
    for side in &a.sides {
        let l = side.resolve(lambda)?;
        let g = two_user_interference(&u1, &u2, &SurfaceSpec::square(l)?, k)?;
        table.push(vec![
            l,
            a.r1,
            a.r2,
            g.focus_gain,
            g.leak_gain,
            g.leak_gain_farfield,
        ]);
    }
    table.comment(&format!("holoirs {} multiuser", env!("CARGO_PKG_VERSION")));
    let sides: Vec<String> = a.sides.iter().map(|s| s.to_string()).collect();
    table.comment(&format!(
        "input: r1 = {} m, r2 = {} m, theta = {} deg, phi = {} deg, f = {} Hz, L = {}",
        a.r1,
        a.r2,
        a.theta_deg,
        a.phi_deg,
        a.frequency,
        sides.join(" ")
    ));
    Ok(Emitted { table, path: None })
}
