//! `holoirs`: figure reproduction and scenario runs for near-field
//! reflecting-surface models, with CSV output.
//!
//! Settings are layered: the subcommand's preset, then `--scenario`, then
//! individual flags. Exit codes: 0 success, 1 I/O failure, 2 parse error,
//! 3 domain error, 4 resolution budget exceeded.

mod commands;
mod error;
mod output;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Convention, Emitted, MultiuserArgs, Preset};
use error::{CliError, CliResult};
use scenario::{
    EvaluatorKind, EvaluatorSection, Layer, Length, LinkSection, OutputSection, PointSection,
    ScenarioFile, SurfaceSection, SweepSection,
};

#[derive(Debug, Parser)]
#[command(
    name = "holoirs",
    version,
    about = "Near-field reflecting-surface models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a scenario file.
    Run {
        scenario: PathBuf,
        /// Output CSV (default: the scenario's output.path, else stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Normalised beampattern |S|^2 along a sweep (default preset fig2a).
    Beampattern(Common),
    /// |E_s|^2 from the closed form and the parallel-ray model (default
    /// preset fig2a).
    ScatteredField {
        #[command(flatten)]
        common: Common,
        /// Receiver distance [m].
        #[arg(long)]
        rr: Option<f64>,
    },
    /// Plate-scattering versus antenna-based path loss over the receiver
    /// distance (default preset fig4).
    PathlossCompare {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "swapped")]
        convention: Convention,
    },
    /// Fresnel-zone bounds of a square aperture.
    FresnelZone {
        /// Aperture side: metres, or e.g. "200lambda".
        #[arg(long = "L")]
        side: Length,
        /// Carrier frequency [Hz].
        #[arg(long = "f")]
        frequency: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Holographic versus discrete beampattern (default preset fig3-small).
    DiscretizeStudy(Common),
    /// Focus and leakage gains for two co-angular users.
    Multiuser {
        /// Distance of the focused user [m].
        #[arg(long)]
        r1: f64,
        /// Distance of the other user [m].
        #[arg(long)]
        r2: f64,
        /// Aperture side(s), comma-separated: metres or e.g. "200lambda".
        #[arg(long = "L", value_delimiter = ',', required = true)]
        sides: Vec<Length>,
        #[arg(long, default_value_t = 45.0)]
        theta_deg: f64,
        #[arg(long, default_value_t = 30.0)]
        phi_deg: f64,
        /// Carrier frequency [Hz].
        #[arg(long = "f", default_value_t = 300e9)]
        frequency: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Flags shared by the scenario-driven subcommands; each overrides the
/// corresponding scenario field.
#[derive(Debug, Args)]
struct Common {
    /// Starting point for the settings.
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    /// Scenario file layered over the preset.
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Carrier frequency [Hz].
    #[arg(long = "f")]
    frequency: Option<f64>,
    /// Square aperture side: metres, or e.g. "200lambda".
    #[arg(long = "L")]
    side: Option<Length>,
    /// Square tile side for the discrete evaluator.
    #[arg(long)]
    tile: Option<Length>,
    #[arg(long, value_enum)]
    evaluator: Option<EvaluatorKindArg>,
    /// Sweep start, in the sweep's unit.
    #[arg(long, allow_hyphen_values = true)]
    start: Option<f64>,
    /// Sweep stop, in the sweep's unit.
    #[arg(long, allow_hyphen_values = true)]
    stop: Option<f64>,
    /// Number of sweep points (at least 2).
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum EvaluatorKindArg {
    Holographic,
    Farfield,
    Discrete,
    Oracle,
}

impl Common {
    fn layered(&self, default: Preset) -> CliResult<ScenarioFile> {
        let mut file = self.preset.unwrap_or(default).file();
        if let Some(path) = &self.scenario {
            file = file.layer(ScenarioFile::load(path)?);
        }
        let some_if = |any: bool| any.then_some(());
        let flags = ScenarioFile {
            link: some_if(self.frequency.is_some()).map(|_| LinkSection {
                frequency_hz: self.frequency,
                ..Default::default()
            }),
            surface: some_if(self.side.is_some() || self.tile.is_some()).map(|_| SurfaceSection {
                side: self.side.clone(),
                tile: self.tile.clone(),
                ..Default::default()
            }),
            evaluator: self.evaluator.map(|e| EvaluatorSection {
                kind: Some(match e {
                    EvaluatorKindArg::Holographic => EvaluatorKind::Holographic,
                    EvaluatorKindArg::Farfield => EvaluatorKind::Farfield,
                    EvaluatorKindArg::Discrete => EvaluatorKind::Discrete,
                    EvaluatorKindArg::Oracle => EvaluatorKind::Oracle,
                }),
                ..Default::default()
            }),
            sweep: some_if(self.start.is_some() || self.stop.is_some() || self.count.is_some())
                .map(|_| SweepSection {
                    start: self.start,
                    stop: self.stop,
                    count: self.count,
                    ..Default::default()
                }),
            ..Default::default()
        };
        // A flag-level side replaces any per-axis dimensions from below.
        let mut file = file.layer(flags);
        if self.side.is_some() {
            if let Some(s) = file.surface.as_mut() {
                s.ly = None;
                s.lz = None;
            }
        }
        if self.tile.is_some() {
            if let Some(s) = file.surface.as_mut() {
                s.tile_y = None;
                s.tile_z = None;
            }
        }
        Ok(file)
    }
}

fn with_output(mut e: Emitted, output: &Option<PathBuf>) -> Emitted {
    if output.is_some() {
        e.path = output.clone();
    }
    e
}

fn execute(command: Command) -> CliResult<()> {
    let emitted = match command {
        Command::Run { scenario, output } => {
            let file = ScenarioFile::load(&scenario)?;
            with_output(commands::run(&file, "run")?, &output)
        }
        Command::Beampattern(common) => {
            let mut file = common.layered(Preset::Fig2a)?;
            file.output = file.output.layer(Some(OutputSection {
                quantity: Some(scenario::Quantity::Beampattern),
                path: None,
            }));
            with_output(commands::run(&file, "beampattern")?, &common.output)
        }
        Command::ScatteredField { common, rr } => {
            let mut file = common.layered(Preset::Fig2a)?;
            if rr.is_some() {
                file.rx = file.rx.layer(Some(PointSection {
                    r: rr.map(Length::Metres),
                    ..Default::default()
                }));
            }
            with_output(commands::scattered_field(&file)?, &common.output)
        }
        Command::PathlossCompare { common, convention } => {
            let file = common.layered(Preset::Fig4)?;
            with_output(
                commands::pathloss_compare(&file, convention)?,
                &common.output,
            )
        }
        Command::FresnelZone {
            side,
            frequency,
            output,
        } => with_output(commands::fresnel_zone_bounds(&side, frequency)?, &output),
        Command::DiscretizeStudy(common) => {
            let file = common.layered(Preset::Fig3Small)?;
            with_output(commands::discretize_study(&file)?, &common.output)
        }
        Command::Multiuser {
            r1,
            r2,
            sides,
            theta_deg,
            phi_deg,
            frequency,
            output,
        } => with_output(
            commands::multiuser(&MultiuserArgs {
                r1,
                r2,
                sides,
                theta_deg,
                phi_deg,
                frequency,
            })?,
            &output,
        ),
    };
    emitted.table.emit(emitted.path.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.render().to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("{}", CliError::Parse(first.to_string()));
            return ExitCode::from(2);
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
