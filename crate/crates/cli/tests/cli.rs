use std::path::Path;
use std::process::{Command, Output};

fn holoirs(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holoirs"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn scenario(name: &str) -> String {
    format!("{}/scenarios/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Data rows of a CSV document, header excluded.
fn rows(bytes: &[u8]) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = std::str::from_utf8(bytes).unwrap();
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_string)
        .collect();
    let data = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    (header, data)
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = holoirs(&["run", &scenario("fig2a.toml"), "-o", "a.csv"], dir.path());
    let b = holoirs(&["run", &scenario("fig2a.toml"), "-o", "b.csv"], dir.path());
    assert!(a.status.success() && b.status.success());
    let a = std::fs::read(dir.path().join("a.csv")).unwrap();
    let b = std::fs::read(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b);
    assert!(a.starts_with(b"# holoirs "));
}

#[test]
fn field_sweep_peaks_where_the_model_places_it() {
    let dir = tempfile::tempdir().unwrap();
    let o = holoirs(&["run", &scenario("fig2a.toml")], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let (header, data) = rows(&o.stdout);
    assert_eq!(header, ["phi_o_deg", "S2", "Es2_V2_per_m2"]);
    assert_eq!(data.len(), 401);
    let best = data.iter().max_by(|a, b| a[2].total_cmp(&b[2])).unwrap();
    // Defocus across the 200-wavelength aperture pulls the peak off the
    // receiver azimuth of 30 degrees.
    assert!((best[0] - 28.6).abs() < 1e-9, "peak at {}", best[0]);
}

#[test]
fn discretization_gap_is_small() {
    let dir = tempfile::tempdir().unwrap();
    for preset in ["fig3-small", "fig3-large"] {
        let o = holoirs(&["discretize-study", "--preset", preset], dir.path());
        assert!(o.status.success(), "{}", stderr(&o));
        let (header, data) = rows(&o.stdout);
        assert_eq!(header[3], "abs_diff");
        assert_eq!(data.len(), 161);
        let gap = data.iter().map(|r| r[3]).fold(0.0, f64::max);
        assert!(gap < 1e-2, "{preset}: {gap}");
    }
}

#[test]
fn fresnel_zone_row() {
    let dir = tempfile::tempdir().unwrap();
    let o = holoirs(
        &["fresnel-zone", "--L", "0.2", "--f", "2.99792458e11"],
        dir.path(),
    );
    assert!(o.status.success());
    let (header, data) = rows(&o.stdout);
    assert_eq!(header, ["r_min_m", "r_max_m"]);
    assert!((data[0][0] - 1.753625).abs() < 1e-6);
    assert!((data[0][1] - 80.0).abs() < 1e-9);
}

#[test]
fn pathloss_compare_conventions() {
    let dir = tempfile::tempdir().unwrap();
    let swapped = holoirs(&["pathloss-compare"], dir.path());
    assert!(swapped.status.success(), "{}", stderr(&swapped));
    let (header, data) = rows(&swapped.stdout);
    assert_eq!(header, ["r_r_m", "PL_dB", "PLprime_dB"]);
    assert_eq!(data.len(), 91);
    for r in &data {
        assert!(r[1].is_finite() && r[2].is_finite());
        assert!(
            r[2] - r[1] > 3.0,
            "antenna model not above plate model at {} m",
            r[0]
        );
    }
    // Both models fall off as 1/r_r^2 at fixed r_t, plus a little absorption.
    let slope = |c: usize| data[90][c] - data[0][c];
    assert!((slope(1) + 20.0).abs() < 0.2 && (slope(2) + 20.0).abs() < 0.2);

    let literal = holoirs(&["pathloss-compare", "--convention", "literal"], dir.path());
    assert!(literal.status.success(), "{}", stderr(&literal));
    let (_, data) = rows(&literal.stdout);
    for r in &data {
        assert!(
            r[1] < -300.0,
            "in-plane azimuth leaves no plate path: {}",
            r[1]
        );
    }
}

#[test]
fn multiuser_leakage_falls_with_aperture() {
    let dir = tempfile::tempdir().unwrap();
    let o = holoirs(
        &[
            "multiuser",
            "--r1",
            "2",
            "--r2",
            "8",
            "--L",
            "50lambda,100lambda,200lambda,400lambda",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let (header, data) = rows(&o.stdout);
    assert_eq!(header[4], "leak_gain");
    let leak: Vec<f64> = data.iter().map(|r| r[4]).collect();
    assert!(leak.windows(2).all(|w| w[1] < w[0]), "{leak:?}");
    assert!((leak[2] - 6.363018e-3).abs() < 1e-8);
    assert!(data.iter().all(|r| r[3] == 1.0 && r[5] == 1.0));
}

#[test]
fn flags_override_the_preset() {
    let dir = tempfile::tempdir().unwrap();
    let o = holoirs(
        &[
            "beampattern",
            "--start",
            "20",
            "--stop",
            "40",
            "--count",
            "5",
            "--evaluator",
            "farfield",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let (header, data) = rows(&o.stdout);
    assert_eq!(header, ["phi_o_deg", "S_re", "S_im", "S2"]);
    let xs: Vec<f64> = data.iter().map(|r| r[0]).collect();
    for (x, want) in xs.iter().zip([20.0, 25.0, 30.0, 35.0, 40.0]) {
        assert!((x - want).abs() < 1e-12, "{x}");
    }
    assert!(String::from_utf8_lossy(&o.stdout).contains("# evaluator: farfield"));
}

#[test]
fn parse_errors_exit_2_without_output() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.toml"), "schema = 1\n[tx\nr = 2\n").unwrap();
    let o = holoirs(&["run", "bad.toml", "-o", "out.csv"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[parse]:"));
    assert_eq!(stderr(&o).lines().count(), 1);

    let o = holoirs(
        &["beampattern", "--count", "1", "-o", "out.csv"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(!dir.path().join("out.csv").exists());

    let o = holoirs(&["beampattern", "--no-such-flag"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[parse]:"));
}

#[test]
fn domain_error_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    // The literal caption angles put the transmitter in the surface plane.
    let o = holoirs(
        &["run", &scenario("fig4.toml"), "-o", "out.csv"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error[domain]:"));
    assert!(!dir.path().join("out.csv").exists());
}

#[test]
fn resolution_error_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(scenario("fig2a.toml"))
        .unwrap()
        .replace(
            "kind = \"holographic\"",
            "kind = \"oracle\"\ncell_budget = 1000",
        );
    std::fs::write(dir.path().join("tight.toml"), text).unwrap();
    let o = holoirs(&["run", "tight.toml"], dir.path());
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    assert!(stderr(&o).starts_with("error[resolution]:"));
}

#[test]
fn missing_file_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = holoirs(&["run", "nowhere.toml"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[io]:"));
}
