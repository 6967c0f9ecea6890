use std::f64::consts::TAU;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

fn recipe(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../recipes")
        .join(format!("{name}.conf"))
}

fn chrw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chrw")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> Output {
    let out = chrw(args);
    assert!(
        out.status.success(),
        "chrw {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_slice(&ok(&full).stdout).unwrap()
}

fn with_recipe(cmd: &str, name: &str, extra: &[&str]) -> Value {
    let path = recipe(name);
    let mut args = vec![cmd, "--config", path.to_str().unwrap()];
    args.extend(extra);
    json(&args)
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

fn column(rows: &Value, key: &str) -> Vec<f64> {
    rows.as_array().unwrap().iter().map(|r| f(&r[key])).collect()
}

#[test]
fn solve_reproduces_published_parameters() {
    let v = json(&["solve", "--delta", "1", "--epsilon", "0.4", "--amplitude", "1.3", "--omega", "1.2924"]);
    assert!((f(&v["xi"]) - 0.6279).abs() < 1e-3, "{v}");
    assert!((f(&v["zeta"]) - 0.1855).abs() < 1e-3, "{v}");
    assert!(f(&v["residual_norm"]) < 1e-10);
}

#[test]
fn solve_defaults_to_json() {
    let out = ok(&["solve", "--amplitude", "1", "--omega", "1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn solve_zero_amplitude_is_the_analytic_limit() {
    let v = json(&["solve", "--epsilon", "0.5", "--amplitude", "0", "--omega", "1"]);
    let xi0 = 1.25f64.sqrt();
    assert_eq!(f(&v["residual_norm"]), 0.0);
    assert!((f(&v["rabi_freq"]) - (1.0 - xi0).abs()).abs() < 1e-12);
    assert!((f(&v["xi_big_tilde"]) - xi0).abs() < 1e-12);
    assert_eq!(f(&v["a_tilde"]), 0.0);
}

#[test]
fn solve_unbiased_zeta_is_exactly_zero() {
    let v = json(&["solve", "--epsilon", "0", "--amplitude", "2.5", "--omega", "1.7"]);
    assert_eq!(f(&v["zeta"]), 0.0);
    assert!(f(&v["xi"]) > 0.0);
}

#[test]
fn hz_units_scale_frequencies_only() {
    let ang = json(&["solve", "--epsilon", "0.4", "--amplitude", "1.3", "--omega", "1.2924"]);
    let hz = json(&[
        "solve",
        "--units",
        "hz",
        "--delta",
        &(1.0 / TAU).to_string(),
        "--epsilon",
        &(0.4 / TAU).to_string(),
        "--amplitude",
        &(1.3 / TAU).to_string(),
        "--omega",
        &(1.2924 / TAU).to_string(),
    ]);
    assert!((f(&hz["xi"]) - f(&ang["xi"])).abs() < 1e-12);
    assert!((f(&hz["rabi_freq"]) * TAU - f(&ang["rabi_freq"])).abs() < 1e-12);
}

#[test]
fn compare_fig2d_chrw_beats_rabi_rwa() {
    let v = with_recipe("compare", "fig2d", &[]);
    let chrw = f(&v["max_dev_chrw"]);
    let rabi = f(&v["max_dev_rabi_rwa"]);
    assert!(rabi > chrw, "rabi_rwa {rabi} vs chrw {chrw}");
    let headers: Vec<&String> = v["rows"][0].as_object().unwrap().keys().collect();
    assert_eq!(headers, ["t", "chrw", "rabi_rwa", "rwa_rf", "exact"]);
}

#[test]
fn compare_columns_share_the_initial_condition() {
    let v = json(&[
        "compare", "--epsilon", "1", "--amplitude", "2", "--omega", "2", "--t-max", "1e-3", "--samples", "2",
    ]);
    let row = &v["rows"][0];
    for k in ["t", "chrw", "rabi_rwa", "rwa_rf", "exact"] {
        assert!(f(&row[k]).abs() < 1e-15, "{k} = {}", row[k]);
    }
}

#[test]
fn compare_fig5c_rwa_rf_stays_flat() {
    let v = with_recipe("compare", "fig5c", &[]);
    assert_eq!(v["photon_n"], -6);
    // J_6(1) is 2e-5, so the one-photon-number Rabi swing is below 1e-5 here
    let rf = column(&v["rows"], "rwa_rf");
    let exact = column(&v["rows"], "exact");
    assert!(rf.iter().all(|p| p.abs() < 1e-5));
    assert!(exact.iter().cloned().fold(0.0, f64::max) > 0.5);
}

#[test]
fn sweep_fig6d_is_even_in_bias() {
    let v = with_recipe("sweep", "fig6d", &[]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 121);
    let keys: Vec<String> = rows[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 4);
    for k in &keys[1..] {
        let col = column(&v, k);
        for i in 0..col.len() {
            let j = col.len() - 1 - i;
            assert!((col[i] - col[j]).abs() < 1e-9, "{k} row {i}: {} vs {}", col[i], col[j]);
        }
    }
}

#[test]
fn sweep_rows_follow_axis_order() {
    let v = json(&[
        "sweep", "--amplitude", "1", "--omega", "1", "--axis", "bias", "--from", "2", "--to", "-2", "--points", "9",
    ]);
    let eps = column(&v, "epsilon");
    assert!(eps.windows(2).all(|w| w[1] < w[0]));
    assert_eq!(eps[0], 2.0);
    assert_eq!(eps[8], -2.0);
}

#[test]
fn sweep_zero_amplitude_point_is_the_detuning() {
    let v = json(&[
        "sweep", "--epsilon", "0.5", "--amplitude", "1", "--omega", "1", "--axis", "amplitude", "--from", "0", "--to",
        "1", "--points", "5",
    ]);
    let rabi = f(&v[0]["rabi"]);
    assert!((rabi - (1.0 - 1.25f64.sqrt()).abs()).abs() < 1e-12);
}

#[test]
fn sweep_fig7a_minimum_is_shifted_by_70_mhz() {
    let v = with_recipe("sweep", "fig7a", &[]);
    let nu = column(&v, "omega");
    let rabi = column(&v, "rabi");
    let k = (0..rabi.len()).min_by(|&a, &b| rabi[a].total_cmp(&rabi[b])).unwrap();
    // bare splitting of the recipe's Δ, ε in GHz
    let xi0 = (4.869f64.powi(2) + 4.154f64.powi(2)).sqrt();
    let shift_mhz = (nu[k] - xi0) * 1e3;
    assert!((shift_mhz - 70.0).abs() <= 5.0, "shift {shift_mhz} MHz");
}

#[test]
fn sweep_failures_become_empty_cells() {
    // splitting below Δ has no real bias
    let out = ok(&[
        "sweep", "--amplitude", "1", "--omega", "1", "--axis", "splitting", "--from", "0.5", "--to", "1.5", "--points",
        "3",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "splitting,rabi");
    assert_eq!(lines[1], "0.5,");
    assert!(!lines[3].ends_with(','));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

fn peaks<'a>(v: &'a Value, method: &str) -> Vec<&'a Value> {
    v["peaks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["method"] == method)
        .collect()
}

#[test]
fn spectrum_fig1b_labels_rabi_and_drive_lines() {
    let v = with_recipe("spectrum", "fig1b", &[]);
    let bin = f(&v["resolution"]);
    let chrw = peaks(&v, "chrw");
    assert_eq!(chrw[0]["label"], "R");
    assert!((f(&chrw[0]["nu"]) - 0.4643).abs() < bin);
    assert_eq!(chrw[1]["label"], "1w");
    assert!((f(&chrw[1]["nu"]) - std::f64::consts::SQRT_2).abs() < bin);

    let exact = peaks(&v, "exact");
    assert_eq!(exact[0]["label"], "R");
    assert!((f(&exact[0]["nu"]) - 0.4643).abs() < bin);
    assert!(exact[..4].iter().any(|p| p["label"] == "1w"));
}

#[test]
fn spectrum_fig3b_peak_sets_agree() {
    let v = with_recipe("spectrum", "fig3b", &["--threshold", "0.01"]);
    let bin = f(&v["resolution"]);
    let exact = peaks(&v, "exact");
    let chrw = peaks(&v, "chrw");
    assert!(!exact.is_empty());
    for e in &exact {
        let nu = f(&e["nu"]);
        assert!(
            chrw.iter().any(|c| (f(&c["nu"]) - nu).abs() <= bin),
            "exact line {nu} has no chrw partner"
        );
    }
}

#[test]
fn spectrum_of_static_system_has_one_line() {
    // A = 0, ε = 0: P_up = cos²(Δt/2), a single line at Δ
    let v = json(&["spectrum", "--amplitude", "0", "--omega", "3", "--method", "exact"]);
    let exact = peaks(&v, "exact");
    assert_eq!(exact.len(), 1, "{exact:?}");
    assert!((f(&exact[0]["nu"]) - 1.0).abs() < f(&v["resolution"]));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let path = recipe("fig6c");
    let args = ["sweep", "--config", path.to_str().unwrap()];
    assert_eq!(ok(&args).stdout, ok(&args).stdout);
    let path = recipe("fig2b");
    let args = ["compare", "--config", path.to_str().unwrap()];
    assert_eq!(ok(&args).stdout, ok(&args).stdout);
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("out.csv");
    let path = recipe("fig6a");
    let stdout = ok(&["sweep", "--config", path.to_str().unwrap()]).stdout;
    let written = ok(&[
        "sweep",
        "--config",
        path.to_str().unwrap(),
        "--output",
        file.to_str().unwrap(),
    ]);
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read(&file).unwrap(), stdout);
}

#[test]
fn csv_has_header_and_footer() {
    let path = recipe("fig1a");
    let text = String::from_utf8(ok(&["compare", "--config", path.to_str().unwrap()]).stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,chrw,rabi_rwa,rwa_rf,exact");
    assert_eq!(lines.len(), 2001 + 2);
    let footer: Value = serde_json::from_str(lines.last().unwrap().strip_prefix("# ").unwrap()).unwrap();
    assert!(footer["max_dev_chrw"].is_number());
}

#[test]
fn json_rows_are_flat() {
    let v = json(&["evolve", "--amplitude", "1", "--omega", "1", "--samples", "5", "--method", "rabi_rwa"]);
    for row in v.as_array().unwrap() {
        for (k, x) in row.as_object().unwrap() {
            assert!(x.is_number(), "{k}");
            assert!(k.chars().all(|c| c.is_ascii_lowercase() || c == '_'));
        }
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| chrw(args).status.code().unwrap();
    assert_eq!(code(&["solve", "--amplitude", "1"]), 2);
    assert_eq!(code(&["solve", "--amplitude", "1", "--omega", "-1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["solve", "--amplitude", "1e6", "--omega", "1e-3"]), 3);
    assert_eq!(
        code(&["evolve", "--method", "exact", "--amplitude", "1e200", "--omega", "1e200", "--t-max", "1"]),
        4
    );
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("exact.conf");
    std::fs::write(&file, "amplitude = 1\nomega = 1\nmethod = exact\n").unwrap();
    assert_eq!(code(&["compare", "--config", file.to_str().unwrap()]), 2);
}

#[test]
fn bad_recipes_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.conf");
    std::fs::write(&file, "amplitude = 1\nomega = 1\nbogus = 3\n").unwrap();
    assert_eq!(chrw(&["solve", "--config", file.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&file, "amplitude = 1\nomega = 1\nomega = 2\n").unwrap();
    assert_eq!(chrw(&["solve", "--config", file.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn every_recipe_runs_quickly() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../recipes");
    let mut names: Vec<PathBuf> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    assert_eq!(names.len(), 30);
    for path in names {
        let text = std::fs::read_to_string(&path).unwrap();
        let cmd = if text.contains("\naxis") {
            "sweep"
        } else if text.contains("\nmethod = all") {
            "spectrum"
        } else {
            "compare"
        };
        let start = Instant::now();
        ok(&[cmd, "--config", path.to_str().unwrap()]);
        let took = start.elapsed();
        assert!(took < Duration::from_secs(60), "{} took {took:?}", path.display());
    }
}
