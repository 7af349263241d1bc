use std::fs;
use std::process::{Command, Output};

fn invsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Header line, column names, data rows.
fn parse_csv(text: &str) -> (String, Vec<String>, Vec<Vec<String>>) {
    let (header, body) = text.split_once('\n').unwrap();
    let mut reader = csv::ReaderBuilder::new().from_reader(body.as_bytes());
    let columns = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    (header.to_string(), columns, rows)
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn no_arguments_prints_usage() {
    let o = invsq(&[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"));
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let o = invsq(&["spectrum", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_values_are_rejected_before_computing() {
    for args in [
        &["spectrum", "--n-max", "1"][..],
        &["spectrum", "--eps-over-a", "2"],
        &["spectrum", "--rho0-sq-range", "5:1:1"],
        &["spectrum", "--n-states", "0"],
        &["wavefunction", "--eps-over-a", "0.2", "--grid-max", "10"],
    ] {
        let o = invsq(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn spectrum_rows_and_header() {
    let o = invsq(&["spectrum", "--rho0-sq", "50", "--n-states", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (header, columns, rows) = parse_csv(&stdout(&o));
    assert!(header.starts_with(&format!("# invsq {} spectrum ", env!("CARGO_PKG_VERSION"))));
    for key in [
        "root_tol=",
        "n_max=400",
        "eps_over_a=",
        "n_states=4",
        "output_format=csv",
    ] {
        assert!(header.contains(key), "{key} missing from {header}");
    }
    assert_eq!(
        columns,
        [
            "rho0_sq",
            "n",
            "rho_eps_sq_analytic",
            "rho_eps_sq_matrix",
            "rel_diff",
            "wall_flag"
        ]
    );
    assert_eq!(rows.len(), 4);
    let ground: f64 = rows[0][2].parse().unwrap();
    assert!((ground - 44.457465320934254).abs() < 1e-8);
}

#[test]
fn below_threshold_fails_with_a_message() {
    let o = invsq(&["spectrum", "--rho0-sq", "0.2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("below critical strength 1/4"));
    assert!(o.stdout.is_empty());
}

#[test]
fn strength_range_as_json() {
    let o = invsq(&["spectrum", "--rho0-sq-range", "1:50:1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&stdout(&o));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["config", "rows"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 200);
    assert_eq!(rows[0]["rho0_sq"], 1.0);
    assert_eq!(rows[199]["rho0_sq"], 50.0);
    let first: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
    assert_eq!(first[0], "rho0_sq");
    assert_eq!(first[5], "wall_flag");
}

#[test]
fn convergence_is_variational() {
    let o = invsq(&[
        "converge",
        "--n-max-list",
        "100,200,400,800",
        "--rho0-sq",
        "50",
        "--eps-over-a",
        "0.001",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (_, columns, rows) = parse_csv(&stdout(&o));
    assert_eq!(rows.len(), 4);
    let energy = columns
        .iter()
        .position(|c| c == "energy_over_e0_1")
        .unwrap();
    let e: Vec<f64> = rows.iter().map(|r| r[energy].parse().unwrap()).collect();
    assert!(e.windows(2).all(|w| w[1] <= w[0]), "{e:?}");
}

#[test]
fn ladder_ground_state_estimate() {
    let o = invsq(&["ladder", "--rho0-sq", "1", "--n-states", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (_, columns, rows) = parse_csv(&stdout(&o));
    let col = columns.iter().position(|c| c == "rel_diff").unwrap();
    let d: f64 = rows[0][col].parse().unwrap();
    assert!(d < 0.05);
    assert_eq!(rows.len(), 2);
}

#[test]
fn wavefunction_both_methods() {
    let o = invsq(&[
        "wavefunction",
        "--rho0-sq",
        "50",
        "--eps-over-a",
        "0.01",
        "--n-max",
        "800",
        "--n-states",
        "2",
        "--grid-points",
        "50",
        "--kind",
        "density",
        "--axis",
        "x-over-a",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (header, columns, rows) = parse_csv(&stdout(&o));
    assert!(header.contains("kind=density") && header.contains("axis=x_over_a"));
    assert_eq!(columns, ["n", "method", "x_over_a", "density", "wall_flag"]);
    assert_eq!(rows.len(), 2 * 2 * 50);
    assert!(rows.iter().any(|r| r[1] == "matrix") && rows.iter().any(|r| r[1] == "analytic"));
    let last_x: f64 = rows[49][2].parse().unwrap();
    assert!((last_x - 0.1).abs() < 1e-15);
}

#[test]
fn scaling_emits_curves_and_summary() {
    let o = invsq(&[
        "scaling",
        "--eps-list",
        "0.02,0.01",
        "--rho0-sq-list",
        "50",
        "--n-max",
        "800",
        "--grid-points",
        "81",
        "--grid-max",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (_, _, rows) = parse_csv(&stdout(&o));
    assert_eq!(rows.len(), 3 * 81 + 1);
    let summary = rows.last().unwrap();
    assert_eq!(summary[1], "summary");
    let dev: f64 = summary[6].parse().unwrap();
    assert!(dev < 1e-2);
}

#[test]
fn config_file_sits_between_defaults_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.cfg");
    fs::write(
        &path,
        "# strengths\nrho0_sq=5 n_states=2\neps_over_a=0.01\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();

    let o = invsq(&["spectrum", "--config", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (header, _, rows) = parse_csv(&stdout(&o));
    assert!(header.contains("rho0_sq=5.0000000000000000e0"));
    assert_eq!(rows.len(), 2);

    let o = invsq(&[
        "spectrum",
        "--config",
        p,
        "--rho0-sq",
        "3",
        "--n-states",
        "1",
    ]);
    let (header, _, rows) = parse_csv(&stdout(&o));
    assert!(header.contains("rho0_sq=3.0000000000000000e0"));
    assert!(header.contains("eps_over_a=1.0000000000000000e-2"));
    assert_eq!(rows.len(), 1);

    fs::write(&path, "nonsense=1\n").unwrap();
    assert_eq!(invsq(&["spectrum", "--config", p]).status.code(), Some(2));
    let missing = dir.path().join("absent.cfg");
    assert_eq!(
        invsq(&["spectrum", "--config", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ladder.json");
    let args = [
        "ladder",
        "--rho0-sq-list",
        "2,3",
        "--n-states",
        "3",
        "--format",
        "json",
    ];
    let mut with_out = args.to_vec();
    with_out.extend(["--out", out.to_str().unwrap()]);
    let o = invsq(&with_out);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = fs::read_to_string(&out).unwrap();
    assert_eq!(written, stdout(&invsq(&args)));
    assert_eq!(json(&written)["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn csv_numbers_round_trip() {
    let o = invsq(&["ladder", "--rho0-sq", "2", "--n-states", "3"]);
    let (_, _, rows) = parse_csv(&stdout(&o));
    let v = invsq(&[
        "ladder",
        "--rho0-sq",
        "2",
        "--n-states",
        "3",
        "--format",
        "json",
    ]);
    let j = json(&stdout(&v));
    for (i, row) in rows.iter().enumerate() {
        let csv: f64 = row[2].parse().unwrap();
        assert_eq!(csv, j["rows"][i]["rho_eps_sq_exact"].as_f64().unwrap());
    }
}
