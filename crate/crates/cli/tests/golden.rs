//! End-to-end runs of the qosc binary: golden output strings, JSON shape,
//! exit codes and report determinism.

use std::process::Command;

use serde_json::Value;

fn qosc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qosc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = qosc(args);
    assert_eq!(code, 0, "stderr: {stderr}");
    serde_json::from_str(&stdout).expect("valid json")
}

#[test]
fn fock_spectrum_csv_is_exact() {
    // q = 2, B = 1, lambda0 = 0 is the Fock chain 0, 2, 4, 8.5, ...; the
    // window clips to the levels the chain occupies.
    let (code, stdout, _) = qosc(&[
        "spectrum", "--q", "2", "--B", "1", "--window", "-3,3", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n,lambda\n\
         0,0.0000000000000000e0\n\
         1,2.0000000000000000e0\n\
         2,4.0000000000000000e0\n\
         3,8.5000000000000000e0\n"
    );
}

#[test]
fn classify_json_reports_families_and_thresholds() {
    let v = json(&["classify", "--q", "0.5", "--B", "0", "--lambda0", "0"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["tool"]["name"], "qosc");
    assert_eq!(v["params"]["q"], 0.5);
    assert_eq!(v["matched"], "Fock");

    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 2);
    assert_eq!(classes[0]["family"], "Fock");
    assert_eq!(classes[0]["matched"], true);
    assert_eq!(classes[0]["forced_lambda0"], 0.0);
    assert_eq!(classes[0]["index_lo"], 0);
    assert!(classes[0]["index_hi"].is_null());
    assert_eq!(classes[1]["family"], "Unbounded");
    assert_eq!(classes[1]["matched"], false);
    assert_eq!(
        classes[1]["lambda0_min"].as_f64().unwrap(),
        0.6666666666666666
    );

    assert_eq!(
        v["thresholds"]["b_star"].as_f64().unwrap(),
        -1.6666666666666667
    );
    assert_eq!(v["casimir"]["c3"][0], 1.0);
}

#[test]
fn classify_without_lambda0_only_enumerates() {
    // The pure doubly infinite region admits no lambda0 = 0 label, so a
    // bare (nu0, B) query must not reject; it lists the family and leaves
    // the resolution fields empty.
    let v = json(&["classify", "--q", "0.5", "--B", "-1.2"]);
    assert!(v.get("matched").is_none());
    assert!(v["label"]["lambda0"].is_null());
    assert!(v["thresholds"]["e0"].is_null());
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0]["family"], "Unbounded");
    assert!(classes[0]["matched"].is_null());

    // An empty region is still an exit-2 rejection even without lambda0.
    let (code, _, stderr) = qosc(&["classify", "--q", "2", "--B", "-2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no family admits"));
}

#[test]
fn seam_label_resolves_to_the_finite_family() {
    let v = json(&[
        "classify",
        "--q",
        "0.5",
        "--B",
        "-1.6666666666666667",
        "--lambda0",
        "1.3333333333333333",
    ]);
    assert_eq!(v["matched"], "TwoDimensionalOdd");
    let row = &v["classes"][0];
    assert_eq!(row["index_lo"], -1);
    assert_eq!(row["index_hi"], 0);
    assert_eq!(
        row["forced_lambda0"].as_f64().unwrap(),
        1.3333333333333333
    );
}

#[test]
fn scan_csv_matches_the_family_table() {
    let (code, stdout, _) = qosc(&[
        "scan",
        "--q-values",
        "0.5,2",
        "--b-values",
        "-3,-1.6666666666666667,-1,0,1.6666666666666667,3",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<(&str, &str)> = stdout
        .lines()
        .skip(1)
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            (fields[2], fields[3])
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            ("AntiFock", "false"),
            ("TwoDimensionalOdd", "true"),
            ("OneDimensional", "true"),
            ("Fock+Unbounded", "false"),
            ("TwoDimensionalEven+Unbounded", "true"),
            ("none", "false"),
            ("none", "false"),
            ("none", "false"),
            ("OneDimensional", "true"),
            ("Fock", "false"),
            ("Fock", "false"),
            ("Fock", "false"),
        ]
    );
}

#[test]
fn one_dimensional_matrix_csv_lists_levels() {
    let (code, stdout, _) = qosc(&[
        "matrix", "--q", "2", "--nu0", "0.7", "--B", "-1", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    // The ladder operators vanish on the single-level chain, so only the
    // diagonals print.
    assert_eq!(
        stdout,
        "op,row,col,value\n\
         n,0,0,6.9999999999999996e-1\n\
         k,0,0,-5.0000000000000000e-1\n"
    );
}

#[test]
fn fock_matrix_json_carries_the_superdiagonal() {
    let v = json(&["matrix", "--q", "2", "--B", "1", "--dim", "4"]);
    let m = &v["matrices"];
    assert_eq!(m["family"], "Fock");
    assert_eq!(m["dim"], 4);
    assert_eq!(m["index_offset"], 0);
    assert_eq!(m["a"][0][1].as_f64().unwrap(), std::f64::consts::SQRT_2);
    assert_eq!(m["a"][1][2].as_f64().unwrap(), 2.0);
    assert_eq!(m["a"][2][3].as_f64().unwrap(), 2.9154759474226504);
    assert_eq!(m["a"][1][0], 0.0);
    assert_eq!(m["a_dag"][1][0].as_f64().unwrap(), std::f64::consts::SQRT_2);
    assert_eq!(m["n_diag"][2], 2.0);
    assert_eq!(m["k_diag"][0], 0.5);
    assert_eq!(m["k_diag"][1], -0.5);
}

#[test]
fn verify_csv_reports_within_tolerance() {
    let (code, stdout, _) = qosc(&[
        "verify", "--q", "0.5", "--B", "0", "--dim", "16", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("family,Fock\n"));
    assert!(stdout.contains("interior_dim,14\n"));
    assert!(stdout.ends_with("within_tolerance,true\n"));
}

#[test]
fn equivalent_labels_share_an_index_shift() {
    let v = json(&[
        "equiv", "--q", "0.5", "--a", "0,0.5,1.0", "--b", "1,-0.5,2.0",
    ]);
    assert_eq!(v["equivalence"]["equivalent"], true);
    assert_eq!(v["equivalence"]["shift"], 1);
    assert_eq!(v["equivalence"]["family_a"], "Unbounded");

    // Perturbing lambda0 keeps the candidate shift but breaks the match.
    let v = json(&[
        "equiv", "--q", "0.5", "--a", "0,0.5,1.0", "--b", "1,-0.5,2.001",
    ]);
    assert_eq!(v["equivalence"]["equivalent"], false);
    assert_eq!(v["equivalence"]["shift"], 1);
}

#[test]
fn limits_track_the_catalogue_toward_the_undeformed_point() {
    let (code, stdout, _) = qosc(&[
        "limits",
        "--q-values",
        "0.5,0.9",
        "--B",
        "-3",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    // Deep deformation admits the AntiFock chain with heads 4, 4, 9 at
    // levels 0, -1, -2; near q = 1 the same B falls inside (b*, -1) where
    // only the doubly infinite family survives.
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields[3], "AntiFock");
    assert_eq!(fields[4], "true");
    assert_eq!(fields[9], "4.0000000000000000e0");
    assert_eq!(fields[10], "4.0000000000000000e0");
    assert_eq!(fields[11], "9.0000000000000000e0");
    let fields: Vec<&str> = lines[2].split(',').collect();
    assert_eq!(fields[3], "Unbounded");
    assert_eq!(fields[4], "true");
    assert_eq!(fields[9], "");
}

#[test]
fn limits_family_filter_reports_existence_along_the_path() {
    // Fock persists toward q = 1 at fixed B = 0.5.
    let v = json(&[
        "limits", "--family", "Fock", "--q-values", "0.5,0.9,0.99", "--B", "0.5",
    ]);
    assert_eq!(v["limits"]["path"], "q");
    assert_eq!(v["limits"]["family"], "Fock");
    let rows = v["limits"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["exists"] == true));

    // AntiFock needs B < b*, so it recedes as b* diverges.
    let v = json(&[
        "limits", "--family", "AntiFock", "--q-values", "0.5,0.9,0.99", "--B", "-3",
    ]);
    let exists: Vec<bool> = v["limits"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["exists"].as_bool().unwrap())
        .collect();
    assert_eq!(exists, vec![true, false, false]);
}

#[test]
fn limits_walks_a_b_path_at_fixed_q() {
    // The even two-level family lives only on the seam B = -b*.
    let v = json(&[
        "limits",
        "--family",
        "TwoDimensionalEven",
        "--q",
        "0.5",
        "--b-values",
        "1.6666666666666667,1,0.5",
    ]);
    assert_eq!(v["limits"]["path"], "B");
    let rows = v["limits"]["rows"].as_array().unwrap();
    let exists: Vec<bool> = rows.iter().map(|r| r["exists"].as_bool().unwrap()).collect();
    assert_eq!(exists, vec![true, false, false]);
    // lambda_1 = 1 + B on the seam; with B = fl(5/3) the sum rounds to
    // 2.666666666666667, one ulp above fl(8/3).
    assert_eq!(
        rows[0]["heads"][1]["lambda"].as_f64().unwrap(),
        2.666666666666667
    );
}

#[test]
fn rejected_label_exits_two_with_a_diagnostic() {
    let (code, stdout, stderr) = qosc(&["classify", "--q", "2", "--B", "1", "--lambda0", "0.3"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("no representation"));
    assert!(stderr.contains("lambda0 = 0"));
}

#[test]
fn equiv_on_terminating_chains_exits_two() {
    let (code, _, stderr) = qosc(&["equiv", "--q", "2", "--a", "0,0,0", "--b", "1,0,0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("doubly infinite"));
}

#[test]
fn invalid_inputs_exit_one() {
    let cases: &[&[&str]] = &[
        &["classify", "--q", "1", "--B", "0"],
        &["classify", "--q", "2", "--B", "0", "--alpha", "0"],
        &["classify", "--q", "2", "--B", "0", "--lambda0", "-0.5"],
        &["classify", "--q", "2"],
        &["spectrum", "--q", "2", "--B", "1", "--window", "abc"],
        // Free-lambda0 region with no lambda0 to build from.
        &["spectrum", "--q", "0.5", "--B", "-1.2"],
        &["matrix", "--q", "2", "--nu0", "0.7", "--B", "-1", "--dim", "3"],
        &["scan", "--q-values", "0.5,1", "--b-values", "0"],
        &["scan", "--q-values", "0.5"],
        &["limits", "--q-values", "0.5,0.9"],
        &["limits", "--q-values", "0.5", "--B", "0", "--q", "0.5"],
        &["limits", "--family", "Bogus", "--q-values", "0.5", "--B", "0"],
        &["unknown-subcommand"],
    ];
    for args in cases {
        let (code, _, _) = qosc(args);
        assert_eq!(code, 1, "args: {args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let (code, stdout, _) = qosc(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("classify"));
    let (code, stdout, _) = qosc(&["--version"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("qosc "));
}

#[test]
fn reports_are_deterministic() {
    let args = ["classify", "--q", "0.5", "--B", "-1.2", "--lambda0", "1.5"];
    let (_, first, _) = qosc(&args);
    let (_, second, _) = qosc(&args);
    assert_eq!(first, second);
    assert!(!first.is_empty());
}

#[test]
fn out_flag_writes_the_report_to_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.csv");
    let args = ["spectrum", "--q", "2", "--B", "1", "--format", "csv"];

    let (code, stdout, _) = qosc(&args);
    assert_eq!(code, 0);

    let mut with_out: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    with_out.extend(["--out", path_str]);
    let (code, silent, _) = qosc(&with_out);
    assert_eq!(code, 0);
    assert!(silent.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}
