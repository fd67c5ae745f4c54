//! End-to-end tests of the command-line interface: subcommand output,
//! exit codes, config-file and environment handling, and byte-level
//! determinism of the reports.

use std::process::Command;

fn focksym() -> Command {
    Command::new(env!("CARGO_BIN_EXE_focksym"))
}

fn stdout_of(cmd: &mut Command) -> (String, i32) {
    let out = cmd.output().expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn parse_reduces_the_angular_momentum_commutator_to_zero() {
    let (out, code) = stdout_of(focksym().args(["parse", "[L1,L2] - i*L3"]));
    assert_eq!(out.trim(), "0");
    assert_eq!(code, 0);
}

#[test]
fn parse_radial_context() {
    let (out, code) = stdout_of(focksym().args([
        "parse",
        "--context",
        "radial",
        "--j",
        "1/2",
        "j*(j+1)*r^-2 - r^-1",
    ]));
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "3/4*r^-2 - r^-1");
}

#[test]
fn parse_error_exits_with_usage_code() {
    let out = focksym().args(["parse", "x4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown identifier"), "{err}");
    assert!(err.contains("column 1"), "{err}");
}

#[test]
fn unknown_flag_exits_with_usage_code() {
    let out = focksym().args(["verify", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_dipole_passes_and_emits_schema_shaped_json() {
    let (out, code) = stdout_of(focksym().args(["verify", "--model", "dipole", "--format", "json"]));
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    let rows = rows.as_array().expect("array");
    assert!(!rows.is_empty());
    // the o4 suite covers O4_JJ / O4_RJ / O4_RR and all pass
    for name in ["O4_JJ", "O4_RJ", "O4_RR", "CONS_J", "CONS_R"] {
        assert!(
            rows.iter()
                .any(|r| r["identity"] == name && r["passed"] == true),
            "missing passing {name}"
        );
    }
    assert!(rows.iter().all(|r| r["passed"] == true));
}

#[test]
fn verify_output_validates_against_shipped_schema() {
    let schema_text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schema/report.schema.json"
    ))
    .expect("schema ships with the crate");
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let (out, _) = stdout_of(focksym().args(["verify", "--model", "all"]));
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();

    // Minimal structural validation against the schema document: required
    // keys, types, enums and the additionalProperties: false contract.
    let item = &schema["items"];
    let required: Vec<&str> = item["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let properties = item["properties"].as_object().unwrap();
    let enum_of = |key: &str| -> Option<Vec<String>> {
        properties[key]["enum"].as_array().map(|a| {
            a.iter()
                .map(|v| v.as_str().unwrap().to_string())
                .collect()
        })
    };
    let suite_enum = enum_of("suite").unwrap();
    let identity_enum = enum_of("identity").unwrap();
    let model_enum = enum_of("model").unwrap();

    for row in rows.as_array().unwrap() {
        let obj = row.as_object().unwrap();
        for key in &required {
            assert!(obj.contains_key(*key), "missing required key {key}");
        }
        for key in obj.keys() {
            assert!(properties.contains_key(key), "unexpected key {key}");
        }
        assert!(suite_enum.contains(&obj["suite"].as_str().unwrap().to_string()));
        assert!(identity_enum.contains(&obj["identity"].as_str().unwrap().to_string()));
        assert!(model_enum.contains(&obj["model"].as_str().unwrap().to_string()));
        assert!(obj["passed"].is_boolean());
        assert!(obj["residual_terms"].is_u64());
        assert!(obj["params"].is_object());
        for v in obj["params"].as_object().unwrap().values() {
            assert!(v.is_string());
        }
    }
}

#[test]
fn spectrum_matches_closed_form() {
    let (out, code) = stdout_of(focksym().args([
        "spectrum", "--model", "dipole", "--j", "1/2", "--n-max", "2", "--mass", "1", "--alpha",
        "1", "--format", "csv",
    ]));
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "model,j,n,N,epsilon,e_phys,kappa_degeneracy");
    assert_eq!(lines[1], "dipole,1/2,0,3/2,-1/9,-2/9,2");
    assert_eq!(lines[2], "dipole,1/2,1,5/2,-1/25,-2/25,2");
    assert_eq!(lines[3], "dipole,1/2,2,7/2,-1/49,-2/49,2");
}

#[test]
fn oracle_on_reduced_grid_passes() {
    let (out, code) = stdout_of(focksym().args([
        "oracle",
        "--model",
        "spin-orbit",
        "--j",
        "1/2",
        "--grid",
        "3000:120",
        "--format",
        "json",
    ]));
    assert_eq!(code, 0, "oracle failed: {out}");
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    for row in rows.as_array().unwrap() {
        assert_eq!(row["passed"], true);
        assert_eq!(row["tolerance"], "5.0000000000000001e-3");
    }
}

#[test]
fn wavefunction_csv_has_fixed_columns_and_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wf.csv");
    let out = focksym()
        .args([
            "wavefunction",
            "--model",
            "spin-orbit",
            "--j",
            "1/2",
            "--n",
            "1",
            "--grid",
            "3000:120",
            "--output",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    let meta = lines.next().unwrap();
    assert!(meta.starts_with("# {"));
    let meta_json: serde_json::Value =
        serde_json::from_str(meta.trim_start_matches("# ")).unwrap();
    assert_eq!(meta_json["model"], "spin-orbit");
    assert_eq!(meta_json["j"], "1/2");
    assert_eq!(lines.next().unwrap(), "r,re_up,im_up,re_down,im_down");
    assert_eq!(lines.count(), 3000);
}

#[test]
fn dirac_reports_reduction_energies_and_residual() {
    let (out, code) = stdout_of(focksym().args([
        "dirac", "--mass", "1", "--alpha", "1", "--j", "1/2", "--n-max", "1", "--points", "8",
    ]));
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reduction"]["passed"], true);
    assert_eq!(v["reduction"]["identity"], "DIRAC_REDUCE");
    let energies = v["energies"].as_array().unwrap();
    assert_eq!(energies.len(), 2);
    assert_eq!(energies[0]["e"], "8.3205029433784372e-1");
    assert_eq!(energies[0]["epsilon_identity_exact"], true);
    assert_eq!(v["sys2_passed"], true);
}

#[test]
fn identical_config_and_seed_give_byte_identical_output() {
    let run = |args: &[&str]| stdout_of(focksym().args(args)).0;
    for args in [
        vec!["verify", "--model", "all", "--format", "json"],
        vec![
            "oracle",
            "--model",
            "dipole",
            "--j",
            "1/2",
            "--grid",
            "3000:120",
            "--seed",
            "7",
        ],
        vec!["dirac", "--points", "6", "--seed", "9"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.into_bytes(), b.into_bytes(), "args: {args:?}");
    }
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(&conf, "model=dipole\nj=1/2\nn-max=1\nformat=csv\n").unwrap();
    let (out, code) = stdout_of(focksym().args([
        "spectrum",
        "--config",
        conf.to_str().unwrap(),
    ]));
    assert_eq!(code, 0);
    assert!(out.starts_with("model,j,n,N,epsilon"));
    assert_eq!(out.lines().count(), 3); // header + n = 0, 1
    // flag overrides the file
    let (out, _) = stdout_of(focksym().args([
        "spectrum",
        "--config",
        conf.to_str().unwrap(),
        "--n-max",
        "0",
    ]));
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn output_dir_environment_variable_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = focksym()
        .env("FOCKSYM_OUTPUT_DIR", dir.path())
        .args([
            "spectrum", "--model", "ha", "--j", "0", "--n-max", "0", "--output", "ha.json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("ha.json").exists());
}

#[test]
fn failed_check_exits_one_with_report_emitted() {
    // An oracle run at an unreachable tolerance must exit 1 and still
    // print the machine-readable table.
    let out = focksym()
        .args([
            "oracle",
            "--model",
            "dipole",
            "--j",
            "1/2",
            "--grid",
            "3000:120",
            "--tol",
            "1e-12",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let rows: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(rows.as_array().unwrap().iter().any(|r| r["passed"] == false));
}
