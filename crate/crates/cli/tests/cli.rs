use std::process::{Command, Output};

fn superschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(args)
        .env_remove("SUPERSCHUR_MODE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = superschur(args);
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn crossed_product_passes() {
    let out = superschur(&["verify", "crossed-product", "--k", "1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn classical_outside_hypothesis_is_a_usage_error() {
    let out = superschur(&["verify", "classical", "--k", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not applicable"));
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(superschur(&["verify", "hook", "--k", "1", "--n", "5..3"]).status.code(), Some(2));
    assert_eq!(superschur(&["verify", "hook", "--k", "1", "--n", "1"]).status.code(), Some(2));
    assert_eq!(superschur(&["verify", "crossed-product", "--k", "1", "--l", "2", "--n", "3"]).status.code(), Some(2));
    assert_eq!(superschur(&["verify", "hook", "--k", "1", "--n", "8"]).status.code(), Some(2));
    let big = superschur(&["verify", "hook", "--k", "4", "--l", "4", "--n", "7"]);
    assert_eq!(big.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&big.stderr).contains("resource bound"));
    assert_eq!(superschur(&["asymptotics", "full-sym", "--nmax", "10", "--fit"]).status.code(), Some(2));
    assert_eq!(superschur(&["asymptotics", "m-ratio", "--nmax", "10"]).status.code(), Some(2));
}

#[test]
fn all_aggregates_and_skips() {
    let doc = json(&["verify", "all", "--k", "1", "--l", "1", "--n", "2..5", "--format", "json"]);
    assert_eq!(doc["passed"], true);
    let theorems: Vec<&str> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["theorem"].as_str().unwrap())
        .collect();
    assert_eq!(theorems.len(), 12);
    assert!(theorems.contains(&"crossed-product") && !theorems.contains(&"pq"));

    let out = superschur(&["verify", "all", "--k", "2", "--n", "3..4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["skipped"].as_array().unwrap().len(), 2);
}

#[test]
fn json_is_reproducible_without_timing() {
    let args = ["verify", "pq", "--k", "2", "--l", "1", "--n", "3", "--mode", "modular", "--seed", "9", "--format", "json", "--no-timing"];
    let (a, b) = (superschur(&args), superschur(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["reports"][0]["elapsed_ms"], 0);
    assert_eq!(doc["reports"][0]["arithmetic"]["fields"].as_array().unwrap().len(), 2);
}

#[test]
fn mode_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(["verify", "hook", "--k", "1", "--l", "1", "--n", "3", "--format", "json"])
        .env("SUPERSCHUR_MODE", "modular")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["reports"][0]["arithmetic"]["mode"], "modular");
}

#[test]
fn dims_table_values() {
    let doc = json(&["dims", "--k", "1", "--l", "1", "--n", "2..3", "--format", "json"]);
    let row = |i: usize| {
        let r = &doc["rows"][i];
        ["image_s", "image_a", "centralizer_s", "centralizer_a"].map(|c| {
            assert_eq!(r[c]["agrees"], true, "{c}");
            r[c]["char"].as_u64().unwrap()
        })
    };
    assert_eq!(row(0), [2, 1, 8, 16]);
    assert_eq!(row(1), [6, 3, 12, 24]);
}

#[test]
fn dims_even_space_has_equal_centralizers() {
    let doc = json(&["dims", "--k", "2", "--n", "5", "--format", "json"]);
    let r = &doc["rows"][0];
    assert_eq!(r["image_s"]["char"], 42);
    assert_eq!(r["image_a"]["char"], 42);
    assert_eq!(r["centralizer_s"]["char"], r["centralizer_a"]["char"]);
}

#[test]
fn series_csv_has_fixed_headers_and_exact_values() {
    let out = superschur(&["asymptotics", "sc-ratio", "--k", "1", "--nmax", "9", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,num,den,decimal,scaled"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(&rows[6][..3], ["7", "1", "7"]);
    assert_eq!(&rows[7][..3], ["8", "0", "1"]);
}

#[test]
fn sc_ratio_fit_recovers_inverse_n() {
    let doc = json(&["asymptotics", "sc-ratio", "--k", "1", "--nmax", "101", "--fit", "--format", "json"]);
    let fit = &doc["fit"];
    assert!((fit["exponent"].as_f64().unwrap() + 1.0).abs() < 1e-9);
    assert!((fit["constant"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(fit["parity"], "odd");
}

#[test]
fn full_sym_values() {
    let doc = json(&["asymptotics", "full-sym", "--nmax", "20", "--format", "json"]);
    let pts = doc["series"]["points"].as_array().unwrap();
    assert_eq!(pts.len(), 19);
    assert_eq!(pts[1]["value"], serde_json::json!({"num": "2", "den": "1"}));
    assert_eq!(pts[2]["value"], serde_json::json!({"num": "1", "den": "5"}));
    assert!(doc.get("fit").is_none());
}

#[test]
fn output_goes_to_file() {
    let path = std::env::temp_dir().join(format!("superschur-cli-{}.csv", std::process::id()));
    let out = superschur(&["asymptotics", "hook-count", "--k", "1", "--nmax", "5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(1) == Some("1")));
}
