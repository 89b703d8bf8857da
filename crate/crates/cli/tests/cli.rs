use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gslab"))
        .args(args)
        .env_remove("GSLAB_CAP")
        .output()
        .unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Rows as header-keyed maps.
fn csv_rows(text: &str) -> Vec<std::collections::HashMap<String, String>> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    lines
        .map(|l| {
            header
                .iter()
                .zip(l.split(','))
                .map(|(h, v)| (h.to_string(), v.to_string()))
                .collect()
        })
        .collect()
}

const STAR: &str = r#"{"n": 5, "edges": [[0, 1], [0, 2], [0, 3], [0, 4]]}"#;
const P5: &str = "a b\nb c\nc d\nd e\n";

#[test]
fn ed_curve_reproduces_the_closed_form_on_a_star() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k14.json", STAR);
    let o = gslab(&["ed-curve", "--graph", s(&g), "--phi", "0:2pi:41"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("phi,vertex,n_nu,ed_analytic,ed_oracle,entropy_oracle\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 41 * 5);
    let mut worst = 0.0f64;
    for r in &rows {
        let phi: f64 = r["phi"].parse().unwrap();
        let a: f64 = r["ed_analytic"].parse().unwrap();
        let o: f64 = r["ed_oracle"].parse().unwrap();
        worst = worst.max((a - o).abs());
        if r["vertex"] == "0" {
            assert_eq!(r["n_nu"], "4");
            assert!((a - (1.0 - (phi / 2.0).cos().powi(8))).abs() < 1e-14);
        }
        if (phi - 2.0 * PI).abs() < 1e-12 {
            assert!(a.abs() < 1e-12 && o.abs() < 1e-12);
        }
    }
    assert!(worst <= 1e-10);
}

#[test]
fn oracle_columns_are_dropped_above_the_cap() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k14.json", STAR);
    let o = gslab(&["ed-curve", "--graph", s(&g), "--phi", "pi", "--cap", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("phi,vertex,n_nu,ed_analytic\n"));

    let o = Command::new(env!("CARGO_BIN_EXE_gslab"))
        .args(["ed-curve", "--graph", s(&g), "--phi", "pi"])
        .env("GSLAB_CAP", "4")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("phi,vertex,n_nu,ed_analytic\n"));
}

#[test]
fn c4_has_exactly_the_two_opposite_xx_correlations() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", "0 1\n1 2\n2 3\n3 0\n");
    let o = gslab(&["correlators", "--graph", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 6 * 9);
    let nonzero: Vec<_> = rows.iter().filter(|r| r["predicted"] != "0").collect();
    assert_eq!(nonzero.len(), 2);
    for r in nonzero {
        assert_eq!((r["axes"].as_str(), r["rule"].as_str()), ("xx", "twins"));
        assert!(matches!(
            (r["nu"].as_str(), r["mu"].as_str()),
            ("0", "2") | ("1", "3")
        ));
    }
    assert!(rows.iter().all(|r| r["agree"] == "true"));
    assert!(rows
        .iter()
        .filter(|r| r["axes"] == "zz")
        .all(|r| r["predicted"] == "0"));
}

#[test]
fn square_lattice_patch_has_no_pairwise_correlations() {
    let dir = TempDir::new().unwrap();
    let mut edges = String::new();
    for r in 0..3 {
        for c in 0..3 {
            let v = 3 * r + c;
            if c < 2 {
                edges += &format!("{v} {}\n", v + 1);
            }
            if r < 2 {
                edges += &format!("{v} {}\n", v + 3);
            }
        }
    }
    let g = write(&dir, "grid.txt", &edges);
    let o = gslab(&["correlators", "--graph", s(&g), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 36 * 9);
    assert!(rows
        .iter()
        .all(|r| r["predicted"] == 0 && r["agree"] == true));
}

#[test]
fn single_site_table_at_any_phi() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p5.txt", P5);
    let o = gslab(&[
        "correlators",
        "--graph",
        s(&g),
        "--single",
        "--phi",
        "0.3,1.1,0.5pi",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 15);
    assert!(rows
        .iter()
        .all(|r| r["agree"] == "true" && r["ez"] == "0.0"));

    let o = gslab(&["correlators", "--graph", s(&g), "--phi", "0.5pi"]);
    assert_eq!(o.status.code(), Some(2));
}

fn validate_probe_report(report: &Value) {
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/probe_report.schema.json");
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(report)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn self_verification_of_p5_passes() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p5.txt", P5);
    let out = dir.path().join("report.json");
    let eps = (0.5f64).powi(10).to_string();
    let o = gslab(&[
        "probe",
        "--graph",
        s(&g),
        "--epsilon",
        &eps,
        "--seed",
        "4",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    validate_probe_report(&report);
    assert_eq!(report["pass"], true);
    assert_eq!(report["m"], 10);
    assert_eq!(report["shots_total"], 50);
    for v in report["verdicts"].as_array().unwrap() {
        assert!(v["samples_used"].as_u64().unwrap() <= 10);
        assert_eq!(v["decided_value"], 1);
    }
}

#[test]
fn corrupted_edge_is_localized() {
    let dir = TempDir::new().unwrap();
    let hyp = write(&dir, "p5.txt", P5);
    let actual = write(&dir, "p5_extra.txt", "a b\nb c\nc d\nd e\nb e\n");
    let o = gslab(&[
        "probe",
        "--graph",
        s(&hyp),
        "--actual",
        s(&actual),
        "--epsilon",
        "1e-6",
        "--seed",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    validate_probe_report(&report);
    assert_eq!(report["pass"], false);
    assert_eq!(report["failing_labels"], serde_json::json!(["b", "e"]));
    let links = report["links"].as_array().unwrap();
    assert_eq!(links.len(), 1);
    assert_eq!(
        (
            links[0]["hypothesized"].clone(),
            links[0]["detected"].clone()
        ),
        (false.into(), true.into())
    );
}

#[test]
fn probe_rejects_mismatched_sizes_and_bad_epsilon() {
    let dir = TempDir::new().unwrap();
    let hyp = write(&dir, "p5.txt", P5);
    let small = write(&dir, "p2.txt", "a b\n");
    let o = gslab(&["probe", "--graph", s(&hyp), "--actual", s(&small)]);
    assert_eq!(o.status.code(), Some(2));
    let o = gslab(&["probe", "--graph", s(&hyp), "--epsilon", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gslab(&["probe", "--graph", s(&hyp), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compliance_flags_the_k2_sign() {
    let o = gslab(&["compliance", "--random", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    let find = |g: &str, axis: &str| {
        rows.iter()
            .find(|r| r["graph"] == g && r["axis"] == axis)
            .unwrap()
            .clone()
    };
    let k2 = find("P2", "y");
    assert_eq!(
        (k2["paper_value"].as_str(), k2["flagged"].as_str()),
        ("-1", "true")
    );
    assert_eq!(k2["oracle_value"].parse::<f64>().unwrap().round(), 1.0);
    let c4 = find("C4", "x");
    assert_eq!(
        (
            c4["paper_value"].as_str(),
            c4["bookkeeping_value"].as_str(),
            c4["flagged"].as_str()
        ),
        ("1", "1", "false")
    );
    let p3 = find("P3", "x");
    assert_eq!(
        (p3["paper_value"].as_str(), p3["bookkeeping_value"].as_str()),
        ("0", "0")
    );
}

#[test]
fn identical_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let hyp = write(&dir, "p5.txt", P5);
    let actual = write(&dir, "c5.txt", "a b\nb c\nc d\nd e\na e\n");
    let args = [
        "probe",
        "--graph",
        s(&hyp),
        "--actual",
        s(&actual),
        "--jitter",
        "0.05",
        "--seed",
        "12",
    ];
    assert_eq!(gslab(&args).stdout, gslab(&args).stdout);
    let args = ["ed-curve", "--graph", s(&hyp), "--format", "json"];
    assert_eq!(gslab(&args).stdout, gslab(&args).stdout);
}

#[test]
fn usage_and_parse_errors_exit_with_2() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p5.txt", P5);
    let looped = write(&dir, "loop.txt", "a a\n");
    assert_eq!(
        gslab(&["ed-curve", "--graph", s(&g), "--phi", "zz"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gslab(&["ed-curve", "--graph", s(&looped)]).status.code(),
        Some(2)
    );
    assert_eq!(
        gslab(&["ed-curve", "--graph", s(&g), "--cap", "99"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(gslab(&["ed-curve"]).status.code(), Some(2));
    assert_eq!(gslab(&["nope"]).status.code(), Some(2));
}
