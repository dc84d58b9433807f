use std::io::Write as _;
use std::process::{Command, Output};

use satbound::corpus::{build_example, default_corpus};
use satbound::{PrimeField, RationalField};
use satbound_cli::ideal_file::IdealFile;
use serde_json::Value;

fn satbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satbound"))
        .args(args)
        .env_remove("SATBOUND_FIELD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ideal_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn three_points_square() {
    let f = ideal_file("# coordinate points\nring 0 x,y,z\ngens:\nx*y\ny*z\nz*x\n");
    let o = satbound(&["satdeg", path(&f), "--power", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("sat_degree 4"));
    assert!(stdout(&o).contains("gaps 3:1"));
}

#[test]
fn complete_intersection_cube_is_saturated() {
    let f = ideal_file("ring 2147483629 x,y,z,w\ngens:\nx^2\ny^2\n");
    let o = satbound(&["satdeg", path(&f), "--a", "3"]);
    assert_eq!(stdout(&o), "sat_degree 0\n");
}

#[test]
fn hyperplane_file() {
    let f = ideal_file("ring 0 x,y,z\ngens:\nx*(x+y+z)\ny*(x+y+z)\nz*(x+y+z)\n");
    let o = satbound(&["satdeg", path(&f)]);
    assert_eq!(stdout(&o).lines().next(), Some("sat_degree 2"));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let f = ideal_file("ring 0 x,y\ngens:\nx*y\nx^2 + y\n");
    let o = satbound(&["satdeg", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4, column 1"), "{err}");
    let f = ideal_file("ring 0 x,y\ngens:\nx*y\nx^2 + + y\n");
    let o = satbound(&["satdeg", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    assert_eq!(satbound(&["satdeg", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(satbound(&["verify", "thmA", "--example", "nope"]).status.code(), Some(2));
}

#[test]
fn budget_exit_3() {
    let o = satbound(&["--gb-steps", "2", "betti", "--example", "rnc", "--r", "4", "--a", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_thm_b_rnc() {
    let o = satbound(&["--json", "verify", "thmB", "--example", "rnc", "--r", "4", "--a", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v[0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["bound_value"], 4);
    assert_eq!(r["computed_value"], 4);
    assert_eq!(r["witness"]["sharp"], true);
}

#[test]
fn caviglia_is_not_applicable() {
    let o = satbound(&["verify", "thmA", "--example", "caviglia", "--d", "4", "--a", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not-applicable"));
}

#[test]
fn schur_hook_json() {
    let o = satbound(&["schur", "--hook", "a=2,k=2", "--degs", "2,2,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["max_degree"], 6);
    assert_eq!(v["rank"], 8);
    let o = satbound(&["schur", "--weyman", "a=2,i=2", "--example", "twisted_cubic"]);
    assert!(stdout(&o).contains("Λ^2 U_1"));
}

#[test]
fn betti_staircase() {
    let o = satbound(&["betti", "--example", "coord_points"]);
    assert_eq!(stdout(&o), "       0 1\ntotal: 3 2\n    2: 3 2\n");
}

#[test]
fn json_schema_of_reports() {
    let o = satbound(&["--json", "verify", "suite", "--example", "coord_points", "--a-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        for key in [
            "example",
            "a",
            "bound_kind",
            "bound_value",
            "computed_value",
            "pass",
            "status",
            "field",
            "elapsed_ms",
        ] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["example"]["name"], "coord_points");
        assert_eq!(r["field"]["kind"], "prime");
    }
    // reproducible apart from timings
    let again: Value = serde_json::from_str(&stdout(&satbound(&[
        "--json", "verify", "suite", "--example", "coord_points", "--a-max", "2",
    ])))
    .unwrap();
    let strip = |mut v: Value| {
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    assert_eq!(strip(v), strip(again));
}

#[test]
fn satdeg_json_fields() {
    let o = satbound(&["--json", "satdeg", "--example", "coord_points", "--power", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["input", "field", "power", "sat_degree", "witness_degrees", "gap_dims", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["sat_degree"], 4);
}

#[test]
fn field_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_satbound"))
        .args(["--json", "satdeg", "--example", "coord_points"])
        .env("SATBOUND_FIELD", "rat")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["field"]["kind"], "rationals");
}

#[test]
fn every_corpus_ideal_roundtrips() {
    for spec in default_corpus() {
        let ex = build_example(PrimeField::default(), &spec).unwrap();
        let text = IdealFile::from_ideal(&ex.ideal).to_string();
        let back = IdealFile::parse(&text).unwrap().to_ideal(PrimeField::default()).unwrap();
        assert_eq!(ex.ideal.generators(), back.generators(), "{spec}");
        let ex = build_example(RationalField, &spec).unwrap();
        let text = IdealFile::from_ideal(&ex.ideal).to_string();
        let back = IdealFile::parse(&text).unwrap().to_ideal(RationalField).unwrap();
        assert_eq!(ex.ideal.generators(), back.generators(), "{spec}");
    }
}

#[test]
fn export_then_reload() {
    let o = satbound(&["export", "--example", "twisted_cubic"]);
    let f = ideal_file(&stdout(&o));
    let o = satbound(&["reg", path(&f), "--a", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("arith_reg 4\n"), "{}", stdout(&o));
}
