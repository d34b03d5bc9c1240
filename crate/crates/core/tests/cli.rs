use std::path::PathBuf;
use std::process::{Command, Output};

use prv_core::*;

fn prv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prv")).args(args).output().expect("run prv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(o: &Output) -> usize {
    stdout(o).lines().count() - 1
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn components_tables() {
    let o = prv(&["components", "--pair", "diag:C3", "--mu", "2,1,0", "--nu", "0,3,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(rows(&o), 26);

    let o = prv(&["components", "--pair", "g2-spin7", "--nuhat", "2,2,1", "--theorems", "prv"]);
    assert_eq!(rows(&o), 4);
    for w in ["(3,2)", "(1,3)", "(1,2)", "(0,2)"] {
        assert!(stdout(&o).contains(w), "{w}");
    }

    let o = prv(&["components", "--pair", "diag:A1", "--mu", "0", "--nu", "0", "--format", "tsv"]);
    assert_eq!(rows(&o), 1);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("(0)\t"));
}

#[test]
fn epsilon_basis_output() {
    let o = prv(&["components", "--pair", "diag:C3", "--mu", "2,0,4", "--nu", "2,0,2", "--theorems", "prv", "--epsilon-basis"]);
    // (4,0,6) = 4 varpi_1 + 6 varpi_3 = (10,6,6)
    assert!(stdout(&o).contains("(10,6,6)"));
}

#[test]
fn json_round_trips() {
    let args = ["components", "--pair", "diag:C3", "--mu", "2,1,0", "--nu", "0,3,1", "--format", "json"];
    let parsed: Vec<TaggedComponent> = serde_json::from_str(&stdout(&prv(&args))).unwrap();
    let table = prv(&["components", "--pair", "diag:C3", "--mu", "2,1,0", "--nu", "0,3,1"]);
    assert_eq!(parsed.len(), rows(&table));
    let pair = SphericalPair::builtin("diag:C3").unwrap();
    let input = Input::Tensor(Weight::from([2, 1, 0]), Weight::from([0, 3, 1]));
    assert_eq!(parsed, all_components(&pair, &input, &Options::default()).unwrap());
}

#[test]
fn output_is_deterministic() {
    let args = ["figure", "--pair", "diag:C3", "--mu", "2,0,4", "--nu", "2,0,2", "--format", "json"];
    assert_eq!(prv(&args).stdout, prv(&args).stdout);
}

#[test]
fn verify_reports() {
    let o = prv(&["verify", "--pair", "diag:A1", "--mu", "1", "--nu", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("= 2 / 2"));

    let o = prv(&["verify", "--pair", "g2-spin7", "--nuhat", "2,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("violations   none"));
    assert!(out.lines().any(|l| l.starts_with("control") && l.contains("(6,0)") && l.ends_with("absent")));

    let o = prv(&["verify", "--pair", "diag:C3", "--mu", "2,0,4", "--nu", "2,0,2", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("theorem\tcount\tnew\nPRV\t14\t14\nMAIN_SEGMENT\t31\t17\n"));

    let o = prv(&["verify", "--pair", "diag:C3", "--mu", "2,1,0", "--nu", "0,3,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tally"], "12 +7 +0 +7 +0 = 26 / 32");
}

#[test]
fn figure_data() {
    let o = prv(&["figure", "--pair", "diag:C3", "--mu", "2,0,4", "--nu", "2,0,2", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let header: Vec<&str> = out.lines().next().unwrap().split('\t').collect();
    assert_eq!(header, ["w1", "w2", "w3", "e1", "e2", "e3", "tags", "multiplicity"]);
    let body: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert_eq!(body.len(), 83);
    assert!(body.iter().all(|r| r[7].parse::<u64>().unwrap() >= 1));
    let tagged = body.iter().filter(|r| r[6] != "-").count();
    let verify = prv(&["verify", "--pair", "diag:C3", "--mu", "2,0,4", "--nu", "2,0,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(tagged as u64, v["generated"].as_u64().unwrap());

    let o = prv(&["figure", "--pair", "diag:A1", "--mu", "1", "--nu", "1", "--format", "tsv"]);
    assert_eq!(rows(&o), 2);
}

#[test]
fn g2_svg() {
    let o = prv(&["figure", "--pair", "g2-spin7", "--nuhat", "2,2,1", "--format", "svg"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="segment""#).count(), 3);
    assert_eq!(svg.matches(r#"class="prv""#).count(), 4);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["figure", "--pair", "diag:C3", "--mu", "1,0,0", "--nu", "1,0,0", "--format", "svg"],
        &["components", "--pair", "diag:C3", "--mu", "2,1,-1", "--nu", "0,0,0"],
        &["components", "--pair", "diag:C3"],
        &["components", "--pair", "nowhere", "--nuhat", "1"],
        &["components", "--pair", "g2-spin7", "--mu", "1,0", "--nu", "1,0"],
        &["components", "--pair", "g2-spin7", "--nuhat", "1,0"],
        &["components", "--theorems", "bogus", "--nuhat", "1,0,0"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = prv(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn pair_files() {
    let o = prv(&["pairs", "list"]);
    assert!(stdout(&o).contains("g2-spin7"));

    let good = scratch_file("good.json", r#"{"sub_type":"G2","amb_type":"B3","rho":[[1,0,1],[0,1,0]]}"#);
    let o = prv(&["pairs", "validate", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("coroot-relation"));

    let o = prv(&["components", "--pair", good.to_str().unwrap(), "--nuhat", "2,2,1", "--theorems", "prv"]);
    assert_eq!(rows(&o), 4);

    let bad = scratch_file("bad.json", r#"{"sub_type":"G2","amb_type":"B3","rho":[[0,1,1],[1,0,0]]}"#);
    let o = prv(&["pairs", "validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL") && l.contains("coroot-relation")));

    let broken = scratch_file("broken.json", "{\"sub_type\": 3}");
    assert_eq!(prv(&["pairs", "validate", broken.to_str().unwrap()]).status.code(), Some(2));
}
