use std::process::Command;

use clap::Parser;
use k3walls_cli::report::{DecomposeReport, PathReport, WallTableReport};
use k3walls_cli::{render, run, Cli};

fn body(args: &[&str]) -> String {
    let argv = std::iter::once("k3walls").chain(args.iter().copied());
    run(&Cli::try_parse_from(argv).unwrap()).unwrap().body
}

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_k3walls"));
    cmd.env_remove("K3WALLS_FORMAT");
    cmd
}

#[test]
fn json_round_trips_to_identical_text() {
    for args in [
        &["walls", "--n", "10"][..],
        &["walls", "--n", "2"],
        &["transport", "--n", "10", "--m", "3"],
        &["walls", "--vector", "0,2,-1", "--candidates", "--ymin", "1"],
    ] {
        let json = body(&[&["--format", "json"], args].concat());
        let report: WallTableReport = serde_json::from_str(&json).unwrap();
        assert_eq!(render::walls_text(&report), body(&[&["--format", "text"], args].concat()), "{args:?}");
    }
    let json = body(&["--format", "json", "path", "--n", "10", "--x0", "-3"]);
    let report: PathReport = serde_json::from_str(&json).unwrap();
    assert_eq!(render::path_text(&report, 6), body(&["path", "--n", "10", "--x0", "-3"]));
    for gamma in ["2/7", "4/13"] {
        let json = body(&["--format", "json", "decompose", "--n", "10", "--gamma", gamma]);
        let report: DecomposeReport = serde_json::from_str(&json).unwrap();
        assert_eq!(render::decompose_text(&report), body(&["decompose", "--n", "10", "--gamma", gamma]));
    }
}

#[test]
fn output_is_deterministic() {
    for format in ["text", "csv", "json"] {
        let args = ["--format", format, "walls", "--vector", "0,3,-1", "--candidates", "--ymin", "1"];
        assert_eq!(body(&args), body(&args));
    }
    let fig = ["figure", "--n", "10", "--xrange", "-10.5,0.5"];
    assert_eq!(body(&fig), body(&fig));
}

#[test]
fn json_fractions_are_reduced() {
    let json: serde_json::Value =
        serde_json::from_str(&body(&["--format", "json", "walls", "--n", "10"])).unwrap();
    let walls = json["walls"].as_array().unwrap();
    assert_eq!(walls.len(), 12);
    assert_eq!(json["surface"]["d"], 1);
    assert_eq!(json["vector"], serde_json::json!([1, 0, -9]));
    assert_eq!(walls[6]["gamma"], serde_json::json!({"num": 4, "den": 13}));
    assert_eq!(walls[6]["curve"]["center"], serde_json::json!({"num": -13, "den": 4}));
    assert_eq!(walls[6]["type"], "flop");
    assert!(walls[11]["curve"].is_null());
}

#[test]
fn csv_has_header_and_lf_endings() {
    let csv = body(&["--format", "csv", "walls", "--n", "3"]);
    assert!(!csv.contains('\r'));
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "gamma,r,c,s,a_sq,pairing,kind,center,radius_sq,x0,type");
    assert_eq!(lines[2], "1/2,1,-1,2,-2,0,semicircle,-2,2,,divisorial");
    let path = body(&["--format", "csv", "path", "--n", "10", "--x0", "-3"]);
    assert_eq!(path.lines().nth(6), Some("4/13,1,-2,4,3/2"));
}

#[test]
fn spec_examples() {
    let n3 = body(&["walls", "--n", "3"]);
    assert!(n3.contains("x^2 + 4x + y^2 = -2  divisorial"));
    let empty = body(&["path", "--n", "10", "--x0", "0"]);
    assert!(empty.contains("no walls crossed"));
    let torsion = body(&["--format", "json", "path", "--vector", "0,3,-1", "--x0", "-1/6"]);
    let report: PathReport = serde_json::from_str(&torsion).unwrap();
    assert_eq!(report.hits.len(), 4);
    let first = body(&["decompose", "--n", "10", "--gamma", "2/11"]);
    assert!(first.contains("fibers P^8; stratum 12 of 20"));
    let z2 = body(&["decompose", "--vector", "0,3,-1", "--gamma", "14/43"]);
    assert_eq!(z2.matches("decomposition ").count(), 1);
    assert!(z2.contains("stratum 12 of 20"));
    // Phi_0 is the reflection in O = (1,0,1): (1,0,-3) + 2·(1,0,1)
    let reflected = body(&["--format", "json", "transport", "--n", "4", "--m", "0"]);
    let report: WallTableReport = serde_json::from_str(&reflected).unwrap();
    assert_eq!(report.vector, [3, 0, -1]);
    let slopes: Vec<_> = report.walls.iter().map(|w| w.gamma.unwrap()).map(|g| (g.num, g.den)).collect();
    assert_eq!(slopes, [(0, 1), (2, 5), (1, 2)]);
}

#[test]
fn figures() {
    let count = |svg: &str| svg.matches(" A ").count();
    assert_eq!(count(&body(&["figure", "--n", "10", "--x0", "-3"])), 6);
    assert_eq!(count(&body(&["figure", "--vector", "0,3,-1", "--xrange", "-2,1.5"])), 4);
    let axes = body(&["figure", "--vector", "0,1,0", "--ymin", "1"]);
    assert!(axes.starts_with("<?xml") && axes.contains("version=\"1.1\"") && axes.ends_with("</svg>\n"));
    assert!(!axes.contains("<path"));
    assert!(axes.contains("stroke-dasharray"));
    let legend = body(&["figure", "--n", "10", "--x0", "-3"]);
    assert!(legend.contains("Γ = 2/11") && legend.contains("Γ = 4/13"));
    assert!(!legend.contains("Γ = 6/19"));
}

#[test]
fn unknown_gamma_lists_the_walls() {
    let argv = ["k3walls", "decompose", "--n", "3", "--gamma", "1/7"];
    let err = run(&Cli::try_parse_from(argv).unwrap()).unwrap_err();
    assert_eq!(err.to_string(), "no wall with gamma = 1/7; available: 0, 1/2");
}

#[test]
fn exit_codes() {
    let status = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(status(&["walls", "--n", "10"]), Some(0));
    assert_eq!(status(&["path", "--n", "10", "--x0", "0"]), Some(0));
    assert_eq!(status(&["walls", "--vector", "1,2"]), Some(2));
    assert_eq!(status(&["walls", "--vector", "0,0,0"]), Some(2));
    assert_eq!(status(&["walls", "--n", "10", "--vector", "1,0,-9"]), Some(2));
    assert_eq!(status(&["--precision", "0", "walls", "--n", "2"]), Some(2));
    assert_eq!(status(&["--format", "svg", "walls", "--n", "2"]), Some(2));
    assert_eq!(status(&["decompose", "--n", "10", "--gamma", "1/7"]), Some(2));
    assert_eq!(status(&["walls", "--n", "10", "--r-max", "1"]), Some(0));
    assert_eq!(status(&["--strict-complete", "walls", "--n", "10", "--r-max", "1"]), Some(3));
    assert_eq!(status(&["--strict-complete", "walls", "--n", "10"]), Some(0));
}

#[test]
fn format_from_environment() {
    let out = bin().env("K3WALLS_FORMAT", "csv").args(["walls", "--n", "2"]).output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("gamma,r,c,s"));
    let out =
        bin().env("K3WALLS_FORMAT", "csv").args(["--format", "text", "walls", "--n", "2"]).output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("v = (1,0,-1)"));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("k3walls-test-{}.txt", std::process::id()));
    let out = bin().args(["--output", path.to_str().unwrap(), "walls", "--n", "4"]).output().unwrap();
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), body(&["walls", "--n", "4"]));
    std::fs::remove_file(path).unwrap();
}
