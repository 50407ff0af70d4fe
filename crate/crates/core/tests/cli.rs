use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use momentlab::cli::{
    render_classify, render_gen, render_representation, render_support, Format, SCHEMA,
};
use momentlab::hankel::classify;
use momentlab::measures::{density_catalog, verify_representation};
use momentlab::rational::int;
use momentlab::seqcore::{catalan_like, make_spec, CatalogId, Sequence};

fn momentlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_momentlab"))
        .args(args)
        .env_remove("MOMENTLAB_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn gen_matches_library_bytes() {
    let out = momentlab(&["gen", "--name", "catalan", "--n", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let id = CatalogId::Catalan;
    assert_eq!(
        stdout(&out),
        render_gen(id.name(), &id.spec(), 20, Format::Json)
    );

    let out = momentlab(&[
        "gen", "--p", "1", "--s", "2", "--q", "1", "--t", "1", "--n", "20", "--format", "csv",
    ]);
    let spec = make_spec(int(1), int(2), int(1), int(1)).unwrap();
    assert_eq!(
        stdout(&out),
        render_gen("y(1,2;1,1)", &spec, 20, Format::Csv)
    );
}

#[test]
fn gen_delannoy_json() {
    let out = momentlab(&["gen", "--name", "delannoy", "--n", "5"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    let values: Vec<&str> = v["result"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(values, ["1/1", "3/1", "13/1", "63/1", "321/1", "1683/1"]);
}

#[test]
fn support_exit_codes() {
    let out = momentlab(&["support", "--p", "1", "--s", "2", "--q", "1", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let spec = make_spec(int(1), int(2), int(1), int(1)).unwrap();
    let (passed, text) = render_support(&spec, 200, Format::Json).unwrap();
    assert!(passed);
    assert_eq!(stdout(&out), text);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["result"]["certificate"]["stieltjes_flag"], true);

    let out = momentlab(&[
        "support", "--p", "3", "--s", "3", "--q", "4", "--t", "2", "--check", "200", "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("interval: [3-2*sqrt(2), 3+2*sqrt(2)]"));

    // hypotheses hold, but the chain sequence at the lower end does not
    let out = momentlab(&["support", "--name", "schroder_little"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stdout.is_empty());
}

#[test]
fn classify_interleaved_fails_stieltjes() {
    let path = scratch("interleaved.json");
    std::fs::write(&path, "[1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42]").unwrap();
    let out = momentlab(&["classify", "--input", path.to_str().unwrap(), "--m", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["hamburger_ok_up_to"], 3);
    assert_eq!(v["result"]["stieltjes_ok_up_to"], 0);

    let seq =
        Sequence::from_json_str(&std::fs::read_to_string(&path).unwrap(), "interleaved").unwrap();
    let (passed, text) = render_classify(&classify(&seq, 3, None).unwrap(), Format::Json);
    assert!(!passed);
    assert_eq!(stdout(&out), text);
}

#[test]
fn classify_with_sqrt_interval() {
    let out = momentlab(&[
        "classify",
        "--name",
        "delannoy",
        "--m",
        "4",
        "--interval",
        "s-2sqrt(t),s+2sqrt(t)",
        "--s",
        "3",
        "--t",
        "2",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = momentlab(&[
        "classify",
        "--name",
        "catalan",
        "--m",
        "4",
        "--interval",
        "0,4",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("order,hankel,shifted,localizing,delta\n0,positive_definite"));
}

#[test]
fn verify_uses_precision_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_momentlab"))
        .args(["verify", "--name", "motzkin", "--n", "12"])
        .env("MOMENTLAB_PRECISION", "1e-9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let (_, m) = momentlab::catalog_sequence("motzkin", 12).unwrap();
    let report = verify_representation(&m, &density_catalog("motzkin").unwrap(), 12, 1e-9).unwrap();
    let (_, text) = render_representation("verify", &report, Format::Json);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), text);

    let bad = Command::new(env!("CARGO_BIN_EXE_momentlab"))
        .args(["verify", "--name", "motzkin"])
        .env("MOMENTLAB_PRECISION", "tight")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_writes_plot_and_output() {
    let plot = scratch("catalan_plot.csv");
    let report = scratch("catalan_report.json");
    let out = momentlab(&[
        "verify",
        "--name",
        "catalan",
        "--plot",
        plot.to_str().unwrap(),
        "--plot-points",
        "10",
        "--output",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&plot).unwrap().lines().count(), 11);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn transforms() {
    let out = momentlab(&[
        "transform",
        "--name",
        "catalan",
        "--n",
        "10",
        "--sub",
        "d=2,l=0",
        "--format",
        "text",
    ]);
    assert_eq!(stdout(&out), "catalan[2k+0]: 1, 2, 14, 132, 1430, 16796\n");
    let out = momentlab(&[
        "transform",
        "--name",
        "catalan",
        "--n",
        "10",
        "--sub",
        "d=2,l=0",
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["transform"]["support"]["upper"]["exact"], "16");
    let out = momentlab(&[
        "transform",
        "--name",
        "catalan",
        "--n",
        "6",
        "--lincomb",
        "4,-1@1",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "2\n3\n6\n14\n36\n");
    let out = momentlab(&["transform", "--name", "catalan", "--lincomb", "1,-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ops_and_option_errors() {
    let out = momentlab(&["ops", "--name", "catalan", "--deg", "6", "--zeros"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["polynomials"][2]["display"], "x^2 - 3x + 1");
    assert_eq!(
        v["result"]["polynomials"][6]["zeros"]
            .as_array()
            .unwrap()
            .len(),
        6
    );
    let spec = CatalogId::Catalan.spec();
    assert_eq!(catalan_like(&spec, 3).values().len(), 4);

    assert_eq!(
        momentlab(&["gen", "--name", "unknown"]).status.code(),
        Some(2)
    );
    assert_eq!(momentlab(&["gen", "--p", "1"]).status.code(), Some(2));
    assert_eq!(momentlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        momentlab(&["classify", "--name", "catalan", "--interval", "1e-3,4"])
            .status
            .code(),
        Some(2)
    );
}
