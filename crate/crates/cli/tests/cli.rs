//! End-to-end checks of the binary: exit codes, exact output of the
//! documented examples, config-file precedence and manifest
//! determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ordcalc"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn eval_prints_the_heisenberg_expansion() {
    let out = run(&["eval", "[X1,D(X1)]", "--table", "free"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "J(X1'X1' - 2X1'X1 + X1X1)");
}

#[test]
fn eval_normalizes_under_flat_table() {
    let out = run(&["eval", "P1X1", "--table", "flat"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "X1P1 - 1");
}

#[test]
fn eval_reports_parse_errors() {
    let out = run(&["eval", "Q9", "--table", "free"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown atom family"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["eval", "X1", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_bianchi_passes() {
    let out = run(&["verify", "bianchi", "--dim", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS bianchi"));
}

#[test]
fn verify_unknown_suite_fails() {
    let out = run(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn chaos_example_emits_y2() {
    let dir = tempdir("chaos");
    let out = run(&[
        "simulate", "chaos", "--k", "1", "--y0", "1", "--y1", "3", "--steps", "1", "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("y2 = -2"));
    let csv = std::fs::read_to_string(dir.join("chaos.csv")).unwrap();
    assert_eq!(csv, "t,y\n0,1\n1,3\n2,-2\n");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempdir("config");
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, "k=2\ny0=2\ny1=5\nsteps=1\n").unwrap();
    // y2 = (k - y1 y0)/(y1 - 2 y0) = (2 - 10)/(5 - 4) = -8
    let out = run(&[
        "simulate", "chaos", "--config", cfg.to_str().unwrap(), "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("y2 = -8"));
    // explicit flag beats the config value: k = 1 gives (1 - 10)/1 = -9
    let out = run(&[
        "simulate", "chaos", "--config", cfg.to_str().unwrap(), "--k", "1", "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(stdout(&out).contains("y2 = -9"));
}

#[test]
fn manifests_are_deterministic_per_seed() {
    let dir_a = tempdir("det_a");
    let dir_b = tempdir("det_b");
    for dir in [&dir_a, &dir_b] {
        let out = run(&[
            "simulate", "brownian", "--walkers", "200", "--steps", "50", "--seed", "99",
            "--out", dir.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let digests = |dir: &Path| -> Vec<(String, String)> {
        let manifest: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(dir.join("brownian_manifest.json")).unwrap(),
        )
        .unwrap();
        manifest["outputs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|o| {
                (
                    o["file"].as_str().unwrap().to_string(),
                    o["sha256"].as_str().unwrap().to_string(),
                )
            })
            .collect()
    };
    assert_eq!(digests(&dir_a), digests(&dir_b));

    // a different seed changes the series
    let dir_c = tempdir("det_c");
    let out = run(&[
        "simulate", "brownian", "--walkers", "200", "--steps", "50", "--seed", "100",
        "--out", dir_c.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_ne!(digests(&dir_a), digests(&dir_c));
}

#[test]
fn checkerboard_csv_has_the_documented_columns() {
    let dir = tempdir("cb");
    let out = run(&[
        "simulate", "checkerboard", "--horizon", "6", "--out", dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.join("checkerboard.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "a,b,re_l,im_l,re_r,im_r");
    // origin row: right-moving source
    assert_eq!(lines.next().unwrap(), "0,0,0,0,1,0");
}

#[test]
fn plot_flag_writes_svg() {
    let dir = tempdir("plot");
    let out = run(&[
        "simulate", "qwalk", "--grid", "64", "--steps", "10", "--out",
        dir.to_str().unwrap(), "--plot",
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(dir.join("qwalk_density.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
}

#[test]
fn env_var_sets_default_output_dir() {
    let dir = tempdir("envvar");
    let out = bin()
        .args(["simulate", "signs", "--steps", "8", "--seed", "3"])
        .env("ORDCALC_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("signs.csv").exists());
    assert!(dir.join("signs_manifest.json").exists());
}

#[test]
fn decompose_writes_component_report() {
    let dir = tempdir("decompose");
    let matrix = dir.join("m.csv");
    std::fs::write(&matrix, "0,1/2,1\n-1,3,0\n2,2,5\n").unwrap();
    let out = run(&[
        "decompose",
        matrix.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("decompose.json")).unwrap())
            .unwrap();
    assert_eq!(report["n"], 3);
    assert_eq!(report["components"].as_array().unwrap().len(), 6);
}

#[test]
fn penrose_accepts_network_files() {
    let dir = tempdir("network");
    let net = dir.join("theta.net");
    std::fs::write(
        &net,
        "colors 3\nvertex u penrose\nvertex v penrose\nedge e0 u v\nedge e1 u v\n\
         edge e2 u v\norder u e0 e1 e2\norder v e0 e2 e1\n",
    )
    .unwrap();
    let out = run(&[
        "simulate", "penrose", "--network", net.to_str().unwrap(), "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("theta: Z = 6"));
}

fn tempdir(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "ordcalc_cli_{tag}_{}",
        std::process::id()
    ));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
