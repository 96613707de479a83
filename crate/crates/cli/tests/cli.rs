use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn wiener(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wiener"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn wiener_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wiener"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn gen_file(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).display().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let out = wiener(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

#[test]
fn poly_of_a_path() {
    let out = wiener_stdin(&["compute", "--stdin", "--index", "poly"], P4);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["poly"], serde_json::json!([0, 3, 2, 1]));
    assert_eq!(v["method"], "linear");
    assert_eq!(v["n"], 4);
    assert_eq!(v["m"], 3);
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn methods_agree_on_a_path() {
    for method in ["oracle", "linear", "auto"] {
        let out = wiener_stdin(&["compute", "--stdin", "--index", "wk", "--k", "2", "--method", method], P4);
        assert_eq!(json(&out)["wk"], 2, "{method}");
    }
    let out = wiener_stdin(&["compute", "--stdin", "--index", "wiener", "--method", "cut"], P4);
    assert_eq!(json(&out)["wiener"], 10);
}

#[test]
fn coronene_by_cuts() {
    let dir = tempfile::tempdir().unwrap();
    let h2 = gen_file(dir.path(), "h2.txt", &["--family", "coronene", "--k", "2"]);
    let out = wiener(&["compute", "--input", &h2, "--index", "twk", "--k", "3", "--method", "cut"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["twk"], 174);
    assert_eq!(v["method"], "cut");

    let auto = json(&wiener(&["compute", "--input", &h2, "--index", "twk", "--k", "3"]));
    assert_eq!(auto["method"], "cut");
    let brute = json(&wiener(&["compute", "--input", &h2, "--index", "twk", "--k", "3", "--method", "oracle"]));
    assert_eq!(brute["twk"], 174);
}

#[test]
fn odd_cycle_is_not_a_partial_cube() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen_file(dir.path(), "c5.txt", &["--family", "cycle", "--n", "5"]);
    let out = wiener(&["compute", "--input", &c5, "--method", "cut"]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotPartialCube"));

    let out = wiener(&["compute", "--input", &c5, "--method", "linear", "--index", "wk", "--k", "2"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotATree"));

    let auto = json(&wiener(&["compute", "--input", &c5, "--index", "twk", "--k", "2"]));
    assert_eq!(auto["method"], "oracle");
    assert_eq!(auto["twk"], 15);
}

#[test]
fn input_and_connectivity_errors() {
    assert_eq!(code(&wiener_stdin(&["compute", "--stdin"], "4 2\n0 1\n")), 2);
    assert_eq!(code(&wiener_stdin(&["compute", "--stdin"], "x y\n")), 2);
    assert_eq!(code(&wiener_stdin(&["compute", "--stdin"], "3 1\n0 5\n")), 2);
    assert_eq!(code(&wiener_stdin(&["compute", "--stdin"], "4 2\n0 1\n2 3\n")), 4);
    assert_eq!(code(&wiener_stdin(&["compute", "--stdin", "--index", "wk"], P4)), 2);
    assert_eq!(code(&wiener(&["compute", "--input", "/nonexistent/graph.txt"])), 2);
    assert_eq!(code(&wiener(&["compute"])), 2);
}

#[test]
fn gen_caterpillar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.txt");
    let path_s = path.display().to_string();
    let out = wiener(&["gen", "--family", "caterpillar", "--n", "20", "--kdeg", "4", "--p", "5", "--out", &path_s]);
    assert_eq!(code(&out), 0);
    let summary = json(&out);
    assert_eq!(summary["m"], 19);
    assert_eq!(summary["predicted"][0], serde_json::json!({"index": "twk", "k": 4, "value": 38}));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("20 19"));
    assert_eq!(text.lines().count(), 20);

    let computed = json(&wiener(&["compute", "--input", &path_s, "--index", "twk", "--k", "4"]));
    assert_eq!(computed["twk"], 38);
}

#[test]
fn gen_coronene_and_trivial_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h3.txt").display().to_string();
    let summary = json(&wiener(&["gen", "--family", "coronene", "--k", "3", "--out", &path]));
    assert_eq!(summary["n"], 54);
    assert_eq!(summary["predicted"][0]["value"], 2838);

    let out = wiener(&["gen", "--family", "path", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1 0\n");
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(summary["m"], 0);
}

#[test]
fn gen_other_families() {
    let cases: [(&[&str], u64, u64); 5] = [
        (&["--family", "star", "--n", "6"], 6, 5),
        (&["--family", "double-broom", "--k", "3", "--a1", "4", "--a2", "4"], 10, 9),
        (&["--family", "starlike-broom", "--k", "4", "--groups", "3,3,2"], 12, 11),
        (&["--family", "hypercube", "--d", "3"], 8, 12),
        (&["--family", "cycle", "--n", "8"], 8, 8),
    ];
    for (args, n, m) in cases {
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        let out = wiener(&full);
        assert_eq!(code(&out), 0, "{args:?}");
        let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(summary["n"], n, "{args:?}");
        assert_eq!(summary["m"], m, "{args:?}");
        // predictions agree with the oracle on the written graph
        let edge_list = String::from_utf8(out.stdout).unwrap();
        for p in summary["predicted"].as_array().unwrap() {
            let index = p["index"].as_str().unwrap();
            let mut compute = vec!["compute", "--stdin", "--method", "oracle", "--index", index];
            let k = p.get("k").map(|k| k.to_string());
            if let Some(k) = &k {
                compute.extend_from_slice(&["--k", k]);
            }
            let got = json(&wiener_stdin(&compute, &edge_list));
            assert_eq!(got[index], p["value"], "{args:?} {index}");
        }
    }
}

#[test]
fn gen_infeasible() {
    for args in [
        &["gen", "--family", "caterpillar", "--n", "10", "--kdeg", "4", "--p", "5"][..],
        &["gen", "--family", "double-broom", "--k", "2", "--a1", "1", "--a2", "1"],
        &["gen", "--family", "starlike-broom", "--k", "5", "--groups", "1,1"],
        &["gen", "--family", "cycle", "--n", "2"],
        &["gen", "--family", "path"],
        &["gen", "--family", "coronene", "--k", "0"],
    ] {
        assert_eq!(code(&wiener(args)), 2, "{args:?}");
    }
}

#[test]
fn verify_max_tw3() {
    let out = wiener(&["verify", "--claim", "max-tw3", "--n", "8"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"][0]["observed_max"], 4);
    assert_eq!(v["reports"][0]["unique"], true);
}

#[test]
fn verify_failure_exits_one() {
    // three trees on five vertices have no pair of degree-3 vertices
    let out = wiener(&["verify", "--claim", "max-tw3", "--n", "5"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["pass"], false);
    assert_eq!(v["checks"][0]["pass"], false);
}

#[test]
fn verify_linear_vs_oracle() {
    let out = wiener(&["verify", "--claim", "linear-vs-oracle", "--trials", "1000", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["params"]["seed"], 7);
}

#[test]
fn verify_coronene_and_friends() {
    for args in [
        &["verify", "--claim", "coronene", "--k", "5"][..],
        &["verify", "--claim", "eq1", "--n", "30"],
        &["verify", "--claim", "max-wk", "--n", "10"],
        &["verify", "--claim", "degree-count", "--n", "9"],
        &["verify", "--claim", "wiener-bounds", "--n", "9"],
        &["verify", "--claim", "cut-vs-oracle", "--trials", "100", "--n", "25"],
    ] {
        let out = wiener(args);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
        let v = json(&out);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    }
    assert_eq!(code(&wiener(&["verify", "--claim", "coronene"])), 2);
    assert_eq!(code(&wiener(&["verify", "--claim", "max-wk", "--n", "17"])), 2);
}

#[test]
fn output_is_reproducible() {
    let runs = [
        &["verify", "--claim", "cut-vs-oracle", "--trials", "50", "--n", "20", "--seed", "3", "--no-timing"][..],
        &["verify", "--claim", "max-wk", "--n", "9", "--no-timing"],
        &["enumerate", "--n", "8", "--list"],
    ];
    for args in runs {
        let a = wiener(args);
        let b = wiener(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = wiener_stdin(&["compute", "--stdin", "--no-timing"], P4);
    let b = wiener_stdin(&["compute", "--stdin", "--no-timing"], P4);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("elapsed_ms").is_none());
}

#[test]
fn enumerate_counts() {
    let v = json(&wiener(&["enumerate", "--n", "10"]));
    assert_eq!(v["count"], 106);
    assert!(v.get("trees").is_none());
    let listed = json(&wiener(&["enumerate", "--n", "6", "--list"]));
    assert_eq!(listed["trees"].as_array().unwrap().len(), 6);
    assert_eq!(code(&wiener(&["enumerate", "--n", "17"])), 2);
}

#[test]
fn pretty_is_a_table() {
    let out = wiener(&["verify", "--claim", "coronene", "--k", "2", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] formula_equals_cut"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
