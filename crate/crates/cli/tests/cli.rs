use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn hombrax(args: &[&str], stdin: Option<&str>) -> Output {
    hombrax_env(args, stdin, &[])
}

fn hombrax_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hombrax"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.env_remove("HOMBRAX_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn hombrax");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let o = hombrax(args, stdin);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn construct_phi_is_a_four_by_four_operator() {
    let v = json(&ok(&["construct", "phi"], None));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["arity"], 2);
    let text = v.to_string();
    assert!(text.contains("1*l^1"), "{text}");
    assert!(text.contains("1*l^1*q^1"), "{text}");
}

#[test]
fn construct_bql_dim_three() {
    let v = json(&ok(&["construct", "bql", "--dim", "3"], None));
    assert_eq!(v["dim"], 3);
    assert_eq!(v["arity"], 2);
    assert_eq!(v["labels"].as_array().unwrap().len(), 3);
    assert_eq!(v["columns"].as_object().unwrap().len(), 9);
}

#[test]
fn construct_homlie_identity_twist() {
    let v = json(&ok(
        &[
            "construct",
            "homlie",
            "--algebra",
            "sl2",
            "--kind",
            "1",
            "--params",
            "0,1,0",
        ],
        None,
    ));
    assert_eq!(v["dim"], 3);
    assert_eq!(
        v["alpha"],
        serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    );
}

#[test]
fn verify_hybe_on_diagonal_twist_passes() {
    let pair = ok(&["construct", "phi", "--alpha", "a,0;0,d"], None);
    assert_eq!(ok(&["verify", "hybe"], Some(&pair)), "PASS hybe\n");
    let phi = ok(&["construct", "phi"], None);
    assert_eq!(
        ok(
            &["verify", "hybe", "--alpha", "a,0;0,d", "--twist"],
            Some(&phi)
        ),
        "PASS hybe\n"
    );
}

#[test]
fn verify_hybe_on_unipotent_alpha_fails_with_a_column() {
    let phi = ok(&["construct", "phi"], None);
    let o = hombrax(&["verify", "hybe", "--alpha", "1,1;0,1"], Some(&phi));
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.starts_with("FAIL hybe: "), "{s}");
    assert!(s.contains("v0⊗v1 ↦"), "{s}");
}

#[test]
fn verify_braid_on_sl2_extension() {
    for params in ["0,1,0", "1,2,3"] {
        let kind = if params == "0,1,0" { "1" } else { "3" };
        let pair = ok(
            &[
                "construct",
                "extension",
                "--algebra",
                "sl2",
                "--kind",
                kind,
                "--params",
                params,
            ],
            None,
        );
        assert_eq!(
            ok(&["verify", "braid", "--n", "4"], Some(&pair)),
            "PASS braid n=3\nPASS braid n=4\n"
        );
    }
}

#[test]
fn verify_hom_jacobi_on_every_family() {
    for args in [
        vec!["--algebra", "heisenberg", "--params", "1,2,3,-1,q,5"],
        vec![
            "--algebra",
            "sl2star",
            "--kind",
            "1",
            "--params",
            "1,2,3,0,1,2",
        ],
        vec!["--algebra", "sl2star", "--kind", "2", "--params", "2,1,-1"],
        vec!["--algebra", "sl2", "--kind", "2", "--params", "1/2,3,0"],
        vec!["--algebra", "sl2", "--kind", "0"],
    ] {
        let mut full = vec!["construct", "homlie"];
        full.extend(args);
        let alg = ok(&full, None);
        assert_eq!(
            ok(&["verify", "hom-jacobi"], Some(&alg)),
            "PASS multiplicativity\nPASS hom-jacobi\n"
        );
    }
}

#[test]
fn verify_reports_broken_hom_jacobi() {
    let mut alg = json(&ok(
        &[
            "construct",
            "homlie",
            "--algebra",
            "sl2",
            "--kind",
            "1",
            "--params",
            "0,1,0",
        ],
        None,
    ));
    alg["alpha"] = serde_json::json!([["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]);
    let o = hombrax(&["verify", "hom-jacobi"], Some(&alg.to_string()));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL multiplicativity"));
}

#[test]
fn classify_compatible_dim_two() {
    let s = ok(&["classify", "compatible", "--dim", "2"], None);
    assert!(s.starts_with("6 patterns in 3 shapes\n"), "{s}");
    assert_eq!(s.lines().filter(|l| l.starts_with("shape ")).count(), 3);
    assert_eq!(s.lines().filter(|l| l.starts_with("  {")).count(), 6);
}

#[test]
fn classify_compatible_with_oracle() {
    let s = ok(
        &[
            "classify",
            "compatible",
            "--dim",
            "2",
            "--field",
            "7",
            "--q",
            "3",
            "--lambda",
            "-2",
        ],
        None,
    );
    assert!(s.contains("PASS oracle F_7"), "{s}");
}

#[test]
fn classify_sl2_over_f5() {
    let s = ok(&["classify", "sl2", "--field", "5"], None);
    assert!(s.contains("121 morphisms"), "{s}");
    assert!(s.contains("unclassified: 0"), "{s}");
}

#[test]
fn classify_rejects_p_two() {
    for target in ["sl2", "heisenberg", "sl2star"] {
        let o = hombrax(&["classify", target, "--field", "2"], None);
        assert_eq!(o.status.code(), Some(2));
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(
        hombrax(
            &["classify", "compatible", "--dim", "2", "--field", "9"],
            None
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(
        hombrax(&["construct", "bql", "--dim", "0"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hombrax(&["verify", "hybe"], Some("{not json"))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hombrax(&["verify", "hybe"], Some("{\"x\": 1}"))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hombrax(&["braid", "word", "--perm", "1,1,2"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hombrax(&["frobnicate"], None).status.code(), Some(2));
    let phi = ok(&["construct", "phi"], None);
    assert_eq!(
        hombrax(&["verify", "hybe", "--alpha", "1,0,0;0,1,0"], Some(&phi))
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn out_option_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi.json");
    let o = hombrax(&["construct", "phi", "--out", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, ok(&["construct", "phi"], None));
    let report = dir.path().join("report.txt");
    let o = hombrax(
        &[
            "verify",
            "ybe",
            "--input",
            path.to_str().unwrap(),
            "--out",
            report.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&report).unwrap(), "PASS ybe\n");
}

#[test]
fn thread_variable() {
    let one = hombrax_env(
        &["classify", "compatible", "--dim", "2", "--field", "5"],
        None,
        &[("HOMBRAX_THREADS", "1")],
    );
    let four = hombrax_env(
        &["classify", "compatible", "--dim", "2", "--field", "5"],
        None,
        &[("HOMBRAX_THREADS", "4")],
    );
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let bad = hombrax_env(&["construct", "phi"], None, &[("HOMBRAX_THREADS", "zero")]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn construct_verify_round_trips() {
    let pairs = [
        ok(&["construct", "phi", "--alpha", "a,0;0,d"], None),
        ok(&["construct", "phi", "--alpha", "0,b;0,0"], None),
        ok(
            &[
                "construct",
                "bql",
                "--dim",
                "3",
                "--alpha",
                "x,0,0;0,y,0;0,0,z",
            ],
            None,
        ),
        ok(
            &[
                "construct",
                "extension",
                "--algebra",
                "heisenberg",
                "--params",
                "1,0,2,1,0,1",
            ],
            None,
        ),
        ok(
            &[
                "construct",
                "extension",
                "--algebra",
                "sl2star",
                "--kind",
                "2",
                "--params",
                "2,1,3",
            ],
            None,
        ),
    ];
    for p in &pairs {
        let s = ok(&["verify", "all", "--n", "3"], Some(p));
        assert!(s.lines().all(|l| l.starts_with("PASS ")), "{s}");
    }
    for g in ["graded", "trivial", "qt", "dqt"] {
        let yd = ok(
            &["construct", "yd", "--gallery", g, "--parities", "0,1,1"],
            None,
        );
        let s = ok(&["verify", "yd"], Some(&yd));
        assert!(s.contains("PASS yd\n") && s.contains("PASS ybe\n"), "{s}");
        let b = ok(&["yd", "braiding"], Some(&yd));
        assert_eq!(
            b,
            ok(
                &[
                    "construct",
                    "yd-braiding",
                    "--gallery",
                    g,
                    "--parities",
                    "0,1,1"
                ],
                None
            )
        );
        assert_eq!(ok(&["verify", "ybe"], Some(&b)), "PASS ybe\n");
    }
}

#[test]
fn yd_verify_with_alpha() {
    let yd = ok(&["construct", "yd", "--gallery", "graded"], None);
    let s = ok(&["yd", "verify", "--alpha", "1,0;0,t"], Some(&yd));
    assert!(
        s.contains("PASS colinearity") && s.contains("PASS hybe"),
        "{s}"
    );
    let o = hombrax(&["yd", "verify", "--alpha", "0,1;1,0"], Some(&yd));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL colinearity"));
}

#[test]
fn yd_verify_reports_broken_condition() {
    let mut yd = json(&ok(&["construct", "yd", "--gallery", "graded"], None));
    yd["action"] = serde_json::json!({"1,1": {"1": "1"}, "1,2": {"2": "1"}, "2,1": {"2": "1"}, "2,2": {"1": "1"}});
    let o = hombrax(&["yd", "verify"], Some(&yd.to_string()));
    assert_eq!(
        o.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("FAIL yd: "), "{}", stdout(&o));
}

#[test]
fn braid_subcommands() {
    assert_eq!(
        ok(&["braid", "word", "--perm", "(3,4,1,2)"], None),
        "length 4\ns2 s3 s1 s2\n"
    );
    let pair = ok(&["construct", "phi", "--alpha", "2,0;0,-1"], None);
    let power = json(&ok(&["braid", "power", "--n", "2"], Some(&pair)));
    assert_eq!(power["labels"].as_array().unwrap().len(), 4);
    let s = ok(&["verify", "hybe"], Some(&power.to_string()));
    assert_eq!(s, "PASS hybe\n");
    let e = json(&ok(&["braid", "eval", "--perm", "3,4,1,2"], Some(&pair)));
    assert_eq!(e["arity"], 4);
    let id = json(&ok(&["braid", "eval", "--perm", "1,2"], Some(&pair)));
    assert_eq!(id["arity"], 2);
    assert_eq!(
        hombrax(&["braid", "power", "--n", "0"], Some(&pair))
            .status
            .code(),
        Some(2)
    );
}
