// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TELEPORT: &str = "OPENQASM 2.0;
qreg q[3];
u(pi/2,pi/2,pi/2) q[1];
cx q[1],q[2];
cx q[0],q[1];
cx q[1],q[2];
cx q[0],q[1];
cx q[1],q[0];
cx q[0],q[1];
cx q[2],q[1];
";

// Same depth (8), different gates and placements.
const OTHER: &str = "OPENQASM 2.0;
qreg q[3];
x q[0]; barrier q; cx q[2],q[1]; barrier q; sx q[0]; barrier q; rz(0.25) q[2];
barrier q; cx q[0],q[1]; barrier q; x q[2]; barrier q; u(1,2,3) q[1]; barrier q; cx q[1],q[2];
";

const P3: &str = r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#;

fn vgmask(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vgmask"))
        .args(args)
        .output()
        .expect("binary runs")
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let p = self.path(name);
        fs::write(&p, contents).unwrap();
        p
    }

    fn path(&self, name: &str) -> String {
        self.0.path().join(name).to_string_lossy().into_owned()
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr_json(o: &Output) -> serde_json::Value {
    let text = String::from_utf8(o.stderr.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "{text}");
    serde_json::from_str(&text).unwrap()
}

#[test]
fn mask_total_reports_bound() {
    let d = Dir::new();
    let c = d.file("c.qasm", TELEPORT);
    let t = d.file("p3.json", P3);
    let out = d.path("m.qasm");
    let rep = d.path("r.json");
    let o = vgmask(&[
        "mask",
        "--mode",
        "total",
        "--topology",
        &t,
        "--in",
        &c,
        "--out",
        &out,
        "--report",
        &rep,
    ]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(v["p"], 3);
    assert_eq!(v["bound"], 2 * 12 * 3 * 8);
    assert!(v["output_depth"].as_u64().unwrap() <= 576);
    assert_eq!(stdout(&o).trim(), fs::read_to_string(&rep).unwrap().trim());
}

#[test]
fn line_circuit_json_total_mode() {
    let d = Dir::new();
    let c = d.file(
        "c.json",
        &vgmask::circuit_to_json(&vgmask::fixtures::two_step_line_circuit()),
    );
    let t = d.file("p4.json", r#"{"n": 4, "edges": [[0,1],[1,2],[2,3]]}"#);
    let out = d.path("m.json");
    let o = vgmask(&[
        "mask",
        "--mode",
        "total",
        "--topology",
        &t,
        "--in",
        &c,
        "--out",
        &out,
    ]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound"], 144);
    assert!(v["output_depth"].as_u64().unwrap() <= 144);
    let o = vgmask(&["verify", &c, &out]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
}

#[test]
fn verify_against_own_mask() {
    let d = Dir::new();
    let c = d.file("c.qasm", TELEPORT);
    let out = d.path("m.json");
    assert_eq!(
        vgmask(&["mask", "--mode", "gates", "--in", &c, "--out", &out])
            .status
            .code(),
        Some(0)
    );
    let o = vgmask(&["verify", &c, &out]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["phase_distance"].as_f64().unwrap() <= 1e-8);
    assert_eq!(v["equal"], true);
}

#[test]
fn verify_unequal_exits_one() {
    let d = Dir::new();
    let a = d.file("a.qasm", TELEPORT);
    let b = d.file("b.qasm", OTHER);
    let o = vgmask(&["verify", &a, &b, "--tol", "1e-8"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap()["equal"],
        false
    );
}

#[test]
fn leak_views_match_after_total_masking() {
    let d = Dir::new();
    let t = d.file("p3.json", P3);
    let mut views = Vec::new();
    for (name, text) in [("a.qasm", TELEPORT), ("b.qasm", OTHER)] {
        let c = d.file(name, text);
        let out = d.path(&format!("{name}.masked.qasm"));
        let o = vgmask(&[
            "mask",
            "--mode",
            "total",
            "--topology",
            &t,
            "--in",
            &c,
            "--out",
            &out,
        ]);
        assert_eq!(o.status.code(), Some(0), "{o:?}");
        let o = vgmask(&["leak", "--view", "r-positional", "--in", &out]);
        assert_eq!(o.status.code(), Some(0));
        views.push(o.stdout);
    }
    assert!(!views[0].is_empty());
    assert_eq!(views[0], views[1]);

    let a = d.file("a2.qasm", TELEPORT);
    let b = d.file("b2.qasm", OTHER);
    let va = vgmask(&["leak", "--view", "total", "--in", &a]).stdout;
    let vb = vgmask(&["leak", "--view", "total", "--in", &b]).stdout;
    assert_ne!(va, vb);
}

#[test]
fn ycircuit_prints_depth_and_bound() {
    let d = Dir::new();
    let t = d.file("p4.json", r#"{"n": 4, "edges": [[0,1],[1,2],[2,3]]}"#);
    let out = d.path("y.qasm");
    let o = vgmask(&["ycircuit", "--topology", &t, "--out", &out]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["p"], 3);
    assert_eq!(v["bound"], 4);
    let y = vgmask::parse_qasm(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(y.depth(), 3);
    assert_eq!(y.gate_count(), 7);
}

#[test]
fn stats_counts() {
    let d = Dir::new();
    let c = d.file("c.qasm", TELEPORT);
    let o = vgmask(&["stats", "--in", &c]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["depth"], 8);
    assert_eq!(v["gate_counts"]["cx"], 7);
    assert_eq!(v["gate_counts"]["u"], 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["bogus"],
        vec![],
        vec!["mask", "--mode", "sideways", "--in", "a", "--out", "b"],
        vec!["leak", "--view", "everything", "--in", "a"],
    ] {
        let o = vgmask(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr_json(&o)["error"], "usage");
    }
    let d = Dir::new();
    let c = d.file("c.qasm", TELEPORT);
    let o = vgmask(&[
        "mask",
        "--mode",
        "total",
        "--in",
        &c,
        "--out",
        &d.path("m.qasm"),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!Path::new(&d.path("m.qasm")).exists());
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(vgmask(&["--help"]).status.code(), Some(0));
    assert_eq!(vgmask(&["--version"]).status.code(), Some(0));
    assert_eq!(vgmask(&["mask", "--help"]).status.code(), Some(0));
}

#[test]
fn input_errors_exit_three() {
    let d = Dir::new();
    let bad = d.file("bad.qasm", "OPENQASM 2.0;\nqreg q[1];\nrz(0.5");
    let o = vgmask(&["stats", "--in", &bad]);
    assert_eq!(o.status.code(), Some(3));
    let e = stderr_json(&o);
    assert_eq!(e["error"], "syntax");
    assert!(e["message"].as_str().unwrap().contains("line 3"));

    let o = vgmask(&["stats", "--in", &d.path("missing.qasm")]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr_json(&o)["error"], "io");

    let schema = d.file("s.json", r#"{"steps": []}"#);
    let e = stderr_json(&vgmask(&["stats", "--in", &schema]));
    assert_eq!(e["error"], "schema");

    let c = d.file("c.qasm", TELEPORT);
    let far = d.file("far.json", r#"{"n": 3, "edges": [[0, 1]]}"#);
    let o = vgmask(&[
        "mask",
        "--mode",
        "total",
        "--topology",
        &far,
        "--in",
        &c,
        "--out",
        &d.path("m.qasm"),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr_json(&o)["error"], "label_not_in_topology");

    let binary = PathBuf::from(d.path("bin.qasm"));
    fs::write(&binary, [0xff, 0xfe, 0x00]).unwrap();
    let o = vgmask(&["stats", "--in", binary.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));

    let opaque = d.file(
        "o.json",
        &vgmask::circuit_to_json(&vgmask::fixtures::teleportation_high_level()),
    );
    let o = vgmask(&[
        "ycircuit",
        "--topology",
        &opaque,
        "--out",
        &d.path("y.qasm"),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_format_follows_extension() {
    let d = Dir::new();
    let c = d.file("c.qasm", "OPENQASM 2.0;\nqreg q[1];\nx q[0];\n");
    let q = d.path("m.qasm");
    let j = d.path("m.json");
    vgmask(&["mask", "--mode", "gates", "--in", &c, "--out", &q]);
    vgmask(&["mask", "--mode", "gates", "--in", &c, "--out", &j]);
    assert!(fs::read_to_string(&q).unwrap().starts_with("OPENQASM 2.0;"));
    assert!(fs::read_to_string(&j)
        .unwrap()
        .trim_start()
        .starts_with('{'));
    let a = vgmask(&["leak", "--view", "total", "--in", &q]).stdout;
    let b = vgmask(&["leak", "--view", "total", "--in", &j]).stdout;
    assert_eq!(a, b);
}
