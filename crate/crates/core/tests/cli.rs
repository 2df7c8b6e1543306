use std::path::PathBuf;
use std::process::{Command, Output};

fn radiogrid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radiogrid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn label_output_matches_goldens() {
    for (a, b) in [("6", "5"), ("6", "6"), ("5", "7")] {
        for (fmt, ext) in [("json", "json"), ("ascii", "txt")] {
            let o = radiogrid(&["label", "--a", a, "--b", b, "--format", fmt]);
            assert!(o.status.success());
            let want = std::fs::read_to_string(golden(&format!("label_{a}x{b}.{ext}"))).unwrap();
            assert_eq!(stdout(&o), want, "{a}x{b} {fmt}");
        }
    }
}

#[test]
fn goldens_verify() {
    for name in ["label_6x5.json", "label_6x6.json", "label_5x7.json"] {
        let o = radiogrid(&["verify", golden(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).starts_with("VALID span="));
    }
}

#[test]
fn rn_and_tplus() {
    let o = radiogrid(&["rn", "--a", "3", "--b", "3"]);
    assert!(stdout(&o).contains("rn=17\n"));
    let o = radiogrid(&["rn", "--a", "6", "--b", "5"]);
    assert!(stdout(&o).contains("rn=129\n"));
    let o = radiogrid(&["tplus", "--a", "5", "--b", "7"]);
    assert!(stdout(&o).contains("t_plus=203\n"));

    let o = radiogrid(&["rn", "--a", "2", "--b", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ladders"));
}

#[test]
fn verify_exit_codes() {
    let text = stdout(&radiogrid(&["label", "--a", "4", "--b", "3"]));

    let broken = text.replacen("\"label\": 0", "\"label\": 1", 1);
    assert_ne!(broken, text);
    let p = scratch("broken.json");
    std::fs::write(&p, broken).unwrap();
    let o = radiogrid(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID"));

    let p = scratch("truncated.json");
    std::fs::write(&p, &text[..text.len() / 3]).unwrap();
    assert_eq!(
        radiogrid(&["verify", p.to_str().unwrap()]).status.code(),
        Some(2)
    );

    assert_eq!(
        radiogrid(&["verify", "/no/such/file.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn label_to_file_and_dot() {
    let p = scratch("g33.json");
    let o = radiogrid(&[
        "label",
        "--a",
        "3",
        "--b",
        "3",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert!(std::fs::read_to_string(&p)
        .unwrap()
        .contains("\"span\": 17"));

    let dot = stdout(&radiogrid(&[
        "label", "--a", "3", "--b", "4", "--format", "dot",
    ]));
    assert!(dot.starts_with("graph grid_3_4 {"));

    assert_eq!(
        radiogrid(&["label", "--a", "3", "--b", "3", "--format", "svg"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn analyze_reports_bumps() {
    let out = stdout(&radiogrid(&["analyze", "--a", "6", "--b", "6"]));
    assert!(out.contains("bumps=2\n"));
    assert!(out.contains("bump step=2 magnitude=1 offset=2\n"));
    assert!(out.contains("bump step=34 magnitude=1 offset=2\n"));
    assert!(out.contains("sum_f=174 span=174 rn=174\n"));
}

#[test]
fn oracle_guard_and_force() {
    let o = radiogrid(&["oracle", "rn", "--a", "3", "--b", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rn_oracle=17\nrn_formula=17\nverdict=MATCH\n"));

    let o = radiogrid(&["oracle", "tplus", "--a", "4", "--b", "4"]);
    assert!(stdout(&o).contains("t_plus_oracle=61\n"));

    let o = radiogrid(&["oracle", "rn", "--a", "6", "--b", "6"]);
    assert_eq!(o.status.code(), Some(3));

    let w = scratch("witness.json");
    let o = radiogrid(&[
        "oracle",
        "rn",
        "--a",
        "4",
        "--b",
        "4",
        "--force",
        "--out",
        w.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rn_oracle=46\n"));
    assert_eq!(
        radiogrid(&["verify", w.to_str().unwrap()]).status.code(),
        Some(0)
    );

    let o = radiogrid(&[
        "oracle",
        "rn",
        "--a",
        "4",
        "--b",
        "4",
        "--force",
        "--max-nodes",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("best span found"));
}

#[test]
fn output_is_deterministic() {
    let a = radiogrid(&["analyze", "--a", "7", "--b", "9"]);
    let b = radiogrid(&["analyze", "--a", "7", "--b", "9"]);
    assert_eq!(a.stdout, b.stdout);
}
