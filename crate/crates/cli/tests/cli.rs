use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn latdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latdom"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_latdom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_two_rows() {
    let out = latdom(&["construct", "eds-p2", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["lattice"], "rect:2x5");
    assert_eq!(v["set"].as_array().unwrap().len(), 3);
    assert_eq!(v["report"]["is_eds"], true);
}

#[test]
fn construct_three_rows() {
    let v = json(&latdom(&["construct", "p3", "--n", "12"]));
    assert_eq!(v["report"]["influence"], 32);
}

#[test]
fn knight_board() {
    let out = latdom(&["construct", "knight", "--n", "9", "--render", "ascii"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<char>> = text
        .lines()
        .map(|l| l.split(' ').map(|g| g.chars().next().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 9);
    let voids: Vec<(usize, usize)> = (0..9)
        .flat_map(|i| (0..9).map(move |j| (i, j)))
        .filter(|&(i, j)| rows[i][j] == 'o')
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    assert_eq!(voids, vec![(1, 5), (5, 1), (5, 9), (9, 5)]);
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, n) in [
        ("eds-p2", "7"),
        ("p2-even", "8"),
        ("p3", "10"),
        ("square-small", "6"),
        ("knight", "12"),
    ] {
        let path = dir.path().join(format!("{name}.json"));
        let built = latdom(&["construct", name, "--n", n, "--out", path.to_str().unwrap()]);
        assert_eq!(code(&built), 0, "{name}");
        let checked = latdom(&["verify", path.to_str().unwrap()]);
        assert_eq!(checked.stdout, built.stdout, "{name}");
        let expect = if name == "eds-p2" { 0 } else { 1 };
        assert_eq!(code(&checked), expect, "{name}");
    }
}

#[test]
fn verify_exit_codes() {
    let four = r#"{"lattice": "rect:4x4", "set": [[1,2],[2,4],[3,1],[4,3]]}"#;
    assert_eq!(code(&with_stdin(&["verify", "-"], four)), 0);

    let three = with_stdin(
        &["verify", "-"],
        r#"{"lattice": "rect:3x3", "set": [[1,1],[3,2]]}"#,
    );
    assert_eq!(code(&three), 1);
    assert_eq!(
        json(&three)["report"]["voids"],
        serde_json::json!([[1, 3], [2, 3]])
    );

    assert_eq!(
        code(&with_stdin(
            &["verify", "-", "--lattice", "rect:3x3"],
            "[[1,1],[2,2]]"
        )),
        3
    );
    assert_eq!(code(&with_stdin(&["verify", "-"], "not json")), 2);
    assert_eq!(code(&with_stdin(&["verify", "-"], "[[1,1]]")), 2);
    assert_eq!(
        code(&with_stdin(
            &["verify", "-", "--lattice", "rect:3x3"],
            "[[4,4]]"
        )),
        2
    );
    assert_eq!(
        code(&with_stdin(&["verify", "-", "--lattice", "rect:2x2"], four)),
        2
    );
    assert_eq!(code(&latdom(&["verify", "/no/such/file"])), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&latdom(&["construct", "nonsense", "--n", "3"])), 2);
    assert_eq!(code(&latdom(&["construct", "eds-p2", "--n", "4"])), 2);
    assert_eq!(code(&latdom(&["construct", "knight"])), 2);
    assert_eq!(code(&latdom(&["solve", "square:3x3"])), 2);
    assert_eq!(code(&latdom(&["solve", "tri:4", "--method", "dp"])), 2);
    assert_eq!(
        code(&latdom(&["solve", "rect:8x8", "--method", "brute"])),
        2
    );
    assert_eq!(
        code(&latdom(&[
            "construct",
            "p4",
            "--render",
            "ascii",
            "--void",
            "@"
        ])),
        2
    );
    assert_eq!(code(&latdom(&["--help"])), 0);
}

#[test]
fn solve_is_deterministic() {
    let a = latdom(&["solve", "rect:5x5"]);
    let b = latdom(&["solve", "rect:5x5"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["F"], 23);
    assert!(v.get("elapsed_ms").is_none());
    let timed = json(&latdom(&["solve", "rect:5x5", "--timing"]));
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn solve_methods_agree() {
    for lat in ["rect:4x6", "rect:6x4", "rect:1x9"] {
        let dp = json(&latdom(&["solve", lat, "--method", "dp"]));
        let bf = json(&latdom(&["solve", lat, "--method", "brute"]));
        assert_eq!(dp["F"], bf["F"], "{lat}");
        let witness =
            serde_json::to_string(&serde_json::json!({"lattice": lat, "set": dp["witness"]}))
                .unwrap();
        let audit = with_stdin(&["verify", "-"], &witness);
        assert_eq!(json(&audit)["report"]["influence"], dp["F"]);
    }
    let tall = json(&latdom(&["solve", "rect:20x3"]));
    assert_eq!(tall["F"], 54);
    assert_eq!(json(&latdom(&["solve", "hex-torus:4x4"]))["F"], 16);
}

#[test]
fn conjecture_rows() {
    let out = latdom(&["conjecture", "--from", "7", "--to", "10"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["status"] == "match"));
}

#[test]
fn table_rows() {
    let out = latdom(&["table", "--from", "7", "--to", "13"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let voids: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["voids"].as_u64().unwrap())
        .collect();
    assert_eq!(voids, vec![5, 6, 4, 8, 8, 9, 10]);
    let wide = json(&latdom(&[
        "table",
        "--from",
        "12",
        "--to",
        "13",
        "--max-width",
        "12",
    ]));
    assert_eq!(wide[1]["status"], "skipped");
    assert!(wide[1]["voids"].is_null());
    assert_eq!(code(&latdom(&["table", "--from", "5", "--to", "8"])), 2);
}

#[test]
fn motifs() {
    let hex = json(&latdom(&["motif", "--lattice", "hex"]));
    assert_eq!(hex["perfect"], true);
    assert_eq!(hex["density"], 0.25);
    for (lat, density) in [("rect", 0.2), ("tri", 1.0 / 7.0)] {
        for c in ["0", "3"] {
            let v = json(&latdom(&["motif", "--lattice", lat, "--residue", c]));
            assert_eq!(v["perfect"], true);
            assert!((v["density"].as_f64().unwrap() - density).abs() < 1e-12);
        }
    }
    let win = json(&latdom(&[
        "motif",
        "--lattice",
        "rect",
        "--window",
        "11x11",
    ]));
    assert_eq!(win["window"]["interior_voids"], 0);
    assert_eq!(win["window"]["report"]["is_two_packing"], true);
    let tri = json(&latdom(&["motif", "--lattice", "tri", "--window", "9x9"]));
    assert_eq!(tri["window"]["interior_voids"], 0);
    assert_eq!(
        code(&latdom(&["motif", "--lattice", "tri", "--window", "4x5"])),
        2
    );
    let ascii = latdom(&["motif", "--lattice", "rect", "--format", "ascii"]);
    assert_eq!(
        String::from_utf8(ascii.stdout)
            .unwrap()
            .matches('@')
            .count(),
        5
    );
}

#[test]
fn augment_three_by_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.json");
    latdom(&[
        "construct",
        "p3",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    let out = latdom(&["augment", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["report"]["vertex_count"], 11);
    assert_eq!(v["report"]["is_eds"], true);
    assert_eq!(v["pendants"].as_array().unwrap().len(), 2);
    assert_eq!(
        code(&with_stdin(
            &["augment", "-", "--lattice", "rect:3x3"],
            "[[1,1],[1,2]]"
        )),
        2
    );
}

#[test]
fn render_formats() {
    let set = r#"{"lattice": "rect:3x3", "set": [[1,1],[3,2]]}"#;
    let ascii = with_stdin(&["render", "-"], set);
    assert_eq!(
        String::from_utf8(ascii.stdout).unwrap(),
        "@ . o\n. . o\n. @ .\n"
    );
    let custom = with_stdin(&["render", "-", "--dominator", "#", "--void", "_"], set);
    assert_eq!(
        String::from_utf8(custom.stdout).unwrap(),
        "# . _\n. . _\n. # .\n"
    );
    let svg = with_stdin(&["render", "-", "--format", "svg"], set);
    let text = String::from_utf8(svg.stdout).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 9);
}
