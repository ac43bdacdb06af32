use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ramcert::certify::Certificate;
use ramcert::TwoColoring;

fn ramcert(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramcert"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramcert(dir.path(), &["construct", "w5w7", "-o", "w.rbc"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "w5w7: order 14, claimed bound 15\n"
    );
    let text = fs::read_to_string(dir.path().join("w.rbc")).unwrap();
    assert!(text.starts_with("rbc 14\n# family: w5w7\n"));
    let (coloring, _) = TwoColoring::parse_rbc(&text).unwrap();
    assert_eq!(
        TwoColoring::parse_rbc(&coloring.to_rbc()).unwrap().0,
        coloring
    );

    let out = ramcert(
        dir.path(),
        &["verify", "w.rbc", "--red", "wheel:5", "--blue", "wheel:7"],
    );
    assert_eq!(code(&out), 0);
    let cert =
        Certificate::from_json(&fs::read_to_string(dir.path().join("w.rbc.cert.json")).unwrap())
            .unwrap();
    assert!(cert.is_verified());
    assert_eq!(cert.construction.unwrap().spec, "w5w7");
    assert_eq!(cert.coloring_sha, coloring.sha256());

    let out = ramcert(
        dir.path(),
        &[
            "verify", "w.rbc", "--red", "wheel:5", "--blue", "wheel:5", "--cert", "r.json",
        ],
    );
    assert_eq!(code(&out), 1);
    let cert =
        Certificate::from_json(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    cert.recheck(&coloring).unwrap();
    assert_eq!(cert.counterexample.unwrap().color, ramcert::Color::Blue);
}

#[test]
fn fan_header_and_rejected_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramcert(dir.path(), &["construct", "fan:7,6", "-o", "f.rbc"]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(dir.path().join("f.rbc")).unwrap();
    // large range: 2n + 3m - 3 vertices
    assert!(text.starts_with("rbc 29\n"), "{}", &text[..20]);
    let out = ramcert(dir.path(), &["construct", "fan:9,4"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("3m/2 - 2"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.rbc"), "rbc 4\n0 9\n").unwrap();
    let out = ramcert(
        dir.path(),
        &["verify", "bad.rbc", "--red", "fan:2", "--blue", "fan:2"],
    );
    assert_eq!(code(&out), 2);
    let out = ramcert(
        dir.path(),
        &["verify", "missing.rbc", "--red", "fan:2", "--blue", "fan:2"],
    );
    assert_eq!(code(&out), 2);
    fs::write(dir.path().join("ok.rbc"), "rbc 3\n0 1\n").unwrap();
    let out = ramcert(
        dir.path(),
        &["verify", "ok.rbc", "--red", "fan:0", "--blue", "fan:2"],
    );
    assert_eq!(code(&out), 2);
    let out = ramcert(
        dir.path(),
        &["verify", "ok.rbc", "--red", "star:3", "--blue", "fan:2"],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn blowup_forms() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramcert(
        dir.path(),
        &[
            "blowup",
            "--witness",
            "k3k5",
            "--factor",
            "complete:2",
            "--as-red",
            "-o",
            "b.rbc",
        ],
    );
    assert_eq!(code(&out), 0);
    assert!(fs::read_to_string(dir.path().join("b.rbc"))
        .unwrap()
        .starts_with("rbc 26\n"));

    // K_{1,3}[K_2]: 8 vertices
    let star = ramcert::graph6::to_graph6(&ramcert::Graph::star(3));
    fs::write(dir.path().join("k1_3.g6"), format!("{star}\n")).unwrap();
    let out = ramcert(dir.path(), &["blowup", "k1_3.g6", "--factor", "complete:2"]);
    assert_eq!(code(&out), 0);
    let g = ramcert::graph6::from_graph6(String::from_utf8(out.stdout).unwrap().trim().as_bytes())
        .unwrap();
    assert_eq!(g.order(), 8);
    assert_eq!(g.edge_count(), 4 * 3 + 4);

    let out = ramcert(dir.path(), &["blowup", "k1_3.g6", "--factor", "complete:1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), star);

    let out = ramcert(dir.path(), &["blowup", "--witness", "k3k40"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no bundled witness"));
}

#[test]
fn table_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramcert(dir.path(), &["table", "w5w6"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let bounds = text
        .lines()
        .find(|l| l.trim_start().starts_with("bound"))
        .unwrap();
    assert!(bounds.trim_end().ends_with("147"));
    let out = ramcert(dir.path(), &["table", "w7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.trim_start().starts_with("bound") && l.trim_end().ends_with("97")));
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramcert(
        dir.path(),
        &[
            "search",
            "--order",
            "13",
            "--avoid",
            "clique:3",
            "--avoid-c",
            "clique:5",
            "--seed",
            "1",
            "-o",
            "w.g6",
        ],
    );
    assert_eq!(code(&out), 0);
    let g = ramcert::witnesses::load_graph6_file(&dir.path().join("w.g6")).unwrap();
    assert!(ramcert::certify::verify_ramsey_witness(
        &g,
        ramcert::PatternSpec::Clique(3),
        ramcert::PatternSpec::Clique(5)
    )
    .is_verified());
    assert!(dir.path().join("w.g6.cert.json").exists());

    let out = ramcert(
        dir.path(),
        &[
            "search",
            "--order",
            "14",
            "--avoid",
            "clique:3",
            "--avoid-c",
            "clique:5",
            "--budget",
            "5000",
        ],
    );
    assert_eq!(code(&out), 3);
    let out = ramcert(
        dir.path(),
        &[
            "search",
            "--order",
            "2",
            "--avoid",
            "clique:3",
            "--avoid-c",
            "clique:3",
        ],
    );
    assert_eq!(code(&out), 0);
    let out = ramcert(
        dir.path(),
        &[
            "search",
            "--order",
            "65",
            "--avoid",
            "clique:3",
            "--avoid-c",
            "clique:3",
        ],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let runs: Vec<(Vec<u8>, Vec<u8>, Vec<u8>)> = (0..2)
        .map(|_| {
            let dir = tempfile::tempdir().unwrap();
            let a = ramcert(dir.path(), &["construct", "kipas-3mod4:7", "-o", "k.rbc"]);
            let b = ramcert(
                dir.path(),
                &[
                    "search",
                    "--order",
                    "10",
                    "--avoid",
                    "k4me",
                    "--avoid-c",
                    "clique:4",
                    "--seed",
                    "4",
                ],
            );
            let rbc = fs::read(dir.path().join("k.rbc")).unwrap();
            (
                [a.stdout, b.stdout].concat(),
                rbc,
                ramcert(dir.path(), &["table", "all"]).stdout,
            )
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn oracle_check_random_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = ramcert(
        dir.path(),
        &["oracle-check", "--random", "30", "--max-order", "8"],
    );
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains(" 0 disagreements"));
    fs::write(
        dir.path().join("p.g6"),
        format!(
            "{}\n",
            ramcert::graph6::to_graph6(&ramcert::generators::petersen())
        ),
    )
    .unwrap();
    let out = ramcert(
        dir.path(),
        &["oracle-check", "p.g6", "--pattern", "cycle:9"],
    );
    assert_eq!(code(&out), 0);
}
