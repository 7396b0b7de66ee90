use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use clawcolor::graph::{claw, co_petersen, complete, cycle, path, read_graph, write_graph, Format};
use clawcolor::{in_class, Coloring, Graph};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_clawcolor"));
    c.env_remove("CLAWCOLOR_BUDGET").env_remove("RUST_LOG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn save(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, write_graph(g, Format::Dimacs)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn colors_co_petersen_optimally() {
    let dir = TempDir::new().unwrap();
    let g = co_petersen();
    let file = save(&dir, "copetersen.col", &g);
    let o = run(&["color", s(&file), "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["command"], "color");
    assert_eq!(v["n"], 10);
    assert_eq!(v["chromatic_number"], 5);
    assert_eq!(v["verified"], true);
    assert_eq!(v["clique"].as_array().unwrap().len(), 4);
    assert!(v["timing_ms"].is_number());
    let colors: Vec<usize> = serde_json::from_value(v["coloring"].clone()).unwrap();
    assert!(Coloring::new(colors).is_proper(&g));

    let report = dir.path().join("report.json");
    std::fs::write(&report, &o.stdout).unwrap();
    let o = run(&["verify", s(&file), s(&report)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("5 colors"));
}

#[test]
fn json_keys_are_stable() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "k3.col", &complete(3));
    let text = stdout(&run(&["color", s(&file), "--json"]));
    let keys = [
        "command",
        "n",
        "m",
        "in_class",
        "chromatic_number",
        "coloring",
        "routes",
        "clique",
        "verified",
        "timing_ms",
    ];
    let at: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\":")).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert_eq!(text.matches("\":").count(), keys.len());
}

#[test]
fn recognize_reports_witness() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "claw.col", &claw());
    let o = run(&["recognize", s(&file), "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["in_class"], false);
    assert_eq!(v["witness"]["kind"], "claw");
    assert!(stderr(&o).contains("claw"));

    let file = save(&dir, "c5.col", &cycle(5));
    let o = run(&["recognize", s(&file)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "in class\n");
}

#[test]
fn color_refuses_non_members_unless_forced() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "c8.col", &cycle(8));
    let o = run(&["color", s(&file)]);
    assert_eq!(code(&o), 1);
    let o = run(&["color", s(&file), "--force", "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["chromatic_number"], 2);
    assert_eq!(v["in_class"], false);
    assert!(v["witness"].is_object());
}

#[test]
fn tampered_coloring_is_rejected_with_the_edge() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "k3.col", &complete(3));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "[0, 1, 1]").unwrap();
    let o = run(&["verify", s(&file), s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("edge 1-2"), "{}", stderr(&o));
    std::fs::write(&bad, "[0, 1]").unwrap();
    assert_eq!(code(&run(&["verify", s(&file), s(&bad)])), 2);
    std::fs::write(&bad, "{\"colors\": 3}").unwrap();
    assert_eq!(code(&run(&["verify", s(&file), s(&bad)])), 2);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let broken = dir.path().join("broken.col");
    std::fs::write(&broken, "p edge 3 1\ne 1 9\n").unwrap();
    let o = run(&["color", s(&broken)]);
    assert_eq!(code(&o), 2);
    assert!(!stderr(&o).is_empty());
    assert_eq!(code(&run(&["color", "/nonexistent/graph.col"])), 2);
    assert_eq!(code(&run(&["color", s(&broken), "--no-such-flag"])), 2);
    assert_eq!(code(&run(&["gen", "--n", "5", "--strategy", "bogus"])), 2);
}

#[test]
fn budget_from_flag_and_environment() {
    let dir = TempDir::new().unwrap();
    // The seven-hole route always runs the exact solver.
    let file = save(&dir, "c7.col", &cycle(7));
    let o = run(&["color", s(&file), "--budget", "0"]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    let o = bin()
        .args(["color", s(&file)])
        .env("CLAWCOLOR_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let o = bin()
        .args(["color", s(&file), "--budget", "100000"])
        .env("CLAWCOLOR_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).starts_with("chromatic number 3"));
}

#[test]
fn chromatic_index_reports_class() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "c5.col", &cycle(5));
    let o = run(&["chromatic-index", s(&file), "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(
        (v["chi_prime"].as_u64(), v["delta"].as_u64(), v["class"].as_u64()),
        (Some(3), Some(2), Some(2))
    );
    assert_eq!(v["edge_colors"].as_array().unwrap().len(), 5);

    let file = save(&dir, "c8.col", &cycle(8));
    let o = run(&["chromatic-index", s(&file)]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("matching"));
}

#[test]
fn atoms_of_a_path() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "p5.col", &path(5));
    let o = run(&["atoms", s(&file), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["atoms"].as_array().unwrap().len(), 4);
    let o = run(&["atoms", s(&file)]);
    assert!(stdout(&o).starts_with("4 atoms\ncutset"));
}

#[test]
fn structure_of_co_petersen() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "cp.col", &co_petersen());
    let o = run(&["structure", s(&file), "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["structure"]["hole"], "c5");
    assert_eq!(v["structure"]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn gen_is_deterministic_and_in_class() {
    let a = run(&[
        "gen",
        "--n",
        "9",
        "--max-n",
        "11",
        "--seed",
        "5",
        "--strategy",
        "constructive_c5",
        "--count",
        "3",
    ]);
    let b = run(&[
        "gen",
        "--n",
        "9",
        "--max-n",
        "11",
        "--seed",
        "5",
        "--strategy",
        "constructive_c5",
        "--count",
        "3",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let graphs: Vec<&str> = text.split("c clawcolor gen").skip(1).collect();
    assert_eq!(graphs.len(), 3);
    for body in graphs {
        let g = read_graph(&format!("c{body}"), Format::Dimacs).unwrap();
        assert!((9..=11).contains(&g.n()));
        assert!(in_class(&g).is_ok());
    }

    let dir = TempDir::new().unwrap();
    let o = run(&[
        "gen",
        "--n",
        "6",
        "--strategy",
        "random-filtered",
        "--count",
        "2",
        "--out",
        s(dir.path()),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn oracle_values() {
    let dir = TempDir::new().unwrap();
    let file = save(&dir, "cp.col", &co_petersen());
    assert_eq!(stdout(&run(&["oracle", "chi", s(&file)])), "5\n");
    let file = save(&dir, "k4.col", &complete(4));
    assert_eq!(stdout(&run(&["oracle", "chi-prime", s(&file)])), "3\n");
    let file = save(&dir, "big.col", &Graph::new(15));
    assert_eq!(code(&run(&["oracle", "chi", s(&file)])), 3);
}
