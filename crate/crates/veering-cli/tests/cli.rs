use std::path::PathBuf;
use std::process::{Command, Output};

fn veering(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veering")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("veering-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn fixtures_path() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/census.txt").to_string()
}

#[test]
fn taut_and_veering_of_figure_eight() {
    let o = veering(&["taut", "cPcbbbiht_12"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "u^2 - 3*u + 1\n");
    let o = veering(&["veering", "cPcbbbiht_12", "--side", "lower"]);
    assert_eq!(stdout(&o), "1 - 4*u^-1 + 4*u^-2 - u^-3\n");
    let o = veering(&["veering", "cPcbbbiht_12", "--side", "lower", "--normalize"]);
    assert_eq!(stdout(&o), "u^3 - 4*u^2 + 4*u - 1\n");
    let o = veering(&["--format", "pairs", "taut", "cPcbbbiht_12"]);
    assert_eq!(stdout(&o), "[[[2],1],[[1],-3],[[0],1]]\n");
    let both = stdout(&veering(&["veering", "cPcbbbiht_12"]));
    assert!(both.starts_with("lower ") && both.contains("\nupper "));
}

#[test]
fn validate_reports_basic_data() {
    let o = veering(&["validate", "eLMkbcddddedde_2100"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "tetrahedra 4\ncusps 2\nrank 2\nveering yes\n");
    let text = std::fs::read_to_string(fixtures_path()).unwrap();
    for sig in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        assert!(veering(&["validate", sig]).status.success(), "{sig}");
    }
}

#[test]
fn exit_codes() {
    let o = veering(&["taut", "notavalidsig_99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
    let o = veering(&["validate", "cPcbbbiht_01"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().last(), Some("veering no"));
    assert_eq!(veering(&["taut", "cPcbbbiht_00"]).status.code(), Some(1));
    assert_eq!(veering(&["teich", "cPcbbbiht_12", "--weights", "/nonexistent/w"]).status.code(), Some(2));
    assert_eq!(veering(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn structured_text_input() {
    let path = scratch("fig8.txt");
    std::fs::write(
        &path,
        "tetrahedra 2\n1:3120 1:1230 1:1302 1:0321\n0:2031 0:0321 0:3012 0:3120\nangles 12\n",
    )
    .unwrap();
    let o = veering(&["taut", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "u^2 - 3*u + 1\n");
}

#[test]
fn taut_with_cycles_and_teich() {
    let cycles = scratch("cycles.txt");
    std::fs::write(&cycles, "# one cycle\n7 7 0 0 -4 3 -7 0\n").unwrap();
    let o = veering(&["taut", "eLMkbcddddedde_2100", "--cycles", cycles.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "u^14 - u^8 - u^7 - u^6 + 1\n");

    let weights = scratch("weights.txt");
    std::fs::write(&weights, "1 1 1 1 1 1 1 1\n").unwrap();
    let w = weights.to_str().unwrap();
    let filled = veering(&["teich", "eLMkbcddddedde_2100", "--weights", w, "--fill", "0"]);
    assert_eq!(stdout(&filled), "u^2 - 3*u + 1\n");
    let unfilled = veering(&["teich", "eLMkbcddddedde_2100", "--weights", w]);
    assert_eq!(stdout(&unfilled), stdout(&veering(&["taut", "eLMkbcddddedde_2100"])));
    let bad = veering(&["teich", "eLMkbcddddedde_2100", "--weights", w, "--fill", "5"]);
    assert_eq!(bad.status.code(), Some(1));
    std::fs::write(&weights, "1 0 0 0 0 0 0 0\n").unwrap();
    assert_eq!(veering(&["teich", "eLMkbcddddedde_2100", "--weights", w]).status.code(), Some(1));
}

#[test]
fn flowgraph_output() {
    let dot = scratch("fig8.dot");
    let o = veering(&["flowgraph", "hLMzMkbcdefggghhhqxqkc_1221002", "--compare", "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("lower flow graph: 7 vertices, 21 arrows"));
    assert_eq!(out.matches(" => ").count(), 14);
    assert!(out.ends_with("\nNON-ISOMORPHIC\n"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("digraph").count(), 2);
}

#[test]
fn scan_writes_csv() {
    let out = scratch("scan.csv");
    let o = veering(&["scan", &fixtures_path(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "17 entries, 3 flagged, 0 failed\n");
    let mut reader = csv::Reader::from_path(&out).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[0], "entry");
    assert_eq!(header.len(), 10);
    assert_eq!(reader.records().count(), 17);
}
