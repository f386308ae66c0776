//! Command-line behaviour: golden outputs for the documented commands, exit
//! codes, and pipes through the real binary.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use entangle::cli::{run, EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_VIOLATED};
use entangle::io::parse_graph;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run_in_crate(args: &[&str], stdin: &str) -> (i32, String, String) {
    let fixed: Vec<String> = args
        .iter()
        .map(|a| {
            if a.starts_with("fixtures/") {
                crate_dir().join(a).display().to_string()
            } else {
                a.to_string()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("entangle".to_string()).chain(fixed),
        &mut stdin.as_bytes(),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Documented commands and the golden file holding their output. Set
/// `UPDATE_GOLDEN=1` to rewrite the files.
const GOLDEN: &[(&str, &[&str])] = &[
    ("d14_entanglement", &["entanglement", "fixtures/d14.edges"]),
    ("fig1_decompose", &["decompose", "fixtures/fig1.edges"]),
    ("fig1_decompose_json", &["decompose", "fixtures/fig1.edges", "--json", "-"]),
    ("fig1_connectivity", &["connectivity", "fixtures/fig1.edges"]),
    ("fig1_cyclicity", &["cyclicity", "fixtures/fig1.edges", "--witnesses", "3"]),
    ("fig1_blocks", &["blocks", "fixtures/fig1.edges"]),
    ("fig1_check_ent3", &["check-ent3", "fixtures/fig1.edges"]),
    ("d14_spread", &["spread", "fixtures/d14.edges"]),
    ("domino_2", &["generate", "domino", "2"]),
    ("molecule_make", &["molecule", "make", "k=3", "b=2", "h=2"]),
];

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in GOLDEN {
        let (code, out, err) = run_in_crate(args, "");
        assert_eq!(code, EXIT_OK, "{name}: {err}");
        let path = crate_dir().join("tests/golden").join(format!("{name}.out"));
        if update {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, want, "{name} differs from {}", path.display());
    }
}

#[test]
fn documented_headlines() {
    let (_, out, _) = run_in_crate(&["entanglement", "fixtures/d14.edges"], "");
    assert_eq!(out.lines().next(), Some("entanglement: 4"));
    let (_, out, _) = run_in_crate(&["decompose", "fixtures/fig1.edges", "--json", "-"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["torsos"], 6);
    assert_eq!(v["schema"], entangle::cli::SCHEMA_VERSION);
    // the figure's edges give two hinges; see the decisions ledger
    assert_eq!(v["hinges"].as_array().unwrap().len(), 2);
    assert_eq!(v["recomposes"], true);
}

fn binary(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_entangle"))
        .args(args)
        .current_dir(crate_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn molecule_pipe_classifies_k33() {
    let (code, k33) = binary(&["generate", "molecule", "k=3", "b=0", "h=3"], "");
    assert_eq!(code, 0);
    let (code, out) = binary(&["molecule", "classify", "-"], &k33);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "ambiguousIII");
}

#[test]
fn generators_compose_with_every_reader() {
    for (family, expect) in [("cycle", "2"), ("clique", "4"), ("domino", "2")] {
        let (_, g) = binary(&["generate", family, "5"], "");
        let (code, out) = binary(&["connectivity", "-"], &g);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), format!("connectivity: {expect}"), "{family}");
    }
    let (_, chain) = binary(&["generate", "twosum-chain", "K4,C5,K4"], "");
    let (code, out) = binary(&["decompose", "-"], &chain);
    assert_eq!(code, 0);
    assert!(out.starts_with("torsos: 3\n"), "{out}");
    let (_, r) = binary(&["generate", "random2conn", "9", "--seed", "3"], "");
    assert_eq!(binary(&["decompose", "-"], &r).0, 0);
}

#[test]
fn structured_outputs_round_trip() {
    let (_, json, _) = run_in_crate(&["convert", "fixtures/fig1.edges", "--to", "json"], "");
    let (_, edges, _) = run_in_crate(&["convert", "-", "--to", "edges"], &json);
    let original = std::fs::read_to_string(crate_dir().join("fixtures/fig1.edges")).unwrap();
    assert_eq!(parse_graph(&edges).unwrap(), parse_graph(&original).unwrap());
    let (_, dot, _) = run_in_crate(&["convert", "fixtures/fig1.edges", "--to", "dot"], "");
    assert_eq!(dot.matches(" -- ").count(), 11);
}

#[test]
fn exit_statuses() {
    // disconnected input is an input error for decompose
    let (code, _, err) = run_in_crate(&["decompose", "-"], "4\n0 1\n2 3\n");
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("\"error\":\"input\""), "{err}");
    let (code, _, _) = run_in_crate(&["--budget", "5", "entanglement", "fixtures/fig1.edges"], "");
    assert_eq!(code, EXIT_BUDGET);
    let (code, _, _) = run_in_crate(&["entanglement", "fixtures/d14.edges", "--max-k", "2"], "");
    assert_eq!(code, EXIT_BUDGET);
    let (code, _, _) = run_in_crate(&["connectivity", "fixtures/missing.edges"], "");
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn strict_check_reports_violation() {
    // triangle on an edge of K_{3,4} joining a base vertex to an apex
    let (_, k34, _) = run_in_crate(&["generate", "molecule", "k=3", "b=0", "h=4"], "");
    let g = parse_graph(&k34).unwrap();
    let sum = entangle::analysis::triangle_on_edge(&g, (0, 3)).unwrap();
    let text = entangle::io::emit_edge_list(&sum);
    let (code, out, _) = run_in_crate(&["check-ent3", "-", "--strict"], &text);
    assert_eq!(code, EXIT_VIOLATED);
    assert!(out.starts_with("verdict: violated"));
    let (code, _, _) = run_in_crate(&["check-ent3", "-"], &text);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn certificate_file_lists_both_budgets() {
    let dir = std::env::temp_dir().join(format!("entangle-cert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert = dir.join("c5.json");
    let c5 = "5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
    let (code, out, _) = run_in_crate(&["entanglement", "-", "--cert", cert.to_str().unwrap()], c5);
    assert_eq!(code, 0);
    assert!(out.starts_with("entanglement: 3"), "{out}");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 2);
    assert_eq!(certs[0]["winner"], "thief");
    assert_eq!(certs[1]["winner"], "cops");
    assert_eq!(certs[1]["k"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}
