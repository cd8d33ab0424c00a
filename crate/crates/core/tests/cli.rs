use std::process::Command;

use bigfree::cli::run;

fn bigfree(args: &[&str]) -> bigfree::cli::Outcome {
    run(std::iter::once("bigfree").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = bigfree(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["reduce", "a1 a1^-1 a2"]), "a2\n");
    assert_eq!(stdout(&["dist", "a1 a2", "a1 a3"]), "[0,1,1]\n");
    let demo = stdout(&["demo", "omega-plus-one", "--depth", "5"]);
    let letters: Vec<&str> = demo.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(letters, ["a1", "a2", "a3", "a4", "a5"]);
}

#[test]
fn tree_and_triple_commands() {
    assert_eq!(stdout(&["tree-dist", "[0,1] @ a1 a2", "[1] @ a1"]), "[1,-1]\n");
    assert_eq!(stdout(&["tree-act", "a1^-1", "[1] @ a1"]), "[] @ a1^-1\n");
    assert_eq!(stdout(&["y", "ι", "a1 a2", "a1 a3"]), "a1\n");
    assert_eq!(stdout(&["to-triple", "[1,1,-1] @ a1 a2 a3"]), "(a1 ; a2^1 ; [0,1,-1])\n");
    assert_eq!(stdout(&["from-triple", "(a1 ; a2^1 ; [0,1,-1])"]), "[1,1,-1] @ a1 a2\n");
    assert_eq!(stdout(&["triple-act", "a1", "(ι ; a1^-1 ; [0,1])"]), "(ι ; a1^1 ; [1,-1])\n");
    assert_eq!(stdout(&["project", "(a2 ; a1^-1 ; [0,1])"]), "C(a1) @ [1,-1]\n");
    assert_eq!(stdout(&["circle-dist", "C(a1) @ [0,1]", "C(a2) @ [0,0,1]"]), "[0,1,1]\n");
    let d = stdout(&["triple-dist", "(ι ; a1^1 ; [0,1])", "(a1 ; a2^1 ; [0,0,1])"]);
    assert_eq!(d, "exact: [1,-1,1]\nclosed form: [1,1,1]\nrelation: nested\nagrees: false\n");
}

#[test]
fn cayley_and_topology_commands() {
    assert_eq!(stdout(&["cayley-dist", "(ι ; a1^1 ; 1/2)", "ι"]), "[1/2]\n");
    assert_eq!(stdout(&["cayley-act", "a1", "(ι ; a1^-1 ; 1/3)"]), "(ι ; a1^1 ; 2/3)\n");
    assert!(stdout(&["embed-compare", "a2", "a1"]).ends_with("endpoints only: true\n"));
    assert_eq!(stdout(&["ball-letter", "a1", "a3", "a1 a5"]), "true\n");
    assert_eq!(stdout(&["ball-letter", "a1", "a3", "a1 a2"]), "false\n");
    assert_eq!(stdout(&["ball-metric", "ι", "[0,1]", "a2"]), "false\n");
    assert_eq!(stdout(&["ball-metric", "ι", "[1]", "a2^3 a5"]), "true\n");
}

#[test]
fn ball_exports() {
    let dot = stdout(&["ball", "ι", "--max-len", "2", "--max-letter", "3", "--dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 36);
    assert!(dot.contains("\"ι\" [shape=doublecircle];"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "ball", "a1", "--max-len", "2", "--max-letter", "3"])).unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 37);
    assert_eq!(json["edges"].as_array().unwrap().len(), 36);
    assert_eq!(json["center"], "a1");
}

#[test]
fn json_output_parses() {
    for args in [
        &["--json", "reduce", "a1 a2 a2^-1"][..],
        &["--json", "subwords", "a1 a2"],
        &["--json", "triple-dist", "(ι ; a1^1 ; [0,1])", "(ι ; a1^1 ; [0,2])"],
        &["--json", "ball-metric", "ι", "[1]", "a2"],
        &["--json", "demo", "omega-plus-one", "--depth", "3"],
        &["--json", "axioms-check", "--max-len", "2"],
    ] {
        let text = stdout(args);
        assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok(), "{args:?}: {text}");
    }
}

#[test]
fn omega_plus_one_alphabet() {
    assert_eq!(stdout(&["--alphabet", "omega+1", "len", "b a1 b"]), "[1;TOP=2]\n");
    assert_eq!(bigfree(&["len", "b"]).code, 1);
    assert_eq!(bigfree(&["--alphabet", "omega+2", "len", "a1"]).code, 2);
}

#[test]
fn errors_use_the_documented_codes() {
    let bad = bigfree(&["reduce", "a1 a^2"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("grammar"));
    assert_eq!(bigfree(&["prefix", "a1 a1^-1", "a1"]).code, 1);
    assert_eq!(bigfree(&["to-triple", "[2] @ a1"]).code, 1);
    assert_eq!(bigfree(&["cayley-dist", "(ι ; a1^1 ; 3/2)", "ι"]).code, 1);
    assert_eq!(bigfree(&["suite", "--batch", "nope"]).code, 2);
    assert_eq!(bigfree(&["tree-dist", "[1]"]).code, 2);
}

#[test]
fn suite_subset_is_byte_deterministic() {
    let args = ["suite", "--seed", "5", "--samples", "200", "--batch", "words/unique-reduced-form", "--batch", "cayley/shortcut-guards"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    assert!(first.ends_with("2 passed, 0 failed\n"), "{first}");
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_bigfree");
    let ok = Command::new(exe).args(["reduce", "a1 a1^-1 a2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "a2\n");
    let domain = Command::new(exe).args(["ball-metric", "ι", "[0,-1]", "a1"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(1));
    let usage = Command::new(exe).arg("no-such-command").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
