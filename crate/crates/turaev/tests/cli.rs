//! End-to-end checks of the command-line surface, driving the clap
//! parser and the dispatcher directly.

use clap::Parser;
use serde_json::Value;
use turaev::cli::{run, Cli};
use turaev::fixtures;

fn invoke(args: &[&str]) -> turaev::Result<turaev::cli::Output> {
    let mut full = vec!["turaev"];
    full.extend_from_slice(args);
    let cli = Cli::try_parse_from(full).expect("arguments parse");
    run(&cli)
}

fn tmp_file(name: &str, content: &str) -> String {
    let path = std::env::temp_dir().join(format!("turaev-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn norm_of_the_torus_complex_is_zero() {
    let cx = tmp_file("torus.cx", fixtures::TORUS_COMPLEX);
    let out = invoke(&["norm", &cx, "--phi", "x=1,a=0"]).unwrap();
    assert!(out.text.starts_with("value            0"), "{}", out.text);
    assert!(!out.failed);

    // the same through each backend
    for method in ["lp", "brute"] {
        let out = invoke(&["norm", &cx, "--phi", "x=1,a=0", "--method", method]).unwrap();
        assert!(out.text.contains("value"), "{}", out.text);
    }
}

#[test]
fn certify_the_trefoil_with_an_explicit_class() {
    let file = tmp_file("tref2gen.txt", "gens: u v ; rels: u v u v^-1 u^-1 v^-1");
    let out = invoke(&["certify", &file, "--phi", "u=1,v=1"]).unwrap();
    assert!(out.text.contains("certified     true"), "{}", out.text);
    assert!(out.text.contains("value         1"), "{}", out.text);
}

#[test]
fn knot_output_feeds_the_other_commands() {
    let knot = invoke(&["knot", "--fixture", "trefoil"]).unwrap();
    let file = tmp_file("wirtinger.txt", &knot.text);

    let alex = invoke(&["alex", &file]).unwrap();
    assert_eq!(alex.text, "t^2 - t + 1");

    let hom = invoke(&["homology", &file]).unwrap();
    assert_eq!(hom.text, "H1 = Q[t±]/(t^2 - t + 1)");

    let norm = invoke(&["norm", &file]).unwrap();
    assert!(norm.text.contains("value            3"), "{}", norm.text);

    // both presentations of the same group close the sandwich
    let two = tmp_file("tref-two.txt", fixtures::TREFOIL_2GEN);
    let both = invoke(&["certify", &format!("{file},{two}")]).unwrap();
    assert!(both.text.contains("certified     true"), "{}", both.text);
}

#[test]
fn json_reports_round_trip_byte_identically() {
    let cx = tmp_file("torus-json.cx", fixtures::TORUS_COMPLEX);
    let wedge = tmp_file("wedge2.txt", &fixtures::wedge_tori_text(2));
    let outputs = [
        invoke(&["norm", &cx, "--phi", "x=1,a=0", "--json"]).unwrap(),
        invoke(&["certify", &wedge, "--json"]).unwrap(),
        invoke(&["anorm", &wedge, "--polytope", "--json"]).unwrap(),
        invoke(&["homology", &wedge, "--json"]).unwrap(),
        invoke(&["knot", "--fixture", "whitehead", "--json"]).unwrap(),
        invoke(&["divtest", "--count", "5", "--json"]).unwrap(),
    ];
    for out in outputs {
        let v: Value = serde_json::from_str(&out.text).expect("valid json");
        assert_eq!(serde_json::to_string_pretty(&v).unwrap(), out.text);
    }
}

#[test]
fn cover_command_reports_the_double_cover() {
    let file = tmp_file("tref-cover.txt", fixtures::TREFOIL_2GEN);
    let out = invoke(&["cover", &file, "--order", "2", "--check-inequality"]).unwrap();
    assert!(out.text.contains("chi = 0"), "{}", out.text);
    assert!(out.text.contains("Z^1 + torsion Z/3"), "{}", out.text);
    assert!(out.text.contains("holds"), "{}", out.text);
    assert!(!out.failed);
}

#[test]
fn errors_surface_as_errors() {
    assert!(invoke(&["norm", "/nonexistent/file"]).is_err());

    let file = tmp_file("nophi.txt", "gens: u v ; rels: u v u v^-1 u^-1 v^-1");
    assert!(invoke(&["norm", &file]).is_err(), "missing class must not default");

    let bad = tmp_file("badphi.txt", "gens: a ; rels: a a");
    assert!(invoke(&["homology", &bad, "--phi", "a=1"]).is_err(), "not a class");

    assert!(invoke(&["knot", "--fixture", "unknown"]).is_err());
    assert!(invoke(&["divtest", "--psi", "2,4"]).is_err(), "imprimitive pair");
}

#[test]
fn fractional_and_method_flags() {
    let file = tmp_file("half.txt", "gens: u v ; rels: u v u v^-1 u^-1 v^-1");
    let out = invoke(&["norm", &file, "--phi", "u=1/2,v=1/2", "--method", "brute"]).unwrap();
    assert!(out.text.contains("value            1/2"), "{}", out.text);
    assert!(
        Cli::try_parse_from(["turaev", "norm", "x", "--method", "nope"]).is_err(),
        "unknown method rejected at parse time"
    );
}
