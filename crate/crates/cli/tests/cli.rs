use std::process::{Command, Output};

use monoglue::VerificationReport;
use monoglue_cli::output::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn monoglue(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoglue"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Runs with `--json`, parses the typed envelope and checks that
/// re-serializing it reproduces the document.
fn json<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = monoglue(&full);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    let text = stdout(&o);
    let env: Envelope<T> = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&env).unwrap();
    assert_eq!(text.trim_end(), again, "round trip of {args:?}");
    assert_eq!(env.schema, SCHEMA);
    env.result
}

#[test]
fn tangent_cone_of_a_non_cm_curve() {
    let r: TangentConeOut = json(&["tangent-cone", "6", "7", "15"]);
    assert!(!r.cohen_macaulay);
    assert_eq!(r.lowest_variable, "x1");
    assert_eq!(r.witness_leading_monomial.as_deref(), Some("x1*x3"));
    assert_eq!(r.leading_monomials.len(), 4);

    let o = monoglue(&["tangent-cone", "6,7,15"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("Cohen-Macaulay   : no"), "{text}");
    assert!(text.contains("x1*x3"));
}

#[test]
fn cm_curve() {
    let r: TangentConeOut = json(&["tangent-cone", "5", "12"]);
    assert!(r.cohen_macaulay);
    assert!(r.witness.is_none());
}

#[test]
fn non_nice_gluing() {
    let g: GlueOut = json(&[
        "glue", "--s1", "5,12", "--s2", "7,8", "--p", "17", "--q", "21",
    ]);
    assert!(!g.nice);
    assert_eq!(g.glued_generators, vec![105, 252, 119, 136]);
    assert_eq!(g.variables, vec!["x1", "x2", "y1", "y2"]);
    assert_eq!(g.gluing_generators.len(), 3);

    let v: VerificationReport = json(&[
        "verify", "--s1", "5,12", "--s2", "7,8", "--p", "17", "--q", "21",
    ]);
    assert!(v.c1.cohen_macaulay && v.c2.cohen_macaulay);
    assert!(!v.glued.cohen_macaulay);
    assert!(v.glued.nondecreasing);
    assert!(!v.cm_transfer_applicable);
    assert!(v.ideal_agreement);
    assert!(v.violations().is_empty());
    assert_eq!(v.glued.multiplicity, 105);
}

#[test]
fn nice_gluing_transfers() {
    let v: VerificationReport = json(&[
        "verify", "--s1", "3,4", "--s2", "2,3", "--p", "11", "--q", "6",
    ]);
    assert!(v.gluing.nice);
    assert!(v.cm_transfer_applicable && v.cm_transfer_confirmed);
    assert!(v.monotone_transfer_applicable && v.monotone_transfer_confirmed);
    assert_eq!(v.decomposition.map(|d| d.ok), Some(true));
    assert_eq!(v.factorization_ok, Some(true));
}

#[test]
fn semigroup_facts() {
    let s: SemigroupOut = json(&["semigroup", "2", "3", "4"]);
    assert_eq!(s.generators.generators(), &[2, 3]);
    assert_eq!(s.frobenius, 1);
    assert_eq!(s.genus, 1);
    assert!(s.symmetric);

    let s: SemigroupOut = json(&["semigroup", "6,7,15"]);
    assert_eq!(s.apery.len(), 6);
    assert_eq!(s.frobenius, *s.apery.iter().max().unwrap() as i64 - 6);
}

#[test]
fn hilbert_output() {
    let h: HilbertOut = json(&["hilbert", "6", "7", "15", "--limit", "10"]);
    assert_eq!(h.hf_prefix, vec![1, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6]);
    assert_eq!(h.multiplicity, 6);
    assert!(h.nondecreasing);
    assert_eq!(h.first_violation, None);
}

#[test]
fn ideal_output() {
    let r: IdealOut = json(&["ideal", "3", "4", "5"]);
    assert_eq!(r.minimal_generators, Some(3));
    assert_eq!(r.complete_intersection, Some(false));
    let r: IdealOut = json(&["ideal", "4", "6", "7", "--local"]);
    assert!(r.local);
    assert_eq!(r.complete_intersection, Some(true));
}

#[test]
fn exit_codes() {
    let o = monoglue(&["semigroup", "4", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[GcdNotOne]"), "{}", stderr(&o));

    let o = monoglue(&["glue", "--s1", "2,3", "--s2", "2,5", "--p", "4", "--q", "6"]);
    assert_eq!(o.status.code(), Some(1));

    let o = monoglue(&["semigroup", "two"]);
    assert_eq!(o.status.code(), Some(2));
    let o = monoglue(&["glue", "--s1", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = monoglue(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_errors_are_enveloped() {
    let o = monoglue(&[
        "--json", "glue", "--s1", "5,12", "--s2", "7,8", "--p", "12", "--q", "23",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorEnvelope = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(e.command, "glue");
    assert_eq!(e.error.code, "PIsMinimalGenerator");
}

#[test]
fn scan_writes_json_lines() {
    let dir = std::env::temp_dir().join(format!("monoglue-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("family.toml");
    let lines = dir.join("family.jsonl");
    std::fs::write(
        &config,
        "s1 = [3, 4]\ns2 = [2, 3]\nparameter = \"r\"\np = \"r + 6\"\nq = \"6\"\nrange = [-8, 6]\n",
    )
    .unwrap();
    let r: ScanOut = json(&[
        "scan",
        "--config",
        config.to_str().unwrap(),
        "--jobs",
        "2",
        "--output",
        lines.to_str().unwrap(),
    ]);
    assert_eq!(r.verified + r.skipped, 15);
    assert!(r.skipped > 0);
    assert!(r.records.is_none());
    let body = std::fs::read_to_string(&lines).unwrap();
    let parsed: Vec<ScanLine> = body
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(parsed.len(), 15);
    assert!(parsed
        .windows(2)
        .all(|w| w[0].record.parameter < w[1].record.parameter));
    for (line, text) in parsed.iter().zip(body.lines()) {
        assert_eq!(serde_json::to_string(line).unwrap(), text);
    }
    assert_eq!(
        parsed
            .iter()
            .filter(|l| l.record.verdicts().is_some())
            .count(),
        r.verified
    );

    let o = monoglue(&[
        "scan",
        "--config",
        dir.join("missing.toml").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("InvalidConfig"));
    std::fs::remove_dir_all(&dir).unwrap();
}
