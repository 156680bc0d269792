use std::path::PathBuf;
use std::process::{Command, Output};

use matchcert_cli::report::{Check, Record};

fn matchcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Record> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("record parses"))
        .collect()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("matchcert-cli-{}-{name}", std::process::id()))
}

#[test]
fn petersen_invariants() {
    let out = matchcert(&["invariants", "--gen", "petersen"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &records(&out)[0];
    let inv = rec.invariants.as_ref().unwrap().cert().unwrap();
    assert_eq!(rec.graph6, "IheA@GUAo");
    assert_eq!((inv.perfect_matchings, inv.chromatic_index, inv.oddness), (6, 4, 2));
    assert_eq!((inv.cyclic_connectivity, inv.girth), (Some(5), 5));
    assert!(inv.colouring.is_none());
}

#[test]
fn generated_graph6_feeds_back_in() {
    let out = matchcert(&["gen", "random_bridgeless", "12", "--count", "3", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    let first = text.lines().next().unwrap();
    let again = matchcert(&["check", "thm1", "--g6", first]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(records(&again)[0].graph6, first);
}

#[test]
fn bad_input_exits_four() {
    assert_eq!(matchcert(&["invariants", "--g6", "not graph6"]).status.code(), Some(4));
    assert_eq!(matchcert(&["check", "ms"]).status.code(), Some(4));
    assert_eq!(matchcert(&["check", "nonsense", "--gen", "k4"]).status.code(), Some(4));
    assert_eq!(matchcert(&["--help"]).status.code(), Some(0));
}

#[test]
fn exhausted_budget_exits_three() {
    let out = matchcert(&["check", "fr", "--gen", "petersen", "--cap-matchings", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(records(&out)[0].fr.as_ref().unwrap().is_capped());
}

#[test]
fn traceable_construction_round_trips_through_verify() {
    let report = scratch("trace.jsonl");
    let out = matchcert(&["construct", "traceable", "--gen", "flower_snark:5", "--gen", "prism:4", "--out"]
        .into_iter()
        .chain([report.to_str().unwrap()])
        .collect::<Vec<_>>());
    assert_eq!(out.status.code(), Some(0));
    let check = matchcert(&["verify", report.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0), "{}", String::from_utf8_lossy(&check.stdout));
    std::fs::remove_file(report).unwrap();
}

#[test]
fn verify_catches_a_tampered_certificate() {
    let out = matchcert(&["check", "ms", "--gen", "petersen"]);
    let mut rec = records(&out).remove(0);
    let Some(Check::Pass { cert }) = rec.ms.as_mut() else {
        panic!("ms check did not pass");
    };
    // swap one matching edge for another edge at the same vertex
    cert.m1.ids[0] = cert.m2.ids.iter().copied().find(|e| !cert.m1.ids.contains(e)).unwrap();
    let report = scratch("tampered.jsonl");
    std::fs::write(&report, serde_json::to_string(&rec).unwrap() + "\n").unwrap();
    let check = matchcert(&["verify", report.to_str().unwrap()]);
    std::fs::remove_file(&report).unwrap();
    assert_eq!(check.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&check.stdout).contains("\"ok\":false"));
}
