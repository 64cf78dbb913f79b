use std::process::Command;

use ceresa_core::repcrit::{CriteriaReport, DihedralReport};
use ceresa_core::strata::StratumRecord;
use ceresa_core::wire::VerdictJson;
use ceresa_kit::output::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

const BIN: &str = env!("CARGO_BIN_EXE_ceresa-kit");

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ceresa-kit").chain(args.iter().copied());
    let code = ceresa_kit::run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.code, 0, "{args:?} failed: {}", o.stderr);
    o.stdout
}

/// Parses `text` as `T` and checks that reserializing gives the same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let value: T = serde_json::from_str(text).unwrap_or_else(|e| panic!("{e}: {text}"));
    let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
    assert_eq!(again, text);
    value
}

#[test]
fn decide_json_matches_schema() {
    let text = ok(&[
        "decide", "-a", "-12", "-b", "1", "-c", "-12", "--format", "json",
    ]);
    let v: VerdictJson = round_trip(&text);
    assert!(v.chow.torsion);
    assert_eq!(v.chow.point_order, Some(3));
    assert_eq!(v.griffiths, "torsion");
    assert_eq!(v.disc.to_string(), "-7050267");
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        raw["chow"],
        serde_json::json!({"torsion": true, "point_order": 3})
    );
}

#[test]
fn non_torsion_omits_point_order() {
    let text = ok(&[
        "--format", "json", "decide", "-a", "1", "-b", "0", "-c", "1",
    ]);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(raw["chow"], serde_json::json!({"torsion": false}));
}

#[test]
fn negative_flag_spellings_agree() {
    let spaced = ok(&["decide", "-a", "-12", "-b", "1", "-c", "-12"]);
    let joined = ok(&["decide", "-a=-12/1", "-b=1", "-c=-24/2"]);
    assert_eq!(spaced, joined);
    assert!(spaced.contains("chow: torsion (P_f of order 3)"));
}

#[test]
fn every_json_output_round_trips() {
    let _: InvariantsOut = round_trip(&ok(&[
        "invariants",
        "-a",
        "1",
        "-b",
        "0",
        "-c",
        "1",
        "--format",
        "json",
    ]));
    let _: TorsionOut = round_trip(&ok(&[
        "torsion", "-A", "0", "-B", "-432", "-x", "12", "-y", "36", "--format", "json",
    ]));
    let _: TorsionOut = round_trip(&ok(&[
        "torsion", "-A", "0", "-B", "-62208", "-x", "52", "-y", "280", "--format", "json",
    ]));
    let _: FamilyOut = round_trip(&ok(&[
        "family", "-I", "3", "-J", "-9", "-t", "2/5", "--format", "json",
    ]));
    let _: E0TorsionOut = round_trip(&ok(&["e0-torsion", "--format", "json"]));
    let _: BiellipticOut = round_trip(&ok(&[
        "bielliptic",
        "-a",
        "-3",
        "-c",
        "5/4",
        "--format",
        "json",
    ]));
    let _: RepcritOut = round_trip(&ok(&[
        "repcrit",
        "--profile",
        "picard_c3",
        "--format",
        "json",
    ]));
    let _: CriterionOut = round_trip(&ok(&[
        "repcrit",
        "--profile",
        "klein_c7",
        "--criterion",
        "b",
        "--format",
        "json",
    ]));
    let _: DihedralReport = round_trip(&ok(&[
        "dihedral", "-m", "9", "-a", "1", "-b", "3", "--format", "json",
    ]));
    let _: Vec<StratumRecord> = round_trip(&ok(&["strata", "--format", "json"]));
    let _: StratumRecord = round_trip(&ok(&["strata", "--group", "G48", "--format", "json"]));
    let _: CheckOut = round_trip(&ok(&["strata", "--check", "--format", "json"]));
    let _: Vec<ScanRow> = round_trip(&ok(&[
        "scan",
        "--a-range",
        "-1..1",
        "--b-range",
        "0,1",
        "--c-range",
        "1",
        "--format",
        "json",
    ]));
}

#[test]
fn torsion_json_values() {
    let t: TorsionOut = round_trip(&ok(&[
        "torsion", "-A", "0", "-B", "-432", "-x", "12", "-y", "36", "--format", "json",
    ]));
    assert_eq!((t.torsion, t.order), (true, Some(3)));
    let t: TorsionOut = round_trip(&ok(&[
        "torsion", "-A", "0", "-B", "-62208", "-x", "52", "-y", "280", "--format", "json",
    ]));
    assert_eq!((t.torsion, t.order), (false, None));
}

#[test]
fn e0_torsion_points() {
    let e: E0TorsionOut = round_trip(&ok(&["e0-torsion", "--format", "json"]));
    let raw = serde_json::to_value(&e.points).unwrap();
    assert_eq!(
        raw,
        serde_json::json!(["infinity", {"x": "3", "y": "-9"}, {"x": "3", "y": "9"}])
    );
    assert_eq!(
        ok(&["e0-torsion"]),
        "E0: y^2 = 4x^3 - 27\ntorsion: {O, (3, -9), (3, 9)}\n"
    );
}

#[test]
fn bielliptic_chain_values() {
    let b: BiellipticOut = round_trip(&ok(&[
        "bielliptic",
        "-a",
        "1",
        "-c",
        "1",
        "--format",
        "json",
    ]));
    assert!(b.consistent);
    let raw = serde_json::to_value(&b).unwrap();
    assert_eq!(raw["Q"], serde_json::json!({"x": "-3", "y": "-3"}));
    assert_eq!(raw["image"], serde_json::json!({"x": "13", "y": "-35"}));
    assert_eq!(raw["scaled"], serde_json::json!({"x": "52", "y": "-280"}));
}

#[test]
fn family_member_is_torsion() {
    let f: FamilyOut = round_trip(&ok(&[
        "family", "-I", "3", "-J", "9", "-t", "0", "--format", "json",
    ]));
    assert_eq!(f.curve.a.to_string(), "0");
    assert_eq!(f.curve.b.to_string(), "1/9");
    assert_eq!(f.curve.c.to_string(), "1/36");
    assert_eq!(f.chow.point_order, Some(3));
    assert_eq!(
        (f.i3_over_disc.to_string(), f.j2_over_disc.to_string()),
        ("27".into(), "81".into())
    );
}

#[test]
fn dihedral_text() {
    assert_eq!(
        ok(&["dihedral", "-m", "7", "-a", "1", "-b", "2"]),
        "genus 6; (⋀³V)^{D_7} ≠ 0: criterion fails (triple 1+2+4)\n"
    );
    assert_eq!(
        ok(&["dihedral", "-m", "5", "-a", "1", "-b", "2"]),
        "genus 4; (⋀³V)^{D_5} = 0: criterion holds\n"
    );
}

#[test]
fn strata_group_c9() {
    let r: StratumRecord = round_trip(&ok(&["strata", "--group", "C9", "--format", "json"]));
    assert!(r.in_vrat && r.in_valg);
    assert_eq!(r.dim, 0);
    let text = ok(&["strata", "--group", "c9"]);
    assert!(text.contains("in V^rat: true"));
    assert_eq!(ok(&["strata", "--check"]), "verdict table consistent\n");
    assert_eq!(ok(&["strata"]).lines().count(), 14);
}

#[test]
fn repcrit_reads_profile_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.json");
    let profile = r#"{"group_order": 3, "level": 3, "classes": [
        {"size": 1, "exps": [0, 0, 0]},
        {"size": 1, "exps": [1, 1, 2]},
        {"size": 1, "exps": [2, 2, 1]}]}"#;
    std::fs::write(&path, profile).unwrap();
    let p = path.to_str().unwrap();
    let from_file: RepcritOut = round_trip(&ok(&["repcrit", "--profile", p, "--format", "json"]));
    let from_preset: RepcritOut = round_trip(&ok(&[
        "repcrit",
        "--profile",
        "picard_c3",
        "--format",
        "json",
    ]));
    assert_eq!(from_file.report, from_preset.report);
    let CriteriaReport {
        wedge3_v, thm_b, ..
    } = from_file.report;
    assert_eq!((wedge3_v, thm_b), (0, true));

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"group_order": 2, "level": 2, "classes": [{"size": 1, "exps": [0]}]}"#,
    )
    .unwrap();
    assert_eq!(
        run(&["repcrit", "--profile", bad.to_str().unwrap()]).code,
        2
    );
    assert_eq!(run(&["repcrit", "--profile", "missing.json"]).code, 1);
}

#[test]
fn repcrit_criteria_on_presets() {
    let c: CriterionOut = round_trip(&ok(&[
        "repcrit",
        "--profile",
        "c9_x4px",
        "--criterion",
        "a",
        "--format",
        "json",
    ]));
    assert!(c.applies);
    let c: CriterionOut = round_trip(&ok(&[
        "repcrit",
        "--profile",
        "klein_c7",
        "--criterion",
        "b",
        "--format",
        "json",
    ]));
    assert!(!c.applies);
    assert_eq!(c.dim, 1);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(run(&["bogus"]).code, 1);
    assert_eq!(run(&["decide", "-a", "1", "-b", "0"]).code, 1);
    assert_eq!(run(&["decide", "-a", "1.5", "-b", "0", "-c", "1"]).code, 1);
    assert_eq!(run(&["decide", "-a", "1/0", "-b", "0", "-c", "1"]).code, 1);
    assert_eq!(
        run(&["decide", "-a", "1", "-b", "0", "-c", "1", "--format", "xml"]).code,
        1
    );
    assert_eq!(
        run(&["dihedral", "-m", "7", "-a", "1", "-b", "2", "--format", "csv"]).code,
        1
    );
    assert_eq!(
        run(&["decide", "-a", "1", "-b", "0", "-c", "1", "--bogus"]).code,
        1
    );
    // domain
    let o = run(&["decide", "-a", "0", "-b", "0", "-c", "0"]);
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty() && o.stderr.starts_with("error:"));
    assert_eq!(
        run(&["torsion", "-A", "0", "-B", "1", "-x", "1", "-y", "1"]).code,
        2
    );
    assert_eq!(
        run(&["torsion", "-A", "0", "-B", "0", "-x", "0", "-y", "0"]).code,
        2
    );
    assert_eq!(run(&["family", "-I", "1", "-J", "1", "-t", "0"]).code, 2);
    assert_eq!(run(&["bielliptic", "-a", "2", "-c", "1"]).code, 2);
    assert_eq!(run(&["dihedral", "-m", "7", "-a", "2", "-b", "1"]).code, 2);
    assert_eq!(run(&["strata", "--group", "C5"]).code, 2);
    assert_eq!(run(&["repcrit", "--profile", "nope"]).code, 2);
    assert_eq!(
        run(&[
            "scan",
            "--a-range",
            "2..1",
            "--b-range",
            "0",
            "--c-range",
            "1"
        ])
        .code,
        2
    );
    // help
    let o = run(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("decide"));
}

#[test]
fn binary_exit_codes() {
    let code = |args: &[&str]| Command::new(BIN).args(args).output().unwrap().status.code();
    assert_eq!(
        code(&["decide", "-a", "-12", "-b", "1", "-c", "-12"]),
        Some(0)
    );
    assert_eq!(code(&["decide", "-a", "0", "-b", "0", "-c", "0"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(1));
}

#[test]
fn csv_formats() {
    let text = ok(&[
        "decide", "-a", "-12", "-b", "1", "-c", "-12", "--format", "csv",
    ]);
    assert_eq!(
        text,
        "a,b,c,I,J,disc,verdict,point_order\n-12,1,-12,0,13797,-7050267,torsion,3\n"
    );
    let text = ok(&[
        "invariants",
        "-a",
        "1",
        "-b",
        "0",
        "-c",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(text, "a,b,c,I,J,disc\n1,0,1,13,70,144\n");
}

#[test]
fn scan_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "4", "8"] {
        let path = dir.path().join(format!("scan{threads}.csv"));
        let run = Command::new(BIN)
            .args([
                "scan",
                "--a-range=-2..2",
                "--b-range",
                "-2..2",
                "--c-range",
                "-2..2",
                "--out",
            ])
            .arg(&path)
            .env("CERESA_KIT_THREADS", threads)
            .output()
            .unwrap();
        assert!(run.status.success());
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
    let text = String::from_utf8(outputs.pop().unwrap()).unwrap();
    assert_eq!(text.lines().count(), 126);
    assert!(text.starts_with("a,b,c,I,J,disc,verdict,point_order\n"));
}

#[test]
fn scan_rejects_bad_thread_env() {
    let out = Command::new(BIN)
        .args(["scan", "--a-range", "0", "--b-range", "0", "--c-range", "1"])
        .env("CERESA_KIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
