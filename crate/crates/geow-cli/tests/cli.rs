//! End-to-end tests of the `geow` binary: exit codes, output determinism,
//! JSON framing, and environment overrides.

use std::io::Write as _;
use std::process::{Command, Output};

use geow_core::recipe::{parse, print};

fn geow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geow")).args(args).output().expect("run geow")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const CORPUS: [(&str, &str); 9] = [
    ("L_sig11", include_str!("../corpus/L_sig11.gw")),
    ("M_0_9", include_str!("../corpus/M_0_9.gw")),
    ("M_1_10", include_str!("../corpus/M_1_10.gw")),
    ("M_1_9", include_str!("../corpus/M_1_9.gw")),
    ("M_2_10", include_str!("../corpus/M_2_10.gw")),
    ("V_sig11", include_str!("../corpus/V_sig11.gw")),
    ("Y_sig12", include_str!("../corpus/Y_sig12.gw")),
    ("hesse_cover", include_str!("../corpus/hesse_cover.gw")),
    ("remark_z2", include_str!("../corpus/remark_z2.gw")),
];

fn temp_recipe(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".gw").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn exit_codes_separate_usage_errors_from_failed_checks() {
    assert_eq!(geow(&["eval", "/nonexistent/missing.gw"]).status.code(), Some(2));

    let bad = temp_recipe("let A = blow_up(\n");
    assert_eq!(geow(&["eval", bad.path().to_str().unwrap()]).status.code(), Some(2));

    let failing = temp_recipe("let P = CP2()\nassert invariants(P, e=99)\n");
    let out = geow(&["eval", failing.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));

    let passing = temp_recipe("let P = CP2()\nassert invariants(P, e=3, sigma=1, c1sq=9)\n");
    assert_eq!(geow(&["eval", passing.path().to_str().unwrap()]).status.code(), Some(0));

    assert_eq!(geow(&["check", "--corpus"]).status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["check", "--corpus"],
        vec!["cover", "hesse", "phi_paper"],
        vec!["blocks"],
        vec!["scan", "--sigma", "1", "--chi", "8..12"],
    ] {
        let a = geow(&args);
        let b = geow(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
    }
}

#[test]
fn json_output_is_framed_with_the_schema_marker() {
    let passing = temp_recipe("let P = CP2()\nassert invariants(P, e=3)\n");
    for args in [
        vec!["--format", "json", "eval", passing.path().to_str().unwrap()],
        vec!["--format", "json", "blocks"],
        vec!["--format", "json", "cover", "hesse", "phi_paper"],
        vec!["--format", "json", "scan", "--sigma", "1", "--chi", "10"],
    ] {
        let out = geow(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
        assert_eq!(v["schema"], "geow/1", "{args:?}");
    }
}

#[test]
fn coset_bound_comes_from_flag_then_env_then_default() {
    let mut pres = tempfile::NamedTempFile::new().unwrap();
    pres.write_all(b"gens: a\nrel: a^30\n").unwrap();
    let path = pres.path().to_str().unwrap();

    // A tight bound from the environment overflows the table.
    let out = Command::new(env!("CARGO_BIN_EXE_geow"))
        .args(["group", "coset", path, ""])
        .env("GEOW_MAX_COSETS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("overflowed"));

    // The flag wins over the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_geow"))
        .args(["group", "coset", path, "", "--max-cosets", "500"])
        .env("GEOW_MAX_COSETS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("index: 30"));
}

#[test]
fn corpus_statement_counts_are_stable() {
    let recipe = parse(include_str!("../corpus/M_0_9.gw")).unwrap();
    assert_eq!(recipe.statements.len(), 13);
    let recipe = parse(include_str!("../corpus/hesse_cover.gw")).unwrap();
    assert_eq!(recipe.statements.len(), 9);
}

#[test]
fn corpus_files_round_trip_through_the_printer() {
    for (name, text) in CORPUS {
        let first = parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = print(&first);
        let second = parse(&printed).unwrap_or_else(|e| panic!("{name} reprint: {e}"));
        assert_eq!(first, second, "{name}");
        assert_eq!(print(&second), printed, "{name}");
    }
}

#[test]
fn eval_runs_every_corpus_recipe_clean() {
    for (name, text) in CORPUS {
        let f = temp_recipe(text);
        let out = geow(&["eval", f.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}:\n{}", stdout(&out));
        assert!(stdout(&out).contains("result: pass"), "{name}");
    }
}
