mod common;

use std::process::Command;

use common::fixture_path;
use hfsoft::cli::{run_command, EXIT_INVALID, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> hfsoft::cli::CommandOutput {
    run_command(std::iter::once("hfsoft").chain(args.iter().copied()))
}

fn scenario(name: &str) -> String {
    fixture_path(name).display().to_string()
}

#[test]
fn image_table() {
    let path = scenario("example_3_5.json");
    let out = run(&["--scenario", &path, "image", "--map", "f", "--set", "F_A"]);
    assert_eq!(out.status, EXIT_OK, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "# f(F_A) in VE', mode sorted\n\
         e1': x={0.5}, y={0.2, 0.4, 0.9}, z={0.0}\n\
         e2': x={0.4, 0.8, 0.9}, y={0.6, 0.8}, z={0.0}\n\
         e3': x={0.2, 0.6}, y={0.4, 0.8}, z={0.0}\n"
    );
}

#[test]
fn mode_flag_overrides_scenario() {
    let path = scenario("example_3_5.json");
    let out = run(&[
        "--scenario",
        &path,
        "--mode",
        "set",
        "image",
        "--map",
        "f",
        "--set",
        "F_A",
    ]);
    assert_eq!(out.status, EXIT_OK);
    assert!(
        out.stdout.contains("y={0.2, 0.4, 0.6, 0.9}"),
        "{}",
        out.stdout
    );
}

#[test]
fn preimage_table() {
    let path = scenario("example_3_5.json");
    let out = run(&[
        "--scenario",
        &path,
        "preimage",
        "--map",
        "f",
        "--set",
        "F_B'",
    ]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(
        out.stdout,
        "# f^-1(F_B') in UE\n\
         e1: a={0.7}, b={0.3, 0.5, 0.7}, c={0.7}\n\
         e2: a={0.1, 0.3, 0.8}, b={0.2, 0.4}, c={0.1, 0.3, 0.8}\n\
         e3: a={0.7}, b={0.3, 0.5, 0.7}, c={0.7}\n\
         e4: a={0.6, 0.8}, b={0.9}, c={0.6, 0.8}\n"
    );
}

#[test]
fn compose_reports_mapping_and_image() {
    let path = scenario("example_3_10.json");
    let out = run(&[
        "--scenario",
        &path,
        "compose",
        "--outer",
        "g",
        "--inner",
        "f",
        "--set",
        "F_A",
    ]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(
        out.stdout,
        "# g∘f: UE -> WE''\n\
         p: a->h3, b->h2, c->h3\n\
         q: e1->e3'', e2->e3'', e3->e3'', e4->e1''\n\
         # (g∘f)(F_A) in WE'', mode sorted\n\
         e1'': h1={0.0}, h2={0.2, 0.6}, h3={0.4, 0.8}\n\
         e2'': h1={0.0}, h2={0.0}, h3={0.0}\n\
         e3'': h1={0.0}, h2={0.5, 0.8, 0.9}, h3={0.6, 0.8, 0.9}\n"
    );
}

#[test]
fn image_json() {
    let path = scenario("example_3_5.json");
    let out = run(&[
        "--scenario",
        &path,
        "--format",
        "json",
        "image",
        "--map",
        "f",
        "--set",
        "F_A",
    ]);
    assert_eq!(out.status, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["command"], "image");
    assert_eq!(doc["mode"], "sorted");
    assert_eq!(doc["result"]["class"], "VE'");
    assert_eq!(
        doc["result"]["table"]["e1'"]["y"],
        serde_json::json!([0.2, 0.4, 0.9])
    );
    assert_eq!(doc["result"]["table"]["e3'"]["z"], serde_json::json!([0.0]));
}

#[test]
fn invert_and_props() {
    let path = scenario("thm_3_11.json");
    let out = run(&["--scenario", &path, "invert", "--map", "f"]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(
        out.stdout,
        "# f^-1: VE' -> UE\np: x->b, y->c, z->a\nq: e1'->e3, e2'->e1, e3'->e2\n"
    );
    let out = run(&[
        "--scenario",
        &path,
        "--format",
        "json",
        "props",
        "--map",
        "g",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["bijective"], true);
    assert_eq!(doc["many_one"], false);
}

#[test]
fn invert_rejects_many_one() {
    let path = scenario("example_3_5.json");
    let out = run(&["--scenario", &path, "invert", "--map", "f"]);
    assert_eq!(out.status, EXIT_INVALID);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.starts_with("error:"), "{}", out.stderr);
}

#[test]
fn union_of_named_sets() {
    let path = scenario("example_3_14.json");
    let out = run(&[
        "--scenario",
        &path,
        "--mode",
        "set",
        "union",
        "--left",
        "F_A",
        "--right",
        "M_A",
    ]);
    assert_eq!(out.status, EXIT_OK);
    assert!(out.stdout.starts_with("# F_A ∪ M_A in UE, mode set\n"));
    assert!(out
        .stdout
        .contains("e1: a={0.6, 0.8}, b={0.4, 0.8, 0.9}, c={0.6, 0.8}"));
}

#[test]
fn unknown_names_and_bad_files_are_invalid() {
    let path = scenario("example_3_5.json");
    assert_eq!(
        run(&["--scenario", &path, "image", "--map", "h", "--set", "F_A"]).status,
        EXIT_INVALID
    );
    assert_eq!(
        run(&["--scenario", &path, "image", "--map", "f", "--set", "X"]).status,
        EXIT_INVALID
    );
    assert_eq!(
        run(&["--scenario", "/nonexistent.json", "props", "--map", "f"]).status,
        EXIT_INVALID
    );
    let bad = std::env::temp_dir().join(format!("hfsoft-bad-{}.json", std::process::id()));
    std::fs::write(
        &bad,
        "{\"classes\": {\"U\": {\"universe\": [], \"attributes\": [\"e\"]}}}",
    )
    .unwrap();
    let out = run(&["--scenario", bad.to_str().unwrap(), "props", "--map", "f"]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(out.status, EXIT_INVALID);
}

#[test]
fn usage_errors() {
    assert_eq!(
        run(&["image", "--map", "f", "--set", "F_A"]).status,
        EXIT_USAGE
    );
    assert_eq!(run(&["image", "--map", "f"]).status, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).status, EXIT_USAGE);
    assert_eq!(run(&["--mode", "fuzzy", "laws"]).status, EXIT_USAGE);
    let help = run(&["--help"]);
    assert_eq!(help.status, EXIT_OK);
    assert!(help.stdout.contains("laws"));
}

#[test]
fn laws_table_passes() {
    let out = run(&["laws", "--seed", "3", "--cases", "20"]);
    assert_eq!(out.status, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.starts_with("# law suite: seed 3, 20 cases\n"));
    assert!(out.stdout.ends_with("suite: PASS\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hfsoft");
    let path = scenario("example_3_5.json");
    let ok = Command::new(bin)
        .args(["--scenario", &path, "image", "--map", "f", "--set", "F_A"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(ok.stdout)
        .unwrap()
        .contains("y={0.2, 0.4, 0.9}"));
    let bad = Command::new(bin)
        .args(["--scenario", &path, "invert", "--map", "f"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INVALID));
    let usage = Command::new(bin).arg("image").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}
