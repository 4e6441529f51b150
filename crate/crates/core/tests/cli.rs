use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn latgrowth(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latgrowth"))
        .env("LATTICE_CACHE_DIR", cache)
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

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn last_counts(table: &str, k: usize) -> Vec<String> {
    let rows: Vec<String> = table
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_whitespace().nth(1).map(String::from))
        .collect();
    rows[rows.len() - k..].to_vec()
}

#[test]
fn enumerate_site_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = latgrowth(dir.path(), &["enumerate", "--d", "2", "--n-max", "5", "--kind", "site", "--rooting", "lexmin"]);
    assert!(o.status.success());
    assert_eq!(last_counts(&stdout(&o), 2), ["19", "63"]);
}

#[test]
fn interfaces_match_bond_animals_at_small_n() {
    let dir = tempfile::tempdir().unwrap();
    let counts = |kind: &str| {
        let v = json(&latgrowth(dir.path(), &["--output", "json", "enumerate", "--d", "2", "--kind", kind, "--n-max", "3"]));
        v["results"].as_array().unwrap().iter().map(|r| r["count"].clone()).collect::<Vec<_>>()
    };
    assert_eq!(counts("interface2d"), counts("bond"));
}

#[test]
fn zero_dimension_names_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let o = latgrowth(dir.path(), &["enumerate", "--d", "0", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--d"));
}

#[test]
fn budget_exhaustion_writes_partial_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("partial.json");
    let o = latgrowth(
        dir.path(),
        &["enumerate", "--d", "3", "--n-max", "9", "--node-budget", "5000", "--out", out.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["partial"] == true));
    assert_eq!(v["manifest"]["outputs"][0], "partial.json");
    // partial counts never reach the cache
    assert!(!dir.path().join("counts_d3_site_lexmin.json").exists());
}

#[test]
fn cache_flag_beats_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    let o = latgrowth(env_dir.path(), &["--cache-dir", flag, "enumerate", "--d", "2", "--n-max", "4", "--kind", "tree"]);
    assert!(o.status.success());
    assert!(flag_dir.path().join("counts_d2_tree_lexmin.json").exists());
    assert!(!env_dir.path().join("counts_d2_tree_lexmin.json").exists());

    let o = latgrowth(env_dir.path(), &["cache", "path"]);
    assert_eq!(stdout(&o).trim(), env_dir.path().to_str().unwrap());
    let listed = json(&latgrowth(env_dir.path(), &["--output", "json", "--cache-dir", flag, "cache", "list"]));
    assert_eq!(listed["results"].as_array().unwrap().len(), 2);
    let cleared = json(&latgrowth(env_dir.path(), &["--output", "json", "--cache-dir", flag, "cache", "clear"]));
    assert_eq!(cleared["results"][0]["removed"], 2);
}

#[test]
fn cache_file_layout() {
    let dir = tempfile::tempdir().unwrap();
    latgrowth(dir.path(), &["enumerate", "--d", "2", "--n-max", "6", "--kind", "bond"]);
    let text = std::fs::read_to_string(dir.path().join("counts_d2_bond_origin.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["generator"], "fast");
    assert_eq!(v["counts"][0]["n"], 1);
    assert!(v["counts"][5]["count"].is_string());
}

#[test]
fn translate_reproduces_published_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let o = latgrowth(dir.path(), &["bounds", "translate", "--from-growth-upper", "9.3835", "--d", "3", "--flavor", "site"]);
    assert!(stdout(&o).contains(">= 0.2522 "), "{}", stdout(&o));
    let v = json(&latgrowth(dir.path(), &["--output", "json", "bounds", "translate", "--from-pc-upper", "0.69704"]));
    let value = v["results"][0]["value"].as_f64().unwrap();
    assert_eq!(format!("{value:.4e}"), format!("{:.4e}", 2.41073));
    assert_eq!(v["results"][0]["direction"], "lower");
}

#[test]
fn expansion_and_unknown_name() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&latgrowth(dir.path(), &["--output", "json", "bounds", "expansion", "--name", "bond-threshold", "--d", "3"]));
    let value = v["results"][0]["value"].as_f64().unwrap();
    assert!((value - 0.21065).abs() < 1e-5);
    assert_eq!(v["results"][0]["rigor"], "rigorous");

    let o = latgrowth(dir.path(), &["bounds", "expansion", "--name", "bogus", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("site-animal-growth"));
}

#[test]
fn lemma_and_improved() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&latgrowth(dir.path(), &["--output", "json", "bounds", "lemma", "--d", "4", "--x", "0"]));
    assert_eq!(v["results"][0]["value"], 1.0);
    let v = json(&latgrowth(dir.path(), &["--output", "json", "bounds", "improved", "--d", "40", "--C", "2"]));
    let r = &v["results"][0];
    assert!(r["z"].as_f64().unwrap() > 0.0 && r["bound"].as_f64().unwrap() > 0.0);
    // z <= 0 at small d makes the improvement inapplicable
    let o = latgrowth(dir.path(), &["bounds", "improved", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eden_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = latgrowth(dir.path(), &["eden", "encode", "--cells", "0,0"]);
    assert_eq!(stdout(&o).lines().next(), Some("00"));
    let o = latgrowth(dir.path(), &["eden", "decode", "--d", "2", "--bits", "00"]);
    assert_eq!(stdout(&o).trim(), "(0,0)");

    let file = dir.path().join("l.txt");
    std::fs::write(&file, "# an L tromino\n0,0\n1,0\n\n1,1  # corner\n").unwrap();
    let v = json(&latgrowth(dir.path(), &["--output", "json", "eden", "encode", "--file", file.to_str().unwrap()]));
    let bits = v["results"][0]["bits"].as_str().unwrap().to_string();
    assert_eq!(bits.len(), 3 * 3 - 2 + 1);
    let o = latgrowth(dir.path(), &["eden", "decode", "--d", "2", "--bits", &bits]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["(0,0)", "(1,0)", "(1,1)"]);

    std::fs::write(&file, "0,0\n1,0\n1;1\n").unwrap();
    let o = latgrowth(dir.path(), &["eden", "encode", "--file", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn eden_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&latgrowth(dir.path(), &["--output", "json", "eden", "verify", "--d", "2", "--n-max", "6"]));
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    assert!(results.iter().all(|r| r["violations"] == 0 && r["pass"] == true));
}

#[test]
fn percolate_modes() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&latgrowth(dir.path(), &["--output", "json", "percolate", "--d", "2", "--L", "20", "--p", "1", "--trials", "50"]));
    assert_eq!(v["results"][0]["value"], 1.0);
    assert_eq!(v["results"][0]["half_width"], 0.0);
    assert_eq!(v["results"][0]["rigor"], "monte-carlo");

    let v = json(&latgrowth(
        dir.path(),
        &["--output", "json", "percolate", "--d", "2", "--side", "16", "--p", "0.5", "--tail", "5", "--trials", "40"],
    ));
    assert_eq!(v["results"].as_array().unwrap().len(), 5);

    let o = latgrowth(dir.path(), &["percolate", "--d", "3", "--L", "500", "--threshold"]);
    assert_eq!(o.status.code(), Some(3));
    let o = latgrowth(dir.path(), &["percolate", "--d", "2", "--L", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn same_seed_same_file() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, threads: &str| {
        let out = dir.path().join(name);
        let args = [
            "--threads", threads, "--seed", "42", "--out", out.to_str().unwrap(), "percolate", "--d", "2", "--L",
            "32", "--threshold", "--trials", "60",
        ];
        assert!(latgrowth(dir.path(), &args).status.success());
        std::fs::read(out).unwrap()
    };
    let a = run("run.json", "1");
    let b = run("run.json", "8");
    assert_eq!(a, b);
    let c = {
        let out = dir.path().join("other.json");
        latgrowth(
            dir.path(),
            &["--seed", "43", "--out", out.to_str().unwrap(), "percolate", "--d", "2", "--L", "32", "--threshold", "--trials", "60"],
        );
        std::fs::read(out).unwrap()
    };
    assert_ne!(a, c);
}

#[test]
fn csv_is_a_projection_of_json() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["enumerate", "--d", "3", "--n-max", "4", "--kind", "tree", "--no-cache"];
    let v = json(&latgrowth(dir.path(), &[&["--output", "json"][..], &args[..]].concat()));
    let o = latgrowth(dir.path(), &[&["--output", "csv"][..], &args[..]].concat());
    let text = stdout(&o);
    let (first, rest) = text.split_once('\n').unwrap();
    let manifest: Value = serde_json::from_str(first.strip_prefix("# manifest: ").unwrap()).unwrap();
    assert_eq!(manifest["config"], v["manifest"]["config"]);
    let mut rdr = csv::Reader::from_reader(rest.as_bytes());
    let counts: Vec<String> = rdr.records().map(|r| r.unwrap()[5].to_string()).collect();
    let want: Vec<String> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(counts, want);
}

#[test]
fn timestamps_are_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let plain = json(&latgrowth(dir.path(), &["--output", "json", "bounds", "lemma", "--d", "2", "--x", "0.5"]));
    assert!(plain["manifest"].get("timestamps").is_none());
    let stamped = json(&latgrowth(dir.path(), &["--timestamps", "--output", "json", "bounds", "lemma", "--d", "2", "--x", "0.5"]));
    assert!(stamped["manifest"]["timestamps"]["started"].as_u64().unwrap() > 0);
}

#[test]
fn help_lists_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let o = latgrowth(dir.path(), &["--help"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for sub in ["enumerate", "eden", "bounds", "percolate", "cache"] {
        assert!(text.contains(sub), "{sub}");
    }
}
