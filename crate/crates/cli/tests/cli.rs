use std::process::{Command, Output};

use serde_json::Value;

fn lapmult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lapmult"))
        .args(args)
        .env_remove("LAPMULT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = lapmult(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), v)
}

#[test]
fn families_lists_every_name() {
    let (code, v) = report(&["families"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"gnr") && names.contains(&"complete_multipartite"));
    assert_eq!(names.len(), 18);
}

#[test]
fn spectrum_of_path() {
    let (code, v) = report(&["spectrum", "--graph6", "Ch"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "spectrum");
    assert_eq!(v["result"]["charpoly"], "x^4 - 6x^3 + 10x^2 - 4x");
    assert_eq!(v["result"]["residual"], "x^2 - 4x + 2");
    assert_eq!(v["result"]["numeric_agrees"], true);
}

#[test]
fn classify_examples() {
    let (code, v) = report(&["classify", "--graph6", "Ch"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["class"], "small-order");
    assert_eq!(v["result"]["matched_family"]["label"], "P_4");

    let (_, v) = report(&["classify", "--family", "complete", "6"]);
    assert_eq!(v["result"]["k_max"], 5);
    assert_eq!(v["result"]["class"], "not-member");
    assert_eq!(v["result"]["matched_family"]["label"], "K_6");

    let (_, v) = report(&[
        "classify",
        "--family",
        "complete_multipartite",
        "1",
        "1",
        "2",
        "2",
    ]);
    assert_eq!(v["result"]["class"], "G1");
    assert_eq!(v["result"]["matched_family"]["label"], "C_4∇K_2");

    let (_, v) = report(&["classify", "--family", "C", "4", "--rule", "any"]);
    assert_eq!(v["result"]["class"], "small-order");
}

#[test]
fn catalog_examples() {
    let (code, v) = report(&["catalog", "--n", "5", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["entries"].as_array().unwrap().len(), 3);

    let (_, v) = report(&["catalog", "--n", "8", "--k", "5"]);
    let labels: Vec<&str> = v["result"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["label"].as_str().unwrap())
        .collect();
    for r in 1..4 {
        assert!(
            labels.contains(&format!("G_{{4,{r}}}").as_str()),
            "{labels:?}"
        );
    }
    assert!(v["result"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["match"] == true));

    let (_, v) = report(&["catalog", "--n", "6", "--k", "5"]);
    assert_eq!(v["result"]["entries"].as_array().unwrap().len(), 1);
    assert_eq!(v["result"]["entries"][0]["graph6"], "E~~w");
}

#[test]
fn verify_exit_codes() {
    let (code, v) = report(&["verify", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["set_equal"], true);

    // the enumerated order-5 set is larger than the small-order list
    let (code, v) = report(&["verify", "--n", "5"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["found_members"].as_array().unwrap().len(), 8);

    let (code, v) = report(&["verify", "--n", "9"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");

    let (code, _) = report(&["verify", "--n", "6", "--jobs", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(
        lapmult(&["spectrum", "--graph6", "C~x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        lapmult(&["spectrum", "--family", "nonsense", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lapmult(&["spectrum", "--family", "cycle", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lapmult(&["classify", "--graph6", "C?"]).status.code(),
        Some(2)
    );
    assert_eq!(lapmult(&["spectrum"]).status.code(), Some(2));
    assert_eq!(
        lapmult(&["spectrum", "--graph6", "Ch", "--family", "path", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn file_input_and_quiet() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    std::fs::write(&path, "# two graphs\nCh\n\nC~\n").unwrap();
    let (code, v) = report(&["spectrum", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"].as_array().unwrap().len(), 2);
    assert_eq!(v["input"][1]["line"], 4);

    let out = lapmult(&["verify", "--n", "4", "--quiet"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("verify n=4: PASS"), "{text}");
}

#[test]
fn cache_dir_from_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let flag = dir.path().join("flag");
    let (code, v) = report(&["verify", "--n", "5", "--cache", flag.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["input"]["cache"], flag.to_str().unwrap());
    assert!(flag.join("order-5.g6").exists());

    let env = dir.path().join("env");
    let out = Command::new(env!("CARGO_BIN_EXE_lapmult"))
        .args(["verify", "--n", "4", "--quiet"])
        .env("LAPMULT_CACHE_DIR", &env)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(env.join("order-4.g6").exists());
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    let a = strip(report(&["verify", "--n", "6"]).1);
    let b = strip(report(&["verify", "--n", "6"]).1);
    assert_eq!(a, b);
}
