use std::process::Command;

fn qp(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qp"))
        .args(args)
        .env_remove("QP_CACHE")
        .output()
        .unwrap()
}

fn error_kind(out: &std::process::Output) -> String {
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn malformed_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.pc");
    std::fs::write(&f, "p=3; gens a,b; [a,q]=b").unwrap();
    let out = qp(&["report", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!error_kind(&out).is_empty());
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_corpus_entry() {
    let out = qp(&["corpus", "show", "no-such-group"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "not-found");
}

#[test]
fn corpus_show_and_list() {
    let out = qp(&["corpus", "show", "extraspecial-27"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("[b,a]=c"));
    let list = String::from_utf8(qp(&["corpus", "list"]).stdout).unwrap();
    for name in [
        "extraspecial-27-e9",
        "codegree-gap-p5",
        "m-3-5",
        "phi3-2111e-p3",
        "alpha-beta-p5",
        "metacyclic-5-6",
    ] {
        assert!(list.contains(name), "{name}");
    }
}

#[test]
fn budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("m81.pc");
    std::fs::write(&f, "p=3; gens a,b; a^27=1; b^3=1; [a,b]=a^9").unwrap();
    let out = qp(&["--max-group-order", "50", "cmin", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_kind(&out), "budget");
    let out = qp(&["--max-group-order", "20001", "cmin", "--group", "c3"]);
    assert_eq!(out.status.code(), Some(3));
    // bundled entries may exceed the default ceiling
    let out = qp(&["cmin", "--group", "codegree-gap-p5", "--max-group-order", "100"]);
    assert!(out.status.success());
}

#[test]
fn reports_are_deterministic_and_cache_neutral() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let a = qp(&["report", "--group", "heis27xc3"]);
    let b = qp(&["report", "--group", "heis27xc3"]);
    let miss = qp(&[
        "--cache",
        cache.to_str().unwrap(),
        "report",
        "--group",
        "heis27xc3",
    ]);
    let hit = Command::new(env!("CARGO_BIN_EXE_qp"))
        .args(["report", "--group", "heis27xc3"])
        .env("QP_CACHE", &cache)
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, miss.stdout);
    assert_eq!(a.stdout, hit.stdout);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "qp-report/1");
    assert_eq!(v["c"], 12);
    assert!(v.get("timing").is_none());
}

#[test]
fn report_from_file_matches_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("g.pc");
    std::fs::write(&f, "p=3; gens a,b,c; [b,a]=c").unwrap();
    let out = qp(&[
        "--out",
        dir.path().join("r.json").to_str().unwrap(),
        "report",
        f.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(v["c"], 9);
    assert_eq!(v["witnesses"][0]["members"][0]["cod"], 9);
}

#[test]
fn verify_table_cod_classify() {
    let out = qp(&["verify", "--group", "m-p-n", "--p", "3", "--n", "3..5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 3);

    let out = qp(&["table", "--group", "codegree-gap-p3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("group,order,c,witness,sum_cod,equal"));
    assert!(text.contains("codegree-gap-p3,81,9,0,27,false"));

    let out = qp(&["cod", "--group", "extraspecial-27-e9"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cod_set"], serde_json::json!([1, 3, 9]));

    let out = qp(&["classify", "--group", "c3-wr-c3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["is_gvz"], false);
    assert_eq!(v["is_maximal_class"], true);
}
