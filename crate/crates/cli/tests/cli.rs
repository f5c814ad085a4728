use serde_json::Value;
use tilting_cli::acceptance::data_dir;
use tilting_cli::run;

fn go(args: &[&str]) -> (i32, Value, String) {
    let out = run(std::iter::once("tilting").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, v, out.stderr)
}

fn data(rel: &str) -> String {
    data_dir().join(rel).display().to_string()
}

#[test]
fn kapranov_on_grass_2_4() {
    let (code, v, _) = go(&["verify", "kapranov", "--d", "2", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["k0_rank"], "6");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["command"], "verify kapranov");
}

#[test]
fn descent_conic() {
    let (code, v, _) = go(&["descent", "bs", "--degree", "2", "--period", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["total_rank"], "3");
    assert_eq!(v["result"]["end_dim"], "9");
}

#[test]
fn bott_out_of_range_weight_vanishes() {
    let (code, v, _) = go(&["bott", "--space", "grass:2,4", "--sub-dual", "0,-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["kind"], "ZERO");
    let (_, v, _) = go(&["bott", "--space", "proj:2", "--blocks", "2|0,0"]);
    assert_eq!(v["result"]["dimension"], "6");
    let (_, v, _) = go(&["bott", "--space", "flag:1,2;3", "--blocks", "1|0|-1"]);
    assert_eq!(v["result"]["kind"], "CONCENTRATED");
}

#[test]
fn failed_verification_exits_one() {
    let (code, v, _) = go(&["verify", "kapranov", "--d", "2", "--n", "4", "--sub"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
    assert!(!v["result"]["first_violation"].is_null());
    let (code, _, _) = go(&["verify", "kapranov", "--d", "2", "--n", "4", "--sub", "--reverse"]);
    assert_eq!(code, 0);
    let (code, v, _) = go(&["fibration", "plan", "--file", &data("plans/hirzebruch_fixed.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["witness"]["degree"], "1");
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["frobnicate"],
        vec!["verify", "kapranov", "--d", "2"],
        vec!["verify", "kapranov", "--d", "4", "--n", "2"],
        vec!["schur-dim", "--weight", "1,2", "--n", "3"],
        vec!["bott", "--space", "grass:2", "--sub-dual", "1,0"],
        vec!["bott", "--space", "grass:2,4", "--sub-dual", "1,0", "--sub", "1,0"],
        vec!["descent", "bs", "--degree", "4", "--period", "3"],
        vec!["fibration", "search", "--file", "/nonexistent/plan.json"],
        vec!["verify", "beilinson", "--n", "2", "--mult", "1,2"],
        vec!["--jobs", "0", "partitions", "--rows", "2", "--cols", "2"],
    ] {
        let (code, _, err) = go(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let out = run(["tilting", "--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn reports_are_byte_identical_across_runs_and_job_counts() {
    let args = ["verify", "flag", "--steps", "1,2", "--n", "4"];
    let a = run(std::iter::once("tilting").chain(args));
    let b = run(std::iter::once("tilting").chain(args));
    let c = run(["tilting", "--jobs", "1"].into_iter().chain(args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn numbers_are_strings_and_keys_sorted() {
    let out = run(["tilting", "lr", "--a", "2,1", "--b", "2,1"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let terms = v["result"]["terms"].as_array().unwrap();
    let c: u64 = terms.iter().find(|t| t["nu"] == "(3,2,1)").unwrap()["coefficient"].as_str().unwrap().parse().unwrap();
    assert_eq!(c, 2);
}

#[test]
fn every_subcommand_runs() {
    let tower = data("towers/conic_over_conic.json");
    let plan = data("plans/two_stage.json");
    for args in [
        vec!["partitions", "--rows", "2", "--cols", "2", "--order", "size"],
        vec!["schur-dim", "--weight", "2,0,-1", "--n", "3"],
        vec!["euler", "--d", "2", "--n", "4", "--a", "1", "--b", ""],
        vec!["verify", "wedge", "--d", "2", "--n", "5"],
        vec!["verify", "beilinson", "--n", "3", "--mult", "1,2,3,4", "--twist", "-2"],
        vec!["descent", "gbs", "--degree", "4", "--period", "4", "--d", "2"],
        vec!["descent", "bs", "--degree", "4", "--period", "2", "--index-table", "1:4"],
        vec!["descent", "tower", "--file", &tower],
        vec!["fibration", "search", "--file", &plan],
    ] {
        let (code, v, err) = go(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert_eq!(v["engine_version"], env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn tower_summary_counts() {
    let (_, v, _) = go(&["descent", "tower", "--file", &data("towers/conic_over_conic.json")]);
    assert_eq!(v["result"]["summand_count"], "4");
    assert_eq!(v["result"]["split_summand_count"], "9");
    assert_eq!(v["result"]["end_dim"], "81");
}

#[test]
fn pretty_output_is_text() {
    let out = run(["tilting", "--pretty", "verify", "beilinson", "--n", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verdict: pass"));
    assert!(out.stdout.contains("  1 2\n") || out.stdout.contains("1 2\n"));
}

#[test]
fn exit_codes_on_shipped_plans() {
    let dir = data_dir().join("plans");
    let mut files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    for f in files {
        let p = f.display().to_string();
        let (code, v, err) = go(&["fibration", "search", "--file", &p]);
        assert_eq!(code, 0, "{p}: {err}");
        assert_eq!(v["result"]["verified"], true);
    }
}
