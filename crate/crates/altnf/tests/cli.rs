use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("altnf").chain(args.iter().copied());
    let code = altnf::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert!(code == 0 || code == 1, "exit {code}: {err}");
    serde_json::from_str(out.trim()).unwrap()
}

#[test]
fn normalize_square_of_x2() {
    let (code, out, err) = run(&["normalize", "--n", "4", "x2^2"]);
    assert_eq!(code, 0);
    assert!(err.is_empty());
    assert_eq!(out, "tuple\t1,1\nword\tx1 x2 x1\nperm\t(2 4 3)\nrank\t4\n");
}

#[test]
fn normalize_json_and_trace() {
    let v = json(&["normalize", "--n", "4", "x2^2"]);
    assert_eq!(v["tuple"], serde_json::json!([1, 1]));
    assert_eq!(v["word"], "x1 x2 x1");
    assert_eq!(v["perm"], "(2 4 3)");

    let v = json(&["normalize", "--n", "5", "--trace", "x3 x1 x3"]);
    assert!(!v["trace"].as_array().unwrap().is_empty());
    let (code, out, _) = run(&["normalize", "--n", "5", "--trace", "x3 x1 x3"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("step\t")));
}

#[test]
fn enumerate_count_only() {
    let (code, out, _) = run(&["enumerate", "--n", "4", "--count-only"]);
    assert_eq!((code, out.as_str()), (0, "12\n"));
    let (_, out, _) = run(&["enumerate", "--n", "9", "--count-only"]);
    assert_eq!(out, "181440\n");
    let (_, out, _) = run(&["enumerate", "--n", "6", "--range", "350..400", "--count-only"]);
    assert_eq!(out, "10\n");
}

#[test]
fn enumerate_lines_are_rank_ordered() {
    let (code, out, _) = run(&["enumerate", "--n", "4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[11], "11\t2,3\t1,2,3,4");
    for (r, line) in lines.iter().enumerate() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[0], r.to_string());
        let (c, back, _) = run(&["rank", "--n", "4", fields[1]]);
        assert_eq!((c, back.trim()), (0, fields[0]));
    }
}

#[test]
fn enumerate_ranges_partition_the_listing() {
    let (_, all, _) = run(&["enumerate", "--n", "5"]);
    let mut joined = String::new();
    for r in ["0..17", "17..40", "40..60"] {
        joined.push_str(&run(&["enumerate", "--n", "5", "--range", r]).1);
    }
    assert_eq!(joined, all);

    let (_, out, _) = run(&["--format", "json", "enumerate", "--n", "4", "--range", "3..5"]);
    let objs: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(objs.len(), 2);
    assert_eq!(objs[0]["rank"], "3");
}

#[test]
fn encode_evaluate_rank_unrank() {
    let (code, out, _) = run(&["encode", "--n", "5", "(1 2 3)"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("tuple\t1,3,4\nword\tx1\n"));
    let (_, out, _) = run(&["evaluate", "--n", "5", "x3 x1"]);
    assert_eq!(out, "(1 2 4 5 3)\n2,4,1,5,3\n");
    let (_, out, _) = run(&["unrank", "--n", "5", "59"]);
    assert_eq!(out, "2,3,4\n");
    let (_, out, _) = run(&["rank", "--n", "5", "2,3,4"]);
    assert_eq!(out, "59\n");
    let (code, _, err) = run(&["encode", "--n", "4", "(1 2)"]);
    assert_eq!(code, 2);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn evaluate_matches_encode() {
    let (_, out, _) = run(&["evaluate", "--n", "6", "x4 x2^2 x1"]);
    let cycle = out.lines().next().unwrap().to_string();
    let (_, enc, _) = run(&["encode", "--n", "6", &cycle]);
    let (_, norm, _) = run(&["normalize", "--n", "6", "x4 x2^2 x1"]);
    assert_eq!(enc, norm);
}

#[test]
fn convert_round_trip() {
    let (code, out, _) = run(&["convert", "--n", "4", "--to", "carmichael", "x1"]);
    assert_eq!((code, out.as_str()), (0, "v2^2 v1 v2\n"));
    let (_, out, _) = run(&["convert", "--n", "4", "--to", "local", "v1"]);
    assert_eq!(out, "x2 x1 x2^2\n");
    let (code, _, err) = run(&["convert", "--n", "4", "--to", "local", "x1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn verify_solutions_json() {
    let v = json(&["verify", "--n", "6", "--check", "solutions"]);
    assert_eq!(v["check"], "solutions");
    assert_eq!(v["n"], 6);
    assert_eq!(v["passed"], true);
    assert_eq!(v["stats"]["orbits"], 2);
    assert!(v.get("counterexample").is_none());
}

#[test]
fn verify_all_passes() {
    for n in ["5", "6"] {
        let (code, out, err) = run(&["verify", "--n", n, "--all"]);
        assert_eq!(code, 0, "{out}{err}");
        for check in ["relations", "bijectivity", "theorem2", "collisions", "carmichael", "stationarity", "solutions"] {
            assert!(out.lines().any(|l| l.starts_with(&format!("{check}\tn={n}\tPASS"))), "{check}: {out}");
        }
    }
    let v = json(&["verify", "--n", "9", "--all"]);
    assert_eq!(v["passed"], true);
    let checks: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(checks, ["relations", "theorem2", "collisions", "carmichael", "stationarity"]);
}

#[test]
fn exhausted_census_budget_is_an_error() {
    let (code, out, _) = run(&["verify", "--n", "6", "--check", "solutions", "--budget", "1000"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "--n", "7", "--all"]);
    let b = run(&["verify", "--n", "7", "--all"]);
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        vec!["normalize", "x1"],
        vec!["normalize", "--n", "4", "x1 y2"],
        vec!["normalize", "--n", "4", "x3"],
        vec!["verify", "--n", "5"],
        vec!["verify", "--n", "5", "--check", "nothing"],
        vec!["enumerate", "--n", "5", "--range", "9..2"],
        vec!["rank", "--n", "5", "1,1"],
        vec!["unrank", "--n", "4", "12"],
        vec!["frobnicate"],
        vec!["--format", "xml", "rank", "--n", "4", "0,0"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("normalize"));
}
