use lukasiewicz::cli::run_args;
use serde_json::Value;

fn lukas(args: &[&str]) -> (i32, String, String) {
    let out = run_args(std::iter::once("lukas").chain(args.iter().copied()));
    (out.code, out.stdout, out.stderr)
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = lukas(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).unwrap()
}

#[test]
fn stats_reports_statistics() {
    let v = json(&["stats", "--path", "U1 U0 D D"]);
    assert_eq!(v["area"], 1);
    assert_eq!(v["depth"], 0);
    assert_eq!(v["area_vector"], serde_json::json!([0, 1]));
    assert_eq!(v["steps"], serde_json::json!([1, 0, -1, -1]));
    assert_eq!(v["multiset"], "0:1,1:1");

    let v = json(&["stats", "--path", "D"]);
    assert_eq!(v["area_vector"], serde_json::json!([]));
    assert_eq!(v["depth_vector"], serde_json::json!([]));
    assert_eq!((v["area"].as_u64(), v["depth"].as_u64()), (Some(0), Some(0)));

    let v = json(&["stats", "--path", "U1 U2 D D D U0 D"]);
    assert_eq!(
        v["matching"],
        serde_json::json!([
            {"down": 3, "up": 2, "rank": 1},
            {"down": 4, "up": 2, "rank": 2},
            {"down": 5, "up": 1, "rank": 1},
        ])
    );
    assert_eq!(v["depth_vector"], serde_json::json!([0, 0, 1]));

    // JSON path input
    assert_eq!(json(&["stats", "--path", "[1,0,-1,-1]"])["area"], 1);
}

#[test]
fn stats_rejects_invalid_paths() {
    let (code, stdout, stderr) = lukas(&["stats", "--path", "U1 D"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("final height"), "{stderr}");
    assert_eq!(lukas(&["stats", "--path", "U1 X D"]).0, 2);
}

#[test]
fn map_applies_each_transformation() {
    let cases: [(&[&str], &str); 7] = [
        (&["--path", "U1 U0 D D", "--apply", "tau"], "((()) ())"),
        (&["--path", "U1 U1 D D D", "--apply", "psi"], "U1 D U1 D D"),
        (&["--path", "U1 U1 D D D", "--apply", "phi"], "U1 D U1 D D"),
        (&["--tree", "()", "--apply", "mirror"], "()"),
        (&["--tree", "((()) ())", "--apply", "lambda"], "U1 U0 D D"),
        (&["--tree", "((()) (() () ()))", "--apply", "swap"], "((() () ()) (()))"),
        (&["--tree", "[[[]],[]]", "--apply", "mirror"], "(() (()))"),
    ];
    for (args, want) in cases {
        let mut full = vec!["map"];
        full.extend_from_slice(args);
        let (code, stdout, stderr) = lukas(&full);
        assert_eq!(code, 0, "{args:?}: {stderr}");
        assert_eq!(stdout, want, "{args:?}");
    }
}

#[test]
fn map_rejects_incompatible_inputs() {
    for args in [
        &["map", "--path", "D", "--apply", "mirror"][..],
        &["map", "--tree", "()", "--apply", "tau"],
        &["map", "--tree", "()", "--apply", "psi"],
        &["map", "--path", "D", "--tree", "()", "--apply", "tau"],
        &["map", "--apply", "tau"],
        &["map", "--path", "D", "--apply", "rotate"],
        &["map", "--tree", "(()", "--apply", "mirror"],
    ] {
        assert_eq!(lukas(args).0, 2, "{args:?}");
    }
}

#[test]
fn poly_families() {
    let v = json(&["poly", "--multiset", "1:3"]);
    assert_eq!(v["text"], "q^3 + q^2*t + q*t + q*t^2 + t^3");
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["poly"][0], serde_json::json!({"q": 3, "t": 0, "c": "1"}));

    let v = json(&["poly", "--multiset", ""]);
    assert_eq!(v["text"], "1");
    assert_eq!(v["symmetric"], true);

    let v = json(&["poly", "--multiset", "", "--first", "1", "--last", "1"]);
    assert_eq!(v["text"], "q + t");
    assert_eq!(v["symmetric"], true);

    let v = json(&["poly", "--profile", "0,1"]);
    assert_eq!(v["text"], "1");
    let v = json(&["poly", "--profile", "1,1"]);
    assert_eq!(v["text"], "q + t");
}

#[test]
fn poly_rejects_malformed_input() {
    for args in [
        &["poly", "--multiset", "1"][..],
        &["poly", "--multiset", "1:0"],
        &["poly", "--profile", "1,-1"],
        &["poly", "--profile", "1", "--first", "2"],
        &["poly"],
        &["poly", "--multiset", "1:1", "--profile", "1"],
    ] {
        assert_eq!(lukas(args).0, 2, "{args:?}");
    }
}

#[test]
fn verify_small_bounds() {
    let v = json(&["verify", "--max-steps", "1"]);
    assert_eq!(v["overall"], true);
    let v = json(&["verify", "--max-steps", "8", "--series-order", "3", "--series-degree", "2"]);
    assert_eq!(v["overall"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 20);
    for c in checks {
        assert!(c["name"].is_string() && c["instances"].is_u64() && c["passed"] == true);
    }
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"symmetric_first_and_last_fixed"));
    assert_eq!(lukas(&["verify", "--max-steps", "0"]).0, 2);
    assert_eq!(lukas(&["verify", "--max-steps", "x"]).0, 2);
}

#[test]
fn series_output_and_check() {
    let v = json(&["series", "--order", "0", "--max-degree", "3"]);
    assert_eq!(v, serde_json::json!([{"multiset": "", "poly": [{"q": 0, "t": 0, "c": "1"}]}]));

    let v = json(&["series", "--order", "2", "--max-degree", "1", "--check"]);
    let entry = v
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["multiset"] == "1:2")
        .unwrap();
    assert_eq!(
        entry["poly"],
        serde_json::json!([{"q": 1, "t": 0, "c": "1"}, {"q": 0, "t": 1, "c": "1"}])
    );

    let (code, _, stderr) = lukas(&["series", "--order", "5", "--max-degree", "3", "--check"]);
    assert_eq!(code, 0, "{stderr}");
    assert_eq!(lukas(&["series", "--order", "2"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["series", "--order", "3", "--max-degree", "2"][..],
        &["poly", "--multiset", "0:1,1:2,2:1"],
        &["verify", "--max-steps", "6"],
    ] {
        assert_eq!(lukas(args), lukas(args));
    }
}
