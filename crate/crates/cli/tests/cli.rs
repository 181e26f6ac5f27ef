//! End-to-end tests of the `fnq` binary: output shapes, exit codes, and
//! run-to-run determinism.

use std::process::{Command, Output};

fn fnq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fnq"))
        .args(args)
        .env_remove("FNQ_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn eval_prints_generator_images() {
    let out = fnq(&["eval", "--rank", "3", "rho(1,2)^(eps(1)*eps(2))"]);
    assert!(out.status.success());
    assert!(out.stderr.is_empty(), "no stderr on success");
    assert_eq!(stdout(&out), "a1 -> a2*a1\na2 -> a2\na3 -> a3\n");
}

#[test]
fn eval_json_includes_the_abelianized_matrix() {
    let out = fnq(&["eval", "--rank", "3", "rho(1,2)", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rank"], 3);
    assert_eq!(doc["det"], 1);
    assert_eq!(doc["images"][0], "a1*a2");
    assert_eq!(doc["abelianized"][0], serde_json::json!([1, 1, 0]));
    assert_eq!(doc["inverse_images"][0], "a1*a2^-1");
}

#[test]
fn eval_rejects_bad_expressions() {
    let out = fnq(&["eval", "--rank", "3", "frobenius(1)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn orders_compare_reports_the_exceptional_coincidence() {
    let out = fnq(&["orders", "compare", "A:3:2", "alt:8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("20160").count(), 2);
    assert!(text.contains("orders agree"));

    let out = fnq(&["orders", "compare", "A:4:2", "alt:8", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["all_equal"], false);
    assert_eq!(doc["items"][0]["order"], "9999360");
}

#[test]
fn orders_compare_accepts_sporadic_and_tits_tokens() {
    let out = fnq(&["orders", "compare", "spo:Fi22", "ln2:7", "tits"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("64561751654400"));
    assert!(text.contains("163849992929280"));
    assert!(text.contains("17971200"));
    assert!(text.contains("orders differ"));
}

#[test]
fn orders_appendix_csv_rows() {
    let out = fnq(&["orders", "appendix", "--nmax", "12", "--output", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lemma,n,lhs,rhs,pass"));
    assert!(text.contains("a,8,32,28,true"));
    assert!(text.lines().skip(1).all(|l| l.ends_with("true")));
}

#[test]
fn kbound_small_table_and_formula() {
    let out = fnq(&["kbound", "--n", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("k = 14"));

    let out = fnq(&["kbound", "--n", "12"]);
    let text = stdout(&out);
    assert!(text.contains("k = 220"));
    assert!(text.contains("r* = 3"));

    let out = fnq(&["kbound", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_classes_json_psp43() {
    let out = fnq(&["group", "classes", "--target", "psp4:3", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["group_order"], 25920);
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 20);
    let order5: Vec<&serde_json::Value> = classes
        .iter()
        .filter(|c| c["order"] == 5)
        .collect();
    assert_eq!(order5.len(), 1);
    assert_eq!(order5[0]["commuting_count"], 4);
    assert_eq!(order5[0]["real"], true);
}

#[test]
fn group_classes_handles_signed_permutation_targets() {
    let out = fnq(&["group", "classes", "--target", "dprime:4", "--output", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("order,size,centralizer,real,commuting_count"));
    let total: u64 = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 96, "class sizes partition D'_4");
}

#[test]
fn group_classes_rejects_unknown_targets() {
    let out = fnq(&["group", "classes", "--target", "bogus:5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn closure_cap_env_variable_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_fnq"))
        .args(["group", "classes", "--target", "alt:5"])
        .env("FNQ_CAP", "30")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap 30 exceeded"), "got: {err}");
}

#[test]
fn verify_selected_suites_exit_zero() {
    let out = fnq(&["verify", "relations", "bounds"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[PASS] relations/steinberg-rho"));
    assert!(text.contains("[FLAG] bounds/kbound-range-discrepancy"));
    assert!(text.contains("0 fail"));
}

#[test]
fn verify_rejects_unknown_suites_and_bad_config() {
    let out = fnq(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fnq(&["verify", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_runs_are_byte_identical_modulo_timestamp() {
    let strip = |text: &str| -> String {
        text.lines()
            .filter(|l| !l.contains("timestamp_unix_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let first = fnq(&["verify", "--json"]);
    assert!(first.status.success());
    let second = fnq(&["verify", "--json"]);
    assert!(second.status.success());
    assert_eq!(strip(&stdout(&first)), strip(&stdout(&second)));

    let doc: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(doc["summary"]["fail"], 0);
    assert!(doc["summary"]["flagged"].as_u64().unwrap() >= 2);
    // Schema: every report row carries exactly the documented fields.
    for row in doc["reports"].as_array().unwrap() {
        let obj = row.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["claim", "evidence", "status", "suite"]);
    }
}
