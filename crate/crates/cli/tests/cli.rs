use std::process::{Command, Output};

fn hopfcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcomb"))
        .args(args)
        .env_remove("HOPFCOMB_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hopfcomb(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8").trim_end().to_string()
}

#[test]
fn monomial_product() {
    assert_eq!(
        stdout(&["mul", "wqsym", "M", "M[11]", "M[21]"]),
        "M[1121] + M[1132] + M[2221] + M[2231] + M[3321]"
    );
}

#[test]
fn tree_dimensions() {
    assert_eq!(stdout(&["dims", "td", "--max", "5"]), "1 1 3 11 45 197");
    assert_eq!(stdout(&["dims", "wqsym", "--max", "5"]), "1 1 3 13 75 541");
    assert_eq!(stdout(&["dims", "tc", "--max", "4"]), "1 1 3 9 27");
}

#[test]
fn tree_internal_product() {
    assert_eq!(stdout(&["iprod", "td", "S[221]", "S[122]"]), "S[231]");
    assert_eq!(stdout(&["iprod", "wqsym-dual", "F[212]", "F[122]"]), "F[213]");
}

#[test]
fn coproducts_and_products_across_algebras() {
    assert_eq!(
        stdout(&["comul", "wqsym", "M", "M[32121]"]),
        "1 ⊗ M[32121] + M[11] ⊗ M[211] + M[2121] ⊗ M[1] + M[32121] ⊗ 1"
    );
    assert_eq!(
        stdout(&["mul", "tc", "MC", "MC[1|2,1]", "MC[3,1]"]),
        "MC[1|2,4,1] + MC[1|2,1,3,1] + MC[1|2,1|3,1]"
    );
    assert_eq!(stdout(&["mul", "wqsym", "SW", "SW[1122]", "SW[132]"]), "SW[4455132]");
    assert_eq!(
        stdout(&["mul", "wqsym", "Phi", "Phi[1]", "Phi[13|2]"]),
        "Phi[124|3] + Phi[24|13] + Phi[2|14|3] + Phi[24|3|1]"
    );
    assert_eq!(
        stdout(&["mul", "td", "MM", "MM[21]", "MM[1]"]),
        "MM[211] + MM[212] + MM[213] + MM[312] + MM[321]"
    );
}

#[test]
fn partial_operations() {
    assert_eq!(stdout(&["mul", "wqsym", "M", "M[1]", "M[1]", "--part", "left"]), "M[21]");
    assert_eq!(stdout(&["mul", "wqsym", "M", "M[1]", "M[1]", "--part", "dend-right"]), "M[11] + M[12]");
    assert_eq!(stdout(&["comul", "wqsym", "M", "M[21]", "--half", "left"]), "M[1] ⊗ M[1]");
    assert_eq!(hopfcomb(&["mul", "tc", "MC", "MC[1]", "MC[1]", "--part", "left"]).status.code(), Some(2));
}

#[test]
fn conversions() {
    assert_eq!(
        stdout(&["convert", "wqsym", "SW[212]", "--to", "M"]),
        "M[112] + M[123] + M[212] + M[213]"
    );
    assert_eq!(stdout(&["convert", "wqsym", "M[112] + M[123] + M[212] + M[213]", "--to", "SW"]), "SW[212]");
    assert_eq!(stdout(&["convert", "tc", "MC[1,2|1]", "--to", "MM"]), "MM[2231]");
    let r = stdout(&["convert", "wqsym-dual", "F[12]", "--to", "R"]);
    assert_eq!(stdout(&["convert", "wqsym-dual", &r, "--to", "F"]), "F[12]");
}

#[test]
fn polynomial_realization() {
    assert_eq!(stdout(&["expand", "wqsym", "M[21]", "--alphabet", "3"]), "21 + 31 + 32");
    assert_eq!(stdout(&["expand", "wqsym", "M[13132]", "--alphabet", "5"]).split(" + ").count(), 10);
}

#[test]
fn antipode_of_a_generator() {
    assert_eq!(stdout(&["antipode", "wqsym", "M", "M[12]"]), "M[11] + M[21]");
}

#[test]
fn series_coefficients() {
    assert_eq!(
        stdout(&["series", "conjecture", "--order", "8"]),
        "0 1 0 2 18 170 1794 21082"
    );
    assert_eq!(stdout(&["series", "schroeder", "--order", "6"]), "1 1 3 11 45 197");
}

#[test]
fn lattice_exports() {
    let dot = stdout(&["lattice", "permutohedron", "2", "--dot"]);
    assert!(dot.starts_with("digraph"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["lattice", "trees", "3", "--json"])).expect("json");
    assert_eq!(json["nodes"].as_array().map(Vec::len), Some(11));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["lattice", "segcomp", "3", "--json"])).expect("json");
    assert_eq!(json["nodes"].as_array().map(Vec::len), Some(9));
}

#[test]
fn json_terms() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["mul", "wqsym", "M", "M[1]", "M[1]", "--json"])).expect("json");
    assert_eq!(json.as_array().map(Vec::len), Some(3));
    assert_eq!(json[0]["key"], "11");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["mul", "wqsym", "M", "M[13]", "M[1]"][..],
        &["mul", "wqsym", "Q", "M[1]", "M[1]"],
        &["mul", "wqsym", "M", "M[1"],
        &["frobnicate"],
        &["check", "nonsense"],
        &["iprod", "wqsym", "M[1]", "M[1]"],
    ] {
        assert_eq!(hopfcomb(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn degree_guard_and_override() {
    let big = ["mul", "wqsym", "SW", "SW[1111]", "SW[11111]"];
    assert_eq!(hopfcomb(&big).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcomb"))
        .args(big)
        .env("HOPFCOMB_MAX_DEGREE", "9")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "SW[222211111]");
}

#[test]
fn check_exit_status_tracks_failures() {
    let out = hopfcomb(&["check", "patterns", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = hopfcomb(&["check", "all", "--max-degree", "4", "--seed", "7"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().all(|l| l.starts_with("PASS ") || l.starts_with("FAIL ")));
    let any_failed = text.lines().any(|l| l.starts_with("FAIL "));
    assert_eq!(out.status.code(), Some(if any_failed { 1 } else { 0 }));
}
