use std::process::{Command, Output};

use awdaha::algebras::delta_q;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_awdaha")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normalize_prints_the_reduced_form() {
    let o = run(&["normalize", "--algebra", "delta", "B*A"]);
    assert_eq!(o.status.code(), Some(0));
    let printed = delta_q().parse(stdout(&o).trim()).unwrap();
    assert_eq!(printed, delta_q().parse("q^2*A*B + q*(q^2-q^-2)*C - q*(q-q^-1)*gamma").unwrap());
}

#[test]
fn basis_count() {
    let o = run(&["basis", "--algebra", "hhat", "--len", "2", "--count"]);
    assert_eq!(stdout(&o).trim(), "42");
    let o = run(&["basis", "--algebra", "delta", "--len", "2", "--count"]);
    assert_eq!(stdout(&o).trim(), "27");
    let o = run(&["basis", "--algebra", "delta", "--len", "1", "--up-to"]);
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "psi"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn verify_json_is_structured() {
    let o = run(&["--format", "json", "verify", "confluence-delta"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["name"], "confluence-delta");
}

#[test]
fn parse_and_fuel_errors() {
    let o = run(&["normalize", "--algebra", "delta", "A*Q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 2"));
    let o = run(&["normalize", "--algebra", "hhat", "--fuel", "2", "X^-1*Y^-1*t0*X*Y"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(run(&["normalize"]).status.code(), Some(2));
}

#[test]
fn coeff_matrix_formats() {
    let o = run(&["coeff-matrix", "C"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().contains("X^-1"));
    assert!(text.contains("-q^-1*t0^-1*T3"));
    let o = run(&["--format", "json", "coeff-matrix", "C"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn psi_and_braid_verbs() {
    let o = run(&["psi", "A"]);
    assert_eq!(stdout(&o).trim(), "Y + Y^-1");
    let o = run(&["braid", "rho", "Y"]);
    assert_eq!(stdout(&o).trim(), "X");
    let o = run(&["braid", "tau", "--algebra", "delta", "C"]);
    assert_eq!(stdout(&o).trim(), "C");
}

#[test]
fn exported_spec_checks_confluent() {
    let dir = std::env::temp_dir().join(format!("awdaha-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hhat.spec");
    let path_s = path.to_str().unwrap();
    assert_eq!(run(&["export-spec", "--algebra", "hhat", "-o", path_s]).status.code(), Some(0));
    let o = run(&["confluence", "--spec", path_s]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("111 overlaps, 0 unresolved"));

    // a broken coefficient is a verification failure
    let text = std::fs::read_to_string(&path).unwrap();
    let broken = text.replacen("q^2*Y*X", "q^3*Y*X", 1);
    assert_ne!(broken, text);
    std::fs::write(&path, broken).unwrap();
    assert_eq!(run(&["confluence", "--spec", path_s]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn printed_output_reparses() {
    let o = run(&["normalize", "--algebra", "hhat", "theta*X"]);
    let h = awdaha::algebras::hhat_q();
    let printed = h.parse(stdout(&o).trim()).unwrap();
    assert_eq!(printed, h.eval("theta*X").unwrap());
}
