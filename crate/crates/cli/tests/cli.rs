use std::process::{Command, Output};

use quintic::verify_quintic;
use quintic_cli::record::{read_csv, read_json_lines};

fn quintic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_json_two_records() {
    let o = quintic(&["gen", "--count", "2", "--format", "json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].contains(r#""a":"3""#));
    assert!(lines[1].contains(r#""b_re":"-2","b_im":"3""#));
}

#[test]
fn gen_csv_single_row() {
    let o = quintic(&["gen", "-n", "1", "-f", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "n,a,b_re,b_im,c_re,c_im,sign,verified\n0,1,0,1,0,1,1,true\n"
    );
}

#[test]
fn gen_rejects_zero_count() {
    let o = quintic(&["gen", "--count", "0"]);
    assert!(!o.status.success());
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn gen_default_count_is_ten() {
    let o = quintic(&["gen"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 10);
}

#[test]
fn emitted_records_reparse_and_verify() {
    let json = quintic(&["gen", "-n", "60"]);
    let records = read_json_lines(json.stdout.as_slice()).unwrap();
    assert_eq!(records.len(), 60);
    for r in &records {
        assert!(r.verified);
        assert!(verify_quintic(&r.to_solution().unwrap()), "n = {}", r.n);
    }

    let csv = quintic(&["gen", "-n", "60", "-f", "csv"]);
    let from_csv = read_csv(csv.stdout.as_slice()).unwrap();
    assert_eq!(from_csv, records);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gen", "-n", "40"][..],
        &["gen", "-n", "40", "--parallel"][..],
        &["identity"][..],
        &["verify", "-n", "20"][..],
        &["gf", "-w", "b_raw", "-n", "30"][..],
    ] {
        let a = quintic(args);
        let b = quintic(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn parallel_gen_matches_sequential() {
    let seq = quintic(&["gen", "-n", "80"]);
    let par = quintic(&["gen", "-n", "80", "--parallel"]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn verify_small_counts() {
    let o = quintic(&["verify", "--count", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("example n=1: (3)^5 + (-2+3i)^5 = (2+3i)^5 - 1  ok"));
    assert!(text.contains("example n=2: (13)^5 + (-6+11i)^5 = (6+11i)^5 + 1  ok"));
    assert!(text.contains("example n=3: (47)^5 + (-24+41i)^5 = (24+41i)^5 - 1  ok"));
    assert!(text.contains("quintic          4/4 passed"));

    let o = quintic(&["verify", "-n", "1"]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("example"));
}

#[test]
fn identity_succeeds() {
    let o = quintic(&["identity"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("odd part in x: 0 monomials"));
}

#[test]
fn identity_detects_injected_sign_error() {
    let o = quintic(&["identity", "--inject-sign-error"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).contains("odd part in x: 0 monomials"));
}

#[test]
fn gf_text_output() {
    let o = quintic(&["gf", "--which", "a", "--count", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0 1\n1 3\n2 13\n3 47\n");

    let o = quintic(&["gf", "-w", "c", "-n", "2"]);
    assert_eq!(stdout(&o), "0 i\n1 2+3i\n");

    let o = quintic(&["gf", "-w", "a_raw", "-n", "3"]);
    assert_eq!(stdout(&o), "0 1\n1 6\n2 52\n");
}

#[test]
fn gf_structured_output() {
    let o = quintic(&["gf", "-w", "b", "-n", "2", "-f", "json"]);
    assert_eq!(
        stdout(&o),
        "{\"n\":0,\"re\":\"0\",\"im\":\"1\"}\n{\"n\":1,\"re\":\"-2\",\"im\":\"3\"}\n"
    );
    let o = quintic(&["gf", "-w", "b", "-n", "2", "-f", "csv"]);
    assert_eq!(stdout(&o), "n,re,im\n0,0,1\n1,-2,3\n");
}

#[test]
fn gf_rejects_unknown_series() {
    let o = quintic(&["gf", "-w", "d"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}
