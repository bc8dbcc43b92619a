use std::process::{Command, Output};

fn braidinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn invariants_text_report() {
    let out = braidinv(&["invariants", "--word", "-1 4 3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-144"), "{text}");
    assert!(text.contains("(6, -144)"), "{text}");
}

#[test]
fn invariants_json_report() {
    let out = braidinv(&["invariants", "--n", "3", "--word", "-2 1 2", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let compact: String = text.split_whitespace().collect();
    assert!(compact.contains(r#""permutation":[3,2,1]"#), "{text}");
    assert!(compact.contains(r#""pp":[2,"0"]"#), "{text}");
    assert!(compact.contains(r#""q":"1""#), "{text}");
}

#[test]
fn empty_word_with_explicit_strands() {
    let out = braidinv(&["invariants", "--n", "3", "--word", "", "--json"]);
    assert!(out.status.success());
    let compact: String = stdout(&out).split_whitespace().collect();
    assert!(compact.contains(r#""p":"0""#));
    assert!(compact.contains(r#""q":"1""#));
    assert!(compact.contains(r#""is_pure":true"#));
}

#[test]
fn q_of_a_negative_word() {
    let out = braidinv(&["invariants", "--word", "-2 -2 -2 1", "--json"]);
    let compact: String = stdout(&out).split_whitespace().collect();
    assert!(compact.contains(r#""q":"-1""#));
}

#[test]
fn bad_words_exit_2() {
    for word in ["1 x", "0", "5"] {
        let out = braidinv(&["invariants", "--n", "3", "--word", word]);
        assert_eq!(out.status.code(), Some(2), "{word:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn order_guard_exits_3() {
    let out = braidinv(&["invariants", "--word", "-1 4 3", "--max-order", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sieve_two_strands() {
    let out = braidinv(&["sieve", "--n", "2", "--max-len", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4, "{text}");
    assert!(text.ends_with("strands 2 max-len 2: 7 words in 3 buckets\n"), "{text}");

    let out = braidinv(&["sieve", "--n", "2", "--max-len", "0", "--json"]);
    assert!(stdout(&out).contains(r#""bucket_count":1"#));
}

#[test]
fn verify_passes_and_is_reproducible() {
    let args = ["verify", "--n", "4", "--trials", "500", "--seed", "42"];
    let first = braidinv(&args);
    assert!(first.status.success(), "{}", stdout(&first));
    assert!(stdout(&first).contains("0 failing"));
    assert_eq!(first.stdout, braidinv(&args).stdout);
}

#[test]
fn verify_zero_trials() {
    let out = braidinv(&["verify", "--trials", "0"]);
    assert!(out.status.success());
}

#[test]
fn verify_rejects_one_strand() {
    assert_eq!(braidinv(&["verify", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["sieve", "--n", "3", "--max-len", "4", "--json"][..],
        &["invariants", "--word", "1 2 -3 2", "--json"][..],
    ] {
        assert_eq!(braidinv(args).stdout, braidinv(args).stdout);
    }
}
