use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atilde"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn canon_examples() {
    assert_eq!(
        stdout(&["canon", "-n", "3", "s3 a s3 s1 a"]),
        "h(4,0) a h(3,1) a | [1,1]\nl=5 L=2\n"
    );
    assert_eq!(stdout(&["canon", "-n", "2", ""]), "1 | 1\nl=0 L=0\n");
    // canonical-form input is accepted as well
    assert_eq!(
        stdout(&["canon", "-n", "3", "h(4,0) a h(3,1) a | [1,1]"]),
        "h(4,0) a h(3,1) a | [1,1]\nl=5 L=2\n"
    );
}

#[test]
fn json_round_trips() {
    let text = stdout(&["canon", "-n", "3", "s3 a s3 s1 a", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["length"], 5);
    assert_eq!(v["affine_length"], 2);
    assert_eq!(v["form"]["pairs"], serde_json::json!([[4, 0], [3, 1]]));
    // the word and canonical fields both parse back to the same element
    let canonical = v["canonical"].as_str().unwrap();
    let word = v["word"].as_str().unwrap();
    assert_eq!(
        stdout(&["canon", "-n", "3", canonical]),
        stdout(&["canon", "-n", "3", word])
    );
}

#[test]
fn arithmetic_commands() {
    assert_eq!(stdout(&["len", "-n", "2", "a s1 s2 s1 a"]), "l=5 L=2\n");
    assert_eq!(
        stdout(&["descents", "-n", "3", "s3 a s3 s1 a"]),
        "left: a s3\nright: a s1\n"
    );
    assert_eq!(
        stdout(&["mul", "-n", "2", "s1 a", "a s2"]),
        "1 | [1,2]\nl=2 L=0\n"
    );
    let inv = stdout(&["inv", "-n", "3", "s3 a s3 s1 a"]);
    let back = stdout(&[
        "mul",
        "-n",
        "3",
        "s3 a s3 s1 a",
        inv.lines().next().unwrap(),
    ]);
    assert_eq!(back, "1 | 1\nl=0 L=0\n");
}

#[test]
fn blocks_listing() {
    assert_eq!(
        stdout(&["blocks", "-n", "2", "-m", "2", "--count-only"]),
        "12\n"
    );
    assert_eq!(
        stdout(&["blocks", "-n", "3", "-m", "1", "--count-only"]),
        "12\n"
    );
    let listed = stdout(&["blocks", "-n", "2", "-m", "1"]);
    assert_eq!(listed.lines().count(), 6);
    assert!(listed.lines().all(|l| l.ends_with(" a")));
    assert_eq!(
        stdout(&[
            "blocks",
            "-n",
            "2",
            "-m",
            "1",
            "--max-len",
            "1",
            "--count-only"
        ]),
        "1\n"
    );
}

#[test]
fn tower_commands() {
    assert_eq!(
        stdout(&["embed", "-n", "2", "a"]),
        "h(3,0) a | [3,3]\nl=3 L=1\n"
    );
    assert_eq!(stdout(&["member", "-n", "3", "s3 a s3"]), "true\n");
    assert_eq!(stdout(&["member", "-n", "3", "a"]), "false\n");
    assert_eq!(
        stdout(&["preimage", "-n", "3", "s3 a s3"]),
        "h(3,0) a | 1\nl=1 L=1\n"
    );
    let out = run(&["preimage", "-n", "3", "a"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hecke_product() {
    assert_eq!(
        stdout(&["hecke-mul", "-n", "2", "s1", "s1"]),
        "q * [1 | 1]\n(-1 + q) * [1 | [1,1]]\n"
    );
    assert_eq!(
        stdout(&["hecke-mul", "-n", "2", "s1", "s2"]),
        "1 * [1 | [1,2]]\n"
    );
}

#[test]
fn appendix_is_clean() {
    let out = stdout(&["appendix", "-n", "2", "--max-core", "2"]);
    let summary = out.lines().last().unwrap();
    assert!(
        summary.contains("missing=0 unexpected=0 not_canonical=0"),
        "{summary}"
    );
    // every listed word is its own canonical form
    for line in out.lines().filter(|l| l.contains('\t')).take(40) {
        let word = line.split('\t').nth(1).unwrap();
        let canon = stdout(&["canon", "-n", "2", word, "--json"]);
        let v: serde_json::Value = serde_json::from_str(&canon).unwrap();
        assert_eq!(v["word"].as_str().unwrap(), word);
    }
    let out = stdout(&["appendix", "-n", "3", "--max-core", "1", "--count-only"]);
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn selfcheck_passes() {
    let out = stdout(&["selfcheck"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(run(&["canon", "-n", "1", "a"]).status.code(), Some(2));
    assert_eq!(run(&["canon", "a"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // domain errors
    assert_eq!(run(&["canon", "-n", "2", "s7"]).status.code(), Some(1));
    assert_eq!(
        run(&["canon", "-n", "2", "h(9,9) a | 1"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["appendix", "-n", "4"]).status.code(), Some(1));
}
