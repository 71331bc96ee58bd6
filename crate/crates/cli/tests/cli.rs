use std::path::Path;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
}

fn teamklm(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_teamklm")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn machine(args: &[&str]) -> Run {
    let mut all = vec!["--format", "machine"];
    all.extend_from_slice(args);
    let r = teamklm(&all);
    if r.code != 2 {
        let results = r.stdout.lines().filter(|l| l.starts_with("RESULT: ")).count();
        assert_eq!(results, 1, "{}", r.stdout);
        assert!(
            r.stdout.lines().all(|l| l.starts_with("RESULT: ") || l.starts_with("WITNESS: ")),
            "{}",
            r.stdout
        );
    }
    r
}

fn result(r: &Run) -> &str {
    r.stdout.lines().find_map(|l| l.strip_prefix("RESULT: ")).unwrap()
}

fn canon(dir: &Path, kind: &str, vars: &[&str]) -> String {
    let path = dir.join(format!("{kind}.model"));
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["canon", "--kind", kind, "--out", &p];
    if !vars.is_empty() {
        args.push("--vars");
        args.extend_from_slice(vars);
    }
    assert_eq!(teamklm(&args).code, 0);
    p
}

#[test]
fn model_checking_a_team() {
    let r = machine(&["mc", "--vars", "p", "q", "r", "--team", "100,010", "--formula", "dep(p;q)"]);
    assert_eq!((r.code, result(&r)), (0, "SAT"));
    let r = machine(&["mc", "--vars", "p", "q", "r", "--team", "100,010", "--formula", "dep(p)"]);
    assert_eq!((r.code, result(&r)), (1, "UNSAT"));
    let r = machine(&["mc", "--vars", "p", "--team", "-", "--formula", "F"]);
    assert_eq!((r.code, result(&r)), (0, "SAT"));
    assert_eq!(machine(&["mc", "--vars", "p", "--team", "1", "--formula", "p &"]).code, 2);
    assert_eq!(machine(&["mc", "--vars", "p", "--team", "1", "--formula", "q"]).code, 2);
}

#[test]
fn team_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("team.txt");
    std::fs::write(&path, "100,010\n").unwrap();
    let r = machine(&[
        "mc", "--vars", "p", "q", "r", "--team-file", path.to_str().unwrap(), "--formula", "dep(r)",
    ]);
    assert_eq!(result(&r), "SAT");
}

#[test]
fn listing_models() {
    let r = machine(&["models", "--vars", "p", "--formula", "dep(p)"]);
    assert_eq!(result(&r), "3 MODELS");
    let w: Vec<&str> = r.stdout.lines().filter_map(|l| l.strip_prefix("WITNESS: ")).collect();
    assert_eq!(w, ["-", "0", "1"]);
}

#[test]
fn entailment_on_the_or_counterexample_model() {
    let dir = tempfile::tempdir().unwrap();
    let pq = canon(dir.path(), "pq", &[]);
    let r = machine(&["entail", "--model", &pq, "--lhs", "p", "--rhs", "q"]);
    assert_eq!((r.code, result(&r)), (0, "ENTAILS"));
    let r = machine(&["entail", "--model", &pq, "--lhs", "p|~p", "--rhs", "q"]);
    assert_eq!((r.code, result(&r)), (1, "NOT-ENTAILS"));
    assert!(r.stdout.contains("WITNESS: t_00_11 = 00,11"));
    let r = machine(&["verify", "--model", &pq, "--property", "system-p"]);
    assert_eq!(r.code, 1);
    assert_eq!(result(&r), "PROPERTY system-p FAILS (Or) phi=p psi=~p gamma=q");
    let r = machine(&["verify", "--model", &pq, "--property", "system-c"]);
    assert_eq!((r.code, result(&r)), (0, "PROPERTY system-c HOLDS"));
}

#[test]
fn property_verification() {
    let dir = tempfile::tempdir().unwrap();
    let sub = canon(dir.path(), "sub", &["p", "q"]);
    let r = machine(&["verify", "--model", &sub, "--property", "triangle"]);
    assert_eq!((r.code, result(&r)), (0, "PROPERTY triangle HOLDS"));
    let cs = canon(dir.path(), "circstar", &[]);
    let r = machine(&["verify", "--model", &cs, "--property", "triangle"]);
    assert_eq!((r.code, result(&r)), (1, "PROPERTY triangle FAILS state t_0_1 = 0,1"));
    let r = machine(&["verify", "--model", &cs, "--property", "star", "--lhs", "p", "--rhs", "~p"]);
    assert_eq!(r.code, 1);
    let r = machine(&["verify", "--model", &cs, "--property", "system-p", "--no-dep"]);
    assert_eq!(r.code, 0);
    let r = machine(&["counterexample-or", "--model", &cs]);
    assert_eq!((r.code, result(&r)), (0, "FOUND"));
    let r = machine(&["counterexample-or", "--model", &sub]);
    assert_eq!((r.code, result(&r)), (1, "NONE"));
}

#[test]
fn canonical_files_are_byte_stable() {
    for kind in ["pq", "circstar"] {
        let a = teamklm(&["canon", "--kind", kind]);
        let b = teamklm(&["canon", "--kind", kind]);
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout);
    }
    let a = teamklm(&["canon", "--kind", "sup", "--vars", "p", "q"]);
    assert_eq!(a.stdout, teamklm(&["canon", "--kind", "sup", "--vars", "p", "q"]).stdout);
    assert_eq!(teamklm(&["canon", "--kind", "sub"]).code, 2);
    assert_eq!(teamklm(&["canon", "--kind", "sub", "--vars", "a", "b", "c", "d"]).code, 2);
}

#[test]
fn lex_netlist_matches_reversed_string_order() {
    let r = teamklm(&["gen-lex", "--n", "2", "--variant", "rlex", "--strict"]);
    assert_eq!(r.code, 0);
    let c = teamklm::circuits::parse_netlist(&r.stdout).unwrap();
    for x in 0..4u32 {
        for y in 0..4u32 {
            let (a, b) = (format!("{x:02b}"), format!("{y:02b}"));
            let bits: Vec<bool> = a.chars().chain(b.chars()).map(|ch| ch == '1').collect();
            assert_eq!(c.eval(&bits).unwrap()[0], b < a, "{a} {b}");
        }
    }
}

#[test]
fn succinct_entailment_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = teamklm::Domain::new(["x1", "x2"]).unwrap();
    let path = dir.path().join("rlex.succ");
    teamklm::succinct::save_succinct(&teamklm::succinct::SuccinctModel::rlex_identity(&d), &path).unwrap();
    let p = path.to_str().unwrap();
    for algo in ["generic", "rlex"] {
        let r = machine(&["succ-entail", "--model", p, "--lhs", "x1|x2", "--rhs", "x2", "--algo", algo]);
        assert_eq!((r.code, result(&r)), (0, "ENTAILS"));
        let r = machine(&["succ-entail", "--model", p, "--lhs", "x1&~x2", "--rhs", "x2", "--algo", algo]);
        assert_eq!((r.code, result(&r)), (1, "NOT-ENTAILS"));
        assert!(r.stdout.contains("WITNESS: 10"));
    }
}

#[test]
fn repro_examples_pass() {
    for ex in ["dep-atoms", "violate-or", "tpl-star", "reconstruction", "lex-circuit", "olms-reduction"] {
        let r = machine(&["repro", "--example", ex]);
        assert_eq!((r.code, result(&r)), (0, "PASS"), "{ex}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(teamklm(&["frobnicate"]).code, 2);
    assert_eq!(teamklm(&["entail", "--model", "/nonexistent", "--lhs", "p", "--rhs", "q"]).code, 2);
}
