use std::process::{Command, Output};

use refa::toolkit::buffer_dfa;

fn refa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_refa"))
        .args(args)
        .env_remove("REFA_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn toregex_reads_automaton_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("buffer6.json");
    std::fs::write(&path, buffer_dfa(6).to_json()).unwrap();
    let o = refa(&[
        "toregex",
        "--method",
        "eliminate",
        "--order",
        "fixed:6,5,4,3,2,1,0",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(a(a(a(a(a(ab)*b)*b)*b)*b)*b)*\n");
}

#[test]
fn equiv_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    std::fs::write(&a, buffer_dfa(2).to_json()).unwrap();
    let follow = refa(&["convert", "--to", "follow", "(a(ab)*b)*"]);
    std::fs::write(&b, &follow.stdout).unwrap();
    std::fs::write(&c, buffer_dfa(3).to_json()).unwrap();
    let same = refa(&["equiv", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(stdout(&same), "equivalent\n");
    let diff = refa(&["equiv", a.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(stdout(&diff), "inequivalent: aaabbb\n");
}

#[test]
fn convert_to_dot() {
    let o = refa(&["convert", "--to", "pos", "--format", "dot", "(ab)*"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("__start -> 0"));
    assert!(dot.contains("doublecircle"));
}

#[test]
fn exit_codes() {
    assert_eq!(refa(&["measure", "(ab)*"]).status.code(), Some(0));
    assert_eq!(refa(&["measure", "a+"]).status.code(), Some(1));
    assert_eq!(
        refa(&["toregex", "--method", "arden", "(a+&)b"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(refa(&["convert", "--bogus", "a"]).status.code(), Some(2));
    let o = refa(&["gen", "--format", "yaml", "buffer:2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--format"));
}

#[test]
fn seed_from_environment() {
    let by_flag = refa(&["gen", "--seed", "11", "random:5:2"]);
    let by_env = Command::new(env!("CARGO_BIN_EXE_refa"))
        .args(["gen", "random:5:2"])
        .env("REFA_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(by_flag.stdout, by_env.stdout);
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let o = refa(&[
        "bench",
        "orderings",
        "--samples",
        "5",
        "--states",
        "4",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,n,method,states,transitions,size,awidth,height,micros")
    );
    assert_eq!(lines.count(), 30);
    let again = refa(&["bench", "orderings", "--samples", "5", "--states", "4"]);
    assert_eq!(stdout(&again), text);
}
