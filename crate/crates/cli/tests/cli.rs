use std::path::PathBuf;
use std::process::{Command, Output};

fn hall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hall")).args(args).output().expect("spawn hall")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn spec_file(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn a2_file() -> String {
    spec_file("a2.json", r#"{"vertices":["1","2"],"arrows":[{"source":"1","target":"2"}]}"#)
        .display()
        .to_string()
}

#[test]
fn hallpoly_with_checks() {
    let o = hall(&["hallpoly", "(1,1)", "(1)", "(1)", "--check-q", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "t+1\nq=2: count 3, P(2) = 3, match\nq=3: count 4, P(3) = 4, match\n"
    );
    assert_eq!(stdout(&hall(&["hallpoly", "[2]", "[1]", "[1]"])), "1\n");
    assert_eq!(stdout(&hall(&["hallpoly", "(3)", "(2)", "(2)"])), "0\n");
    assert_eq!(hall(&["hallpoly", "[1,2]", "[1]", "[1]"]).status.code(), Some(2));
}

#[test]
fn hallpoly_latex_factors() {
    let o = hall(&["hallpoly", "[1,1,1]", "[1]", "[1,1]", "--format", "latex"]);
    assert_eq!(stdout(&o), "P^{(1,1,1)}_{(1),(1,1)}(t) = [3]_{+}\n");
}

#[test]
fn classical_element_commands() {
    assert_eq!(stdout(&hall(&["mult", "--backend", "classical", "[1]*[1]"])), "(t+1)[1,1] + [2]\n");
    assert_eq!(
        stdout(&hall(&["comult", "--backend", "classical", "[2]"])),
        "1⊗[2] + (1-t^-1)[1]⊗[1] + [2]⊗1\n"
    );
    assert_eq!(stdout(&hall(&["antipode", "--backend", "classical", "[1]"])), "-[1]\n");
    assert_eq!(stdout(&hall(&["antipode", "[1,1]"])), "t^-1[1,1] + t^-1[2]\n");
    assert_eq!(stdout(&hall(&["mult", "-[1] + (t+1)[1]"])), "t[1]\n");
    assert_eq!(hall(&["mult", "[1]*"]).status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    let a = hall(&["comult", "[2,1]", "--format", "json"]);
    let b = hall(&["comult", "[2,1]", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn quiver_backend_commands() {
    let a2 = a2_file();
    let o = hall(&["--quiver", &a2, "--q", "2", "mult", "c0@(1,0)*c0@(0,1)"]);
    assert_eq!(stdout(&o), "1/2v·c0@(1,1) + 1/2v·c1@(1,1)\n");
    let o = hall(&["--quiver", &a2, "--q", "2", "mult", "c0@(0,1)*c0@(1,0)"]);
    assert_eq!(stdout(&o), "c0@(1,1)\n");
    let o = hall(&["--quiver", &a2, "--q", "3", "antipode", "c0@(1,0)"]);
    assert_eq!(stdout(&o), "-1/3·c0@(1,0)k(-1,0)\n");
    let o = hall(&["--quiver", &a2, "--q", "2", "mult", "c7@(1,0)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hall(&["--quiver", &a2, "--q", "2", "--budget", "10", "mult", "c0@(3,3)"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn jordan_spec_file() {
    let j = spec_file(
        "jordan.json",
        r#"{"vertices":["x"],"arrows":[{"source":"x","target":"x"}],"nilpotent":true}"#,
    );
    let o = hall(&["--quiver", j.to_str().unwrap(), "--q", "2", "mult", "[1]*[1]"]);
    assert_eq!(stdout(&o), "3[1,1] + [2]\n");
}

#[test]
fn verify_suites() {
    let a2 = a2_file();
    let o = hall(&["verify", "serre", "--quiver", &a2, "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("serre: 2 of 2 checks passed\n"));

    let o = hall(&["verify", "double-a1", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("u = -1/3v"));

    let o = hall(&["verify", "steinitz", "--deg", "6"]);
    assert_eq!(o.status.code(), Some(0));

    let o = hall(&["verify", "green", "--deg", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "green");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    assert_eq!(hall(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("mult.txt");
    let o = hall(&["mult", "[1]*[1]", "--out", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(p).unwrap(), "(t+1)[1,1] + [2]\n");
}
