use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symdepth")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn depth_column(csv: &str) -> Vec<u32> {
    csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect()
}

#[test]
fn depth_examples() {
    assert!(stdout(&["depth", "--gens", "x*y", "--vars", "x,y"]).starts_with("depth 1\n"));
    assert!(stdout(&["depth", "--gens", "x,y"]).starts_with("depth 0\n"));
    assert!(stdout(&["depth", "--gens", "x", "--vars", "x,y,z"]).starts_with("depth 2\n"));
    assert!(stdout(&["depth", "--family", "example6", "--t", "2"]).starts_with("depth 1\n"));
    assert!(stdout(&["depth", "--family", "example6", "--t", "1", "--char", "2"]).starts_with("depth 2\n"));
    let report = stdout(&["depth", "--gens", "x*y,y*z,x*z", "--t", "2"]);
    assert!(report.starts_with("depth 1\n"), "{report}");
    assert!(report.contains("witness a = "));
    assert!(report.contains("candidates "));
}

#[test]
fn input_documents() {
    assert!(stdout(&["depth", "--input", &fixture("xy.json")]).starts_with("depth 1\n"));
    let csv = stdout(&["scan", "--input", &fixture("triangle_components.json"), "--t-max", "3"]);
    assert_eq!(depth_column(&csv), vec![1, 1, 1]);
    let csv = stdout(&["scan", "--input", &fixture("type_b.json"), "--t-max", "3"]);
    assert_eq!(depth_column(&csv), vec![2, 1, 1]);
}

#[test]
fn scan_examples() {
    let csv = stdout(&["scan", "--family", "typeA", "--m", "2", "--t-max", "4"]);
    assert_eq!(
        csv,
        "t,depth,ge1,ge2,millis\n1,1,true,false,0\n2,2,true,true,0\n3,2,true,true,0\n4,2,true,true,0\n"
    );
    let csv = stdout(&["scan", "--family", "typeC", "--m", "3", "--d", "1", "--t-max", "9"]);
    assert_eq!(depth_column(&csv), vec![2, 1, 1, 2, 1, 1, 2, 1, 1]);
    let csv = stdout(&["scan", "--family", "thm28", "--s", "3", "--t-max", "5"]);
    let twos: Vec<usize> = depth_column(&csv).iter().enumerate().filter(|(_, &d)| d == 2).map(|(i, _)| i + 1).collect();
    assert_eq!(twos, vec![3, 5]);
}

#[test]
fn output_is_stable_across_worker_counts() {
    for format in ["csv", "json"] {
        let args = |jobs: &'static str| {
            vec!["--jobs", jobs, "scan", "--family", "example6", "--t-max", "6", "--format", format]
        };
        let one = stdout(&args("1"));
        assert_eq!(one, stdout(&args("3")));
        assert_eq!(one, stdout(&args("1")));
    }
    let json = stdout(&["scan", "--family", "typeB", "--m", "1", "--t-max", "2", "--format", "json"]);
    assert!(json.contains("\"ge2\": true"), "{json}");
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "lemma4.2-m2"]);
    assert!(out.contains("PASS lemma4.2-m2"));
    let out = stdout(&["verify", "example6"]);
    assert!(out.contains("PASS example6"));
    assert!(out.contains("x^13*y^6*z^3"));
    assert_eq!(code(&["verify", "nosuch"]), 2);
}

#[test]
fn plan_examples() {
    let out = stdout(&["plan", "2;1,2"]);
    assert!(out.contains("recipe (C 2 1)\n"), "{out}");
    assert!(out.contains("confirmed"));
    let out = stdout(&["plan", "2,1;2", "--ambient", "5"]);
    assert!(out.contains("recipe (overline (star (star (const 2) (A 3)) (B 1)))\n"), "{out}");
    assert!(out.contains("SYMBOLIC"));
    assert!(out.contains("pd in 5 variables 2,3;2\n"));
    assert!(!out.contains("MISMATCH"));
    let out = stdout(&["plan", "3", "--check-t", "0"]);
    assert!(out.contains("recipe (star (const 2) (const 2))\n"), "{out}");
    assert!(!out.contains("engine"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["plan", "0;1"]), 3);
    assert_eq!(code(&["plan", "1;"]), 2);
    assert_eq!(code(&["plan", "2", "--ambient", "1"]), 3);
    assert_eq!(code(&["depth", "--gens", "x^*y"]), 2);
    let out = run(&["depth", "--gens", "x*y,z+1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 6"));
    assert_eq!(code(&["depth", "--gens", "x*w", "--vars", "x,y"]), 2);
    assert_eq!(code(&["depth", "--gens", "1", "--vars", "x"]), 3);
    assert_eq!(code(&["depth", "--gens", "x^2*y", "--t", "2"]), 3);
    assert_eq!(code(&["depth", "--family", "typeA", "--m", "1"]), 3);
    assert_eq!(code(&["depth", "--family", "typeA"]), 2);
    assert_eq!(code(&["depth", "--family", "nosuch"]), 2);
    assert_eq!(code(&["depth", "--gens", "x", "--family", "typeA", "--m", "2"]), 2);
    assert_eq!(code(&["depth", "--gens", "x", "--char", "4"]), 3);
    assert_eq!(code(&["depth", "--input", &fixture("bad.json")]), 2);
    assert_eq!(code(&["depth", "--input", "/nonexistent.json"]), 2);
    assert_eq!(code(&["scan", "--family", "typeA", "--m", "2", "--t-max", "0"]), 3);
    assert_eq!(code(&["scan", "--gens", "x^2", "--t-max", "2"]), 3);
    assert_eq!(code(&["frobnicate"]), 2);
}
