use std::path::PathBuf;
use std::process::{Command, Output};

use braidsys_core::compare::Comparison;
use braidsys_core::invariants::{BraidInvariantReport, SystemInvariantReport};
use braidsys_core::orbit::{OrbitResult, OrbitStatus};
use braidsys_core::regression::SuiteReport;
use braidsys_core::script::ScriptRun;
use braidsys_core::system::SystemFile;
use braidsys_core::IntPolynomial;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn system(name: &str) -> braidsys_core::system::BraidSystem {
    let text = std::fs::read_to_string(data(name)).unwrap();
    SystemFile::from_json(&text).unwrap().to_system().unwrap()
}

#[test]
fn invariants_of_a_word() {
    let o = run(&["invariants", "--degree", "5", "--word", "3,-1,4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("det = -144"), "{text}");
    assert!(text.contains("P = (x-4) (x-3) (x+2)^2 (x+3)"), "{text}");

    let o = run(&["--json", "invariants", "--degree", "5", "--word", "3,-1,4"]);
    let rep: BraidInvariantReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep.invariants.determinant, (-144).into());
    let again = serde_json::to_string_pretty(&rep).unwrap();
    assert_eq!(again.trim(), stdout(&o).trim());
}

#[test]
fn invariants_of_the_empty_word() {
    let o = run(&["--json", "invariants", "--degree", "4", "--word", ""]);
    assert_eq!(o.status.code(), Some(0));
    let rep: BraidInvariantReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep.invariants.charpoly, IntPolynomial::monomial(4));
    assert_eq!(rep.invariants.rank, 0);
}

#[test]
fn invariants_of_a_system() {
    let o = run(&["invariants", "--system", &data("b_prime.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("E = {-3}; P = x^6 (x+1)^3 (x-1)^6 (x+3)"));

    let o = run(&["--json", "invariants", "--system", &data("b_prime.json")]);
    let rep: SystemInvariantReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep.length, 4);
    assert_eq!(rep.invariants.perm_monodromy_order, 24.into());
}

#[test]
fn parse_errors_exit_one() {
    let o = run(&["invariants", "--degree", "3", "--word", "1,7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("7"));
    assert_eq!(run(&["invariants"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["invariants", "--system", "/no/such/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn compare_verdicts() {
    let o = run(&["compare", &data("b.json"), &data("b_prime.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("verdict: distinguished_by:charpoly_product"));

    let o = run(&["--json", "compare", &data("b_prime.json"), &data("c.json")]);
    assert_eq!(o.status.code(), Some(0));
    let r: Comparison = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.verdict.to_string(), "euler_necessary");
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    for n in [
        "trace",
        "perm_monodromy_order",
        "exponent_sums",
        "charpoly_multiset",
        "charpoly_product",
        "essential",
        "degree_plus_length_mod3",
    ] {
        assert!(names.contains(&n), "{n}");
    }

    let o = run(&["compare", &data("b.json"), &data("b.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("indistinguishable_by_invariants"));
}

#[test]
fn apply_scripts() {
    let b = system("b_prime.json");
    let c = system("c.json");
    for (script, expected) in [
        ("hurwitz_round_trip.txt", &b),
        ("stab.txt", &b),
        ("fuse.txt", &c),
        ("fuse_twice.txt", &c),
    ] {
        let o = run(&["--json", "apply", "--script", &data(script), "--system", &data("b_prime.json")]);
        assert_eq!(o.status.code(), Some(0), "{script}");
        let run: ScriptRun = serde_json::from_slice(&o.stdout).unwrap();
        assert!(run.final_system().braids_equal(expected), "{script}");
        if script.starts_with("fuse") {
            assert!(run.steps.iter().all(|s| s.tau_check == Some(true)));
        }
    }
}

#[test]
fn apply_writes_output_file() {
    let dir = std::env::temp_dir().join(format!("braidsys-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("out.json");
    let o = run(&[
        "apply",
        "--script",
        &data("fuse.txt"),
        "--system",
        &data("b_prime.json"),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = SystemFile::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(written.to_system().unwrap().braids_equal(&system("c.json")));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn apply_reports_the_failing_step() {
    let o = run(&["apply", "--script", &data("bad_index.txt"), "--system", &data("b.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 2"));
}

#[test]
fn orbit_runs() {
    let o = run(&["--json", "orbit", "--system", &data("pair.json")]);
    assert_eq!(o.status.code(), Some(0));
    let r: OrbitResult = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.status, OrbitStatus::Complete);
    assert_eq!(r.states_visited, 1);

    let o = run(&["orbit", "--system", &data("b.json"), "--target", &data("b.json")]);
    assert!(stdout(&o).contains("target_found"));

    let args = ["--json", "--seed", "5", "orbit", "--system", &data("b.json"), "--max-states", "300"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let r: OrbitResult = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(r.status, OrbitStatus::Truncated);

    let o = run(&["orbit", "--system", &data("b.json"), "--target", &data("c.json")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn papersuite() {
    let o = run(&["papersuite"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = run(&["--json", "papersuite", "--flip-over-strand"]);
    assert_ne!(o.status.code(), Some(0));
    let r: SuiteReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.failures(), 1);
    assert!(r.rows.iter().filter(|row| row.name.starts_with("P(")).all(|row| row.pass));
}

#[test]
fn verify_is_deterministic() {
    let args = ["--json", "--seed", "11", "verify", "--system", &data("b_prime.json"), "--trials", "10"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&args).stdout);
}
