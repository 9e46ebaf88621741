mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use oddmatch_cli::strip_timing;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddmatch")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn four_cycle_bcpm() {
    let o = run(&["solve", "bcpm", path_str(&data("fourcycle.txt"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("YES\n"), "{text}");
    assert!(text.contains("# subproblems 1\n"), "{text}");
}

#[test]
fn odd_vertex_count_em_is_no() {
    let o = run(&["solve", "em", path_str(&data("odd-n.txt"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NO\n"));
}

#[test]
fn errors_exit_with_two() {
    let fc = data("fourcycle.txt");
    let o = run(&["solve", "em", path_str(&fc)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bcpm instance"));
    assert_eq!(run(&["solve", "em", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "nonsense", path_str(&fc)]).status.code(), Some(2));
}

#[test]
fn generate_matches_golden_file() {
    let o = run(&["generate", "random", "--n", "10", "--p", "0.4", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), fs::read_to_string(data("random-n10-p04-s1.txt")).unwrap());
}

#[test]
fn generated_kinds_have_their_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let low = dir.path().join("low.txt");
    let o = run(&["generate", "low-parameter", "--n", "12", "--x", "2", "--seed", "7", "--out", path_str(&low)]);
    assert_eq!(o.status.code(), Some(0));
    // k defaults to x for the low-parameter kind
    let o = run(&["solve", "oct", path_str(&low)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    for seed in ["1", "2", "3"] {
        let bip = dir.path().join("bip.txt");
        run(&["generate", "bipartite", "--n", "10", "--seed", seed, "--problem", "oct", "--k", "0", "--out", path_str(&bip)]);
        let o = run(&["solve", "oct", path_str(&bip)]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("\nX\n"));
    }
    assert_eq!(run(&["generate", "random", "--n", "5", "--p", "1.5"]).status.code(), Some(2));
}

#[test]
fn verify_accepts_solver_output_and_names_violations() {
    let dir = tempfile::tempdir().unwrap();
    let fc = data("fourcycle.txt");
    let sol = dir.path().join("sol.txt");
    run(&["solve", "bcpm", path_str(&fc), "--out", path_str(&sol)]);
    let o = run(&["verify", path_str(&fc), path_str(&sol)]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "ACCEPT\n"));

    let odd_parity = dir.path().join("odd.txt");
    fs::write(&odd_parity, fs::read_to_string(&fc).unwrap().replace("k 2", "k 1")).unwrap();
    let o = run(&["verify", path_str(&odd_parity), path_str(&sol)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("REJECT parity"), "{}", stdout(&o));
}

#[test]
fn transform_chain_preserves_answers() {
    let dir = tempfile::tempdir().unwrap();
    let mut yes = 0;
    for seed in 0..12u64 {
        let src = dir.path().join(format!("bfp{seed}.txt"));
        let n = (4 + seed % 3).to_string();
        let o = run(&["generate", "digraph", "--n", &n, "--p", "0.4", "--seed", &seed.to_string(), "--out", path_str(&src)]);
        assert_eq!(o.status.code(), Some(0));
        let mut codes = vec![run(&["solve", "bfp", path_str(&src)]).status.code()];
        let mut cur = src;
        for (red, problem) in [("bfp-to-oace", "oace"), ("oace-to-oap", "oap"), ("oap-to-dap", "dap")] {
            let next = dir.path().join(format!("{problem}{seed}.txt"));
            let o = run(&["transform", red, path_str(&cur), "--out", path_str(&next)]);
            assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
            assert!(Path::new(&format!("{}.map", next.display())).exists());
            codes.push(run(&["solve", problem, path_str(&next)]).status.code());
            cur = next;
        }
        assert!(codes.iter().all(|&c| c == codes[0]), "seed {seed}: {codes:?}");
        yes += (codes[0] == Some(0)) as usize;
    }
    assert!(yes > 0 && yes < 12, "{yes}");
}

#[test]
fn two_heavy_edges_cannot_enter_oap_to_dap() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("oap.txt");
    fs::write(&src, "p oap 6 5\ne 4 0 0\ne 0 1 1\ne 1 2 0\ne 2 3 1\ne 3 5 0\nm 1\nm 3\n").unwrap();
    let o = run(&["transform", "oap-to-dap", path_str(&src)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exactly one edge of weight 1"));
}

#[test]
fn binary_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    for (i, inst) in common::corpus_for(3).into_iter().enumerate() {
        let f = dir.path().join(format!("{i}.txt"));
        fs::write(&f, inst.to_text()).unwrap();
        let problem = inst.header.problem.to_string();
        let args = ["solve", problem.as_str(), path_str(&f), "--seed", "5"];
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(strip_timing(&stdout(&a)), strip_timing(&stdout(&b)));
    }
}
