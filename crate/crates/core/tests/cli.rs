//! End-to-end tests of the installed binary: golden stdout/stderr bytes
//! and the exit-code contract (0 success/yes, 1 no, 2 usage/input,
//! 3 resource limit, 4 I/O).

use std::fs;
use std::process::Command;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gapset"));
    cmd.env_remove("GAPSET_WORKERS");
    cmd.env_remove("GAPSET_NODE_CAP");
    cmd
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn std_basis_text() {
    let (code, stdout, stderr) = run(&["std-basis", "6", "17", "38"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "H = [6, 55, 38, 51, 34, 17]\n");
    assert_eq!(stderr, "");
}

#[test]
fn std_basis_verbose_trace() {
    let (code, stdout, _) = run(&["std-basis", "6", "17", "38", "--verbose"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "H_0 = [6, inf, 38, inf, inf, 17]\n\
         pass 1:\n\
         \x20 h_2 + h_2 = 76 -> h_4 (was inf)\n\
         \x20 h_2 + h_5 = 55 -> h_1 (was inf)\n\
         \x20 h_4 + h_5 = 93 -> h_3 (was inf)\n\
         \x20 h_5 + h_5 = 34 -> h_4 (was 76)\n\
         pass 2:\n\
         \x20 h_4 + h_5 = 51 -> h_3 (was 93)\n\
         pass 3: no updates\n\
         H = [6, 55, 38, 51, 34, 17]\n"
    );
}

#[test]
fn std_basis_json() {
    let (code, stdout, stderr) = run(&["std-basis", "5", "7", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"m\":5,\"heads\":[5,21,7,28,14]}\n");
    assert_eq!(stderr, "");
}

#[test]
fn std_basis_warns_on_shared_divisor() {
    let (code, stdout, stderr) = run(&["std-basis", "10", "12", "14", "16", "18"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "H = [10, inf, 12, inf, 14, inf, 16, inf, 18, inf]\n"
    );
    assert_eq!(
        stderr,
        "warning: gcd = 2 > 1; the monoid is not numerical and infinite entries appear as inf\n"
    );
}

#[test]
fn std_basis_usage_errors() {
    assert_eq!(run(&["std-basis"]).0, 2);
    let (code, _, stderr) = run(&["std-basis", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"), "{stderr}");
    assert_eq!(run(&["std-basis", "-3"]).0, 2);
}

#[test]
fn invariants_text_numerical() {
    let (code, stdout, stderr) = run(&["invariants", "6", "17", "38"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "H = [6, 55, 38, 51, 34, 17]\n\
         m = 6\n\
         gcd = 1\n\
         genus = 30\n\
         F = 49\n\
         PF = {45, 49}\n\
         PF* classes = {}\n\
         fundamental gaps = {19, 20, 21, 22, 25, 26, 27, 28, 31, 32, 33, 37, 39, 43, 45, 49}\n"
    );
    assert_eq!(stderr, "");
}

#[test]
fn invariants_text_non_numerical() {
    let (code, stdout, _) = run(&["invariants", "10", "12", "14", "16", "18"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "H = [10, inf, 12, inf, 14, inf, 16, inf, 18, inf]\n\
         m = 10\n\
         gcd = 2\n\
         genus = inf\n\
         F = none\n\
         PF (x <= 18) = {2, 4, 6, 8}\n\
         PF* classes = {1, 3, 5, 7, 9}\n"
    );
}

#[test]
fn invariants_text_trivial() {
    let (code, stdout, _) = run(&["invariants", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "H = [1]\nm = 1\ngcd = 1\ngenus = 0\nF = -1\nPF = {}\nPF* classes = {}\nfundamental gaps = {}\n"
    );
}

#[test]
fn invariants_json() {
    let (code, stdout, _) = run(&["invariants", "5", "7", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        concat!(
            "{\"multiplicity\":5,\"heads\":[5,21,7,28,14],\"gcd\":1,",
            "\"is_numerical\":true,\"genus\":12,\"frobenius\":23,",
            "\"pseudo_frobenius\":[23],\"pf_search_bound\":null,",
            "\"pf_star_classes\":[],\"fundamental_gaps\":[11,13,16,18,23]}\n"
        )
    );
}

#[test]
fn check_gapset_yes() {
    let (code, stdout, _) = run(&["check-gapset", "1", "2", "4", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "yes\nH = [3, 7, 8]\nhead conditions: yes\nsum closure: yes\ngap realization: yes\n"
    );
}

#[test]
fn check_gapset_no_with_witness() {
    let (code, stdout, _) = run(&["check-gapset", "3"]);
    assert_eq!(code, 1);
    assert_eq!(
        stdout,
        "no\nH = [1]\nhead conditions: no\nsum closure: no (witness: 1 + 2 = 3)\ngap realization: no\n"
    );
}

#[test]
fn check_gapset_empty_set() {
    let (code, stdout, _) = run(&["check-gapset"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "yes\nH = [1]\nhead conditions: yes\nsum closure: yes\ngap realization: yes\n"
    );
}

#[test]
fn check_gapset_rejects_zero() {
    let (code, _, stderr) = run(&["check-gapset", "0", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"), "{stderr}");
}

#[test]
fn check_gapset_json() {
    let (code, stdout, _) = run(&["check-gapset", "1", "2", "4", "5", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        concat!(
            "{\"is_gapset\":true,\"m\":3,\"heads\":[3,7,8],\"head_conditions\":true,",
            "\"sum_closure\":true,\"sum_witness\":null,\"gap_realization\":true}\n"
        )
    );
    let (code, stdout, _) = run(&["check-gapset", "3", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(
        stdout,
        concat!(
            "{\"is_gapset\":false,\"m\":1,\"heads\":[1],\"head_conditions\":false,",
            "\"sum_closure\":false,\"sum_witness\":[1,2],\"gap_realization\":false}\n"
        )
    );
}

#[test]
fn count_csv_golden() {
    let (code, stdout, stderr) = run(&["count", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "g,m=2,m=3,m=4,total\n0,,,,1\n1,1,,,1\n2,1,1,,2\n3,1,2,1,4\n");
    assert_eq!(stderr, "");

    let (code, stdout, _) = run(&["count", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "g,total\n0,1\n");
}

#[test]
fn count_json_golden() {
    let (code, stdout, _) = run(&["count", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        concat!(
            "{\"g_max\":3,\"totals\":[1,1,2,4],\"counts\":[",
            "[2,1,1],[2,2,1],[2,3,1],[3,2,1],[3,3,2],[4,3,1]]}\n"
        )
    );
}

#[test]
fn count_workers_flag_and_env_are_equivalent() {
    let baseline = run(&["count", "8"]);
    assert_eq!(baseline.0, 0);
    assert_eq!(run(&["count", "8", "--workers", "2"]), baseline);

    let out = bin()
        .args(["count", "8"])
        .env("GAPSET_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), baseline.1);
}

#[test]
fn count_node_cap_limits() {
    let out = bin()
        .args(["count", "6"])
        .env("GAPSET_NODE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 3);
    assert!(
        String::from_utf8(out.stderr).unwrap().contains("resource limit"),
        "expected a resource-limit message"
    );

    // An explicit flag overrides the environment.
    let out = bin()
        .args(["count", "6", "--node-cap", "1000000"])
        .env("GAPSET_NODE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 0);
}

#[test]
fn count_env_validation() {
    let out = bin()
        .args(["count", "3"])
        .env("GAPSET_WORKERS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("GAPSET_WORKERS"));

    let out = bin()
        .args(["count", "3"])
        .env("GAPSET_NODE_CAP", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 2);

    assert_eq!(run(&["count", "3", "--workers", "0"]).0, 2);
}

#[test]
fn count_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let (code, stdout, _) = run(&["count", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "");
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        "g,m=2,m=3,m=4,total\n0,,,,1\n1,1,,,1\n2,1,1,,2\n3,1,2,1,4\n"
    );

    let (code, _, _) = run(&["count", "3", "--output", "/nonexistent-dir/table.csv"]);
    assert_eq!(code, 4);
}

#[test]
fn count_checkpoint_resume_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().to_str().unwrap();
    let fresh = run(&["count", "6"]);
    assert_eq!(fresh.0, 0);

    let (code, _, _) = run(&["count", "4", "--checkpoint-dir", ckpt]);
    assert_eq!(code, 0);
    assert!(dir.path().join("frontier-m3.txt").exists());
    assert!(dir.path().join("counts-m3.csv").exists());

    let resumed = run(&["count", "6", "--checkpoint-dir", ckpt]);
    assert_eq!(resumed.0, 0);
    assert_eq!(resumed.1, fresh.1);
}

#[test]
fn count_checkpoint_corruption_is_fatal() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().to_str().unwrap();
    assert_eq!(run(&["count", "4", "--checkpoint-dir", ckpt]).0, 0);
    fs::write(dir.path().join("frontier-m3.txt"), "garbage\n").unwrap();
    let (code, _, stderr) = run(&["count", "6", "--checkpoint-dir", ckpt]);
    assert_eq!(code, 2);
    assert!(stderr.contains("checkpoint"), "{stderr}");
}

#[test]
fn export_dag_dot_golden() {
    let (code, stdout, stderr) = run(&["export-dag", "3", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stderr, "exported 10 nodes, 12 edges\n");
    let expected = "\
digraph extension_dag {
  rankdir=TB;
  node [shape=box];
  subgraph level_2 {
    rank=same;
    \"[3,4,5]\";
  }
  subgraph level_3 {
    rank=same;
    \"[3,4,8]\";
    \"[3,7,5]\";
  }
  subgraph level_4 {
    rank=same;
    \"[3,7,8]\";
    \"[3,10,5]\";
  }
  subgraph level_5 {
    rank=same;
    \"[3,7,11]\";
    \"[3,10,8]\";
  }
  subgraph level_6 {
    rank=same;
    \"[3,7,14]\";
    \"[3,10,11]\";
    \"[3,13,8]\";
  }
  \"[3,4,5]\" -> \"[3,4,8]\" [label=\"h_2+3\"];
  \"[3,4,5]\" -> \"[3,7,5]\" [label=\"h_1+3\"];
  \"[3,4,8]\" -> \"[3,7,8]\" [label=\"h_1+3\"];
  \"[3,7,5]\" -> \"[3,7,8]\" [label=\"h_2+3\"];
  \"[3,7,5]\" -> \"[3,10,5]\" [label=\"h_1+3\"];
  \"[3,7,8]\" -> \"[3,7,11]\" [label=\"h_2+3\"];
  \"[3,7,8]\" -> \"[3,10,8]\" [label=\"h_1+3\"];
  \"[3,7,11]\" -> \"[3,7,14]\" [label=\"h_2+3\"];
  \"[3,7,11]\" -> \"[3,10,11]\" [label=\"h_1+3\"];
  \"[3,10,5]\" -> \"[3,10,8]\" [label=\"h_2+3\"];
  \"[3,10,8]\" -> \"[3,10,11]\" [label=\"h_2+3\"];
  \"[3,10,8]\" -> \"[3,13,8]\" [label=\"h_1+3\"];
}
";
    assert_eq!(stdout, expected);
}

#[test]
fn export_dag_json_and_output_file() {
    let (code, stdout, stderr) = run(&["export-dag", "4", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"m\":4,\"g_max\":3,\"levels\":[{\"g\":3,\"nodes\":[[4,5,6,7]]}],\"edges\":[]}\n"
    );
    assert_eq!(stderr, "exported 1 nodes, 0 edges\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dag.json");
    let (code, piped, _) = run(&[
        "export-dag",
        "4",
        "3",
        "--json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(piped, "");
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn export_dag_errors() {
    assert_eq!(run(&["export-dag", "3", "1"]).0, 2);
    assert_eq!(run(&["export-dag", "1", "5"]).0, 2);
    assert_eq!(run(&["export-dag", "3", "6", "--dot", "--json"]).0, 2);
    assert_eq!(
        run(&["export-dag", "3", "6", "--output", "/nonexistent-dir/dag.dot"]).0,
        4
    );
}

#[test]
fn top_level_usage() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("std-basis"));
    assert!(stdout.contains("check-gapset"));
}
