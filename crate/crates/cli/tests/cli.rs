use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_factorsmith"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const C5: &str = "Dhc\n";
const CLAW: &str = "0 1\n0 2\n0 3\n";

#[test]
fn check_exit_codes() {
    let o = run(&["check", "--c", "3/2"], C5);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "holds\n");

    let o = run(&["check", "--c", "3/2"], CLAW);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("S = {0}"), "{}", stdout(&o));

    assert_eq!(run(&["check", "--c", "0/2"], C5).status.code(), Some(2));
    assert_eq!(run(&["check", "--c", "1.5"], C5).status.code(), Some(2));
    assert_eq!(
        run(&["check", "--c", "3/2"], "not a graph").status.code(),
        Some(2)
    );
}

#[test]
fn check_reports_original_labels() {
    let o = run(&["check", "--c", "3/2"], "hub x\nhub y\nhub z\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("S = {hub}"), "{}", stdout(&o));
}

#[test]
fn factor_certificates() {
    let o = run(&["factor", "--k", "1", "--emit", "trace"], "F?~v_\n");
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );

    // C7: one P5 and one P2.
    let c7 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n";
    let o = run(&["factor", "--k", "1"], c7);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut classes: Vec<&str> = json["certificate"]["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["class"].as_str().unwrap())
        .collect();
    classes.sort();
    assert_eq!(classes, ["P2", "P5"]);

    let o = run(&["factor", "--k", "2", "--family", "F2"], "0 1\n0 2\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["certificate"]["components"][0]["class"], "Star(2)");

    assert_eq!(run(&["factor", "--k", "1"], CLAW).status.code(), Some(1));
    assert_eq!(
        run(&["factor", "--k", "2", "--family", "F1"], C5)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["factor", "--k", "1", "--family", "F2"], C5)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn factor_dot() {
    let o = run(&["factor", "--k", "1", "--emit", "dot"], "A_\n");
    assert_eq!(
        stdout(&o),
        "graph G {\n  0;\n  1;\n  0 -- 1 [color=red, penwidth=2];\n}\n"
    );
}

#[test]
fn toughness_values() {
    assert_eq!(stdout(&run(&["toughness"], "D~{\n")), "infinity\n");
    assert_eq!(stdout(&run(&["toughness"], CLAW)), "1/3\n");
    assert_eq!(stdout(&run(&["toughness"], "0 1\n1 2\n2 3\n")), "1/1\n");
}

#[test]
fn verify_exhaustive_five() {
    let o = run(
        &["verify", "--exhaustive", "5", "--k", "1,2", "--summary"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["graphs"], 1024);
    assert_eq!(summary["checks"], 2048);
    assert_eq!(summary["disagreements"], 0);
}

#[test]
fn verify_gnp_record_count() {
    let o = run(
        &[
            "verify",
            "--gnp",
            "10,1/2,100,seed=7",
            "--k",
            "2",
            "--jobs",
            "2",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let records = report["graphs"].as_array().unwrap();
    assert_eq!(records.len(), 100);
    assert_eq!(records[0]["input_id"], "gnp(10,1/2,seed=7)#0");
    assert_eq!(records[99]["input_id"], "gnp(10,1/2,seed=7)#99");
}

#[test]
fn verify_file_with_one_graph() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "Dhc").unwrap();
    let path = file.path().to_str().unwrap();
    let o = run(&["verify", "--file", path], "");
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["graphs"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_report_matches_golden() {
    let o = run(&["verify", "--paths-cycles", "4", "--k", "1,2"], "");
    assert_eq!(o.status.code(), Some(0));
    let mut report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for record in report["graphs"].as_array_mut().unwrap() {
        record["elapsed_us"] = 0.into();
    }
    let golden: serde_json::Value =
        serde_json::from_str(include_str!("golden/verify_paths_cycles_4.json")).unwrap();
    assert_eq!(report, golden);
}

#[test]
fn gen_is_deterministic() {
    let a = stdout(&run(&["gen", "--gnp", "8,1/2,5", "--seed", "1"], ""));
    let b = stdout(&run(&["gen", "--gnp", "8,1/2,5,seed=1"], ""));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 5);
    assert_eq!(
        stdout(&run(&["gen", "--exhaustive", "3"], ""))
            .lines()
            .count(),
        8
    );
    assert_eq!(
        stdout(&run(&["gen", "--free-trees", "6"], ""))
            .lines()
            .count(),
        1 + 1 + 1 + 2 + 3 + 6
    );
}

#[test]
fn gen_family_members_factor_into_one_component() {
    let t3 = stdout(&run(&["gen", "--t3", "2", "--count", "3"], ""));
    for line in t3.lines() {
        let o = run(&["factor", "--k", "1", "--emit", "trace"], line);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).ends_with("components: T3\n"), "{}", stdout(&o));
    }
    let t5 = stdout(&run(&["gen", "--t2k1", "2,4", "--count", "3"], ""));
    assert_eq!(t5.lines().count(), 3);
}

#[test]
fn convert_round_trip() {
    let edges = stdout(&run(&["convert", "--to", "edgelist"], C5));
    assert_eq!(edges, "n 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    let back = stdout(&run(&["convert", "--to", "graph6"], &edges));
    assert_eq!(back, C5);
    let forced = run(
        &["convert", "--to", "graph6", "--format", "graph6"],
        "0 1\n",
    );
    assert_eq!(forced.status.code(), Some(2));
}
