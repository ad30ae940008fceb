use std::process::{Command, Output};

fn grouplat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouplat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_emits_json() {
    let o = grouplat(&["construct", "proj:2,7,PGL", "--emit", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], 8);
    assert_eq!(v["order"], "336");
}

#[test]
fn interval_dot_for_equipartition_stabilizer() {
    let o = grouplat(&["interval", "--ambient", "alt:8", "--sub", "eqpart-even:8,2", "--emit", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    for order in ["192", "1344", "20160"] {
        assert!(dot.contains(order), "missing {order} in\n{dot}");
    }

    let o = grouplat(&["interval", "--ambient", "alt:8", "--sub", "eqpart-even:8,2", "--emit", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shape"], serde_json::json!({"tag": "Mr", "r": 2}));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
}

#[test]
fn parity_with_witness() {
    let o = grouplat(&["parity", "--law", "powerset", "--params", "n=5,l=2,par=1", "--witness", "--emit", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["prediction"]["value"], 1);
    assert_eq!(v["agrees"], true);
}

#[test]
fn hm_reports_the_identity() {
    let o = grouplat(&["hm", "--ambient", "sym:4", "--k", "cyc:4", "--l", "alt:4", "--emit", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(grouplat(&["construct", "bogus:3"]).status.code(), Some(2));
    assert_eq!(grouplat(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(grouplat(&["parity", "--law", "powerset", "--params", "n=4,l=4,par=1"]).status.code(), Some(2));
    assert_eq!(grouplat(&["construct", "sym:3", "--emit", "dot"]).status.code(), Some(2));
    assert_eq!(grouplat(&["hm", "--ambient", "sym:4", "--k", "cyc:4", "--l", "sym:3"]).status.code(), Some(2));
}

#[test]
fn parity_suite_passes() {
    let o = grouplat(&["verify", "parity"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn goursat_affine_example() {
    let o = grouplat(&["goursat", "--affine-example", "3", "--op", "shortcut", "--emit", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shape"], serde_json::json!({"tag": "Mr", "r": 4}));
    assert_eq!(v["is_novelty"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["goursat", "--left", "sym:3", "--right", "sym:3", "--op", "maximals", "--emit", "json"];
    let a = grouplat(&args);
    let b = grouplat(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
