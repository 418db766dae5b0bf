use std::io::Write;
use std::process::{Command, Output, Stdio};

use radmax::formats::{from_dot, from_graph6, to_graph6};
use radmax::{build_H, build_self_centered};

fn radmax(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_radmax"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn construct_g_4_11() {
    let out = radmax(&["construct", "-r", "4", "-d", "4", "-n", "11"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), to_graph6(&build_self_centered(4, 11).unwrap().graph));
}

#[test]
fn construct_infeasible_exits_2_with_the_bound() {
    let out = radmax(&["construct", "-r", "3", "-d", "5", "-n", "10"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("d <= 2r-2"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let out = radmax(&["construct", "-r", "4", "-d", "5", "-n", "10"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("3r-1"));
}

#[test]
fn construct_h_6_9_17_with_sidecar() {
    let dir = std::env::temp_dir().join(format!("radmax-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let sidecar = dir.join("h.json");
    let out = radmax(&["construct", "-r", "6", "-d", "9", "-n", "17", "--sidecar", sidecar.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let g = from_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g, build_H(6, 9).unwrap().graph);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(doc["radius"], 6);
    assert_eq!(doc["diameter"], 9);
    assert_eq!(doc["order"], 17);
    assert_eq!(doc["labels"]["x1"], 0);
    assert_eq!(doc["labels"]["y1"], 11);
    assert_eq!(doc["labels"].as_object().unwrap().len(), 17);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_exit_codes() {
    let out = radmax(&["verify", "Cr"], None);
    assert_eq!(out.status.code(), Some(0));
    let out = radmax(&["verify", "Bg"], None);
    assert_eq!(out.status.code(), Some(1));
    let out = radmax(&["verify", "C?"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("disconnected"));
    let out = radmax(&["verify", "Cxx"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("graph6"));
}

#[test]
fn verify_reads_stdin_and_emits_certificate() {
    let out = radmax(&["verify", "--certificate"], Some("Cr\n"));
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["certificate"]["radius"], 2);
    assert_eq!(doc["certificate"]["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn construct_then_verify_across_the_grid() {
    for (r, d, n) in [(2, 2, 5), (3, 3, 8), (3, 4, 9), (4, 6, 13), (5, 8, 15)] {
        let built = radmax(&["construct", "-r", &r.to_string(), "-d", &d.to_string(), "-n", &n.to_string()], None);
        assert_eq!(built.status.code(), Some(0));
        let out = radmax(&["verify", "-"], Some(&stdout(&built)));
        assert_eq!(out.status.code(), Some(0), "({r},{d},{n})");
    }
}

#[test]
fn convert_round_trips_through_dot_and_edgelist() {
    let h = to_graph6(&build_H(3, 4).unwrap().graph);
    let dot = radmax(&["convert", &h, "--to", "dot"], None);
    assert_eq!(dot.status.code(), Some(0));
    assert_eq!(from_dot(&stdout(&dot)).unwrap(), build_H(3, 4).unwrap().graph);
    let edges = radmax(&["convert", "--to", "edgelist"], Some(&stdout(&dot)));
    let back = radmax(&["convert", "--to", "graph6"], Some(&stdout(&edges)));
    assert_eq!(stdout(&back).trim(), h);
}

#[test]
fn search_emits_json_report() {
    let out = radmax(&["search", "--order", "5", "--shards", "2", "--shard", "1"], None);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["orders"][0]["graphs_visited"], 512);
    let out = radmax(&["search", "--order", "6", "--radius", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["constructed_witness"]["order"], 8);
    let out = radmax(&["search", "--order", "5", "--up-to"], None);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["orders"].as_array().unwrap().len(), 5);
}

#[test]
fn search_respects_the_order_cap_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_radmax"))
        .args(["search", "--order", "6"])
        .env("RADMAX_MAX_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap 5"));
    let out = radmax(&["search", "--order", "9"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = radmax(&["search", "--order", "4", "--shards", "2", "--shard", "2"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn witnesses_subcommand() {
    let out = radmax(&["witnesses", "-r", "6", "-d", "8"], None);
    assert_eq!(out.status.code(), Some(0));
    let out = radmax(&["witnesses", "-r", "3", "-d", "5"], None);
    assert_eq!(out.status.code(), Some(2));
}
