use std::process::{Command, Output};

use tanpoly::cli::{chunk_rows, parse_bfile};
use tanpoly::triangles::Family;

fn tanpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tanpoly")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bfile_round_trip_all_triangles() {
    for family in Family::ALL {
        let out = tanpoly(&["triangle", "--name", family.name(), "--rows", "10", "--format", "bfile"]);
        assert_eq!(out.status.code(), Some(0), "{family}");
        let values = parse_bfile(&stdout(&out)).unwrap();
        let rows = chunk_rows(family, &values).unwrap();
        assert_eq!(rows, family.rows(10).unwrap(), "{family}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["triangle", "--name", "N", "--rows", "20", "--format", "json"];
    assert_eq!(tanpoly(&args).stdout, tanpoly(&args).stdout);
    let args = ["verify", "--suite", "all", "--max-n", "6", "--json"];
    assert_eq!(tanpoly(&args).stdout, tanpoly(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(tanpoly(&["verify", "--suite", "all", "--max-n", "12"]).status.code(), Some(0));
    assert_eq!(tanpoly(&["verify", "--suite", "nope", "--max-n", "12"]).status.code(), Some(2));
    assert_eq!(tanpoly(&["triangle", "--name", "Q", "--rows", "3"]).status.code(), Some(2));
    assert_eq!(tanpoly(&["tan", "--n", "3", "--t", "one"]).status.code(), Some(2));
    assert_eq!(tanpoly(&["frobnicate"]).status.code(), Some(2));
    let out = tanpoly(&["tan", "--n", "3", "--t", "1/1", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "beeler -1\naddition -1\ngaussian -1\nagree\n");
}

#[test]
fn tilde_table_tail() {
    let out = tanpoly(&["triangle", "--name", "Ttilde", "--rows", "5"]);
    assert_eq!(stdout(&out).lines().last(), Some("5 30 61 52 16"));
}
