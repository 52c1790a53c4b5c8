use std::path::PathBuf;
use std::process::{Command, Output};

use polarbox::repr::{canonicalize, parse_rep};
use polarbox::{HRep, Rep};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polarbox"))
        .args(args)
        .env_remove("POLARBOX_CAP")
        .output()
        .expect("binary runs")
}

fn out(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn err(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn convert_h_to_v_prints_exact_file() {
    let o = run(&["convert", &data("example1.ine")]);
    assert!(o.status.success());
    assert_eq!(
        out(&o),
        "V-representation\nbegin\n3 3 rational\n1 1 1\n0 0 1\n0 1 0\nend\n"
    );
    assert!(err(&o).contains("feasible bases: 3"));
}

#[test]
fn output_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.ine");
    let o = run(&["convert", "-o", path.to_str().unwrap(), &data("cube.ext")]);
    assert!(o.status.success());
    assert!(out(&o).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rep = parse_rep(&text).unwrap();
    assert_eq!(canonicalize(&rep), rep);
    assert_eq!(rep.rows().nrows(), 6);
}

#[test]
fn lifted_and_direct_agree_on_example2() {
    let lifted = out(&run(&["convert", &data("example2.ext")]));
    let direct = out(&run(&["convert", "--direct", &data("example2.ext")]));
    assert_eq!(lifted, direct);
    let want = canonicalize(&Rep::H(HRep::from_i64_rows(&[
        &[1, 1, -1, -1],
        &[1, -1, -1, -1],
        &[0, 0, 0, 1],
        &[0, 0, 1, 0],
    ])));
    assert_eq!(parse_rep(&direct).unwrap(), want);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["convert", &data("malformed.ine")]).status.code(), Some(2));
    assert_eq!(run(&["convert", &data("missing.ine")]).status.code(), Some(2));
    assert_eq!(run(&["convert", &data("empty.ine")]).status.code(), Some(3));
    assert_eq!(run(&["convert", &data("strip.ine")]).status.code(), Some(4));
    assert_eq!(run(&["convert", "--direct", &data("example1.ext")]).status.code(), Some(5));
    assert_eq!(run(&["--cap", "2", "liftcompare", &data("cube.ext")]).status.code(), Some(6));
    assert_eq!(run(&["convert", "--direct", &data("example1.ine")]).status.code(), Some(2));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_polarbox"))
        .args(["liftcompare", &data("cube.ext")])
        .env("POLARBOX_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(6));
}

#[test]
fn symcheck_verdicts() {
    let yes = run(&["symcheck", &data("example2.ext")]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(out(&yes).contains("HV-symmetric: yes"));
    assert!(out(&yes).contains("(true,true,true,true)"));

    let no = run(&["symcheck", &data("example1.ext")]);
    assert_eq!(no.status.code(), Some(1));
    assert!(out(&no).contains("HV-symmetric: no"));
    assert!(out(&no).contains("(false,false,false,false)"));

    let cone = run(&["symcheck", &data("quadrant.ext")]);
    assert_eq!(cone.status.code(), Some(0));

    let seg = run(&["symcheck", &data("segment.ext")]);
    assert_eq!(seg.status.code(), Some(4));
    assert!(out(&seg).contains("the polar is not pointed"));
}

#[test]
fn certify_outputs() {
    let o = run(&["certify", &data("example2.ext"), "--", "0", "0", "0"]);
    assert_eq!(out(&o), "lambda = (0, 1/2, 1/2, 0)\nmu = ()\n");
    let o = run(&["certify", &data("example1.ext"), "--", "0", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(out(&o), "not a member\n");
    let o = run(&["certify", &data("example1.ext"), "--", "1", "1"]);
    assert_eq!(out(&o), "lambda = (1)\nmu = (0, 0)\n");
    let o = run(&["certify", &data("example1.ext"), "--", "-1/2", "3"]);
    assert_eq!(out(&o), "not a member\n");
    let o = run(&["certify", &data("example1.ext"), "--", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn polar_then_convert() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.ine");
    std::fs::write(&q, out(&run(&["polar", &data("example1.ine")]))).unwrap();
    let o = run(&["convert", q.to_str().unwrap()]);
    assert_eq!(
        out(&o),
        "V-representation\nbegin\n3 3 rational\n1 0 0\n0 0 1\n0 1 0\nend\n"
    );
}

#[test]
fn bipolar_adds_origin() {
    let o = run(&["bipolar", &data("example1.ext")]);
    assert_eq!(
        out(&o),
        "V-representation\nbegin\n3 3 rational\n1 0 0\n0 0 1\n0 1 0\nend\n"
    );
    let o = run(&["bipolar", &data("example2.ext")]);
    assert_eq!(parse_rep(&out(&o)).unwrap().rows().nrows(), 4);
}

#[test]
fn liftcompare_table_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let o = run(&["liftcompare", "--csv", csv.to_str().unwrap(), &data("simplex.ext")]);
    assert!(o.status.success());
    assert!(out(&o).contains("H-representations identical: yes"));
    let table = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(
        table,
        "route,output_rows,feasible_bases,max_intermediate_rays\nlifted,3,3,3\ndirect,3,5,3\n"
    );
    assert_eq!(run(&["liftcompare", &data("example1.ext")]).status.code(), Some(5));
}

#[test]
fn deterministic_output() {
    let a = run(&["--seed", "1", "convert", &data("cube.ext")]);
    let b = run(&["--seed", "1", "convert", &data("cube.ext")]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}
