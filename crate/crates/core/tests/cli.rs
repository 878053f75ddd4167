mod common;

use bmw::algebra::verify::random_word;
use bmw::algebra::JsonTerm;
use bmw::cli::run;
use bmw::{AlgebraElement, Engine, RingElem};
use common::*;
use rand::seq::SliceRandom;
use rand::Rng;
use std::process::Command;

fn cli(args: &[&str]) -> bmw::cli::Outcome {
    run(std::iter::once("bmw").chain(args.iter().copied()))
}

#[test]
fn dim_and_connectors() {
    for (n, d) in [(1, "1"), (2, "3"), (3, "15"), (4, "105"), (5, "945")] {
        let out = cli(&["dim", &n.to_string()]);
        assert_eq!((out.code, out.stdout.trim()), (0, d));
        let listed = cli(&["connectors", &n.to_string()]);
        assert_eq!(listed.stdout.lines().count().to_string(), d);
    }
    assert_eq!(
        cli(&["dim", "20"]).stdout.trim(),
        "319830986772877770815625"
    );
    assert_eq!(cli(&["connectors", "9"]).code, 2);
}

#[test]
fn normalize_and_kauffman() {
    let out = cli(&["normalize", "-n", "2", "g1 e1"]);
    assert_eq!(out.stdout.trim(), "l * [(t1 t2)(b1 b2)]");
    assert_eq!(cli(&["kauffman", "-n", "1", ""]).stdout.trim(), "d");
    assert_eq!(cli(&["kauffman", "-n", "0", ""]).stdout.trim(), "1");
    let trefoil = cli(&["kauffman", "-n", "2", "g1 g1 g1"]);
    assert_eq!(trefoil.code, 0);
    let want: RingElem = "l^-1*d + z*d^2 - z*l^2*d + l^-1*z^2*d - l*z^2*d"
        .parse()
        .unwrap();
    assert_eq!(trefoil.stdout.trim().parse::<RingElem>().unwrap(), want);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let out = cli(&["normalize", "-n", "2", "g5"]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("index 5 out of range for n=2"),
        "{}",
        out.stderr
    );
    let out = cli(&["normalize", "-n", "3", "g1 q2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("offset 3"), "{}", out.stderr);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["dim"]).code, 2);
    assert_eq!(cli(&["--format", "xml", "dim", "2"]).code, 2);
    assert_eq!(
        cli(&["mul", "-n", "2", "[(t1 t2)(b1 b2)]", "[(t1 t2)]"]).code,
        2
    );
    assert_eq!(cli(&["gram", "4"]).code, 2);
    assert_eq!(cli(&["spanning", "4", "1"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn mul_accepts_words_and_elements() {
    let out = cli(&["mul", "-n", "2", "e1", "[(t1 t2)(b1 b2)]"]);
    assert_eq!(out.stdout.trim(), "d * [(t1 t2)(b1 b2)]");
    let out = cli(&["mul", "-n", "3", "e1", "e2 e1"]);
    assert_eq!(out.stdout.trim(), "1 * [(t1 t2)(t3 b3)(b1 b2)]");
    assert_eq!(cli(&["mul", "-n", "2", "0", "g1"]).stdout.trim(), "0");
}

#[test]
fn json_is_key_sorted_and_stable() {
    let out = cli(&["--format", "json", "normalize", "-n", "2", "g1^-1"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["n", "terms", "text"]);
    let terms: Vec<JsonTerm> = serde_json::from_value(v["terms"].clone()).unwrap();
    let x = AlgebraElement::from_json_terms(2, &terms).unwrap();
    assert_eq!(x, Engine::new().normalize(&w(2, "g1^-1")));
    assert_eq!(
        cli(&["--format", "json", "dim", "3"]).stdout,
        "{\"dim\":\"15\",\"n\":3}\n"
    );

    let gram = cli(&["--format", "json", "gram", "2"]);
    assert_eq!(gram.code, 0);
    let v: serde_json::Value = serde_json::from_str(&gram.stdout).unwrap();
    assert_eq!(v["pattern_ok"], true);
    assert_eq!(v["det_nonzero"], true);
    assert_eq!(v["delta_n2_coeff"], "-3");
    assert_eq!(v["matrix"][0][0], "d^2");
    assert_eq!(v["matrix"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_and_spanning_reports() {
    let out = cli(&["verify", "3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("failures=0"), "{}", out.stdout);
    let a = cli(&["--format", "json", "--seed", "9", "verify", "4"]);
    let b = cli(&["--format", "json", "--seed", "9", "verify", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(
        (v["seed"].as_u64(), v["failures"].as_u64()),
        (Some(9), Some(0))
    );
    let s = cli(&["spanning", "4"]);
    assert_eq!(s.code, 0);
    assert!(
        s.stdout.contains("r=0: 9\nr=2: 72\nr=4: 24\ndim: 105"),
        "{}",
        s.stdout
    );
}

#[test]
fn rendered_elements_reparse() {
    let eng = Engine::new();
    let mut r = rng(41);
    let coefs: Vec<RingElem> = [
        "1",
        "-1",
        "l^-2*z",
        "d - 3",
        "-z^2 + l*d",
        "2*l^-1*z^3 - d^2",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    for _ in 0..100 {
        let n = r.gen_range(1..=4);
        let len = r.gen_range(0..=6);
        let x = eng
            .normalize(&random_word(&mut r, n, len, true))
            .scale(coefs.choose(&mut r).unwrap());
        let text = x.to_string();
        assert_eq!(AlgebraElement::parse(n, &text).unwrap(), x, "{text}");
        // through the command line: x times the empty word prints x again
        let out = cli(&["mul", "-n", &n.to_string(), &text, ""]);
        assert_eq!((out.code, out.stdout.trim()), (0, text.as_str()));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bmw");
    let ok = Command::new(bin).args(["dim", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "105\n");
    let bad = Command::new(bin)
        .args(["normalize", "-n", "2", "g5"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
