use std::process::{Command, Output};

use comgraph_cli::corpus::Corpus;
use comgraph_cli::record;
use comgraph_cli::spec::{parse_spec, SpecError};
use comgraph_core::{GroupSpec, Phi, StandardGroup};
use proptest::prelude::*;
use serde_json::Value;

fn comgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comgraph"))
        .args(args)
        .env_remove("COMGRAPH_THREADS")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn diameter_of_w7() {
    let out = comgraph(&["diameter", "W(7)", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["diameter"], 6);
    assert_eq!(v["group_order"], 1176);
    assert_eq!(v["witness_path"].as_array().unwrap().len(), 7);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn diameter_examples() {
    let v = json_of(&comgraph(&["diameter", "ult(3,3)", "--json"]));
    assert_eq!(v["diameter"], "infinity");
    assert_eq!(v["connected"], false);
    let v = json_of(&comgraph(&["diameter", "wr(sym(4), 2)", "--json"]));
    assert_eq!(v["diameter"], 4);
    let full = json_of(&comgraph(&["diameter", "wr(sym(4), 2)", "--json", "--full-graph"]));
    assert_eq!(full["diameter"], 4);
    assert_eq!(full["mode"], "full");
}

#[test]
fn text_output_names_the_group() {
    let out = comgraph(&["diameter", " sym( 4 ) "]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("group      sym(4)"));
    assert!(text.contains("diameter   "));
}

#[test]
fn exit_codes() {
    assert_eq!(comgraph(&["diameter", "W(6)"]).status.code(), Some(1));
    assert_eq!(comgraph(&["diameter", "wr(sym(3)"]).status.code(), Some(1));
    assert_eq!(comgraph(&["diameter", "cyc(6)"]).status.code(), Some(1));
    assert_eq!(comgraph(&["diameter", "sym(8)", "--max-order", "1000"]).status.code(), Some(2));
    assert_eq!(comgraph(&["diameter", "wr(alt(5), 3)"]).status.code(), Some(2));
    let err = String::from_utf8(comgraph(&["diameter", "W(6)"]).stderr).unwrap();
    assert!(err.contains("not a valid prime"));
}

#[test]
fn threads_flag_and_env_give_identical_results() {
    let a = json_of(&comgraph(&["diameter", "wr(dih(18), 2)", "--json", "--threads", "1"]));
    let b = Command::new(env!("CARGO_BIN_EXE_comgraph"))
        .args(["diameter", "wr(dih(18), 2)", "--json"])
        .env("COMGRAPH_THREADS", "2")
        .output()
        .unwrap();
    let b = json_of(&b);
    for key in ["diameter", "witness_pair", "witness_path", "edge_count"] {
        assert_eq!(a[key], b[key], "{key}");
    }
}

#[test]
fn dot_and_cache_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("q8.dot");
    let cache = dir.path().join("runs.jsonl");
    for _ in 0..2 {
        let out = comgraph(&[
            "diameter",
            "q8()",
            "--dot",
            dot.to_str().unwrap(),
            "--cache",
            cache.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph commuting {"));
    assert_eq!(text.matches("label=").count(), 3);
    let records = record::load(&cache).unwrap();
    assert_eq!(records.len(), 2);
    let (a, b) = (&records[0], &records[1]);
    assert_eq!((a.group_order, a.diameter, a.vertex_count), (b.group_order, b.diameter, b.vertex_count));
    assert_eq!(parse_spec(&a.spec).unwrap().to_string(), a.spec);
}

#[test]
fn export_formats() {
    let v = json_of(&comgraph(&["export", "q8()", "--format", "json"]));
    assert_eq!(v["vertex_count"], 3);
    assert_eq!(v["edge_count"], 0);
    let out = comgraph(&["export", "sym(3)", "--full-graph"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches(" -- ").count(), 1);
    assert_eq!(text.matches("label=").count(), 5);
}

#[test]
fn info_reports_structure() {
    let v = json_of(&comgraph(&["info", "sl23()", "--json"]));
    assert_eq!(v["order"], 24);
    assert_eq!(v["center_order"], 2);
    assert_eq!(v["center_index_factors"], serde_json::json!([2, 2, 3]));
    assert_eq!(v["element_orders"]["2"], 1);
    let v = json_of(&comgraph(&["info", "cyc(5)", "--json"]));
    assert_eq!(v["abelian"], true);
    assert_eq!(v["diameter"], Value::Null);
}

#[test]
fn verify_ult_suite() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("results.jsonl");
    let out = comgraph(&["verify", "ult", "--cache", cache.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json_of(&out);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    let records = record::load(&cache).unwrap();
    assert_eq!(records.len(), 6);
    assert!(records.iter().filter(|r| r.spec.starts_with("ult(3")).all(|r| !r.connected));
}

#[test]
fn verify_reports_mismatch_with_anchor() {
    let dir = tempfile::tempdir().unwrap();
    let expected = dir.path().join("expected.json");
    let cache = dir.path().join("results.jsonl");
    let corpus = serde_json::json!({
        "version": 1,
        "entries": [
            {"suite": "wreath", "spec": "wr(sym(3), 2)", "quantity": "diameter", "value": 5, "anchor": "deliberately wrong"},
            {"suite": "wreath", "spec": "wr(sym(3), 2)", "quantity": "order", "value": 72, "anchor": "order"}
        ]
    });
    std::fs::write(&expected, corpus.to_string()).unwrap();
    let out = comgraph(&[
        "verify",
        "wreath",
        "--expected",
        expected.to_str().unwrap(),
        "--cache",
        cache.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("expected 5, measured 4 (deliberately wrong)"), "{text}");
    assert!(text.contains("1 mismatches"));
}

#[test]
fn embedded_corpus_covers_every_suite() {
    let c = Corpus::embedded();
    for s in ["wreath", "central", "small-centre", "prime-centre", "ult", "w-family"] {
        assert!(!c.instances(s).is_empty(), "{s}");
    }
    let w = c.entries.iter().filter(|e| e.suite == "wreath" && e.quantity == "diameter").count();
    assert_eq!(w, 7);
}

#[test]
fn spec_parse_errors() {
    assert_eq!(parse_spec("W(6)"), Err(SpecError::Semantic(comgraph_core::Error::NotValidPrime(6))));
    assert!(matches!(parse_spec("wr(sym(3), )"), Err(SpecError::Parse { pos: 11, .. })));
}

const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 101, 251];
const W_PRIMES: [u64; 5] = [7, 13, 19, 31, 241];

fn leaf() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..=8).prop_map(|n| GroupSpec::Standard(StandardGroup::Symmetric(n))),
        (1usize..=8).prop_map(|n| GroupSpec::Standard(StandardGroup::Alternating(n))),
        (1usize..=256).prop_map(|n| GroupSpec::Standard(StandardGroup::Cyclic(n))),
        (2usize..=256).prop_map(|n| GroupSpec::Standard(StandardGroup::Dihedral(2 * n))),
        Just(GroupSpec::Standard(StandardGroup::Quaternion8)),
        Just(GroupSpec::Standard(StandardGroup::Sl23)),
        (2usize..=16, prop::sample::select(&PRIMES[..])).prop_map(|(n, p)| GroupSpec::Ult(n, p)),
        (prop::sample::select(&PRIMES[..]), 1usize..=2).prop_map(|(p, r)| GroupSpec::Extraspecial(p, r)),
        prop::sample::select(&W_PRIMES[..]).prop_map(GroupSpec::ConstructionW),
        (1usize..=3, prop::sample::select(&PRIMES[..]), 0usize..3).prop_flat_map(|(n, p, k)| {
            prop::collection::vec(prop::collection::vec(prop::collection::vec(-20i64..20, n), n), k)
                .prop_map(move |gens| GroupSpec::MatGroup { n, p, gens })
        }),
    ]
}

fn phi() -> impl Strategy<Value = Phi> {
    prop_oneof![
        Just(Phi::Center),
        Just(Phi::Trivial),
        (0usize..500, 0usize..500).prop_map(|(h, k)| Phi::Ids(h, k)),
    ]
}

fn group_spec() -> impl Strategy<Value = GroupSpec> {
    leaf().prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), 1usize..=8).prop_map(|(b, n)| GroupSpec::Wreath(Box::new(b), n)),
            (inner.clone(), inner.clone(), phi())
                .prop_map(|(h, k, f)| GroupSpec::CentralProduct(Box::new(h), Box::new(k), f)),
            (inner.clone(), inner).prop_map(|(h, k)| GroupSpec::DirectProduct(Box::new(h), Box::new(k))),
        ]
    })
}

proptest! {
    #[test]
    fn canonical_printer_round_trips(spec in group_spec()) {
        let printed = spec.to_string();
        let parsed = parse_spec(&printed).unwrap();
        prop_assert_eq!(&parsed, &spec);
        prop_assert_eq!(parsed.to_string(), printed);
    }

    #[test]
    fn whitespace_is_ignored(spec in group_spec()) {
        let printed = spec.to_string();
        let spaced: String = printed.chars().flat_map(|c| {
            if "(),[]=".contains(c) { vec![' ', c, ' '] } else { vec![c] }
        }).collect();
        let squeezed: String = printed.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_spec(&spaced).unwrap(), spec.clone());
        prop_assert_eq!(parse_spec(&squeezed).unwrap(), spec);
    }
}
