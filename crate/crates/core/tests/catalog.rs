use coverforge::batch::{analyze_many, analyze_many_sequential};
use coverforge::braid::{free_reduce, reverse_word, BraidWord};
use coverforge::cli::catalog::{default_entries, run, EntryKind};
use coverforge::invariants::analyze;

fn catalog_words(p: usize) -> Vec<BraidWord> {
    default_entries(p)
        .into_iter()
        .flat_map(|e| match e.kind {
            EntryKind::Single { word, .. } => vec![word],
            EntryKind::Pair { left, right } => vec![left, right],
        })
        .collect()
}

#[test]
fn every_entry_passes_for_small_degrees() {
    let jobs: Vec<_> = (2..=5).flat_map(|p| default_entries(p).into_iter().map(move |e| (e, p))).collect();
    for out in run(&jobs) {
        let out = out.unwrap();
        assert!(out.pass, "{} p={}: {:?}", out.name, out.p, out.checks);
    }
}

#[test]
fn every_entry_has_provenance() {
    for e in default_entries(2) {
        assert!(!e.provenance.trim().is_empty(), "{}", e.name);
    }
}

#[test]
fn reversed_words_share_invariants() {
    for p in 2..=4 {
        for b in catalog_words(p) {
            let (a, r) = (analyze(&b, p).unwrap(), analyze(&reverse_word(&b), p).unwrap());
            assert_eq!((a.sl, &a.h1_factors, a.b1, &a.d3), (r.sl, &r.h1_factors, r.b1, &r.d3), "{b} p={p}");
        }
    }
}

#[test]
fn free_reduction_keeps_diagram_invariants() {
    for p in 2..=4 {
        for b in catalog_words(p) {
            let padded = BraidWord::parse(&format!("{b} s1 -s1"), b.strands()).unwrap();
            let (a, r) = (analyze(&padded, p).unwrap(), analyze(&free_reduce(&padded), p).unwrap());
            assert_eq!((a.sl, &a.h1_factors, a.b1, &a.d3), (r.sl, &r.h1_factors, r.b1, &r.d3), "{b} p={p}");
        }
    }
}

#[test]
fn batch_order_is_input_order() {
    let jobs: Vec<_> = (2..=4).flat_map(|p| catalog_words(p).into_iter().map(move |b| (b, p))).collect();
    let par = analyze_many(&jobs);
    assert_eq!(par, analyze_many_sequential(&jobs));
    for ((b, p), r) in jobs.iter().zip(&par) {
        let r = r.as_ref().unwrap();
        assert_eq!((r.braid.as_str(), r.p), (b.to_string().as_str(), *p));
    }
}
