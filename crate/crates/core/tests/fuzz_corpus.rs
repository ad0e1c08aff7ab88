//! Replays the checked-in fuzz corpus through the same checks the fuzz
//! targets make, so the seeds are exercised on stable toolchains too.

use std::fs;
use std::path::PathBuf;

use boundary_spectra::{parse_graph, parse_graph_bytes, to_json, Analysis};

fn seeds(target: &str) -> Vec<(PathBuf, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let bytes = fs::read(&path).unwrap();
            (path, bytes)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "empty corpus for {target}");
    out
}

#[test]
fn parse_graph_seeds() {
    let results: Vec<bool> = seeds("parse_graph").iter().map(|(_, b)| parse_graph_bytes(b).is_ok()).collect();
    assert!(results.contains(&true) && results.contains(&false));
}

#[test]
fn roundtrip_graph_seeds() {
    for (path, bytes) in seeds("roundtrip_graph") {
        if let Ok(graph) = parse_graph_bytes(&bytes) {
            let text = to_json(&graph);
            let again = parse_graph(&text).unwrap();
            assert_eq!(again, graph, "{}", path.display());
            assert_eq!(to_json(&again), text);
        }
    }
}

#[test]
fn validate_graph_seeds() {
    let mut valid = 0;
    for (path, bytes) in seeds("validate_graph") {
        let Ok(graph) = parse_graph_bytes(&bytes) else { continue };
        if graph.validate().is_err() {
            continue;
        }
        valid += 1;
        let analysis = Analysis::new(&graph).unwrap();
        for cert in analysis.comparisons(1e-9) {
            assert!(cert.holds(), "{}: {cert:?}", path.display());
        }
    }
    assert!(valid >= 3);
}
