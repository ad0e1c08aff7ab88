#![no_main]

use boundary_spectra::{parse_graph_bytes, Analysis};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(graph) = parse_graph_bytes(data) else { return };
    if graph.validate().is_err() || graph.vertex_count() > 24 {
        return;
    }
    // A valid graph must analyze, and every comparison must hold.
    let analysis = Analysis::new(&graph).expect("valid graph analyzes");
    for cert in analysis.comparisons(1e-9) {
        assert!(cert.holds(), "{cert:?}");
    }
});
