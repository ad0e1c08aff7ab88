#![no_main]

use boundary_spectra::{parse_graph, parse_graph_bytes, to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(graph) = parse_graph_bytes(data) {
        let text = to_json(&graph);
        let again = parse_graph(&text).expect("serialized graph parses");
        assert_eq!(again, graph);
        assert_eq!(to_json(&again), text);
    }
});
