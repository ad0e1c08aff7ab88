#![no_main]

use boundary_spectra::parse_graph_bytes;
use libfuzzer_sys::fuzz_target;

// Arbitrary bytes must produce a graph or an error, never a panic.
fuzz_target!(|data: &[u8]| {
    let _ = parse_graph_bytes(data);
});
