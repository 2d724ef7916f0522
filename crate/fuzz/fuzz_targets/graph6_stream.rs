#![no_main]

use libfuzzer_sys::fuzz_target;
use zfkit::enumerate::GraphStream;

fuzz_target!(|data: &[u8]| {
    if let Ok(stream) = GraphStream::from_graph6_reader(data) {
        // accepted streams hold pairwise non-isomorphic graphs
        let again = GraphStream::from_graphs(stream.into_graphs());
        assert!(again.is_ok());
    }
});
