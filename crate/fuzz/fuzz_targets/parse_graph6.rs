#![no_main]

use libfuzzer_sys::fuzz_target;
use zfkit::io::{parse_graph6, to_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6(data) {
        let text = to_graph6(&g);
        assert_eq!(parse_graph6(text.as_bytes()).expect("roundtrip"), g);
    }
});
