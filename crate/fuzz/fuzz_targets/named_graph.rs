#![no_main]

use libfuzzer_sys::fuzz_target;
use zfkit::io::{named_graph, NamedGraphSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = text.parse::<NamedGraphSpec>() {
        assert_eq!(
            spec.to_string()
                .parse::<NamedGraphSpec>()
                .expect("roundtrip"),
            spec
        );
        let _ = named_graph(&spec);
    }
});
