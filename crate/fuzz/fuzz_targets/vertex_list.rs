#![no_main]

use libfuzzer_sys::fuzz_target;
use zfkit::io::parse_vertex_list;

fuzz_target!(|data: &[u8]| {
    let Some((&order, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let order = usize::from(order % 64);
    if let Ok(s) = parse_vertex_list(text, order) {
        assert!(s.iter().all(|v| v < order));
    }
});
