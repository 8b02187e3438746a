#![no_main]
use libfuzzer_sys::fuzz_target;
use recolor::graph::graph6::{from_graph6, from_graph6_lines, to_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = from_graph6(data) {
        let text = to_graph6(&g);
        assert_eq!(from_graph6(text.as_bytes()).unwrap(), g, "{text}");
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(graphs) = from_graph6_lines(text) {
            for g in graphs {
                assert_eq!(from_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
            }
        }
    }
});
