#![no_main]
use libfuzzer_sys::fuzz_target;
use recolor::graph::multigraph::{parse_multigraph, to_text};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok((m, spec)) = parse_multigraph(text) else {
        return;
    };
    let printed = to_text(&m, &spec);
    let (m2, spec2) = parse_multigraph(&printed).expect("printed multigraphs parse");
    assert_eq!((m2.n(), m2.edges(), &spec2.counts), (m.n(), m.edges(), &spec.counts));
    // subdividing either succeeds within the vertex cap or reports why
    if let Ok(h) = m.subdivide(&spec) {
        assert_eq!(h.n(), m.n() + spec.counts.iter().sum::<usize>());
    }
});
