#![no_main]
use libfuzzer_sys::fuzz_target;
use recolor::Coloring;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(c) = Coloring::parse(text) else {
        return;
    };
    assert_eq!(Coloring::parse(&c.to_string()).unwrap(), c);
    let k = c.palette_lower_bound().max(1);
    if (c.len() as f64) * (k as f64).log2() < 120.0 {
        assert_eq!(Coloring::from_code(c.code(k), k, c.len()), c);
    }
});
