#![no_main]
use libfuzzer_sys::fuzz_target;
use recolor::family::Family;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(family) = text.parse::<Family>() else {
        return;
    };
    assert_eq!(family.to_string().parse::<Family>().unwrap(), family);
    if let Ok(g) = family.build() {
        assert!(g.n() <= 64);
    }
});
