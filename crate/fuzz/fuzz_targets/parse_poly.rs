#![no_main]

use libfuzzer_sys::fuzz_target;
use slicecert::data::{parse_poly, serialize_poly};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_poly(text) {
        let again = parse_poly(&serialize_poly(&f)).expect("canonical output parses");
        assert_eq!(again, f);
    }
});
