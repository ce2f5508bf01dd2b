#![no_main]

use libfuzzer_sys::fuzz_target;
use slicecert::data::{parse_certificate, serialize_certificate};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cert) = parse_certificate(text) {
        let again = parse_certificate(&serialize_certificate(&cert)).expect("canonical output parses");
        assert_eq!(again.factors(), cert.factors());
    }
});
