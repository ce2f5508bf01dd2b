#![no_main]

use libfuzzer_sys::fuzz_target;
use slicecert::data::parse_point;
use slicecert::CycField;

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let field = match selector % 3 {
        0 => CycField::RATIONALS,
        1 => CycField::cyclotomic(5).unwrap(),
        _ => CycField::cyclotomic(13).unwrap(),
    };
    let _ = parse_point(text, field);
});
