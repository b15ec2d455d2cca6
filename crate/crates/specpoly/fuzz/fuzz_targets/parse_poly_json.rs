#![no_main]

use libfuzzer_sys::fuzz_target;

// JSON polynomial schema reader: no panics on arbitrary bytes, and a
// round trip through the writer for accepted input.
fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((n, poly)) = specpoly::format::poly_from_json(input) {
        let emitted = specpoly::format::poly_to_json(n, &poly).to_string();
        let (n2, poly2) = specpoly::format::poly_from_json(&emitted).unwrap();
        assert_eq!((n, poly), (n2, poly2));
    }
});
