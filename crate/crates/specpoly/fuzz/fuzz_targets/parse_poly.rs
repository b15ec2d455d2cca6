#![no_main]

use libfuzzer_sys::fuzz_target;

// The pretty-notation parser must reject or accept, never panic, and
// accepted input must survive a print/parse round trip.
fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poly) = specpoly::format::parse_poly(input) {
        let printed = poly.to_string();
        let reparsed = specpoly::format::parse_poly(&printed).unwrap();
        assert_eq!(reparsed, poly);
    }
});
