#![no_main]

use libfuzzer_sys::fuzz_target;

// CSV value-table reader: no panics, and writer/reader agree on accepted
// input.
fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(rows) = specpoly::format::table_from_csv(input) {
        let emitted = specpoly::format::table_to_csv(&rows);
        assert_eq!(specpoly::format::table_from_csv(&emitted).unwrap(), rows);
    }
});
