#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(matrix) = trio_core::io::parse_matrix(text) {
        // Anything accepted must survive a write/read round trip unchanged.
        let written = trio_core::io::write_matrix(&matrix);
        let reparsed = trio_core::io::parse_matrix(&written).expect("writer output parses");
        assert_eq!(matrix, reparsed);
    }
});
