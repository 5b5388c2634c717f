#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Parsing must never panic; execution is not driven from fuzz input
    // because load steps touch the filesystem.
    let _ = trio_core::recipe::parse_recipe(text);
});
