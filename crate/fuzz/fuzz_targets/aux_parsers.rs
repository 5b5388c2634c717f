#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = trio_core::gf2::BitVec::from_str01(text.trim_end_matches('\n')) {
        let back = trio_core::gf2::BitVec::from_str01(&v.to_string()).unwrap();
        assert_eq!(v, back);
    }
    let _ = trio_core::fixtures::parse_dz_csv(text);
});
